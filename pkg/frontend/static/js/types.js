/** Shared types mirroring the server's JSON wire formats. */
export function isPriced(q) {
    return !("unpriceable" in q);
}
