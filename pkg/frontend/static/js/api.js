/** Thin fetch client over the analysis API; latest-wins cancellation for
 * the analyze path so stale responses never overwrite newer ones. */
export class ApiError extends Error {
    constructor(status, message, field) {
        super(message);
        this.status = status;
        this.field = field;
    }
}
async function post(base, path, body, signal) {
    const response = await fetch(base + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal,
    });
    const data = await response.json();
    if (!response.ok) {
        const err = data?.error ?? {};
        throw new ApiError(response.status, err.message ?? response.statusText, err.field);
    }
    return data;
}
export class ApiClient {
    constructor(base = "") {
        this.analyzeController = null;
        this.base = base;
    }
    /** At most one in-flight analyze request; a newer call aborts the older. */
    async analyze(scenario) {
        this.analyzeController?.abort();
        this.analyzeController = new AbortController();
        return post(this.base, "/api/v1/analyze", scenario, this.analyzeController.signal);
    }
    async classifyOffer(scenario, offer) {
        return post(this.base, "/api/v1/offers/classify", { scenario, offer });
    }
    async sweep(scenario, param, from, to, steps) {
        return post(this.base, "/api/v1/sweep", { scenario, param, from, to, steps });
    }
    async health() {
        try {
            const response = await fetch(this.base + "/api/v1/health");
            return response.ok;
        }
        catch {
            return false;
        }
    }
}
