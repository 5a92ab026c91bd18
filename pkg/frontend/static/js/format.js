/** Display formatting; never recomputes anything the server priced. */
export function fmtMoney(value, currency = "USD") {
    return new Intl.NumberFormat("en-US", {
        style: "currency",
        currency,
        maximumFractionDigits: 2,
    }).format(value);
}
export function fmtMoneyShort(value) {
    return "$" + new Intl.NumberFormat("en-US", {
        maximumFractionDigits: 0,
    }).format(value);
}
export function fmtNumber(value, digits = 4) {
    return value.toFixed(digits);
}
