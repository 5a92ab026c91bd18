/** Display formatting; never recomputes anything the server priced. */

export function fmtMoney(value: number, currency = "USD"): string {
  return new Intl.NumberFormat("en-US", {
    style: "currency",
    currency,
    maximumFractionDigits: 2,
  }).format(value);
}

export function fmtMoneyShort(value: number): string {
  return "$" + new Intl.NumberFormat("en-US", {
    maximumFractionDigits: 0,
  }).format(value);
}

export function fmtNumber(value: number, digits = 4): string {
  return value.toFixed(digits);
}
