/** Session state transitions. The offer log is append-only within a
 * session and round-trips losslessly through export/import. */
export const PAPER_PRESET = {
    winning_benefit: 10000,
    settlement_benefit: 5000,
    admin_cost: 1000,
    bargain_cost: 500,
    p_win: 0.6,
    q_settle: 0.4,
    p_appeal_win: 0.0,
    filing_cost: 0,
    inflation_rate: 0.019,
    horizon_years: 0.3333,
    volatility: 0.25,
    currency: "USD",
};
export function initialState(scenario = PAPER_PRESET) {
    return {
        scenario: { ...scenario },
        currentQuote: null,
        report: null,
        offerLog: [],
        activeSweep: null,
    };
}
export function withScenarioField(state, field, value) {
    return { ...state, scenario: { ...state.scenario, [field]: value } };
}
/** Install a fresh report; the displayed quote always matches the
 * currently displayed scenario values. */
export function withReport(state, report) {
    return { ...state, report, currentQuote: report.quote };
}
export function withSweep(state, sweep) {
    return { ...state, activeSweep: sweep };
}
export function appendOffer(state, offer, classification, note = "", now = new Date()) {
    const entry = {
        timestamp: now.toISOString(),
        offer,
        classification,
        note,
    };
    return { ...state, offerLog: [...state.offerLog, entry] };
}
/** Counteroffer hint: midpoint of [max(offer, R_B), F_B]. A tool
 * heuristic, labeled as such in the UI; not a pricing result. */
export function counterofferHint(offer, rb, fairBargain) {
    const lower = Math.max(offer, rb);
    return (lower + fairBargain) / 2;
}
export function exportSession(state) {
    const doc = {
        version: 1,
        scenario: state.scenario,
        offerLog: state.offerLog,
    };
    return JSON.stringify(doc);
}
export function importSession(text) {
    const doc = JSON.parse(text);
    if (doc.version !== 1 || !doc.scenario || !Array.isArray(doc.offerLog)) {
        throw new Error("unrecognized session document");
    }
    return { ...initialState(doc.scenario), offerLog: doc.offerLog };
}
export function debounce(fn, waitMs) {
    let timer;
    return (...args) => {
        clearTimeout(timer);
        timer = setTimeout(() => fn(...args), waitMs);
    };
}
