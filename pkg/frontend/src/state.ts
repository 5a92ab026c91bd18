/** Session state transitions. The offer log is append-only within a
 * session and round-trips losslessly through export/import. */

import type {
  AnalysisReport,
  OfferClassification,
  OfferLogEntry,
  SessionState,
  SweepResponse,
  DisputeScenario,
} from "./types.js";

export const PAPER_PRESET: DisputeScenario = {
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

export function initialState(scenario: DisputeScenario = PAPER_PRESET): SessionState {
  return {
    scenario: { ...scenario },
    currentQuote: null,
    report: null,
    offerLog: [],
    activeSweep: null,
  };
}

export function withScenarioField(state: SessionState, field: keyof DisputeScenario,
                                  value: number): SessionState {
  return { ...state, scenario: { ...state.scenario, [field]: value } };
}

/** Install a fresh report; the displayed quote always matches the
 * currently displayed scenario values. */
export function withReport(state: SessionState, report: AnalysisReport): SessionState {
  return { ...state, report, currentQuote: report.quote };
}

export function withSweep(state: SessionState, sweep: SweepResponse): SessionState {
  return { ...state, activeSweep: sweep };
}

export function appendOffer(state: SessionState, offer: number,
                            classification: OfferClassification,
                            note = "", now: Date = new Date()): SessionState {
  const entry: OfferLogEntry = {
    timestamp: now.toISOString(),
    offer,
    classification,
    note,
  };
  return { ...state, offerLog: [...state.offerLog, entry] };
}

/** Counteroffer hint: midpoint of [max(offer, R_B), F_B]. A tool
 * heuristic, labeled as such in the UI; not a pricing result. */
export function counterofferHint(offer: number, rb: number, fairBargain: number): number {
  const lower = Math.max(offer, rb);
  return (lower + fairBargain) / 2;
}

export interface SessionExport {
  version: 1;
  scenario: DisputeScenario;
  offerLog: OfferLogEntry[];
}

export function exportSession(state: SessionState): string {
  const doc: SessionExport = {
    version: 1,
    scenario: state.scenario,
    offerLog: state.offerLog,
  };
  return JSON.stringify(doc);
}

export function importSession(text: string): SessionState {
  const doc = JSON.parse(text) as SessionExport;
  if (doc.version !== 1 || !doc.scenario || !Array.isArray(doc.offerLog)) {
    throw new Error("unrecognized session document");
  }
  return { ...initialState(doc.scenario), offerLog: doc.offerLog };
}

export function debounce<A extends unknown[]>(fn: (...args: A) => void,
                                              waitMs: number): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}
