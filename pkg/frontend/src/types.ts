/** Shared types mirroring the server's JSON wire formats. */

export interface DisputeScenario {
  winning_benefit: number;
  settlement_benefit: number;
  admin_cost: number;
  bargain_cost: number;
  p_win: number;
  q_settle: number;
  p_appeal_win: number;
  filing_cost: number;
  inflation_rate: number;
  horizon_years: number;
  volatility: number;
  currency: string;
}

export interface BargainBlock {
  eva: number;
  evt: number;
  evb: number;
  evc: number;
  threat_value: number;
  noncoop_bargain: number;
  coop_bargain: number;
  coop_surplus: number;
  reasonable_bargain: number;
  filing_viable: boolean;
}

export interface PricedQuote {
  evp: number;
  rb: number;
  rate: number;
  horizon: number;
  sigma: number;
  d1: number;
  d2: number;
  n_d1: number;
  n_d2: number;
  claim_value: number;
  fair_bargain: number;
  feasible_band: [number, number];
  settlement_at_offer: boolean;
}

export interface UnpricedQuote {
  unpriceable: string;
}

export type QuoteBlock = PricedQuote | UnpricedQuote;

export function isPriced(q: QuoteBlock): q is PricedQuote {
  return !("unpriceable" in q);
}

export interface AnalysisReport {
  scenario: DisputeScenario;
  currency: string;
  bargain: BargainBlock;
  decomposition: { pc: number; lc: number; rb: number; regime: string };
  evp: number;
  quote: QuoteBlock;
  warnings: string[];
}

export type OfferClassification = "BELOW_REASONABLE" | "FEASIBLE" | "ABOVE_FAIR";

export interface ClassifyResponse {
  offer: number;
  classification: OfferClassification;
  feasible_band: [number, number];
}

export interface SweepResponse {
  swept_param: string;
  grid: number[];
  columns: string[];
  rows: Record<string, number | null>[];
}

export interface OfferLogEntry {
  timestamp: string;
  offer: number;
  classification: OfferClassification;
  note: string;
}

export interface SessionState {
  scenario: DisputeScenario;
  currentQuote: QuoteBlock | null;
  report: AnalysisReport | null;
  offerLog: OfferLogEntry[];
  activeSweep: SweepResponse | null;
}
