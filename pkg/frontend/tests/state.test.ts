import { describe, expect, it } from "vitest";

import {
  PAPER_PRESET,
  appendOffer,
  counterofferHint,
  exportSession,
  importSession,
  initialState,
  withReport,
  withScenarioField,
} from "../src/state.js";
import type { AnalysisReport } from "../src/types.js";

describe("session state", () => {
  it("starts from the bundled preset", () => {
    const state = initialState();
    expect(state.scenario.p_win).toBe(0.6);
    expect(state.scenario.settlement_benefit).toBe(5000);
    expect(state.offerLog).toEqual([]);
  });

  it("field edits do not mutate the previous state", () => {
    const a = initialState();
    const b = withScenarioField(a, "p_win", 0.8);
    expect(a.scenario.p_win).toBe(0.6);
    expect(b.scenario.p_win).toBe(0.8);
  });

  it("installing a report keeps quote in sync with the scenario", () => {
    const report = {
      scenario: PAPER_PRESET,
      currency: "USD",
      quote: { unpriceable: "nonpositive-strike" },
      warnings: [],
    } as unknown as AnalysisReport;
    const state = withReport(initialState(), report);
    expect(state.currentQuote).toBe(report.quote);
  });

  it("offer log is append-only", () => {
    let state = initialState();
    const before = state.offerLog;
    state = appendOffer(state, 5000, "FEASIBLE", "", new Date("2026-01-01T12:00:00Z"));
    state = appendOffer(state, 3000, "BELOW_REASONABLE", "", new Date("2026-01-01T12:05:00Z"));
    expect(before).toEqual([]);
    expect(state.offerLog.map((e) => e.offer)).toEqual([5000, 3000]);
    expect(state.offerLog[0].timestamp < state.offerLog[1].timestamp).toBe(true);
  });

  it("session export/import round-trips the offer log losslessly", () => {
    let state = initialState();
    state = withScenarioField(state, "volatility", 0.3);
    state = appendOffer(state, 5000, "FEASIBLE", "note", new Date("2026-02-02T09:30:00Z"));
    const restored = importSession(exportSession(state));
    expect(restored.scenario).toEqual(state.scenario);
    expect(restored.offerLog).toEqual(state.offerLog);
  });

  it("rejects unrecognized session documents", () => {
    expect(() => importSession('{"version": 9}')).toThrow();
  });
});

describe("counteroffer hint", () => {
  it("is the midpoint of [max(offer, rb), fair bargain]", () => {
    expect(counterofferHint(5000, 4250, 5635)).toBeCloseTo((5000 + 5635) / 2);
    expect(counterofferHint(1000, 4250, 5635)).toBeCloseTo((4250 + 5635) / 2);
  });
});
