import { describe, expect, it } from "vitest";

import { bandLayout, position } from "../src/band.js";
import type { PricedQuote } from "../src/types.js";

const QUOTE: PricedQuote = {
  evp: 5600,
  rb: 4250,
  rate: 0.019,
  horizon: 0.3333,
  sigma: 0.25,
  d1: 2.0273,
  d2: 1.8829,
  n_d1: 0.9787,
  n_d2: 0.9701,
  claim_value: 1383.53,
  fair_bargain: 5633.53,
  feasible_band: [4250, 5633.53],
  settlement_at_offer: false,
};

describe("band layout", () => {
  it("clamps positions to the track", () => {
    expect(position(-100, 0, 10)).toBe(0);
    expect(position(100, 0, 10)).toBe(1);
    expect(position(5, 0, 10)).toBeCloseTo(0.5);
  });

  it("places the band inside the track with padding", () => {
    const layout = bandLayout(QUOTE, 5000, []);
    expect(layout.bandStart).toBeGreaterThan(0);
    expect(layout.bandEnd).toBeLessThan(1);
    expect(layout.bandStart).toBeLessThan(layout.bandEnd);
  });

  it("marks the settlement offer inside the example band", () => {
    const layout = bandLayout(QUOTE, 5000, []);
    const sb = layout.markers.find((m) => m.label === "S_B")!;
    expect(sb.inBand).toBe(true);
    expect(sb.position).toBeGreaterThan(layout.bandStart);
    expect(sb.position).toBeLessThan(layout.bandEnd);
  });

  it("renders below-band offers in the out region", () => {
    const layout = bandLayout(QUOTE, 5000, [
      { timestamp: "t", offer: 1000, classification: "BELOW_REASONABLE", note: "" },
    ]);
    const offer = layout.markers.find((m) => m.label.includes("BELOW_REASONABLE"))!;
    expect(offer.inBand).toBe(false);
    expect(offer.position).toBeLessThan(layout.bandStart);
  });

  it("widens the track to include outlier offers", () => {
    const layout = bandLayout(QUOTE, 5000, [
      { timestamp: "t", offer: 20000, classification: "ABOVE_FAIR", note: "" },
    ]);
    expect(layout.trackMax).toBeGreaterThanOrEqual(20000);
  });
});
