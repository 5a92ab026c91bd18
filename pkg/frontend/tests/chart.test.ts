import { describe, expect, it } from "vitest";

import { chartScale, extractSeries, polylinePoints, renderSweepChart } from "../src/chart.js";
import type { SweepResponse } from "../src/types.js";

const SWEEP: SweepResponse = {
  swept_param: "p_win",
  grid: [0, 0.5, 1],
  columns: ["reasonable_bargain", "fair_bargain", "evp"],
  rows: [
    { reasonable_bargain: 1250, fair_bargain: null, evp: 2000, claim_value: null },
    { reasonable_bargain: 3750, fair_bargain: 4100, evp: 4000, claim_value: 350 },
    { reasonable_bargain: 6250, fair_bargain: 7000, evp: 6000, claim_value: 750 },
  ],
};

describe("sweep chart", () => {
  it("extracts the three plotted series", () => {
    const series = extractSeries(SWEEP);
    expect(series.map((s) => s.name)).toEqual(
      ["reasonable_bargain", "fair_bargain", "evp"]);
    expect(series[0].points[0]).toEqual({ x: 0, y: 1250 });
  });

  it("skips unpriceable (null) points without breaking the polyline", () => {
    const series = extractSeries(SWEEP);
    const scale = chartScale(series);
    const fb = series.find((s) => s.name === "fair_bargain")!;
    const pts = polylinePoints(fb.points, scale, 640, 320);
    expect(pts.split(" ")).toHaveLength(2);
  });

  it("scales y to cover all finite values", () => {
    const scale = chartScale(extractSeries(SWEEP));
    expect(scale.yMin).toBeLessThanOrEqual(1250);
    expect(scale.yMax).toBeGreaterThanOrEqual(7000);
  });

  it("renders an svg document", () => {
    const svg = renderSweepChart(SWEEP);
    expect(svg).toContain("<svg");
    expect(svg).toContain("polyline");
    expect(svg).toContain("p_win");
  });
});
