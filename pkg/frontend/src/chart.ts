/** Minimal SVG line chart for sweep series: R_B, F_B and EVP against the
 * swept parameter. Produces an SVG string; no chart library needed. */

import type { SweepResponse } from "./types.js";

export interface Series {
  name: string;
  color: string;
  points: Array<{ x: number; y: number | null }>;
}

const PLOTTED: Array<[string, string]> = [
  ["reasonable_bargain", "#2563eb"],
  ["fair_bargain", "#16a34a"],
  ["evp", "#d97706"],
];

export function extractSeries(sweep: SweepResponse): Series[] {
  return PLOTTED.map(([column, color]) => ({
    name: column,
    color,
    points: sweep.grid.map((x, i) => ({
      x,
      y: sweep.rows[i][column] ?? null,
    })),
  }));
}

export interface ChartScale {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
}

export function chartScale(series: Series[]): ChartScale {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const s of series) {
    for (const p of s.points) {
      xs.push(p.x);
      if (p.y !== null && Number.isFinite(p.y)) ys.push(p.y);
    }
  }
  if (xs.length === 0 || ys.length === 0) {
    return { xMin: 0, xMax: 1, yMin: 0, yMax: 1 };
  }
  const yPad = 0.05 * (Math.max(...ys) - Math.min(...ys) || 1);
  return {
    xMin: Math.min(...xs),
    xMax: Math.max(...xs),
    yMin: Math.min(...ys) - yPad,
    yMax: Math.max(...ys) + yPad,
  };
}

export function polylinePoints(points: Array<{ x: number; y: number | null }>,
                               scale: ChartScale, width: number,
                               height: number): string {
  const sx = (x: number) =>
    ((x - scale.xMin) / (scale.xMax - scale.xMin || 1)) * width;
  const sy = (y: number) =>
    height - ((y - scale.yMin) / (scale.yMax - scale.yMin || 1)) * height;
  return points
    .filter((p): p is { x: number; y: number } => p.y !== null && Number.isFinite(p.y))
    .map((p) => `${sx(p.x).toFixed(1)},${sy(p.y).toFixed(1)}`)
    .join(" ");
}

export function renderSweepChart(sweep: SweepResponse, width = 640,
                                 height = 320): string {
  const series = extractSeries(sweep);
  const scale = chartScale(series);
  const lines = series
    .map((s) => {
      const pts = polylinePoints(s.points, scale, width, height);
      return pts
        ? `<polyline fill="none" stroke="${s.color}" stroke-width="2" points="${pts}"><title>${s.name}</title></polyline>`
        : "";
    })
    .join("");
  const legend = series
    .map((s, i) =>
      `<text x="8" y="${16 + 16 * i}" fill="${s.color}" font-size="12">${s.name}</text>`)
    .join("");
  return `<svg viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" role="img" aria-label="sweep of ${sweep.swept_param}">` +
    `<rect width="${width}" height="${height}" fill="#fafafa"/>${lines}${legend}</svg>`;
}
