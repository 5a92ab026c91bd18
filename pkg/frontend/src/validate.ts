/** Client-side range constraints mirrored from the server schema.
 * The client never submits a scenario violating these; server validation
 * remains the source of truth. */

import type { DisputeScenario } from "./types.js";

export interface FieldSpec {
  name: keyof DisputeScenario;
  label: string;
  min: number;
  max: number;
  step: number;
}

export const FIELD_SPECS: FieldSpec[] = [
  { name: "p_win", label: "P(win at trial)", min: 0, max: 1, step: 0.01 },
  { name: "q_settle", label: "P(stage settles)", min: 0, max: 1, step: 0.01 },
  { name: "winning_benefit", label: "Winning benefit", min: 0, max: 1e9, step: 100 },
  { name: "settlement_benefit", label: "Settlement offer", min: 0, max: 1e9, step: 100 },
  { name: "admin_cost", label: "Admin cost / trial", min: 0, max: 1e9, step: 50 },
  { name: "bargain_cost", label: "Bargain cost / round", min: 0, max: 1e9, step: 50 },
  { name: "inflation_rate", label: "Inflation rate", min: -0.5, max: 0.5, step: 0.001 },
  { name: "horizon_years", label: "Horizon (years)", min: 0, max: 50, step: 0.05 },
  { name: "volatility", label: "Volatility", min: 0, max: 5, step: 0.01 },
];

export function validateField(name: keyof DisputeScenario, value: number): string | null {
  const spec = FIELD_SPECS.find((s) => s.name === name);
  if (!spec) return null;
  if (!Number.isFinite(value)) return `${spec.label} must be a number`;
  if (value < spec.min || value > spec.max) {
    return `${spec.label} must be between ${spec.min} and ${spec.max}`;
  }
  return null;
}

export function validateScenario(s: DisputeScenario): Map<string, string> {
  const errors = new Map<string, string>();
  for (const spec of FIELD_SPECS) {
    const error = validateField(spec.name, s[spec.name] as number);
    if (error) errors.set(spec.name, error);
  }
  return errors;
}
