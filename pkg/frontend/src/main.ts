/** DOM wiring for the what-if negotiation console. All pricing numbers
 * come from the server; this module only renders them. */

import { ApiClient, ApiError } from "./api.js";
import { bandLayout } from "./band.js";
import { renderSweepChart } from "./chart.js";
import { fmtMoney, fmtNumber } from "./format.js";
import {
  PAPER_PRESET,
  appendOffer,
  counterofferHint,
  debounce,
  exportSession,
  importSession,
  initialState,
  withReport,
  withScenarioField,
  withSweep,
} from "./state.js";
import type { SessionState } from "./types.js";
import { isPriced } from "./types.js";
import { FIELD_SPECS, validateField } from "./validate.js";

const STORAGE_KEY = "litiquant-session";

const api = new ApiClient("");
let state: SessionState = restoreSession();

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function restoreSession(): SessionState {
  try {
    const saved = localStorage.getItem(STORAGE_KEY);
    if (saved) return importSession(saved);
  } catch {
    // fall through to a fresh session
  }
  return initialState();
}

function persistSession(): void {
  localStorage.setItem(STORAGE_KEY, exportSession(state));
}

function buildParameterPanel(): void {
  const panel = $("parameters");
  panel.innerHTML = "";
  for (const spec of FIELD_SPECS) {
    const row = document.createElement("label");
    row.className = "param-row";
    const caption = document.createElement("span");
    caption.textContent = spec.label;
    const input = document.createElement("input");
    input.type = "number";
    input.min = String(spec.min);
    input.max = String(spec.max);
    input.step = String(spec.step);
    input.value = String(state.scenario[spec.name]);
    input.dataset.field = spec.name;
    const error = document.createElement("em");
    error.className = "field-error";
    input.addEventListener("input", () => {
      const value = Number(input.value);
      const problem = validateField(spec.name, value);
      error.textContent = problem ?? "";
      if (problem) return;
      state = withScenarioField(state, spec.name, value);
      scheduleAnalyze();
    });
    row.append(caption, input, error);
    panel.append(row);
  }
}

const scheduleAnalyze = debounce(() => void refreshQuote(), 200);

async function refreshQuote(): Promise<void> {
  try {
    const report = await api.analyze(state.scenario);
    state = withReport(state, report);
    renderQuote();
    persistSession();
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return;
    if (err instanceof ApiError && err.field) {
      markFieldError(err.field, err.message);
      return;
    }
    toast(String(err));
  }
}

function markFieldError(field: string, message: string): void {
  const input = document.querySelector<HTMLInputElement>(
    `input[data-field="${field}"]`);
  const error = input?.parentElement?.querySelector(".field-error");
  if (error) error.textContent = message;
}

function renderQuote(): void {
  const summary = $("summary");
  const bandEl = $("band");
  const report = state.report;
  if (!report) return;
  const currency = report.currency;
  const b = report.bargain;

  const rows: Array<[string, string]> = [
    ["Reasonable bargain (R_B)", fmtMoney(b.reasonable_bargain, currency)],
    ["Expected payoff (EVP)", fmtMoney(report.evp, currency)],
    ["Threat value", fmtMoney(b.threat_value, currency)],
  ];
  if (isPriced(report.quote)) {
    rows.push(["Claim value (Q)", fmtMoney(report.quote.claim_value, currency)]);
    rows.push(["Fair bargain (F_B)", fmtMoney(report.quote.fair_bargain, currency)]);
    rows.push(["d1 / d2", `${fmtNumber(report.quote.d1)} / ${fmtNumber(report.quote.d2)}`]);
  }
  summary.innerHTML = rows
    .map(([k, v]) => `<div class="stat"><span>${k}</span><strong>${v}</strong></div>`)
    .join("");

  const warnings = $("warnings");
  warnings.innerHTML = report.warnings
    .map((w) => `<li>${w}</li>`)
    .join("");

  if (isPriced(report.quote)) {
    const layout = bandLayout(report.quote, report.scenario.settlement_benefit,
                              state.offerLog);
    const pct = (x: number) => `${(100 * x).toFixed(2)}%`;
    const markers = layout.markers
      .map((m) =>
        `<div class="marker ${m.inBand ? "in" : "out"}" style="left:${pct(m.position)}" title="${m.label}: ${fmtMoney(m.amount, currency)}"></div>`)
      .join("");
    bandEl.innerHTML =
      `<div class="track">` +
      `<div class="feasible" style="left:${pct(layout.bandStart)};width:${pct(layout.bandEnd - layout.bandStart)}"></div>` +
      markers +
      `</div>` +
      `<div class="band-labels"><span>R_B ${fmtMoney(report.quote.rb, currency)}</span>` +
      `<span>F_B ${fmtMoney(report.quote.fair_bargain, currency)}</span></div>`;
  } else {
    bandEl.innerHTML = `<p class="unpriced">No feasibility band: ${
      "unpriceable" in report.quote ? report.quote.unpriceable : "unpriced"}</p>`;
  }
  renderOfferLog();
}

function renderOfferLog(): void {
  const log = $("offer-log");
  log.innerHTML = state.offerLog
    .map((entry) =>
      `<li class="${entry.classification.toLowerCase()}">` +
      `${entry.timestamp.slice(11, 19)} — ${fmtMoney(entry.offer)} — ` +
      `${entry.classification}${entry.note ? ` — ${entry.note}` : ""}</li>`)
    .join("");
}

async function submitOffer(): Promise<void> {
  const input = $("offer-input") as HTMLInputElement;
  const offer = Number(input.value);
  if (!Number.isFinite(offer)) {
    toast("offer must be a number");
    return;
  }
  try {
    const result = await api.classifyOffer(state.scenario, offer);
    const quote = state.currentQuote;
    let note = "";
    if (quote && isPriced(quote)) {
      const hint = counterofferHint(offer, quote.rb, quote.fair_bargain);
      note = `hint (heuristic): counter at ${fmtMoney(hint)}`;
    }
    state = appendOffer(state, offer, result.classification, note);
    persistSession();
    renderQuote();
  } catch (err) {
    toast(err instanceof Error ? err.message : String(err));
  }
}

async function runSweep(): Promise<void> {
  const param = ($("sweep-param") as HTMLSelectElement).value;
  const from = Number(($("sweep-from") as HTMLInputElement).value);
  const to = Number(($("sweep-to") as HTMLInputElement).value);
  try {
    const sweep = await api.sweep(state.scenario, param, from, to, 41);
    state = withSweep(state, sweep);
    $("sweep-chart").innerHTML = renderSweepChart(sweep);
  } catch (err) {
    toast(err instanceof Error ? err.message : String(err));
  }
}

function toast(message: string): void {
  const el = $("toast");
  el.textContent = message;
  el.classList.add("visible");
  setTimeout(() => el.classList.remove("visible"), 4000);
}

function bindControls(): void {
  $("offer-submit").addEventListener("click", () => void submitOffer());
  $("sweep-run").addEventListener("click", () => void runSweep());
  $("load-preset").addEventListener("click", () => {
    state = initialState({ ...PAPER_PRESET });
    buildParameterPanel();
    void refreshQuote();
  });
}

buildParameterPanel();
bindControls();
void refreshQuote();
