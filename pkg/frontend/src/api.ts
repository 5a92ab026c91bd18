/** Thin fetch client over the analysis API; latest-wins cancellation for
 * the analyze path so stale responses never overwrite newer ones. */

import type {
  AnalysisReport,
  ClassifyResponse,
  DisputeScenario,
  SweepResponse,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  field?: string;

  constructor(status: number, message: string, field?: string) {
    super(message);
    this.status = status;
    this.field = field;
  }
}

async function post<T>(base: string, path: string, body: unknown,
                       signal?: AbortSignal): Promise<T> {
  const response = await fetch(base + path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
    signal,
  });
  const data = await response.json();
  if (!response.ok) {
    const err = data?.error ?? {};
    throw new ApiError(response.status, err.message ?? response.statusText, err.field);
  }
  return data as T;
}

export class ApiClient {
  base: string;
  private analyzeController: AbortController | null = null;

  constructor(base = "") {
    this.base = base;
  }

  /** At most one in-flight analyze request; a newer call aborts the older. */
  async analyze(scenario: DisputeScenario): Promise<AnalysisReport> {
    this.analyzeController?.abort();
    this.analyzeController = new AbortController();
    return post<AnalysisReport>(this.base, "/api/v1/analyze", scenario,
                                this.analyzeController.signal);
  }

  async classifyOffer(scenario: DisputeScenario, offer: number): Promise<ClassifyResponse> {
    return post<ClassifyResponse>(this.base, "/api/v1/offers/classify",
                                  { scenario, offer });
  }

  async sweep(scenario: DisputeScenario, param: string, from: number, to: number,
              steps: number): Promise<SweepResponse> {
    return post<SweepResponse>(this.base, "/api/v1/sweep",
                               { scenario, param, from, to, steps });
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(this.base + "/api/v1/health");
      return response.ok;
    } catch {
      return false;
    }
  }
}
