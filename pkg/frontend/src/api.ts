/** Thin typed client for the decision service. */

import type {
  ApiErrorBody,
  EvaluateResponse,
  ParetoResponse,
  ScenarioDoc,
  ScenarioSummary,
} from './types.js';

export class ApiError extends Error {
  readonly status: number;
  readonly errors: { field: string; message: string }[];

  constructor(status: number, body: ApiErrorBody | null) {
    const detail = body?.errors?.map((e) => `${e.field}: ${e.message}`).join('; ');
    super(detail || `service returned HTTP ${status}`);
    this.status = status;
    this.errors = body?.errors ?? [];
  }
}

async function parseError(response: Response): Promise<never> {
  let body: ApiErrorBody | null = null;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = null;
  }
  throw new ApiError(response.status, body);
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`);
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  private async post<T>(path: string, payload: unknown, signal?: AbortSignal): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(payload),
      signal,
    });
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  async listScenarios(): Promise<ScenarioSummary[]> {
    const body = await this.get<{ scenarios: ScenarioSummary[] }>('/api/scenarios');
    return body.scenarios;
  }

  getScenario(name: string): Promise<ScenarioDoc> {
    return this.get<ScenarioDoc>(`/api/scenarios/${encodeURIComponent(name)}`);
  }

  evaluate(doc: ScenarioDoc, signal?: AbortSignal): Promise<EvaluateResponse> {
    return this.post<EvaluateResponse>('/api/evaluate', doc, signal);
  }

  pareto(doc: ScenarioDoc, objectives: string[], signal?: AbortSignal): Promise<ParetoResponse> {
    return this.post<ParetoResponse>('/api/pareto', { scenario: doc, objectives }, signal);
  }
}
