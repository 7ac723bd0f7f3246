/** Wire types mirroring the decision service's JSON documents. */

export interface MetricDoc {
  id: string;
  direction: 'higher_better' | 'lower_better';
  weight: number;
  units: string;
  min?: number;
  max?: number;
  optional?: boolean;
}

export interface TierDoc {
  id: string;
  label?: string;
  regulatory_ok: boolean;
  values: Record<string, number>;
}

export interface RequirementsDoc {
  max_latency_ms?: number;
  min_success?: number;
  min_quality?: number;
  max_cost?: number;
  missing_metric_policy: 'strict' | 'lenient';
}

export interface ScenarioDoc {
  name: string;
  description?: string;
  lambda: number;
  metrics: MetricDoc[];
  tiers: TierDoc[];
  requirements: RequirementsDoc;
}

export interface ViolationDoc {
  constraint: string;
  metric: string | null;
  threshold: number | null;
  observed: number | null;
  reason: string;
}

export interface TierReportDoc {
  feasible: boolean;
  scores: Record<string, number>;
  u_base: number | null;
  phi: number | null;
  u_eff: number | null;
  violations: ViolationDoc[];
  warnings: string[];
}

export interface BoundDoc {
  min: number;
  max: number;
  source: string;
}

export interface EvaluateResponse {
  engine_version: string;
  lambda: number;
  bounds: Record<string, BoundDoc>;
  winner: string | null;
  ranking: string[];
  ties: string[][];
  tiers: Record<string, TierReportDoc>;
}

export interface ScenarioSummary {
  name: string;
  tier_count: number;
  metric_count: number;
}

export interface ParetoResponse {
  engine_version: string;
  objectives: string[];
  nondominated: string[];
  dominated: Record<string, string>;
  excluded: string[];
  infeasible: string[];
}

export interface ApiErrorBody {
  engine_version: string;
  errors: { field: string; message: string }[];
}

/** Human labels for violated constraints, "No (latency)" style. */
export const CONSTRAINT_LABELS: Record<string, string> = {
  max_latency_ms: 'latency',
  min_success: 'success',
  min_quality: 'quality',
  max_cost: 'cost',
  regulatory_ok: 'regulatory',
};
