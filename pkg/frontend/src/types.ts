/** Shared shapes for the results document, analysis config, and curve responses. */

export interface ResultsDocument {
  metric: string;
  labels: string[];
  instances: number[][];
  data: Record<string, Record<string, number[]>>;
}

/** JSON config mapping exactly as POST /api/profile accepts it. */
export interface ConfigMapping {
  baselines?: string[];
  active_labels?: string[];
  scale_factors?: Record<string, Record<string, number>>;
  min_baseline_threshold?: number;
  unsolved_threshold?: number | null;
  tau_min?: number;
  tau_max?: number;
  x_scale?: "linear" | "logarithmic";
}

export interface CurveDocument {
  curves: Record<string, { tau: number[]; F: number[] }>;
  max_ratio: number;
  denominator: number;
  excluded_no_baseline: number;
}

export interface ValidationIssue {
  path: string;
  message: string;
}

export interface ApiError {
  errors: ValidationIssue[];
  warnings?: ValidationIssue[];
}
