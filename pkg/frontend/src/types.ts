/**
 * Shapes of the /api/* JSON documents this app consumes.
 *
 * The server is the single source of truth for every number shown;
 * nothing here recomputes thresholds, fits, or qubit counts.
 */

export type CellClass = "green" | "yellow" | "red";

export interface CrossoverSeries {
  log10_n: number[];
  classical_log10: number[];
  quantum_scaled_log10: number[];
}

export interface ThresholdDoc {
  classical: string;
  quantum: string;
  c_log10: number;
  scenario: string | null;
  threshold: string;
  exact: number | null;
  log10: number | null;
  log10_root: number | null;
  cell_class: CellClass;
  series?: CrossoverSeries;
}

export interface GridCell {
  threshold: string;
  exact: number | null;
  log10: number | null;
  log10_root: number | null;
  cell_class: CellClass;
}

export interface GridDoc {
  c_log10: number;
  scenario: string | null;
  runtimes: string[];
  cells: GridCell[][];
}

export interface SizeBound {
  display: string;
  exact: number | null;
  log10: number;
}

export interface QapsInterval {
  year: number;
  empty: boolean;
  lower: SizeBound | null;
  upper: SizeBound | null;
}

export interface GrowthModel {
  provider: string;
  reference_year: number;
  intercept: number;
  slope: number;
  r_squared: number;
}

export interface QapsDoc {
  id: string | null;
  classical: string;
  quantum: string;
  qubit_requirement: string;
  scenario: string | null;
  c_log10: number;
  ec_qubit_ratio: number;
  provider: string;
  model: GrowthModel;
  threshold: string;
  log10_root: number | null;
  first_advantage_year: number | null;
  intervals: QapsInterval[];
}

export interface CatalogEntry {
  id: string;
  problem_name: string;
  classical_runtime: string;
  runtime_class_label: string;
  /** Absent for problems with no known quantum pairing. */
  quantum_runtime?: string;
  qubit_requirement?: string;
  size_semantics: string;
  tags: string[];
  citation: string;
}

export interface CatalogDoc {
  scenario: string | null;
  c_log10: number | null;
  classification: unknown;
  entries: CatalogEntry[];
}

export interface ApiError {
  error: string;
  offset?: number;
}
