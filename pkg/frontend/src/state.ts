/**
 * Session state: the loaded dataset plus every control's position, and the
 * two-way mapping between control state and the service's config JSON.
 *
 * The mapping is a bijection over the expressible configs: controls built
 * from a config always map back to the identical config.
 */

import { ConfigMapping, ResultsDocument } from "./types.js";

export interface Controls {
  /** checked baseline solvers, in dataset order */
  baselines: Set<string>;
  /** active (checked) labels, in dataset order */
  activeLabels: Set<string>;
  /** solver -> component -> factor; 1.0 entries are omitted from the config */
  factors: Map<string, Map<string, number>>;
  minBaseline: number;
  /** NaN encodes "disabled" */
  unsolved: number;
  tauMin: number;
  tauMax: number;
  logScale: boolean;
}

export interface Session {
  fileName: string;
  dataset: ResultsDocument;
  controls: Controls;
  dirty: boolean;
}

export function solverNames(dataset: ResultsDocument): string[] {
  return Object.keys(dataset.data);
}

export function componentPairs(dataset: ResultsDocument): Array<[string, string]> {
  const pairs: Array<[string, string]> = [];
  for (const [solver, components] of Object.entries(dataset.data)) {
    for (const component of Object.keys(components)) pairs.push([solver, component]);
  }
  return pairs;
}

/** Fresh controls: everything a baseline, all labels on, factors 1, filters off. */
export function defaultControls(dataset: ResultsDocument): Controls {
  return {
    baselines: new Set(solverNames(dataset)),
    activeLabels: new Set(dataset.labels),
    factors: new Map(),
    minBaseline: 0,
    unsolved: NaN,
    tauMin: 0,
    tauMax: 2,
    logScale: false,
  };
}

export function newSession(fileName: string, dataset: ResultsDocument): Session {
  return { fileName, dataset, controls: defaultControls(dataset), dirty: true };
}

/**
 * Unchecking the last baseline is refused; the curves need a denominator.
 * Returns whether the toggle was applied.
 */
export function toggleBaseline(controls: Controls, solver: string): boolean {
  if (controls.baselines.has(solver)) {
    if (controls.baselines.size === 1) return false;
    controls.baselines.delete(solver);
  } else {
    controls.baselines.add(solver);
  }
  return true;
}

export function setFactor(controls: Controls, solver: string, component: string, factor: number): void {
  if (factor === 1) {
    controls.factors.get(solver)?.delete(component);
    if (controls.factors.get(solver)?.size === 0) controls.factors.delete(solver);
    return;
  }
  if (!controls.factors.has(solver)) controls.factors.set(solver, new Map());
  controls.factors.get(solver)!.set(component, factor);
}

export function getFactor(controls: Controls, solver: string, component: string): number {
  return controls.factors.get(solver)?.get(component) ?? 1;
}

/** Control state -> the config JSON the service accepts. Canonical: defaults omitted. */
export function configFromControls(dataset: ResultsDocument, controls: Controls): ConfigMapping {
  const config: ConfigMapping = {};
  const solvers = solverNames(dataset);
  if (controls.baselines.size !== solvers.length) {
    config.baselines = solvers.filter((s) => controls.baselines.has(s));
  }
  if (controls.activeLabels.size !== dataset.labels.length) {
    config.active_labels = dataset.labels.filter((l) => controls.activeLabels.has(l));
  }
  if (controls.factors.size > 0) {
    const factors: Record<string, Record<string, number>> = {};
    for (const [solver, components] of Object.entries(dataset.data)) {
      for (const component of Object.keys(components)) {
        const factor = getFactor(controls, solver, component);
        if (factor !== 1) {
          (factors[solver] ??= {})[component] = factor;
        }
      }
    }
    if (Object.keys(factors).length > 0) config.scale_factors = factors;
  }
  if (controls.minBaseline !== 0) config.min_baseline_threshold = controls.minBaseline;
  if (!Number.isNaN(controls.unsolved)) config.unsolved_threshold = controls.unsolved;
  if (controls.tauMin !== 0) config.tau_min = controls.tauMin;
  if (controls.tauMax !== 2) config.tau_max = controls.tauMax;
  if (controls.logScale) config.x_scale = "logarithmic";
  return config;
}

/** Config JSON -> control state (the inverse of configFromControls). */
export function controlsFromConfig(dataset: ResultsDocument, config: ConfigMapping): Controls {
  const controls = defaultControls(dataset);
  if (config.baselines) controls.baselines = new Set(config.baselines);
  if (config.active_labels) controls.activeLabels = new Set(config.active_labels);
  if (config.scale_factors) {
    for (const [solver, components] of Object.entries(config.scale_factors)) {
      for (const [component, factor] of Object.entries(components)) {
        setFactor(controls, solver, component, factor);
      }
    }
  }
  if (config.min_baseline_threshold !== undefined) controls.minBaseline = config.min_baseline_threshold;
  if (config.unsolved_threshold !== undefined && config.unsolved_threshold !== null) {
    controls.unsolved = config.unsolved_threshold;
  }
  if (config.tau_min !== undefined) controls.tauMin = config.tau_min;
  if (config.tau_max !== undefined) controls.tauMax = config.tau_max;
  controls.logScale = config.x_scale === "logarithmic";
  return controls;
}

/**
 * Logarithmic x needs tau_min > 0: coerce to the smallest positive
 * breakpoint seen in the last response (fallback 0.01).
 */
export function coerceTauMinForLog(tauMin: number, lastCurves?: Record<string, { tau: number[] }>): number {
  if (tauMin > 0) return tauMin;
  let smallest = Infinity;
  for (const curve of Object.values(lastCurves ?? {})) {
    for (const tau of curve.tau) {
      if (tau > 0 && tau < smallest) smallest = tau;
    }
  }
  return Number.isFinite(smallest) ? smallest : 0.01;
}
