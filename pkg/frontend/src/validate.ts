/**
 * Client-side validation of a loaded results file.
 *
 * Mirrors the service's checks (same JSON paths in the messages) so a bad
 * file is fully diagnosed in the browser before anything is sent anywhere.
 * Every detectable problem is reported, not just the first.
 */

import { ResultsDocument, ValidationIssue } from "./types.js";

export type ParseOutcome =
  | { ok: true; dataset: ResultsDocument; warnings: ValidationIssue[] }
  | { ok: false; errors: ValidationIssue[]; warnings: ValidationIssue[] };

const REQUIRED_KEYS = ["metric", "labels", "instances", "data"] as const;

function isPlainObject(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function isFiniteNumber(value: unknown): value is number {
  return typeof value === "number" && Number.isFinite(value);
}

export function validateDocument(value: unknown): ParseOutcome {
  const errors: ValidationIssue[] = [];
  const warnings: ValidationIssue[] = [];
  const error = (path: string, message: string) => errors.push({ path, message });

  if (!isPlainObject(value)) {
    error("", "expected a JSON object");
    return { ok: false, errors, warnings };
  }

  for (const key of Object.keys(value)) {
    if (!(REQUIRED_KEYS as readonly string[]).includes(key)) {
      warnings.push({ path: key, message: "unknown top-level key (ignored)" });
    }
  }

  const metric = value.metric;
  if (!("metric" in value)) error("metric", "missing required key");
  else if (typeof metric !== "string") error("metric", "expected a string");

  let labels: string[] = [];
  if (!("labels" in value)) error("labels", "missing required key");
  else if (!Array.isArray(value.labels)) error("labels", "expected an array");
  else {
    const seen = new Set<string>();
    value.labels.forEach((label, i) => {
      if (typeof label !== "string") error(`labels[${i}]`, "expected a string");
      else if (seen.has(label)) error(`labels[${i}]`, `duplicate label "${label}"`);
      else {
        seen.add(label);
        labels.push(label);
      }
    });
  }

  let instanceCount = 0;
  if (!("instances" in value)) error("instances", "missing required key");
  else if (!Array.isArray(value.instances)) error("instances", "expected an array");
  else {
    instanceCount = value.instances.length;
    if (instanceCount === 0) error("instances", "at least one instance is required");
    value.instances.forEach((entry, i) => {
      if (!Array.isArray(entry)) {
        error(`instances[${i}]`, "expected an array");
        return;
      }
      const used = new Set<number>();
      entry.forEach((index, j) => {
        if (typeof index !== "number" || !Number.isInteger(index)) {
          error(`instances[${i}][${j}]`, "label index must be an integer");
        } else if (index < 0 || index >= labels.length) {
          error(`instances[${i}][${j}]`, `label index ${index} out of range for ${labels.length} labels`);
        } else if (used.has(index)) {
          error(`instances[${i}][${j}]`, `duplicate label index ${index}`);
        } else {
          used.add(index);
        }
      });
    });
  }

  if (!("data" in value)) error("data", "missing required key");
  else if (!isPlainObject(value.data)) error("data", "expected an object");
  else {
    const solvers = Object.entries(value.data);
    if (solvers.length === 0) error("data", "at least one solver is required");
    for (const [solver, components] of solvers) {
      const solverPath = `data/${solver}`;
      if (!isPlainObject(components)) {
        error(solverPath, "expected an object");
        continue;
      }
      const entries = Object.entries(components);
      if (entries.length === 0) error(solverPath, "at least one component is required");
      for (const [component, vector] of entries) {
        const path = `${solverPath}/${component}`;
        if (!Array.isArray(vector)) {
          error(path, "expected an array of numbers");
          continue;
        }
        if (instanceCount && vector.length !== instanceCount) {
          error(path, `expected ${instanceCount} values, got ${vector.length}`);
        }
        vector.forEach((metricValue, i) => {
          if (!isFiniteNumber(metricValue)) error(`${path}[${i}]`, "metric value must be a finite number");
          else if (metricValue < 0) error(`${path}[${i}]`, `metric value must be >= 0, got ${metricValue}`);
        });
      }
    }
  }

  if (errors.length > 0) return { ok: false, errors, warnings };
  return { ok: true, dataset: value as unknown as ResultsDocument, warnings };
}

/** Parse raw file text; a JSON syntax error becomes a single-issue report. */
export function parseResultsFile(text: string): ParseOutcome {
  let parsed: unknown;
  try {
    parsed = JSON.parse(text);
  } catch (err) {
    return {
      ok: false,
      errors: [{ path: "", message: `malformed JSON: ${(err as Error).message}` }],
      warnings: [],
    };
  }
  return validateDocument(parsed);
}
