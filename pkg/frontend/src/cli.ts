/**
 * Every plotted state corresponds to a reproducible CLI invocation; this
 * module builds it, both as an argv array (used by the parity tests) and as
 * a copyable shell line.
 */

import { Controls, getFactor } from "./state.js";
import { ResultsDocument } from "./types.js";

/** Flags equivalent to the given control state, in stable order. */
export function buildCliArgs(
  dataset: ResultsDocument,
  controls: Controls,
  format: "svg" | "html" | "json",
): string[] {
  const args = ["profile", "-i", "RESULTS.json", "--format", format];
  const solvers = Object.keys(dataset.data);
  if (controls.baselines.size !== solvers.length) {
    for (const solver of solvers) {
      if (controls.baselines.has(solver)) args.push("--baseline", solver);
    }
  }
  for (const label of dataset.labels) {
    if (!controls.activeLabels.has(label)) args.push("--drop-label", label);
  }
  for (const [solver, components] of Object.entries(dataset.data)) {
    for (const component of Object.keys(components)) {
      const factor = getFactor(controls, solver, component);
      if (factor !== 1) args.push("--scale", `${solver}/${component}=${factor}`);
    }
  }
  if (controls.minBaseline !== 0) args.push("--min-baseline", String(controls.minBaseline));
  if (!Number.isNaN(controls.unsolved)) args.push("--unsolved", String(controls.unsolved));
  if (controls.tauMin !== 0) args.push("--tau-min", String(controls.tauMin));
  if (controls.tauMax !== 2) args.push("--tau-max", String(controls.tauMax));
  if (controls.logScale) args.push("--x-scale", "logarithmic");
  return args;
}

const SAFE_ARG = /^[A-Za-z0-9_@%+=:,./-]+$/;

export function shellQuote(arg: string): string {
  if (SAFE_ARG.test(arg)) return arg;
  return `'${arg.replace(/'/g, "'\\''")}'`;
}

export function buildCliCommand(
  dataset: ResultsDocument,
  controls: Controls,
  format: "svg" | "html" | "json",
  inputName = "RESULTS.json",
): string {
  const args = buildCliArgs(dataset, controls, format);
  args[2] = inputName;
  return ["perfprof", ...args.map(shellQuote)].join(" ");
}
