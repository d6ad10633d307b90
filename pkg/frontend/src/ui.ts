/**
 * DOM wiring for the workbench: file loading, control generation, live
 * recompute, export. Controls are regenerated from the loaded dataset (one
 * checkbox per solver and label, one slider per component); the dataset
 * itself is never mutated.
 */

import { DEBOUNCE_MS, ServiceError, fetchCurves, fetchPlot, latestWins } from "./api.js";
import { buildCliCommand } from "./cli.js";
import {
  Session,
  coerceTauMinForLog,
  configFromControls,
  getFactor,
  newSession,
  setFactor,
  solverNames,
  toggleBaseline,
} from "./state.js";
import { CurveDocument, ValidationIssue } from "./types.js";
import { parseResultsFile } from "./validate.js";

const $ = <T extends HTMLElement>(selector: string): T => {
  const node = document.querySelector<T>(selector);
  if (!node) throw new Error(`missing element: ${selector}`);
  return node;
};

export class Workbench {
  private session: Session | null = null;
  private lastCurves: CurveDocument | null = null;
  private lastSvg: string | null = null;

  private readonly plot = $("#plot");
  private readonly banner = $("#banner");
  private readonly notice = $("#notice");
  private readonly meta = $("#meta");
  private readonly controlsBox = $("#controls");
  private readonly cliBox = $<HTMLElement>("#cli-command");

  private readonly recompute = latestWins(async (signal) => {
    if (!this.session) return;
    const { dataset, controls } = this.session;
    const config = configFromControls(dataset, controls);
    try {
      const [curves, svg] = await Promise.all([
        fetchCurves(dataset, config, signal),
        fetchPlot(dataset, config, "svg", signal),
      ]);
      this.lastCurves = curves;
      this.lastSvg = await svg.text();
      this.plot.innerHTML = this.lastSvg;
      this.session.dirty = false;
      this.showMeta(curves);
      this.clearBanner();
    } catch (err) {
      if ((err as Error).name === "AbortError") throw err;
      this.showError(err); // last good plot stays on screen
    }
  }, DEBOUNCE_MS);

  mount(): void {
    const input = $<HTMLInputElement>("#file-input");
    input.addEventListener("change", () => {
      const file = input.files?.[0];
      if (file) void this.loadFile(file);
    });
    $("#export-svg").addEventListener("click", () => void this.export("svg"));
    $("#export-html").addEventListener("click", () => void this.export("html"));
    $("#copy-cli").addEventListener("click", () => {
      void navigator.clipboard.writeText(this.cliBox.textContent ?? "");
    });
  }

  async loadFile(file: File): Promise<void> {
    const outcome = parseResultsFile(await file.text());
    if (!outcome.ok) {
      this.session = null;
      this.controlsBox.replaceChildren();
      this.plot.replaceChildren();
      this.meta.textContent = "";
      this.showIssues(outcome.errors);
      return;
    }
    this.clearBanner();
    if (outcome.warnings.length > 0) {
      this.notice.textContent = outcome.warnings
        .map((w) => `${w.path}: ${w.message}`)
        .join("; ");
    }
    this.session = newSession(file.name, outcome.dataset);
    this.renderControls();
    this.touch();
  }

  /** A control changed: refresh the CLI line and schedule a recompute. */
  private touch(): void {
    if (!this.session) return;
    this.session.dirty = true;
    this.cliBox.textContent = buildCliCommand(
      this.session.dataset,
      this.session.controls,
      "svg",
      this.session.fileName,
    );
    this.recompute();
  }

  private async export(format: "svg" | "html"): Promise<void> {
    if (!this.session) return;
    const { dataset, controls } = this.session;
    try {
      // exact service bytes: no client-side re-rendering
      const blob = await fetchPlot(dataset, controls && configFromControls(dataset, controls), format);
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = format === "svg" ? "profiles.svg" : "profiles.html";
      link.click();
      URL.revokeObjectURL(link.href);
    } catch (err) {
      this.showError(err);
    }
  }

  private showMeta(curves: CurveDocument): void {
    this.meta.textContent =
      `instances counted: ${curves.denominator}` +
      (curves.excluded_no_baseline > 0
        ? ` (plus ${curves.excluded_no_baseline} with no solving baseline)`
        : "") +
      ` | max ratio: ${curves.max_ratio}`;
  }

  private showError(err: unknown): void {
    if (err instanceof ServiceError) {
      this.showIssues(err.report.errors);
    } else {
      this.banner.textContent = String(err);
      this.banner.hidden = false;
    }
  }

  private showIssues(issues: ValidationIssue[]): void {
    this.banner.replaceChildren(
      ...issues.map((issue) => {
        const row = document.createElement("div");
        row.textContent = issue.path ? `${issue.path}: ${issue.message}` : issue.message;
        return row;
      }),
    );
    this.banner.hidden = false;
  }

  private clearBanner(): void {
    this.banner.hidden = true;
    this.banner.replaceChildren();
  }

  private renderControls(): void {
    if (!this.session) return;
    const { dataset, controls } = this.session;
    this.controlsBox.replaceChildren();

    const group = (title: string): HTMLElement => {
      const box = document.createElement("fieldset");
      const legend = document.createElement("legend");
      legend.textContent = title;
      box.appendChild(legend);
      this.controlsBox.appendChild(box);
      return box;
    };

    const baselineBox = group("baselines");
    const baselineInputs = new Map<string, HTMLInputElement>();
    for (const solver of solverNames(dataset)) {
      const row = document.createElement("label");
      const check = document.createElement("input");
      check.type = "checkbox";
      check.checked = controls.baselines.has(solver);
      check.addEventListener("change", () => {
        if (!toggleBaseline(controls, solver)) {
          check.checked = true; // the last baseline is locked
          this.notice.textContent = "at least one baseline must stay selected";
          return;
        }
        lockLastBaseline();
        this.touch();
      });
      baselineInputs.set(solver, check);
      row.append(check, ` ${solver}`);
      baselineBox.appendChild(row);
    }
    const lockLastBaseline = () => {
      const only = controls.baselines.size === 1;
      for (const [solver, box] of baselineInputs) {
        box.disabled = only && controls.baselines.has(solver);
      }
    };
    lockLastBaseline();

    if (dataset.labels.length > 0) {
      const labelBox = group("labels");
      for (const label of dataset.labels) {
        const row = document.createElement("label");
        const check = document.createElement("input");
        check.type = "checkbox";
        check.checked = controls.activeLabels.has(label);
        check.addEventListener("change", () => {
          if (check.checked) controls.activeLabels.add(label);
          else controls.activeLabels.delete(label);
          this.touch();
        });
        row.append(check, ` ${label}`);
        labelBox.appendChild(row);
      }
    }

    const sliderBox = group("component scaling");
    for (const [solver, components] of Object.entries(dataset.data)) {
      for (const component of Object.keys(components)) {
        const row = document.createElement("div");
        row.className = "slider-row";
        const name = document.createElement("span");
        name.textContent = `${solver} / ${component}`;
        const slider = document.createElement("input");
        slider.type = "range";
        slider.min = "0";
        slider.max = "1";
        slider.step = "0.01";
        slider.value = String(Math.min(getFactor(controls, solver, component), 1));
        const numeric = document.createElement("input");
        numeric.type = "number";
        numeric.min = "0";
        numeric.step = "0.05";
        numeric.value = String(getFactor(controls, solver, component));
        slider.addEventListener("input", () => {
          numeric.value = slider.value;
          setFactor(controls, solver, component, Number(slider.value));
          this.touch();
        });
        numeric.addEventListener("change", () => {
          const factor = Math.max(0, Number(numeric.value) || 0);
          slider.value = String(Math.min(factor, 1));
          setFactor(controls, solver, component, factor);
          this.touch();
        });
        row.append(name, slider, numeric);
        sliderBox.appendChild(row);
      }
    }

    const windowBox = group("view");
    const addNumber = (
      label: string,
      value: number,
      apply: (n: number) => void,
      placeholder = "",
    ): HTMLInputElement => {
      const row = document.createElement("label");
      row.className = "field";
      row.textContent = label;
      const box = document.createElement("input");
      box.type = "number";
      box.step = "any";
      if (!Number.isNaN(value)) box.value = String(value);
      box.placeholder = placeholder;
      box.addEventListener("change", () => {
        apply(box.value === "" ? NaN : Number(box.value));
        this.touch();
      });
      row.appendChild(box);
      windowBox.appendChild(row);
      return box;
    };
    const tauMinBox = addNumber("tau min", controls.tauMin, (n) => {
      controls.tauMin = Number.isNaN(n) ? 0 : n;
    });
    addNumber("tau max", controls.tauMax, (n) => {
      controls.tauMax = Number.isNaN(n) ? 2 : n;
    });
    addNumber("min baseline", controls.minBaseline, (n) => {
      controls.minBaseline = Number.isNaN(n) ? 0 : n;
    }, "off");
    addNumber("unsolved above", controls.unsolved, (n) => {
      controls.unsolved = n;
    }, "off");

    const scaleRow = document.createElement("label");
    const scaleCheck = document.createElement("input");
    scaleCheck.type = "checkbox";
    scaleCheck.checked = controls.logScale;
    scaleCheck.addEventListener("change", () => {
      controls.logScale = scaleCheck.checked;
      if (controls.logScale && controls.tauMin <= 0) {
        controls.tauMin = coerceTauMinForLog(controls.tauMin, this.lastCurves?.curves);
        tauMinBox.value = String(controls.tauMin);
        this.notice.textContent = `tau min raised to ${controls.tauMin} for the log scale`;
      }
      this.touch();
    });
    scaleRow.append(scaleCheck, " logarithmic x scale");
    windowBox.appendChild(scaleRow);
  }
}

export function startWorkbench(): void {
  new Workbench().mount();
}
