"""Profile computation: what-if scaling, filtering, ratios, step curves.

The pipeline, in fixed order:

1. label filtering (an instance survives if it carries no deactivated label),
2. per-solver totals as the component sum, each component scaled by its
   what-if factor (1.0 when not overridden),
3. instances where any baseline total falls strictly below
   ``min_baseline_threshold`` are dropped (noise floor),
4. totals strictly above ``unsolved_threshold`` become +inf (timeout),
5. per-instance ratio of each solver's total to the best baseline total,
6. per-solver cumulative step curves over the ratios.

Thresholds apply to *scaled* totals, so a what-if scenario is internally
consistent: a sped-up solver may drop below the timeout, and a slowed-down
baseline may fall under the noise floor.

Instances where every baseline is unsolved have no defined ratio; they are
removed from the instance set entirely and surfaced via
``ProfileSet.excluded_no_baseline``.

Ratio conventions keep the computation total: 0/0 is 1 (matching a zero-cost
baseline is "as good as best"), a positive total over a zero baseline is
+inf, and an unsolved total is +inf regardless of the denominator.

Scale factors may target baseline solvers too; ratios are then taken against
the scaled baseline. That is permitted but changes the yardstick itself, so
for a clean what-if reading scale only non-baseline solvers.

All operations are pure functions of (Dataset, AnalysisConfig); distinct
configurations may be evaluated concurrently over one shared Dataset.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from .model import Dataset

X_SCALES = ("linear", "logarithmic")


class ConfigError(ValueError):
    """Invalid analysis configuration; carries (path, message) pairs."""

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = errors
        super().__init__("; ".join(f"{p}: {m}" for p, m in errors))


@dataclass(frozen=True)
class AnalysisConfig:
    """One what-if scenario over a dataset.

    ``scale_factors`` maps (solver, component) to a non-negative factor;
    absent pairs default to 1.0. ``unsolved_threshold`` of +inf and
    ``min_baseline_threshold`` of 0 disable the respective filters.
    """

    baselines: tuple[str, ...]
    active_labels: tuple[str, ...]
    scale_factors: Mapping[tuple[str, str], float] = field(default_factory=dict)
    min_baseline_threshold: float = 0.0
    unsolved_threshold: float = math.inf
    tau_min: float = 0.0
    tau_max: float = 2.0
    x_scale: str = "linear"

    def factor(self, solver: str, component: str) -> float:
        return self.scale_factors.get((solver, component), 1.0)

    @classmethod
    def defaults(cls, dataset: Dataset) -> "AnalysisConfig":
        """All solvers as baselines, all labels active, no scaling, filters off."""
        return cls(baselines=dataset.solver_names, active_labels=dataset.labels)

    @classmethod
    def from_mapping(cls, dataset: Dataset, mapping: Mapping[str, Any]) -> "AnalysisConfig":
        """Build a config from a JSON-style mapping, validating every field.

        Raises ConfigError listing each offending field by path. Recognized
        keys: baselines, active_labels, scale_factors (solver -> component ->
        factor), min_baseline_threshold, unsolved_threshold (null disables),
        tau_min, tau_max, x_scale.
        """
        errors: list[tuple[str, str]] = []
        known = {
            "baselines", "active_labels", "scale_factors",
            "min_baseline_threshold", "unsolved_threshold",
            "tau_min", "tau_max", "x_scale",
        }
        for key in mapping:
            if key not in known:
                errors.append((key, "unknown configuration field"))

        def number(key: str, default: float, allow_none: bool = False) -> float:
            if key not in mapping or (allow_none and mapping[key] is None):
                return default
            value = mapping[key]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                errors.append((key, "expected a number"))
                return default
            return float(value)

        baselines = list(dataset.solver_names)
        if "baselines" in mapping:
            raw = mapping["baselines"]
            if not isinstance(raw, list) or not all(isinstance(b, str) for b in raw):
                errors.append(("baselines", "expected an array of solver names"))
            else:
                baselines = []
                for i, name in enumerate(raw):
                    if name not in dataset.solvers:
                        errors.append((f"baselines[{i}]", f"unknown solver {name!r}"))
                    elif name in baselines:
                        errors.append((f"baselines[{i}]", f"duplicate baseline {name!r}"))
                    else:
                        baselines.append(name)
                if not raw:
                    errors.append(("baselines", "at least one baseline is required"))

        active = list(dataset.labels)
        if "active_labels" in mapping:
            raw = mapping["active_labels"]
            if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
                errors.append(("active_labels", "expected an array of label names"))
            else:
                active = []
                for i, name in enumerate(raw):
                    if name not in dataset.labels:
                        errors.append((f"active_labels[{i}]", f"unknown label {name!r}"))
                    elif name not in active:
                        active.append(name)

        factors: dict[tuple[str, str], float] = {}
        if "scale_factors" in mapping:
            raw = mapping["scale_factors"]
            if not isinstance(raw, dict):
                errors.append(("scale_factors", "expected an object (solver -> component -> factor)"))
            else:
                for solver, components in raw.items():
                    if solver not in dataset.solvers:
                        errors.append((f"scale_factors/{solver}", f"unknown solver {solver!r}"))
                        continue
                    if not isinstance(components, dict):
                        errors.append((f"scale_factors/{solver}", "expected an object (component -> factor)"))
                        continue
                    for component, value in components.items():
                        path = f"scale_factors/{solver}/{component}"
                        if component not in dataset.solvers[solver]:
                            errors.append((path, f"unknown component {component!r}"))
                        elif isinstance(value, bool) or not isinstance(value, (int, float)):
                            errors.append((path, "expected a number"))
                        elif not math.isfinite(float(value)) or float(value) < 0:
                            errors.append((path, "scale factor must be finite and >= 0"))
                        else:
                            factors[(solver, component)] = float(value)

        min_baseline = number("min_baseline_threshold", 0.0)
        unsolved = number("unsolved_threshold", math.inf, allow_none=True)
        tau_min = number("tau_min", 0.0)
        tau_max = number("tau_max", 2.0)

        x_scale = mapping.get("x_scale", "linear")
        if x_scale not in X_SCALES:
            errors.append(("x_scale", f"expected one of {', '.join(X_SCALES)}"))
            x_scale = "linear"

        if min_baseline < 0 or not math.isfinite(min_baseline):
            errors.append(("min_baseline_threshold", "must be a finite number >= 0"))
        if not unsolved > 0:
            errors.append(("unsolved_threshold", "must be > 0 (omit or null to disable)"))
        if tau_min < 0 or not math.isfinite(tau_min):
            errors.append(("tau_min", "must be a finite number >= 0"))
        if not tau_max > tau_min:
            errors.append(("tau_max", f"must be greater than tau_min ({tau_min:g})"))
        if x_scale == "logarithmic" and tau_min <= 0:
            errors.append(("tau_min", "must be > 0 when x_scale is logarithmic"))

        if errors:
            raise ConfigError(errors)
        return cls(
            baselines=tuple(baselines),
            active_labels=tuple(active),
            scale_factors=factors,
            min_baseline_threshold=min_baseline,
            unsolved_threshold=unsolved,
            tau_min=tau_min,
            tau_max=tau_max,
            x_scale=x_scale,
        )


def validate_config(dataset: Dataset, config: AnalysisConfig) -> list[tuple[str, str]]:
    """Check a config against a dataset; empty list when consistent."""
    errors: list[tuple[str, str]] = []
    if not config.baselines:
        errors.append(("baselines", "at least one baseline is required"))
    for i, name in enumerate(config.baselines):
        if name not in dataset.solvers:
            errors.append((f"baselines[{i}]", f"unknown solver {name!r}"))
    for i, name in enumerate(config.active_labels):
        if name not in dataset.labels:
            errors.append((f"active_labels[{i}]", f"unknown label {name!r}"))
    for (solver, component), value in config.scale_factors.items():
        path = f"scale_factors/{solver}/{component}"
        if solver not in dataset.solvers or component not in dataset.solvers[solver]:
            errors.append((path, f"unknown solver/component pair {solver!r}/{component!r}"))
        elif not math.isfinite(value) or value < 0:
            errors.append((path, "scale factor must be finite and >= 0"))
    if config.min_baseline_threshold < 0:
        errors.append(("min_baseline_threshold", "must be >= 0"))
    if not config.unsolved_threshold > 0:
        errors.append(("unsolved_threshold", "must be > 0"))
    if not config.tau_max > config.tau_min:
        errors.append(("tau_max", "must be greater than tau_min"))
    if config.x_scale not in X_SCALES:
        errors.append(("x_scale", f"expected one of {', '.join(X_SCALES)}"))
    elif config.x_scale == "logarithmic" and config.tau_min <= 0:
        errors.append(("tau_min", "must be > 0 when x_scale is logarithmic"))
    return errors


def total_metric(
    dataset: Dataset,
    scale_factors: Mapping[tuple[str, str], float],
    solver: str,
    instance: int,
) -> float:
    """Scaled component sum for one solver on one instance."""
    if solver not in dataset.solvers:
        raise KeyError(f"unknown solver {solver!r}")
    if not 0 <= instance < dataset.instance_count:
        raise IndexError(f"instance {instance} out of range for {dataset.instance_count} instances")
    acc = 0.0
    for component, values in dataset.solvers[solver].items():
        acc += scale_factors.get((solver, component), 1.0) * values[instance]
    return acc


def filter_by_labels(dataset: Dataset, active_labels: Iterable[str]) -> list[int]:
    """Instances carrying no deactivated label, in original order.

    Unlabeled instances are always kept.
    """
    active = set(active_labels)
    removed = {i for i, name in enumerate(dataset.labels) if name not in active}
    return [
        i
        for i in range(dataset.instance_count)
        if not removed.intersection(dataset.instance_labels[i])
    ]


@dataclass(frozen=True)
class EffectiveMatrix:
    """Per (solver, kept instance) effective totals; +inf marks unsolved."""

    solvers: tuple[str, ...]
    values: np.ndarray  # shape (len(solvers), len(kept_instances))
    kept_instances: tuple[int, ...]


def build_effective_matrix(dataset: Dataset, config: AnalysisConfig) -> EffectiveMatrix:
    """Apply label filter, scaling and both thresholds; see module pipeline."""
    problems = validate_config(dataset, config)
    if problems:
        raise ConfigError(problems)

    kept = filter_by_labels(dataset, config.active_labels)
    names = dataset.solver_names
    totals = np.zeros((len(names), len(kept)), dtype=np.float64)
    for row, solver in enumerate(names):
        for component, values in dataset.solvers[solver].items():
            factor = config.factor(solver, component)
            totals[row] += factor * np.asarray(values, dtype=np.float64)[kept]

    # Noise floor: drop instances where any baseline is strictly below it.
    baseline_rows = [names.index(b) for b in config.baselines]
    below = (totals[baseline_rows] < config.min_baseline_threshold).any(axis=0)
    if below.any():
        keep_cols = ~below
        totals = totals[:, keep_cols]
        kept = [i for i, keep in zip(kept, keep_cols) if keep]

    # Timeout: totals strictly above the threshold are unsolved.
    totals[totals > config.unsolved_threshold] = np.inf

    return EffectiveMatrix(solvers=names, values=totals, kept_instances=tuple(kept))


@dataclass
class StepCurve:
    """Right-continuous cumulative step function over attained ratios.

    ``counts[k]`` is the number of kept instances with ratio <= ``taus[k]``;
    the curve value there is ``counts[k] / denominator``.
    """

    taus: np.ndarray  # sorted, strictly increasing breakpoints
    counts: np.ndarray  # cumulative instance counts, same length
    denominator: int

    @property
    def values(self) -> np.ndarray:
        if self.denominator == 0:
            return np.zeros(0, dtype=np.float64)
        return self.counts / self.denominator

    def evaluate(self, tau: float) -> float:
        if self.denominator == 0:
            return 0.0
        pos = int(np.searchsorted(self.taus, tau, side="right"))
        if pos == 0:
            return 0.0
        return float(self.counts[pos - 1] / self.denominator)


@dataclass
class ProfileSet:
    """Per-solver step curves plus the metadata needed to plot and report them."""

    curves: dict[str, StepCurve]
    max_ratio: float  # largest finite ratio over all solvers/instances; 0.0 if none
    denominator: int
    excluded_no_baseline: int


def compute_profiles(matrix: EffectiveMatrix, baselines: Sequence[str]) -> ProfileSet:
    """Cumulative ratio-to-best-baseline curves from an effective matrix."""
    if not baselines:
        raise ValueError("at least one baseline is required")
    rows = []
    for name in baselines:
        if name not in matrix.solvers:
            raise KeyError(f"unknown baseline {name!r}")
        rows.append(matrix.solvers.index(name))

    if matrix.values.shape[1] == 0:
        curves = {
            name: StepCurve(np.zeros(0), np.zeros(0, dtype=np.int64), 0)
            for name in matrix.solvers
        }
        return ProfileSet(curves=curves, max_ratio=0.0, denominator=0, excluded_no_baseline=0)

    best = matrix.values[rows].min(axis=0)
    no_baseline = np.isinf(best)
    excluded = int(no_baseline.sum())
    values = matrix.values[:, ~no_baseline]
    best = best[~no_baseline]
    denominator = values.shape[1]

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        ratios = values / best
    ratios[(values == 0) & (best == 0)] = 1.0  # matching a zero-cost baseline

    finite = ratios[np.isfinite(ratios)]
    max_ratio = float(finite.max()) if finite.size else 0.0

    curves: dict[str, StepCurve] = {}
    for row, name in enumerate(matrix.solvers):
        attained = ratios[row][np.isfinite(ratios[row])]
        taus, per_step = np.unique(attained, return_counts=True)
        curves[name] = StepCurve(
            taus=taus,
            counts=np.cumsum(per_step, dtype=np.int64),
            denominator=denominator,
        )
    return ProfileSet(
        curves=curves,
        max_ratio=max_ratio,
        denominator=denominator,
        excluded_no_baseline=excluded,
    )


def evaluate_profile(curve: StepCurve, tau: float) -> float:
    """Step-function value at tau: fraction of kept instances with ratio <= tau."""
    return curve.evaluate(tau)


def analyze(dataset: Dataset, config: AnalysisConfig) -> ProfileSet:
    """Full pipeline: effective matrix then profile curves."""
    matrix = build_effective_matrix(dataset, config)
    return compute_profiles(matrix, config.baselines)


def profile_set_to_document(profiles: ProfileSet) -> dict[str, Any]:
    """Curve document: per-solver tau/F arrays plus plot metadata."""
    return {
        "curves": {
            name: {
                "tau": [float(t) for t in curve.taus],
                "F": [float(v) for v in curve.values],
            }
            for name, curve in profiles.curves.items()
        },
        "max_ratio": profiles.max_ratio,
        "denominator": profiles.denominator,
        "excluded_no_baseline": profiles.excluded_no_baseline,
    }


def profile_set_to_json(profiles: ProfileSet) -> bytes:
    return json.dumps(profile_set_to_document(profiles), indent=2, ensure_ascii=False).encode("utf-8")
