"""Benchmark data model and input-document validation.

The input format is a single JSON object with four keys:

* ``metric``    -- display name of the measured quantity (e.g. ``"time"``),
* ``labels``    -- array of distinct label strings,
* ``instances`` -- one array of 0-based label indices per benchmark instance,
* ``data``      -- solver name -> component name -> array of metric values,
                   one value per instance.

``parse_dataset`` never raises on bad input: it returns either a validated
:class:`Dataset` or a :class:`ValidationReport` listing every problem found,
each with the JSON path of the offending location.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterator

REQUIRED_KEYS = ("metric", "labels", "instances", "data")


@dataclass
class ValidationReport:
    """Accumulated validation problems, as ``(path, message)`` pairs."""

    errors: list[tuple[str, str]] = field(default_factory=list)
    warnings: list[tuple[str, str]] = field(default_factory=list)

    def add_error(self, path: str, message: str) -> None:
        self.errors.append((path, message))

    def add_warning(self, path: str, message: str) -> None:
        self.warnings.append((path, message))

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_document(self) -> dict[str, Any]:
        return {
            "errors": [{"path": p, "message": m} for p, m in self.errors],
            "warnings": [{"path": p, "message": m} for p, m in self.warnings],
        }


@dataclass(frozen=True)
class Dataset:
    """Validated benchmark results. Immutable; safe to share across threads."""

    metric_name: str
    labels: tuple[str, ...]
    instance_labels: tuple[tuple[int, ...], ...]
    solvers: dict[str, dict[str, tuple[float, ...]]]

    @property
    def instance_count(self) -> int:
        return len(self.instance_labels)

    @property
    def solver_names(self) -> tuple[str, ...]:
        return tuple(self.solvers)

    def components(self, solver: str) -> tuple[str, ...]:
        return tuple(self.solvers[solver])

    def component_pairs(self) -> Iterator[tuple[str, str]]:
        """All (solver, component) pairs in document order."""
        for solver, components in self.solvers.items():
            for component in components:
                yield solver, component


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _check_metric(obj: dict, report: ValidationReport) -> str:
    metric = obj.get("metric")
    if "metric" not in obj:
        report.add_error("metric", "missing required key")
        return ""
    if not isinstance(metric, str):
        report.add_error("metric", f"expected a string, got {type(metric).__name__}")
        return ""
    return metric


def _check_labels(obj: dict, report: ValidationReport) -> tuple[str, ...]:
    labels = obj.get("labels")
    if "labels" not in obj:
        report.add_error("labels", "missing required key")
        return ()
    if not isinstance(labels, list):
        report.add_error("labels", f"expected an array, got {type(labels).__name__}")
        return ()
    out: list[str] = []
    seen: set[str] = set()
    for i, label in enumerate(labels):
        if not isinstance(label, str):
            report.add_error(f"labels[{i}]", f"expected a string, got {type(label).__name__}")
            continue
        if label in seen:
            report.add_error(f"labels[{i}]", f"duplicate label {label!r}")
            continue
        seen.add(label)
        out.append(label)
    return tuple(out)


def _check_instances(
    obj: dict, label_count: int, report: ValidationReport
) -> tuple[tuple[int, ...], ...]:
    instances = obj.get("instances")
    if "instances" not in obj:
        report.add_error("instances", "missing required key")
        return ()
    if not isinstance(instances, list):
        report.add_error("instances", f"expected an array, got {type(instances).__name__}")
        return ()
    if not instances:
        report.add_error("instances", "at least one instance is required")
        return ()
    out: list[tuple[int, ...]] = []
    for i, entry in enumerate(instances):
        if not isinstance(entry, list):
            report.add_error(f"instances[{i}]", f"expected an array, got {type(entry).__name__}")
            out.append(())
            continue
        indices: list[int] = []
        for j, idx in enumerate(entry):
            if not isinstance(idx, int) or isinstance(idx, bool):
                report.add_error(f"instances[{i}][{j}]", "label index must be an integer")
                continue
            if idx < 0 or idx >= label_count:
                report.add_error(
                    f"instances[{i}][{j}]",
                    f"label index {idx} out of range for {label_count} labels",
                )
                continue
            if idx in indices:
                report.add_error(f"instances[{i}][{j}]", f"duplicate label index {idx}")
                continue
            indices.append(idx)
        out.append(tuple(indices))
    return tuple(out)


def _check_vector(path: str, values: Any, instance_count: int, report: ValidationReport) -> tuple[float, ...]:
    if not isinstance(values, list):
        report.add_error(path, f"expected an array of numbers, got {type(values).__name__}")
        return ()
    if instance_count and len(values) != instance_count:
        report.add_error(path, f"expected {instance_count} values, got {len(values)}")
    out: list[float] = []
    for i, value in enumerate(values):
        if not _is_number(value):
            report.add_error(f"{path}[{i}]", "metric value must be a number")
            continue
        value = float(value)
        if math.isnan(value) or math.isinf(value):
            report.add_error(f"{path}[{i}]", "metric value must be finite")
            continue
        if value < 0:
            report.add_error(f"{path}[{i}]", f"metric value must be >= 0, got {value}")
            continue
        out.append(value)
    return tuple(out)


def _check_data(
    obj: dict, instance_count: int, report: ValidationReport
) -> dict[str, dict[str, tuple[float, ...]]]:
    data = obj.get("data")
    if "data" not in obj:
        report.add_error("data", "missing required key")
        return {}
    if not isinstance(data, dict):
        report.add_error("data", f"expected an object, got {type(data).__name__}")
        return {}
    if not data:
        report.add_error("data", "at least one solver is required")
        return {}
    solvers: dict[str, dict[str, tuple[float, ...]]] = {}
    for solver, components in data.items():
        path = f"data/{solver}"
        if not isinstance(components, dict):
            report.add_error(path, f"expected an object, got {type(components).__name__}")
            continue
        if not components:
            report.add_error(path, "at least one component is required")
            continue
        parsed: dict[str, tuple[float, ...]] = {}
        for component, values in components.items():
            parsed[component] = _check_vector(f"{path}/{component}", values, instance_count, report)
        solvers[solver] = parsed
    return solvers


def dataset_from_document(obj: Any) -> Dataset | ValidationReport:
    """Validate an already-parsed JSON value into a Dataset.

    All detectable problems are accumulated in one pass, so a report may
    carry several errors.
    """
    report = ValidationReport()
    if not isinstance(obj, dict):
        report.add_error("", f"expected a JSON object, got {type(obj).__name__}")
        return report

    for key in obj:
        if key not in REQUIRED_KEYS:
            report.add_warning(key, "unknown top-level key (ignored)")

    metric = _check_metric(obj, report)
    labels = _check_labels(obj, report)
    instances = _check_instances(obj, len(labels), report)
    solvers = _check_data(obj, len(instances), report)

    if not report.ok:
        return report
    return Dataset(
        metric_name=metric,
        labels=labels,
        instance_labels=instances,
        solvers=solvers,
    )


def parse_dataset(raw: bytes | str) -> Dataset | ValidationReport:
    """Parse and validate a raw input document.

    Returns a Dataset on success, otherwise a ValidationReport with at
    least one error. Never raises on malformed input.
    """
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            report = ValidationReport()
            report.add_error("", f"input is not valid UTF-8: {exc.reason} at byte {exc.start}")
            return report
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        report = ValidationReport()
        report.add_error("", f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})")
        return report
    return dataset_from_document(obj)


def dataset_to_document(dataset: Dataset) -> dict[str, Any]:
    """Convert a Dataset back to the input document structure.

    Round-trips: parsing the result yields a field-by-field equal Dataset.
    """
    return {
        "metric": dataset.metric_name,
        "labels": list(dataset.labels),
        "instances": [list(entry) for entry in dataset.instance_labels],
        "data": {
            solver: {component: list(values) for component, values in components.items()}
            for solver, components in dataset.solvers.items()
        },
    }


def dataset_to_json(dataset: Dataset) -> bytes:
    document = dataset_to_document(dataset)
    return json.dumps(document, indent=2, ensure_ascii=False).encode("utf-8")
