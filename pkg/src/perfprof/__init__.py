"""Performance-profile workbench.

Compute cumulative performance profiles from structured benchmark results,
explore what-if scenarios by scaling per-component metrics, and export the
curves as SVG, HTML or JSON via the library, the ``perfprof`` CLI or the
bundled HTTP service.
"""

from .engine import (
    AnalysisConfig,
    ConfigError,
    EffectiveMatrix,
    ProfileSet,
    StepCurve,
    analyze,
    build_effective_matrix,
    compute_profiles,
    evaluate_profile,
    filter_by_labels,
    profile_set_to_document,
    profile_set_to_json,
    total_metric,
    validate_config,
)
from .model import (
    Dataset,
    ValidationReport,
    dataset_from_document,
    dataset_to_document,
    dataset_to_json,
    parse_dataset,
)
from .render import PlotSpec, RenderError, plan_plot, render_html, render_svg
from .schema import emit_schema

__version__ = "0.1.0"

__all__ = [
    "AnalysisConfig",
    "ConfigError",
    "Dataset",
    "EffectiveMatrix",
    "PlotSpec",
    "ProfileSet",
    "RenderError",
    "StepCurve",
    "ValidationReport",
    "analyze",
    "build_effective_matrix",
    "compute_profiles",
    "dataset_from_document",
    "dataset_to_document",
    "dataset_to_json",
    "emit_schema",
    "evaluate_profile",
    "filter_by_labels",
    "parse_dataset",
    "plan_plot",
    "profile_set_to_document",
    "profile_set_to_json",
    "render_html",
    "render_svg",
    "total_metric",
    "validate_config",
]
