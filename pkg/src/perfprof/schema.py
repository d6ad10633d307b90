"""JSON Schema (draft-07) for the benchmark input format.

The schema is the strict, machine-checkable description of the format and is
served by both the CLI (``perfprof schema``) and the HTTP service
(``GET /api/schema``). Cross-field constraints (metric vectors as long as the
``instances`` array, label indices within ``labels``) are beyond draft-07 and
are enforced by the parser only.
"""

from __future__ import annotations

import json

INPUT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "Benchmark results",
    "description": (
        "Per-solver, per-component metric vectors over a common set of "
        "benchmark instances, with optional instance labels."
    ),
    "type": "object",
    "required": ["metric", "labels", "instances", "data"],
    "additionalProperties": False,
    "properties": {
        "metric": {
            "description": "Display name of the measured quantity.",
            "type": "string",
        },
        "labels": {
            "description": "Vocabulary of instance labels; entries are distinct.",
            "type": "array",
            "items": {"type": "string"},
            "uniqueItems": True,
        },
        "instances": {
            "description": (
                "One entry per benchmark instance: the 0-based indices into "
                "'labels' that characterize the instance (possibly empty)."
            ),
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "array",
                "items": {"type": "integer", "minimum": 0},
                "uniqueItems": True,
            },
        },
        "data": {
            "description": "Solver name -> component name -> metric vector.",
            "type": "object",
            "minProperties": 1,
            "additionalProperties": {
                "type": "object",
                "minProperties": 1,
                "additionalProperties": {
                    "type": "array",
                    "minItems": 1,
                    "items": {"type": "number", "minimum": 0},
                },
            },
        },
    },
}


def emit_schema() -> bytes:
    """The input-format schema as a stable UTF-8 JSON document."""
    return json.dumps(INPUT_SCHEMA, indent=2, ensure_ascii=False).encode("utf-8")
