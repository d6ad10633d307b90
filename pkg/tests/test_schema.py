"""The schema and the parser must agree wherever draft-07 can express the rule."""

import json
import random

import jsonschema
import pytest

from perfprof.model import Dataset, parse_dataset
from perfprof.schema import INPUT_SCHEMA, emit_schema

from conftest import random_document


@pytest.fixture(scope="module")
def validator():
    jsonschema.Draft7Validator.check_schema(INPUT_SCHEMA)
    return jsonschema.Draft7Validator(INPUT_SCHEMA)


def test_emit_schema_is_stable_json():
    first = emit_schema()
    second = emit_schema()
    assert first == second
    parsed = json.loads(first)
    assert parsed["$schema"].startswith("http://json-schema.org/draft-07")


def test_schema_accepts_car_document(validator, car_document):
    assert validator.is_valid(car_document)


def test_schema_rejects_missing_metric(validator, car_document):
    del car_document["metric"]
    assert not validator.is_valid(car_document)
    assert not isinstance(parse_dataset(json.dumps(car_document)), Dataset)


def test_schema_rejects_numeric_data(validator, car_document):
    car_document["data"] = 7
    assert not validator.is_valid(car_document)


def test_schema_rejects_negative_values(validator, car_document):
    car_document["data"]["Car B"]["wheels"][0] = -3
    assert not validator.is_valid(car_document)


def test_schema_rejects_empty_solver_map(validator, car_document):
    car_document["data"] = {}
    assert not validator.is_valid(car_document)


def test_schema_rejects_unknown_top_level_key(validator, car_document):
    # The schema is strict; the parser downgrades this to a warning.
    car_document["notes"] = "x"
    assert not validator.is_valid(car_document)
    assert isinstance(parse_dataset(json.dumps(car_document)), Dataset)


def test_parser_accepted_documents_validate(validator):
    rng = random.Random(1234)
    for _ in range(50):
        document = random_document(rng, max_solvers=4, max_instances=10)
        assert isinstance(parse_dataset(json.dumps(document)), Dataset)
        assert validator.is_valid(document)


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("labels"),
        lambda d: d.pop("instances"),
        lambda d: d.pop("data"),
        lambda d: d.update(metric=12),
        lambda d: d.update(labels="Road"),
        lambda d: d.update(instances=[]),
        lambda d: d.update(instances=[["Road"]]),
        lambda d: d.update(labels=["Road", "Road"]),
    ],
    ids=[
        "no-labels", "no-instances", "no-data", "metric-type", "labels-type",
        "instances-empty", "index-type", "labels-duplicate",
    ],
)
def test_schema_rejections_are_parser_rejections(validator, car_document, mutate):
    mutate(car_document)
    assert not validator.is_valid(car_document)
    result = parse_dataset(json.dumps(car_document))
    assert not isinstance(result, Dataset)
