import copy
import json
import random

import pytest

from perfprof.model import Dataset, parse_dataset

# The three-car example: 6 track instances, labels Road/Wood, per-car
# component times. Totals: Car A [120,33,44,55,11,22], Car B [10,7,45,55,30,50],
# Car C [25,15,39,45,16,27].
CAR_DOCUMENT = {
    "metric": "time",
    "labels": ["Road", "Wood"],
    "instances": [[0], [0], [0, 1], [0, 1], [1], [1]],
    "data": {
        "Car A": {
            "wheels": [100, 30, 40, 50, 10, 20],
            "motor": [20, 3, 4, 5, 1, 2],
        },
        "Car B": {
            "wheels": [10, 7, 45, 55, 30, 50],
        },
        "Car C": {
            "wheels": [15, 12, 35, 40, 15, 25],
            "motor": [10, 3, 4, 5, 1, 2],
        },
    },
}


@pytest.fixture
def car_document():
    return copy.deepcopy(CAR_DOCUMENT)


@pytest.fixture
def car_dataset() -> Dataset:
    result = parse_dataset(json.dumps(CAR_DOCUMENT))
    assert isinstance(result, Dataset)
    return result


@pytest.fixture
def car_json() -> bytes:
    return json.dumps(CAR_DOCUMENT).encode("utf-8")


def random_document(rng: random.Random, max_solvers: int = 8, max_instances: int = 50) -> dict:
    """Random well-formed input document for equivalence and property runs."""
    n_instances = rng.randint(1, max_instances)
    n_solvers = rng.randint(1, max_solvers)
    n_labels = rng.randint(0, 3)
    labels = [f"label{i}" for i in range(n_labels)]
    instances = [
        sorted(rng.sample(range(n_labels), rng.randint(0, n_labels)))
        for _ in range(n_instances)
    ]
    data = {}
    for s in range(n_solvers):
        components = {}
        for c in range(rng.randint(1, 3)):
            values = [
                0.0 if rng.random() < 0.05 else rng.uniform(0.0, 100.0)
                for _ in range(n_instances)
            ]
            components[f"part{c}"] = values
        data[f"solver{s}"] = components
    return {"metric": "time", "labels": labels, "instances": instances, "data": data}


def random_config_mapping(rng: random.Random, document: dict) -> dict:
    """Random valid config mapping for a document from random_document."""
    solvers = list(document["data"])
    labels = list(document["labels"])
    baselines = rng.sample(solvers, rng.randint(1, len(solvers)))
    active = [name for name in labels if rng.random() < 0.8]
    factors: dict[str, dict[str, float]] = {}
    for solver, components in document["data"].items():
        for component in components:
            if rng.random() < 0.4:
                factors.setdefault(solver, {})[component] = rng.uniform(0.0, 1.0)
    mapping: dict = {"baselines": baselines, "active_labels": active}
    if factors:
        mapping["scale_factors"] = factors
    if rng.random() < 0.4:
        mapping["min_baseline_threshold"] = rng.uniform(0.0, 5.0)
    if rng.random() < 0.4:
        mapping["unsolved_threshold"] = rng.uniform(20.0, 120.0)
    return mapping
