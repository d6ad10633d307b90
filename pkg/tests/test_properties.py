"""Randomized invariants of the profile pipeline."""

import json
import math

import numpy as np
from hypothesis import assume, given, settings, strategies as st

from perfprof.engine import (
    AnalysisConfig,
    analyze,
    build_effective_matrix,
    compute_profiles,
    evaluate_profile,
)
from perfprof.model import Dataset, parse_dataset
from perfprof.oracle import brute_force_profile


@st.composite
def datasets(draw, max_solvers=4, max_instances=10, max_components=3, allow_zeros=True):
    n_instances = draw(st.integers(1, max_instances))
    n_solvers = draw(st.integers(1, max_solvers))
    n_labels = draw(st.integers(0, 3))
    value = st.floats(0.0, 100.0, allow_nan=False) if allow_zeros else st.floats(0.01, 100.0)
    document = {
        "metric": "time",
        "labels": [f"L{i}" for i in range(n_labels)],
        "instances": [
            draw(st.lists(st.integers(0, n_labels - 1), unique=True, max_size=n_labels))
            if n_labels
            else []
            for _ in range(n_instances)
        ],
        "data": {
            f"s{i}": {
                f"c{j}": draw(
                    st.lists(value, min_size=n_instances, max_size=n_instances)
                )
                for j in range(draw(st.integers(1, max_components)))
            }
            for i in range(n_solvers)
        },
    }
    dataset = parse_dataset(json.dumps(document))
    assert isinstance(dataset, Dataset)
    return dataset


@st.composite
def dataset_configs(draw, with_thresholds=True, **kwargs):
    dataset = draw(datasets(**kwargs))
    names = list(dataset.solver_names)
    baselines = draw(
        st.lists(st.sampled_from(names), min_size=1, max_size=len(names), unique=True)
    )
    active = [
        name for name in dataset.labels if draw(st.booleans())
    ] if dataset.labels else []
    factors = {}
    for solver, component in dataset.component_pairs():
        if draw(st.booleans()):
            factors[(solver, component)] = draw(st.floats(0.0, 1.0, allow_nan=False))
    min_baseline = 0.0
    unsolved = math.inf
    if with_thresholds:
        if draw(st.booleans()):
            min_baseline = draw(st.floats(0.0, 10.0, allow_nan=False))
        if draw(st.booleans()):
            unsolved = draw(st.floats(10.0, 150.0, allow_nan=False))
    config = AnalysisConfig(
        baselines=tuple(baselines),
        active_labels=tuple(active),
        scale_factors=factors,
        min_baseline_threshold=min_baseline,
        unsolved_threshold=unsolved,
    )
    return dataset, config


def tau_grid(profiles):
    taus = {0.0, 0.5, 1.0, 2.0}
    for curve in profiles.curves.values():
        taus.update(curve.taus.tolist())
    return sorted(taus)


@given(dataset_configs())
@settings(max_examples=80, deadline=None)
def test_monotone_and_bounded(dc):
    dataset, config = dc
    profiles = analyze(dataset, config)
    for curve in profiles.curves.values():
        values = curve.values
        assert (np.diff(values) >= 0).all() if values.size else True
        if values.size:
            assert values[0] >= 0.0
            assert values[-1] <= 1.0
        assert (np.diff(curve.taus) > 0).all() if curve.taus.size else True


@given(dataset_configs(allow_zeros=False))
@settings(max_examples=60, deadline=None)
def test_final_value_is_solved_fraction(dc):
    # Positive metrics: baseline minima are > 0, so a solver's ratio is finite
    # exactly when it solved the instance. (With zero-cost baselines a solved
    # instance can carry an infinite ratio by the positive/0 convention.)
    dataset, config = dc
    profiles = analyze(dataset, config)
    matrix = build_effective_matrix(dataset, config)
    names = list(matrix.solvers)
    rows = [names.index(b) for b in config.baselines]
    best = matrix.values[rows].min(axis=0) if matrix.values.size else np.zeros(0)
    assume(not (best == 0).any())  # scale factors of 0 can reintroduce zero baselines
    kept_cols = ~np.isinf(best) if best.size else np.zeros(0, dtype=bool)
    for row, name in enumerate(names):
        curve = profiles.curves[name]
        if profiles.denominator == 0:
            assert evaluate_profile(curve, profiles.max_ratio) == 0.0
            continue
        solved = np.isfinite(matrix.values[row][kept_cols]).sum()
        # the largest finite ratio of the solver itself bounds its plateau
        top = curve.taus[-1] if curve.taus.size else 0.0
        assert evaluate_profile(curve, max(top, profiles.max_ratio)) * profiles.denominator == solved


@given(dataset_configs(with_thresholds=False))
@settings(max_examples=60, deadline=None)
def test_winner_coverage_with_all_baselines(dc):
    dataset, _ = dc
    config = AnalysisConfig(
        baselines=dataset.solver_names,
        active_labels=dataset.labels,
    )
    profiles = analyze(dataset, config)
    if profiles.denominator == 0:
        return
    total = sum(evaluate_profile(c, 1.0) for c in profiles.curves.values())
    assert total >= 1.0 - 1e-12
    for curve in profiles.curves.values():
        if curve.taus.size:
            assert curve.taus[0] >= 1.0  # ratio floor when every solver is a baseline


@given(datasets())
@settings(max_examples=60, deadline=None)
def test_single_baseline_flatness(dataset):
    name = dataset.solver_names[0]
    config = AnalysisConfig(baselines=(name,), active_labels=dataset.labels)
    profiles = analyze(dataset, config)
    curve = profiles.curves[name]
    if profiles.denominator == 0:
        return
    at_one = evaluate_profile(curve, 1.0)
    assert evaluate_profile(curve, 5.0) == at_one
    assert evaluate_profile(curve, 1e6) == at_one


@given(datasets())
@settings(max_examples=60, deadline=None)
def test_scale_factor_identity(dataset):
    plain = AnalysisConfig(baselines=dataset.solver_names, active_labels=dataset.labels)
    explicit = AnalysisConfig(
        baselines=dataset.solver_names,
        active_labels=dataset.labels,
        scale_factors={pair: 1.0 for pair in dataset.component_pairs()},
    )
    first = analyze(dataset, plain)
    second = analyze(dataset, explicit)
    assert first.denominator == second.denominator
    for name in dataset.solver_names:
        np.testing.assert_array_equal(first.curves[name].taus, second.curves[name].taus)
        np.testing.assert_array_equal(first.curves[name].counts, second.curves[name].counts)


@given(dataset_configs(with_thresholds=False), st.sampled_from([0.125, 0.5, 2.0, 3.0, 10.0, 7.5]))
@settings(max_examples=60, deadline=None)
def test_global_rescale_invariance(dc, c):
    dataset, config = dc
    scaled_doc = {
        "metric": dataset.metric_name,
        "labels": list(dataset.labels),
        "instances": [list(e) for e in dataset.instance_labels],
        "data": {
            solver: {comp: [c * v for v in values] for comp, values in comps.items()}
            for solver, comps in dataset.solvers.items()
        },
    }
    scaled = parse_dataset(json.dumps(scaled_doc))
    assert isinstance(scaled, Dataset)
    base = analyze(dataset, config)
    rescaled = analyze(scaled, config)
    assert base.denominator == rescaled.denominator
    if base.max_ratio == 0.0:
        assert rescaled.max_ratio == 0.0
    else:
        np.testing.assert_allclose(rescaled.max_ratio, base.max_ratio, rtol=1e-12)
    for name in dataset.solver_names:
        a, b = base.curves[name], rescaled.curves[name]
        assert a.counts.tolist() == b.counts.tolist()
        np.testing.assert_allclose(b.taus, a.taus, rtol=1e-12)


@given(dataset_configs(with_thresholds=False), st.floats(0.0, 1.0, allow_nan=False))
@settings(max_examples=60, deadline=None)
def test_what_if_monotonicity(dc, lower):
    dataset, config = dc
    outsiders = [s for s in dataset.solver_names if s not in config.baselines]
    if not outsiders:
        return
    solver = outsiders[0]
    component = dataset.components(solver)[0]
    current = config.scale_factors.get((solver, component), 1.0)
    reduced = dict(config.scale_factors)
    reduced[(solver, component)] = current * lower
    lowered = AnalysisConfig(
        baselines=config.baselines,
        active_labels=config.active_labels,
        scale_factors=reduced,
    )
    base_profiles = analyze(dataset, config)
    low_profiles = analyze(dataset, lowered)
    assert base_profiles.denominator == low_profiles.denominator
    for tau in tau_grid(base_profiles):
        assert evaluate_profile(low_profiles.curves[solver], tau) >= evaluate_profile(
            base_profiles.curves[solver], tau
        )
    for other in dataset.solver_names:
        if other == solver:
            continue
        np.testing.assert_array_equal(
            base_profiles.curves[other].taus, low_profiles.curves[other].taus
        )
        np.testing.assert_array_equal(
            base_profiles.curves[other].counts, low_profiles.curves[other].counts
        )


@given(dataset_configs(with_thresholds=False))
@settings(max_examples=60, deadline=None)
def test_disabled_thresholds_match_skipping_the_steps(dc):
    dataset, config = dc
    assert config.min_baseline_threshold == 0.0
    assert math.isinf(config.unsolved_threshold)
    # Reference: raw scaled totals with the threshold steps literally omitted.
    from perfprof.engine import EffectiveMatrix, filter_by_labels

    kept = filter_by_labels(dataset, config.active_labels)
    names = dataset.solver_names
    totals = np.zeros((len(names), len(kept)))
    for row, solver in enumerate(names):
        for component, values in dataset.solvers[solver].items():
            totals[row] += config.factor(solver, component) * np.asarray(values)[kept]
    reference = compute_profiles(
        EffectiveMatrix(solvers=names, values=totals, kept_instances=tuple(kept)),
        config.baselines,
    )
    full = analyze(dataset, config)
    assert full.denominator == reference.denominator
    assert full.excluded_no_baseline == reference.excluded_no_baseline == 0
    for name in names:
        np.testing.assert_array_equal(full.curves[name].taus, reference.curves[name].taus)
        np.testing.assert_array_equal(full.curves[name].counts, reference.curves[name].counts)


@given(dataset_configs())
@settings(max_examples=40, deadline=None)
def test_oracle_agreement(dc):
    dataset, config = dc
    profiles = analyze(dataset, config)
    for name, curve in profiles.curves.items():
        for tau in list(curve.taus[:5]) + [0.0, 1.0, 3.0]:
            assert evaluate_profile(curve, float(tau)) == brute_force_profile(
                dataset, config, name, float(tau)
            )


@given(dataset_configs())
@settings(max_examples=40, deadline=None)
def test_evaluate_matches_document_arrays(dc):
    dataset, config = dc
    profiles = analyze(dataset, config)
    from perfprof.engine import profile_set_to_document

    document = profile_set_to_document(profiles)
    for name, curve in profiles.curves.items():
        entry = document["curves"][name]
        for tau, value in zip(entry["tau"], entry["F"]):
            assert evaluate_profile(curve, tau) == value
