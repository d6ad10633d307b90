"""Reference profile computation for testing.

``brute_force_profile`` recomputes a single profile value by a direct,
loop-based transcription of the cumulative-ratio definition. It deliberately
shares no code with :mod:`perfprof.engine` (its own label filtering, totals,
minima and counting) so the two implementations can check each other.
Intended for small test inputs only.
"""

from __future__ import annotations

import math


def brute_force_profile(dataset, config, solver: str, tau: float) -> float:
    """Fraction of kept instances where solver's ratio to the best baseline is <= tau."""
    # Instances that carry no deactivated label.
    active = set(config.active_labels)
    removed = {i for i, name in enumerate(dataset.labels) if name not in active}
    kept = []
    for i in range(dataset.instance_count):
        if not any(idx in removed for idx in dataset.instance_labels[i]):
            kept.append(i)

    # Scaled per-solver totals on each kept instance.
    def total(name: str, instance: int) -> float:
        acc = 0.0
        for component, values in dataset.solvers[name].items():
            factor = config.scale_factors.get((name, component), 1.0)
            acc += factor * values[instance]
        return acc

    # Instances where some baseline falls strictly below the noise floor.
    filtered = []
    for i in kept:
        below = False
        for b in config.baselines:
            if total(b, i) < config.min_baseline_threshold:
                below = True
        if not below:
            filtered.append(i)

    # Totals above the unsolved threshold count as infinite.
    def effective(name: str, instance: int) -> float:
        value = total(name, instance)
        if value > config.unsolved_threshold:
            return math.inf
        return value

    count = 0
    denominator = 0
    for i in filtered:
        best = math.inf
        for b in config.baselines:
            value = effective(b, i)
            if value < best:
                best = value
        if math.isinf(best):
            continue  # no baseline solved it: drop from the instance set
        denominator += 1
        value = effective(solver, i)
        if value == 0.0 and best == 0.0:
            ratio = 1.0
        elif best == 0.0:
            ratio = math.inf
        else:
            ratio = value / best
        if ratio <= tau:
            count += 1

    if denominator == 0:
        return 0.0
    return count / denominator
