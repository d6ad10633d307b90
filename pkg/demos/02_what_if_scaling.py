"""What-if analysis: how much would a cheaper component change the picture?

Scale factors multiply one component's metric before profiles are computed.
A factor of 0.8 simulates making Car A's motor 20% more efficient; a factor
of 0 answers "what if the motor cost nothing at all" - the upper bound on
any motor improvement.
"""

from pathlib import Path

from perfprof import AnalysisConfig, analyze, evaluate_profile, parse_dataset, render_svg

HERE = Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

dataset = parse_dataset((HERE / "cars.json").read_bytes())

for factor in (1.0, 0.8, 0.5, 0.0):
    config = AnalysisConfig(
        baselines=dataset.solver_names,
        active_labels=dataset.labels,
        scale_factors={("Car A", "motor"): factor},
    )
    profiles = analyze(dataset, config)
    curve = profiles.curves["Car A"]
    print(
        f"motor x{factor:<4g} Car A: F(1) = {evaluate_profile(curve, 1.0):.3f}, "
        f"F(2) = {evaluate_profile(curve, 2.0):.3f}, max ratio = {profiles.max_ratio:g}"
    )
    svg = render_svg(profiles, config, dataset.metric_name)
    (OUT / f"cars_motor_{factor:g}.svg").write_bytes(svg)

# The factor-0 curve bounds every partial improvement from above: if even a
# free motor would not lift Car A past the others, no motor work will.
print(f"\nwrote 4 scenario plots into {OUT}")
