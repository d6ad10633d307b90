"""Export a profile three ways: curve JSON, standalone SVG, minimal HTML page.

Every export is byte-deterministic, and the CLI produces the same bytes:

    perfprof profile -i demos/cars.json --format json
    perfprof profile -i demos/cars.json --format svg -o cars.svg
    perfprof profile -i demos/cars.json --format html -o cars.html
"""

import json
from pathlib import Path

from perfprof import (
    AnalysisConfig,
    analyze,
    parse_dataset,
    profile_set_to_json,
    render_html,
    render_svg,
)

HERE = Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

dataset = parse_dataset((HERE / "cars.json").read_bytes())
config = AnalysisConfig.defaults(dataset)
profiles = analyze(dataset, config)

curves = profile_set_to_json(profiles)
(OUT / "cars_curves.json").write_bytes(curves)
document = json.loads(curves)
print("curve document keys:", ", ".join(document))
print("Car A breakpoints:", document["curves"]["Car A"]["tau"])

svg = render_svg(profiles, config, dataset.metric_name)
(OUT / "cars.svg").write_bytes(svg)

page = render_html(svg, "car benchmark profiles")
(OUT / "cars.html").write_bytes(page)
print(f"wrote {OUT / 'cars_curves.json'}, {OUT / 'cars.svg'}, {OUT / 'cars.html'}")
print("the HTML page embeds the SVG inline and loads nothing from the network")
