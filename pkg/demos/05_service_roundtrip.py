"""Drive the HTTP service end to end: validate, configure, fetch an SVG.

The service is stateless: the dataset travels inline with each request, and
identical requests return identical bytes. The same analysis is reproducible
from the CLI:

    perfprof profile -i demos/cars.json --baseline "Car B" --scale "Car A/motor=0.5" --format svg
"""

import json
import threading
from pathlib import Path
from urllib.request import Request, urlopen

from perfprof.service import create_server

HERE = Path(__file__).parent
OUT = HERE / "output"
OUT.mkdir(exist_ok=True)

server = create_server("127.0.0.1", 0)
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{server.server_address[1]}"
print(f"service listening at {base}")

schema = urlopen(f"{base}/api/schema").read()
print(f"GET /api/schema -> {len(schema)} bytes of draft-07 schema")

payload = {
    "dataset": json.loads((HERE / "cars.json").read_text()),
    "config": {
        "baselines": ["Car B"],
        "scale_factors": {"Car A": {"motor": 0.5}},
    },
    "response_format": "json",
}
request = Request(
    f"{base}/api/profile",
    data=json.dumps(payload).encode(),
    headers={"Content-Type": "application/json"},
)
body = json.loads(urlopen(request).read())
print(f"POST /api/profile -> denominator {body['denominator']}, max ratio {body['max_ratio']:g}")

payload["response_format"] = "svg"
request = Request(
    f"{base}/api/profile",
    data=json.dumps(payload).encode(),
    headers={"Content-Type": "application/json"},
)
svg = urlopen(request).read()
(OUT / "service_cars.svg").write_bytes(svg)
print(f"POST /api/profile (svg) -> wrote {OUT / 'service_cars.svg'}")

server.shutdown()
server.server_close()
