"""Stateless HTTP facade over the profile engine.

Routes:

* ``POST /api/profile`` -- body ``{"dataset": ..., "config": ...,
  "response_format": "json"|"svg"|"html"}``; responds 200 with the chosen
  format, 422 with a validation report on bad dataset/config, 400 on a
  malformed body, 413 when the body exceeds the size limit.
* ``GET /api/schema``   -- the input-format JSON Schema (cacheable, ETag).
* ``GET /{path}``       -- static UI assets from a configured directory.

Nothing is persisted between requests: an identical request yields an
identical response body. Requests are served concurrently by a thread per
connection; handlers share only immutable artifacts.

Run directly with ``python -m perfprof.service``; bind address, port and
static directory come from flags or the PERFPROF_HOST / PERFPROF_PORT /
PERFPROF_STATIC_DIR environment variables.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Any

from .engine import AnalysisConfig, ConfigError, analyze, profile_set_to_json
from .model import Dataset, ValidationReport, dataset_from_document
from .render import RenderError, render_html, render_svg
from .schema import emit_schema

DEFAULT_MAX_BODY = 32 * 1024 * 1024

MEDIA_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
    ".map": "application/json; charset=utf-8",
    ".txt": "text/plain; charset=utf-8",
}

FALLBACK_INDEX = b"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>performance profile service</title>
</head>
<body>
<h1>Performance profile service</h1>
<p>The web UI bundle is not installed. The API is available:</p>
<ul>
<li>POST /api/profile</li>
<li>GET /api/schema</li>
</ul>
</body>
</html>
"""

RESPONSE_FORMATS = ("json", "svg", "html")


def _error_body(report_errors: list[tuple[str, str]], warnings: list[tuple[str, str]] | None = None) -> bytes:
    body = {
        "errors": [{"path": p, "message": m} for p, m in report_errors],
        "warnings": [{"path": p, "message": m} for p, m in (warnings or [])],
    }
    return json.dumps(body, indent=2, ensure_ascii=False).encode("utf-8")


def profile_response(payload: Any) -> tuple[int, str, bytes]:
    """Compute the (status, media type, body) for a profile request payload."""
    if not isinstance(payload, dict):
        return 400, "application/json; charset=utf-8", _error_body([("", "request body must be a JSON object")])

    if "dataset" not in payload:
        return 422, "application/json; charset=utf-8", _error_body([("dataset", "missing required key")])
    parsed = dataset_from_document(payload["dataset"])
    if isinstance(parsed, ValidationReport):
        errors = [(f"dataset/{p}" if p else "dataset", m) for p, m in parsed.errors]
        warnings = [(f"dataset/{p}" if p else "dataset", m) for p, m in parsed.warnings]
        return 422, "application/json; charset=utf-8", _error_body(errors, warnings)
    dataset: Dataset = parsed

    config_mapping = payload.get("config", {})
    if not isinstance(config_mapping, dict):
        return 422, "application/json; charset=utf-8", _error_body([("config", "expected an object")])
    try:
        config = AnalysisConfig.from_mapping(dataset, config_mapping)
    except ConfigError as exc:
        errors = [(f"config/{p}", m) for p, m in exc.errors]
        return 422, "application/json; charset=utf-8", _error_body(errors)

    response_format = payload.get("response_format", "json")
    if response_format not in RESPONSE_FORMATS:
        return 422, "application/json; charset=utf-8", _error_body(
            [("response_format", f"expected one of {', '.join(RESPONSE_FORMATS)}")]
        )

    profiles = analyze(dataset, config)
    try:
        if response_format == "json":
            return 200, "application/json; charset=utf-8", profile_set_to_json(profiles)
        svg = render_svg(profiles, config, dataset.metric_name)
    except RenderError as exc:
        return 422, "application/json; charset=utf-8", _error_body([("config", str(exc))])
    if response_format == "svg":
        return 200, "image/svg+xml", svg
    return 200, "text/html; charset=utf-8", render_html(svg)


class WorkbenchHandler(BaseHTTPRequestHandler):
    """One instance per request; configuration lives on the server object."""

    server_version = "perfprof"
    protocol_version = "HTTP/1.1"

    def handle(self) -> None:
        try:
            super().handle()
        except (ConnectionResetError, BrokenPipeError, TimeoutError):
            self.close_connection = True  # client went away mid-request

    def _respond(self, status: int, content_type: str, body: bytes, extra: dict[str, str] | None = None) -> None:
        try:
            self.send_response(status)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            for key, value in (extra or {}).items():
                self.send_header(key, value)
            self.end_headers()
            self.wfile.write(body)
        except (BrokenPipeError, ConnectionResetError):
            self.close_connection = True

    def _respond_json_error(self, status: int, path: str, message: str) -> None:
        self._respond(status, "application/json; charset=utf-8", _error_body([(path, message)]))

    def do_POST(self) -> None:  # noqa: N802 (http.server API)
        if self.path.split("?", 1)[0] != "/api/profile":
            self._respond_json_error(404, "", "unknown route")
            return
        length_header = self.headers.get("Content-Length")
        try:
            length = int(length_header) if length_header is not None else 0
        except ValueError:
            self.close_connection = True
            self._respond_json_error(400, "", "invalid Content-Length")
            return
        if length > self.server.max_body:  # type: ignore[attr-defined]
            # The body is never read; drop the connection instead of
            # misparsing the unread bytes as the next request.
            self.close_connection = True
            self._respond_json_error(413, "", f"request body exceeds {self.server.max_body} bytes")  # type: ignore[attr-defined]
            return
        if length <= 0:
            self.close_connection = True
            self._respond_json_error(400, "", "empty request body")
            return
        raw = self.rfile.read(length)
        try:
            payload = json.loads(raw)
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            self._respond_json_error(400, "", f"malformed JSON body: {exc}")
            return
        status, content_type, body = profile_response(payload)
        self._respond(status, content_type, body)

    def do_GET(self) -> None:  # noqa: N802 (http.server API)
        path = self.path.split("?", 1)[0]
        if path == "/api/schema":
            self._serve_schema()
            return
        self._serve_static(path)

    def _serve_schema(self) -> None:
        body: bytes = self.server.schema_body  # type: ignore[attr-defined]
        etag: str = self.server.schema_etag  # type: ignore[attr-defined]
        if self.headers.get("If-None-Match") == etag:
            self.send_response(304)
            self.send_header("ETag", etag)
            self.send_header("Content-Length", "0")
            self.end_headers()
            return
        self._respond(
            200,
            "application/json; charset=utf-8",
            body,
            {"ETag": etag, "Cache-Control": "public, max-age=86400"},
        )

    def _serve_static(self, path: str) -> None:
        root: Path | None = self.server.static_root  # type: ignore[attr-defined]
        if path == "/":
            path = "/index.html"
        if root is None:
            if path == "/index.html":
                self._respond(200, MEDIA_TYPES[".html"], FALLBACK_INDEX)
            else:
                self._respond_json_error(404, "", "not found")
            return
        relative = path.lstrip("/")
        target = (root / relative).resolve()
        try:
            target.relative_to(root.resolve())
        except ValueError:
            self._respond_json_error(404, "", "not found")
            return
        if not target.is_file():
            self._respond_json_error(404, "", "not found")
            return
        media_type = MEDIA_TYPES.get(target.suffix.lower(), "application/octet-stream")
        self._respond(200, media_type, target.read_bytes())

    def log_message(self, format: str, *args: Any) -> None:
        if self.server.verbose:  # type: ignore[attr-defined]
            sys.stderr.write("%s - %s\n" % (self.address_string(), format % args))


class WorkbenchServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(
        self,
        address: tuple[str, int],
        *,
        static_dir: str | os.PathLike | None = None,
        max_body: int = DEFAULT_MAX_BODY,
        verbose: bool = False,
    ):
        super().__init__(address, WorkbenchHandler)
        self.static_root = Path(static_dir) if static_dir else None
        self.max_body = max_body
        self.verbose = verbose
        self.schema_body = emit_schema()
        self.schema_etag = '"%s"' % hashlib.sha256(self.schema_body).hexdigest()[:32]


def create_server(
    host: str = "127.0.0.1",
    port: int = 8080,
    *,
    static_dir: str | os.PathLike | None = None,
    max_body: int = DEFAULT_MAX_BODY,
    verbose: bool = False,
) -> WorkbenchServer:
    return WorkbenchServer((host, port), static_dir=static_dir, max_body=max_body, verbose=verbose)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="perfprof-service",
        description="Serve the profile computation API and the web UI.",
    )
    parser.add_argument("--host", default=os.environ.get("PERFPROF_HOST", "127.0.0.1"))
    parser.add_argument("--port", type=int, default=int(os.environ.get("PERFPROF_PORT", "8080")))
    parser.add_argument(
        "--static-dir",
        default=os.environ.get("PERFPROF_STATIC_DIR"),
        help="directory with the built web UI (default: serve a placeholder page)",
    )
    parser.add_argument(
        "--max-body-bytes", type=int, default=DEFAULT_MAX_BODY,
        help="request body size limit (default: 32 MiB)",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress request logging")
    args = parser.parse_args(argv)

    server = create_server(
        args.host,
        args.port,
        static_dir=args.static_dir,
        max_body=args.max_body_bytes,
        verbose=not args.quiet,
    )
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port}/", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
