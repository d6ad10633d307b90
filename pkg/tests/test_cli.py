import json
import subprocess
import sys

import pytest

from perfprof.cli import main, parse_scale_flag
from perfprof.engine import AnalysisConfig, analyze, profile_set_to_json
from perfprof.render import render_html, render_svg
from perfprof.schema import emit_schema


@pytest.fixture
def car_file(tmp_path, car_json):
    path = tmp_path / "cars.json"
    path.write_bytes(car_json)
    return path


def run_cli(*args: str, stdin: bytes = b"") -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "perfprof", *args],
        input=stdin,
        capture_output=True,
    )


class TestValidate:
    def test_valid_file(self, car_file):
        result = run_cli("validate", "-i", str(car_file))
        assert result.returncode == 0
        assert b"ok: 3 solvers, 6 instances, 2 labels" in result.stdout

    def test_invalid_file(self, tmp_path, car_document):
        car_document["data"]["Car A"]["motor"] = [20, 3]
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(car_document))
        result = run_cli("validate", "-i", str(path))
        assert result.returncode == 1
        assert b"data/Car A/motor" in result.stdout

    def test_stdin(self, car_json):
        result = run_cli("validate", "-i", "-", stdin=car_json)
        assert result.returncode == 0

    def test_missing_file(self, tmp_path):
        result = run_cli("validate", "-i", str(tmp_path / "nope.json"))
        assert result.returncode == 2
        assert b"error" in result.stderr


class TestSchema:
    def test_schema_to_stdout(self):
        result = run_cli("schema")
        assert result.returncode == 0
        assert result.stdout == emit_schema()

    def test_schema_to_file(self, tmp_path):
        out = tmp_path / "schema.json"
        result = run_cli("schema", "-o", str(out))
        assert result.returncode == 0
        assert out.read_bytes() == emit_schema()


class TestProfile:
    def test_default_svg_matches_library(self, car_file, car_dataset):
        result = run_cli("profile", "-i", str(car_file), "--format", "svg")
        assert result.returncode == 0
        config = AnalysisConfig.defaults(car_dataset)
        expected = render_svg(analyze(car_dataset, config), config, "time")
        assert result.stdout == expected

    def test_json_output(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--format", "json")
        assert result.returncode == 0
        document = json.loads(result.stdout)
        assert document["max_ratio"] == 12.0
        assert document["denominator"] == 6

    def test_html_output(self, car_file, car_dataset):
        result = run_cli("profile", "-i", str(car_file), "--format", "html")
        config = AnalysisConfig.defaults(car_dataset)
        svg = render_svg(analyze(car_dataset, config), config, "time")
        assert result.stdout == render_html(svg)

    def test_output_file(self, car_file, tmp_path):
        out = tmp_path / "plot.svg"
        result = run_cli("profile", "-i", str(car_file), "-o", str(out))
        assert result.returncode == 0
        assert result.stdout == b""
        assert out.read_bytes().startswith(b"<svg")

    def test_baseline_and_min_baseline(self, car_file):
        result = run_cli(
            "profile", "-i", str(car_file),
            "--baseline", "Car B", "--min-baseline", "11", "--format", "json",
        )
        assert result.returncode == 0
        assert json.loads(result.stdout)["denominator"] == 4

    def test_scale_flag(self, car_file, car_dataset):
        result = run_cli(
            "profile", "-i", str(car_file),
            "--scale", "Car A/motor=0", "--format", "json",
        )
        assert result.returncode == 0
        document = json.loads(result.stdout)
        config = AnalysisConfig.from_mapping(
            car_dataset, {"scale_factors": {"Car A": {"motor": 0}}}
        )
        expected = json.loads(profile_set_to_json(analyze(car_dataset, config)))
        assert document == expected
        assert document["max_ratio"] == 10.0

    def test_drop_label(self, car_file):
        result = run_cli(
            "profile", "-i", str(car_file), "--drop-label", "Wood", "--format", "json",
        )
        assert json.loads(result.stdout)["denominator"] == 2

    def test_byte_identical_across_runs(self, car_file):
        first = run_cli("profile", "-i", str(car_file), "--format", "svg")
        second = run_cli("profile", "-i", str(car_file), "--format", "svg")
        assert first.stdout == second.stdout

    def test_stdin_stdout(self, car_json):
        result = run_cli("profile", "-i", "-", "--format", "json", stdin=car_json)
        assert result.returncode == 0
        assert json.loads(result.stdout)["denominator"] == 6


class TestUsageErrors:
    def test_unknown_baseline(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--baseline", "Car D")
        assert result.returncode == 2
        assert b"Car D" in result.stderr

    def test_unknown_label(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--drop-label", "Sand")
        assert result.returncode == 2
        assert b"Sand" in result.stderr

    def test_unknown_scale_target(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--scale", "Car A/tires=0.5")
        assert result.returncode == 2

    def test_malformed_scale_flag(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--scale", "Car A/motor")
        assert result.returncode == 2

    def test_tau_contradiction(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--tau-min", "3", "--tau-max", "2")
        assert result.returncode == 2
        assert b"tau_max" in result.stderr

    def test_log_scale_needs_positive_tau_min(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--x-scale", "logarithmic")
        assert result.returncode == 2
        assert b"tau_min" in result.stderr

    def test_unknown_flag(self, car_file):
        result = run_cli("profile", "-i", str(car_file), "--sideways")
        assert result.returncode == 2

    def test_invalid_dataset_exits_one(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{")
        result = run_cli("profile", "-i", str(path))
        assert result.returncode == 1
        assert b"invalid input" in result.stderr

    def test_overfiltered_plot_exits_one(self, car_file):
        result = run_cli(
            "profile", "-i", str(car_file),
            "--drop-label", "Road", "--drop-label", "Wood",
        )
        assert result.returncode == 1
        assert b"nothing to plot" in result.stderr


class TestScaleFlagParsing:
    def test_simple(self, car_dataset):
        assert parse_scale_flag(car_dataset, "Car A/motor=0.25") == ("Car A", "motor", 0.25)

    def test_slash_in_names_resolved_against_dataset(self):
        from perfprof.model import parse_dataset

        doc = {
            "metric": "t",
            "labels": [],
            "instances": [[]],
            "data": {"a/b": {"c": [1]}, "a": {"b/c": [1]}},
        }
        dataset = parse_dataset(json.dumps(doc))
        with pytest.raises(ValueError, match="ambiguous"):
            parse_scale_flag(dataset, "a/b/c=1")

    def test_in_process_main_matches_subprocess(self, car_file, capsys):
        code = main(["validate", "-i", str(car_file)])
        assert code == 0
        assert "ok:" in capsys.readouterr().out
