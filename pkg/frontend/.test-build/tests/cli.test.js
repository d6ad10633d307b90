import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import { test } from "node:test";
import { buildCliArgs, buildCliCommand, shellQuote } from "../src/cli.js";
import { controlsFromConfig, defaultControls, setFactor, toggleBaseline } from "../src/state.js";
const dataset = JSON.parse(readFileSync(new URL("../../../demos/cars.json", import.meta.url), "utf-8"));
test("defaults produce the bare invocation", () => {
    const command = buildCliCommand(dataset, defaultControls(dataset), "svg", "cars.json");
    assert.equal(command, "perfprof profile -i cars.json --format svg");
});
test("every control appears as its flag", () => {
    const controls = controlsFromConfig(dataset, {
        baselines: ["Car B"],
        active_labels: ["Road"],
        scale_factors: { "Car A": { motor: 0.8 } },
        min_baseline_threshold: 2,
        unsolved_threshold: 100,
        tau_min: 0.5,
        tau_max: 4,
        x_scale: "logarithmic",
    });
    const args = buildCliArgs(dataset, controls, "json");
    assert.deepEqual(args, [
        "profile", "-i", "RESULTS.json", "--format", "json",
        "--baseline", "Car B",
        "--drop-label", "Wood",
        "--scale", "Car A/motor=0.8",
        "--min-baseline", "2",
        "--unsolved", "100",
        "--tau-min", "0.5",
        "--tau-max", "4",
        "--x-scale", "logarithmic",
    ]);
});
test("names with spaces are quoted for the shell", () => {
    const controls = defaultControls(dataset);
    toggleBaseline(controls, "Car A");
    setFactor(controls, "Car A", "motor", 0);
    const command = buildCliCommand(dataset, controls, "svg", "my results.json");
    assert.ok(command.includes("-i 'my results.json'"));
    assert.ok(command.includes("--baseline 'Car B'"));
    assert.ok(command.includes("--scale 'Car A/motor=0'"));
});
test("single quotes inside names survive quoting", () => {
    assert.equal(shellQuote("it's"), "'it'\\''s'");
    assert.equal(shellQuote("plain-name_1.json"), "plain-name_1.json");
});
