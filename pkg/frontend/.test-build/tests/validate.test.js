import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import { test } from "node:test";
import { parseResultsFile, validateDocument } from "../src/validate.js";
const carText = readFileSync(new URL("../../../demos/cars.json", import.meta.url), "utf-8");
const carDocument = () => JSON.parse(carText);
test("accepts the car fixture", () => {
    const outcome = parseResultsFile(carText);
    assert.ok(outcome.ok);
    if (outcome.ok) {
        assert.equal(outcome.dataset.metric, "time");
        assert.deepEqual(Object.keys(outcome.dataset.data), ["Car A", "Car B", "Car C"]);
    }
});
test("malformed JSON becomes a single issue, not an exception", () => {
    const outcome = parseResultsFile('{"metric": ');
    assert.ok(!outcome.ok);
    if (!outcome.ok) {
        assert.equal(outcome.errors.length, 1);
        assert.match(outcome.errors[0].message, /malformed JSON/);
    }
});
test("length mismatch carries the component path", () => {
    const doc = carDocument();
    doc.data["Car A"].motor = [20, 3, 4, 5, 1];
    const outcome = validateDocument(doc);
    assert.ok(!outcome.ok);
    if (!outcome.ok) {
        assert.ok(outcome.errors.some((e) => e.path === "data/Car A/motor" && e.message.includes("expected 6 values")));
    }
});
test("label index out of range carries the instance path", () => {
    const doc = carDocument();
    doc.instances[2] = [0, 2];
    const outcome = validateDocument(doc);
    assert.ok(!outcome.ok);
    if (!outcome.ok) {
        assert.ok(outcome.errors.some((e) => e.path === "instances[2][1]"));
    }
});
test("all problems reported at once", () => {
    const doc = carDocument();
    delete doc.metric;
    doc.labels = ["Road", "Road"];
    doc.data["Car B"].wheels[0] = -1;
    const outcome = validateDocument(doc);
    assert.ok(!outcome.ok);
    if (!outcome.ok) {
        const paths = outcome.errors.map((e) => e.path);
        assert.ok(paths.includes("metric"));
        assert.ok(paths.includes("labels[1]"));
        assert.ok(paths.includes("data/Car B/wheels[0]"));
    }
});
test("empty data and empty instances rejected", () => {
    const doc = carDocument();
    doc.data = {};
    doc.instances = [];
    const outcome = validateDocument(doc);
    assert.ok(!outcome.ok);
    if (!outcome.ok) {
        const paths = outcome.errors.map((e) => e.path);
        assert.ok(paths.includes("data"));
        assert.ok(paths.includes("instances"));
    }
});
test("unknown top-level keys warn but do not block", () => {
    const doc = carDocument();
    doc.comment = "collected on machine 7";
    const outcome = validateDocument(doc);
    assert.ok(outcome.ok);
    if (outcome.ok) {
        assert.deepEqual(outcome.warnings, [
            { path: "comment", message: "unknown top-level key (ignored)" },
        ]);
    }
});
test("non-object inputs are rejected, never thrown", () => {
    for (const raw of ["null", "3", '"hi"', "[]", "true"]) {
        const outcome = parseResultsFile(raw);
        assert.ok(!outcome.ok);
    }
});
