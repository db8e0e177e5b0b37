#!/usr/bin/env python3
"""Validate shipped data files and CLI reports against the JSON schemas.

Usage: validate_schemas.py FIBREKIT_BINARY REPO_ROOT
"""

import json
import os
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

BASE = "https://fibrekit.invalid/schemas/"


def load_schemas(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        Draft202012Validator.check_schema(schema)
        schemas[path.name] = schema
    registry = Registry().with_resources(
        (BASE + name, Resource.from_contents(s)) for name, s in schemas.items())
    return {name: Draft202012Validator(s, registry=registry) for name, s in schemas.items()}


def data_schema(doc):
    if "facets" in doc:
        return "complex.schema.json"
    if "values" in doc:
        return "character.schema.json"
    if "edges" in doc:
        return "graph.schema.json"
    return "matrix.schema.json"


def main():
    binary, root = sys.argv[1], Path(sys.argv[2])
    validators = load_schemas(root / "schemas")
    data = root / "data"
    failures = 0

    def check(validator_name, doc, what):
        nonlocal failures
        errors = sorted(validators[validator_name].iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {what}: {errors[0].message} at {list(errors[0].path)}")
        else:
            print(f"ok   {what}")

    for path in sorted(data.glob("*.json")):
        doc = json.loads(path.read_text())
        check(data_schema(doc), doc, f"data/{path.name}")

    d = lambda name: str(data / name)
    commands = [
        (["complex", "validate", "--complex", d("c4.json")], 0),
        (["complex", "validate", "--complex", d("hollow_triangle.json"), "--require-flag"], 2),
        (["complex", "homology", "--complex", d("octahedron.json")], 0),
        (["complex", "girth", "--complex", d("path3.json")], 0),
        (["complex", "join", "--complex", d("c4.json")], 0),
        (["sigma", "check", "--complex", d("c4.json"), "--character", d("c4_ones.json"), "--n", "1"], 0),
        (["sigma", "check", "--complex", d("path3.json"), "--character", d("path3_101.json"), "--n", "0"], 0),
        (["sigma", "check", "--complex", d("octahedron.json"), "--n", "1"], 0),
        (["kernel-type", "--complex", d("octahedron.json")], 0),
        (["kernel-type", "--complex", d("grid_disk.json")], 0),
        (["gamma-kernel-type", "--complex", d("c5.json"), "--u", "a", "--w", "c"], 0),
        (["gamma-kernel-type", "--complex", d("path3.json"), "--u", "a", "--w", "c"], 2),
        (["lm", "analyze", "--matrix", d("rotation_3_5.json"), "--max-power", "10"], 0),
        (["lm", "analyze", "--matrix", d("rotation_3_5.json"), "--sublattice", d("lattice_2_1.json")], 0),
        (["lm", "analyze", "--matrix", d("rotation90.json")], 0),
        (["construct", "huang", "--graph", d("k4.json")], 0),
        (["construct", "salvetti", "--complex", d("edge.json")], 0),
        (["construct", "cover", "--complex", d("c5.json"), "--u", "a", "--w", "c", "--radius", "2"], 0),
        (["construct", "ball", "--complex", d("sphere0.json"), "--radius", "2"], 0),
        (["construct", "heights", "--complex", d("edge.json"), "--radius", "2"], 0),
        (["construct", "levelset", "--complex", d("edge.json"), "--lo", "0", "--hi", "0"], 0),
        (["construct", "ball", "--complex", d("edge.json"), "--radius", "9"], 3),
        (["sigma", "check", "--complex", d("missing.json"), "--n", "0"], 1),
    ]
    env = dict(os.environ)
    env.pop("FIBREKIT_MAX_RADIUS", None)
    for args, expected_code in commands:
        proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True, env=env)
        what = " ".join(args[:2]) + f" (exit {proc.returncode})"
        if proc.returncode != expected_code:
            failures += 1
            print(f"FAIL {what}: expected exit {expected_code}")
            continue
        report = json.loads(proc.stdout)
        check("report.schema.json", report, what)
        # Graph and complex payloads must re-validate as inputs.
        result = report.get("result", {})
        if "graph" in result:
            check("graph.schema.json", result["graph"], what + " graph payload")
        if "complex" in result:
            check("complex.schema.json", result["complex"], what + " complex payload")

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
