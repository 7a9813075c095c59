#!/usr/bin/env python3
"""Run the cusp CLI over a set of commands and validate every JSON document."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

OK = [
    ["expand", "--level", "2", "--order", "5", "--A", "16", "--B", "-128"],
    ["expand", "--level", "3", "--order", "6"],
    ["expand", "--punctures", "1", "inf", "--ratios", "-1", "--A", "16", "--B", "-128", "--order", "5"],
    ["expand", "--punctures", "1", "-1", "1/2,1", "--ratios", "1", "-2", "1/3", "--A", "2", "--B", "1", "--order", "6"],
    ["metric", "--level", "2", "--degree", "3"],
    ["metric", "--level", "4", "--degree", "2", "--A", "3", "--B", "1,1", "--eval", "0.01,0.02"],
    ["metric", "--level", "2", "--degree", "2", "--in-f"],
    ["transport", "--punctures", "0", "1", "inf", "--order", "5", "--metric", "2"],
    ["transport", "--punctures", "1/2", "2,1", "-1", "--order", "4"],
    ["groups", "--level", "5"],
    ["groups", "--level", "12"],
    ["e4", "--order", "6"],
    ["verify", "--suite", "oracle"],
]

FAILING = [
    ["expand", "--level", "2", "--order", "5", "--A", "0", "--B", "1"],
    ["transport", "--punctures", "1", "1", "2", "--order", "4"],
    ["expand", "--punctures", "0", "--ratios", "1", "--A", "1", "--B", "0", "--order", "4"],
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("cli")
    parser.add_argument("schema_dir", type=pathlib.Path)
    args = parser.parse_args()

    output = json.loads((args.schema_dir / "output.schema.json").read_text())
    error = json.loads((args.schema_dir / "error.schema.json").read_text())
    for schema in (output, error):
        jsonschema.Draft202012Validator.check_schema(schema)

    bad = 0
    for argv, schema, want in [(a, output, 0) for a in OK] + [(a, error, 1) for a in FAILING]:
        proc = subprocess.run([args.cli, "--format", "json", *argv], capture_output=True, text=True)
        label = " ".join(argv)
        if proc.returncode != want:
            print(f"FAIL {label}: exit {proc.returncode}, wanted {want}\n{proc.stderr}")
            bad += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema, cls=jsonschema.Draft202012Validator)
        except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
            print(f"FAIL {label}: {exc}")
            bad += 1
            continue
        print(f"ok   {label}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
