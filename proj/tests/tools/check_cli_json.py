#!/usr/bin/env python3
"""Validate CLI JSON output against the shipped schemas and golden files.

Usage: check_cli_json.py CLI SCHEMA_DIR GOLDEN_DIR [--update]
"""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

RUNS = [
    ("table", ["table", "real-basic", "--format", "json"], "table-real-basic.json"),
    ("table", ["table", "real-k", "--format", "json"], "table-real-k.json"),
    ("table", ["table", "complex-basic", "--format", "json"], "table-complex-basic.json"),
    ("table", ["table", "complex-k", "--format", "json"], "table-complex-k.json"),
    ("classify", ["classify", "--field", "real", "-p", "8", "--oracle", "--format", "json"], "classify-r800.json"),
    ("classify", ["classify", "--field", "real", "-p", "3", "-q", "5", "-r", "2", "--format", "json"], "classify-r352.json"),
    ("classify", ["classify", "--field", "complex", "-p", "3", "--oracle", "--format", "json"], "classify-c30.json"),
    ("classify", ["classify", "-p", "1", "--functor", "pi", "--oracle", "--format", "json"], "classify-r100-pi.json"),
    ("verify", ["verify", "--check", "dc", "--format", "json"], "verify-dc.json"),
    ("verify", ["verify", "--check", "complex-dd", "--format", "json"], "verify-complex-dd.json"),
    ("verify", ["verify", "--check", "hh", "--seed", "7", "--format", "json"], "verify-hh-seed7.json"),
    ("calc", ["calc", "-p", "2", "(e1*e2+1)*(e1*e2-1)", "--format", "json"], "calc-example.json"),
    ("calc", ["calc", "--field", "complex", "-p", "2", "(1 + i*e1*e2)/2", "--format", "json"], None),
]


def strip_timing(doc):
    if isinstance(doc, dict):
        return {k: strip_timing(v) for k, v in doc.items() if k != "seconds"}
    if isinstance(doc, list):
        return [strip_timing(v) for v in doc]
    return doc


def run(cli, args):
    p = subprocess.run([cli] + args, capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def main():
    cli, schema_dir, golden_dir = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    update = "--update" in sys.argv
    failures = 0
    for kind, args, golden in RUNS:
        rc, out, err = run(cli, args)
        if golden is None:
            # Division is not in the grammar.
            if rc != 2:
                print(f"FAIL {' '.join(args)}: expected usage error, got {rc}")
                failures += 1
            continue
        if rc != 0:
            print(f"FAIL {' '.join(args)}: exit {rc}: {err.strip()}")
            failures += 1
            continue
        doc = json.loads(out)
        schema = json.loads((schema_dir / f"{kind}.schema.json").read_text(encoding="utf-8"))
        try:
            jsonschema.validate(doc, schema)
        except jsonschema.ValidationError as e:
            print(f"FAIL {' '.join(args)}: schema: {e.message}")
            failures += 1
            continue
        rc2, out2, _ = run(cli, args)
        if strip_timing(json.loads(out2)) != strip_timing(doc):
            print(f"FAIL {' '.join(args)}: output differs between runs")
            failures += 1
            continue
        path = golden_dir / golden
        canon = json.dumps(strip_timing(doc), indent=2, ensure_ascii=False) + "\n"
        if update:
            path.write_text(canon, encoding="utf-8")
        elif not path.exists() or path.read_text(encoding="utf-8") != canon:
            print(f"FAIL {' '.join(args)}: differs from golden {golden}")
            failures += 1
            continue
        print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
