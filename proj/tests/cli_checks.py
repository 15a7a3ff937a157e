"""Runs the grl binary: schema validation, byte-identical reruns, exit codes.

usage: cli_checks.py <grl binary> <schema file>
"""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

GRL, SCHEMA = sys.argv[1], sys.argv[2]

ABC = ["--a", "0.3", "--b", "0.7", "--c", "1.9"]
CASES = [
    ["eval-ratio", "--a", "0.5", "--b", "0.5", "--c", "1", "--n1", "0", "--n2", "1", "--m", "1", "--z-re", "-1"],
    ["eval-ratio"] + ABC + ["--n1", "-2", "--n2", "-2", "--m", "0", "--z-re", "2", "--z-im", "-0.5"],
    ["eval-2f1"] + ABC + ["--z-re", "3", "--bank", "lower"],
    ["eval-2f1"] + ABC + ["--z-re", "-0.3", "--z-im", "0.2"],
    ["cfrac", "--a", "0.5", "--b", "0.25", "--c", "1.25", "--z-re", "0.2"],
    ["cfrac", "--a", "-2", "--b", "0.5", "--c", "1.5", "--kind", "010"],
    ["classify", "--a", "0.5", "--b", "0.25", "--c", "1.25", "--n1", "0", "--n2", "1", "--m", "1"],
    ["classify", "--a", "-2.3", "--b", "1.2", "--c", "-0.7", "--pick-check", "--seed", "7"],
    ["runckel", "--a", "-1.7", "--b", "-1.4", "--c", "-2.6"],
    ["runckel", "--a", "2.5", "--b", "0.5", "--c", "1"],
    ["boundary"] + ABC + ["--n1", "0", "--n2", "2", "--m", "2", "--x-from", "1.1", "--x-to", "4", "--points", "5"],
    ["integral-rep"] + ABC + ["--n1", "1", "--n2", "1", "--m", "2", "--z-re", "-4"],
    ["integral-rep", "--a", "2.5", "--b", "0.5", "--c", "1", "--n1", "0", "--n2", "1", "--m", "1", "--z-re", "-1"],
    ["verify-example", "12"],
    ["verify-example", "3"],
    ["moments", "--a", "0.3", "--b", "0.6", "--c", "2.4", "--n1", "1", "--n2", "1", "--m", "1"],
    ["moments"] + ABC + ["--n1", "1", "--n2", "1", "--m", "1"],
]

validator = jsonschema.Draft202012Validator(json.load(open(SCHEMA)))
failures = 0


def check(cond, msg):
    global failures
    if not cond:
        failures += 1
        print("FAIL:", msg)


def run(args, env=None):
    return subprocess.run([GRL] + args, capture_output=True, env=env)


for args in CASES:
    a, b = run(args), run(args)
    name = " ".join(args)
    check(a.returncode in (0, 2), f"{name}: exit {a.returncode}")
    check(a.stdout == b.stdout and a.returncode == b.returncode, f"{name}: output differs between runs")
    try:
        doc = json.loads(a.stdout)
    except ValueError:
        check(False, f"{name}: not JSON")
        continue
    errs = [e.message for e in validator.iter_errors(doc)]
    check(not errs, f"{name}: schema {errs[:2]}")

# CSV written to a file reports itself in the JSON document
with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "density.csv")
    p = run(["boundary", "--a", "0.5", "--b", "0.5", "--c", "1", "--n1", "0", "--n2", "1", "--m", "1",
             "--x-from", "1.01", "--x-to", "10", "--points", "200", "--format", "csv", "--output", path])
    doc = json.loads(p.stdout)
    check(not list(validator.iter_errors(doc)), "boundary --output: schema")
    check(doc["result"]["csv"]["rows"] == 200, "boundary --output: row count")
    check(len(open(path).read().splitlines()) == 201, "boundary --output: file lines")

# GRL_TOL is the default tolerance
env = dict(os.environ, GRL_TOL="1e-6")
doc = json.loads(run(["eval-ratio"] + ABC + ["--n1", "0", "--n2", "1", "--m", "1", "--z-re", "0.3"], env).stdout)
check(doc["inputs"]["tol"] == 1e-6, "GRL_TOL not applied")

for bad in (["eval-ratio", "--a", "nan", "--b", "1", "--c", "2", "--z-re", "0"], [], ["bogus"],
            ["eval-ratio", "--a", "1"], ["boundary"] + ABC + ["--max-nodes", "4"]):
    check(run(bad).returncode == 64, f"{bad}: expected exit 64")

print("cli checks:", "FAILED" if failures else "ok", f"({len(CASES)} commands)")
sys.exit(1 if failures else 0)
