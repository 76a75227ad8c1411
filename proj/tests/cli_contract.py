#!/usr/bin/env python3
"""CLI contract checks: exit codes on crafted bad inputs, JSON schema of
compute/examples output, and the bench CSV format."""

import json
import subprocess
import sys
import tempfile
import os

IMULT = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([IMULT, *args], capture_output=True, text=True)


def check(name, cond, detail=""):
    if cond:
        print(f"ok {name}")
    else:
        failures.append(name)
        print(f"FAIL {name} {detail}")


# exit 0 on success
r = run("compute", "--f", "x", "--g", "y")
check("compute exit 0", r.returncode == 0 and r.stdout.strip() == "1", r.stdout)

# exit 1 on parse errors, with a byte offset on stderr
r = run("compute", "--f", "x + @", "--g", "y")
check("parse error exit 1", r.returncode == 1 and "offset" in r.stderr, r.stderr)

r = run("compute", "--f", "x/y", "--g", "y")
check("non-constant divisor exit 1", r.returncode == 1, r.stderr)

# usage error: missing required flag
r = run("compute", "--f", "x")
check("missing flag exit 1", r.returncode == 1, r.stderr)

r = run("compute", "--f", "x", "--g", "y", "--point", "nonsense")
check("bad point exit 1", r.returncode == 1, r.stderr)

# exit 2 on math errors (constant input is not a curve)
r = run("compute", "--f", "7", "--g", "y")
check("constant curve exit 2", r.returncode == 2, r.stderr)

# infinity rendering
r = run("compute", "--f", "x", "--g", "x")
check("infinity output", r.returncode == 0 and r.stdout.strip() == "infinity", r.stdout)

# JSON schema of compute
r = run("compute", "--f", "5x^2+6xy+5y^2-10y", "--g", "x^2+(y-1)^2-1", "--json")
doc = json.loads(r.stdout)
check(
    "compute json schema",
    isinstance(doc.get("value"), int)
    and set(doc["stats"].keys()) == {"blowups", "max_depth", "extensions", "micros"}
    and doc["value"] == 3
    and isinstance(doc["tree"], dict),
    r.stdout[:200],
)

# value is "infinity" (a string) in the infinite case
r = run("compute", "--f", "x", "--g", "x", "--json")
doc = json.loads(r.stdout)
check("infinite json value", doc["value"] == "infinity" and doc["tree"] is None)

# examples subcommand: three PASS lines, exit 0; --json is machine-readable
r = run("examples")
check(
    "examples pass",
    r.returncode == 0 and r.stdout.count("PASS") == 3,
    r.stdout,
)
r = run("examples", "--json")
doc = json.loads(r.stdout)
check(
    "examples json",
    isinstance(doc, list) and len(doc) == 3 and all(e["pass"] for e in doc),
)

# bench CSV contract
with tempfile.TemporaryDirectory() as td:
    csv_path = os.path.join(td, "out.csv")
    r = run("bench", "--deg", "3", "--mult", "1", "--trials", "2",
            "--timeout-ms", "5000", "--csv", csv_path)
    check("bench exit 0", r.returncode == 0, r.stderr)
    with open(csv_path) as fh:
        lines = [ln for ln in fh.read().splitlines() if ln]
    check(
        "bench csv",
        lines[0] == "deg,mult,trial,algorithm,micros,value,dnf"
        and len(lines) == 1 + 2 * 2,
        str(lines),
    )

# verify subcommand smoke (small) and its exit code on success
r = run("verify", "--trials", "5", "--prop-trials", "3", "--timeout-ms", "5000")
check("verify exit 0", r.returncode == 0 and "0 disagreements" in r.stdout, r.stdout)

# IMULT_SEED env override keeps determinism
env = os.environ.copy()
env["IMULT_SEED"] = "777"
r1 = subprocess.run(
    [IMULT, "bench", "--deg", "3", "--mult", "1", "--trials", "1", "--json"],
    capture_output=True, text=True, env=env)
doc = json.loads(r1.stdout)
check("IMULT_SEED accepted", r1.returncode == 0 and doc["trials"] == 1)

if failures:
    print(f"{len(failures)} CLI contract failures: {failures}")
    sys.exit(1)
print("cli contract ok")
