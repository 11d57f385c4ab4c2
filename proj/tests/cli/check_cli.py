"""Runs the command-line tool, validates every JSON output against docs/schemas and checks
determinism and exit codes."""
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

binary, schema_dir = sys.argv[1], Path(sys.argv[2])

resources = []
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)

CASES = [
    ("hilbert", ["hilbert", "-1", "-1", "--all", "--field", "Q"]),
    ("hilbert", ["hilbert", "2", "3", "--place", "3"]),
    ("hilbert", ["hilbert", "[1,1]", "-1", "--field", "Q(sqrt,-5)"]),
    ("delta", ["delta", "2", "3", "--upper"]),
    ("delta", ["delta", "-1", "-1", "--field", "Q(sqrt,2)"]),
    ("member", ["member", "--set", "T", "-1", "-1", "3"]),
    ("member", ["member", "--set", "sum4sq", "7", "--witness"]),
    ("member", ["member", "--set", "J42", "-1", "-1", "-1", "-1", "2"]),
    ("prescribe", ["prescribe", "--places", "2", "inf"]),
    ("prescribe", ["prescribe", "--field", "Q(sqrt,-5)", "--places", "2", "3:0"]),
    ("darmon", ["darmon", "--n", "3", "5/8", "--field", "Q"]),
    ("darmon", ["darmon", "--n", "2", "--params", "2,3,5,7", "12"]),
    ("formula", ["formula", "--which", "empty", "--n", "2", "--export", "json"]),
    ("formula", ["formula", "--which", "main", "--n", "10"]),
    ("formula", ["formula", "--which", "main", "--n", "1", "--mode", "real"]),
    ("ledger", ["ledger"]),
    ("verify", ["verify", "--suite", "budget"]),
    ("verify", ["verify", "--suite", "reciprocity", "--seed", "7"]),
]

failures = []


def run(args, env=None):
    return subprocess.run([binary, *args], capture_output=True, text=True, env=env)


for schema_name, args in CASES:
    first = run(args)
    if first.returncode != 0:
        failures.append(f"{args}: exit {first.returncode}: {first.stderr.strip()}")
        continue
    second = run(args)
    if first.stdout != second.stdout:
        failures.append(f"{args}: output differs between identical runs")
    schema = registry.contents(f"{schema_name}.schema.json")
    validator = jsonschema.Draft202012Validator(schema, registry=registry)
    errors = list(validator.iter_errors(json.loads(first.stdout)))
    if errors:
        failures.append(f"{args}: {errors[0].message}")

ledger = json.loads(run(["ledger"]).stdout)
if ledger["summary"].get("mismatch", 0):
    failures.append("ledger reports mismatches")
if ledger["summary"].get("flagged", 0) != 8:
    failures.append("ledger should flag the introductory statement for four weights")

symbols = json.loads(run(["hilbert", "-1", "-1", "--all"]).stdout)["symbols"]
if symbols != {"2": -1, "inf": -1}:
    failures.append(f"hilbert -1 -1 gave {symbols}")
if json.loads(run(["darmon", "--n", "3", "5/8"]).stdout)["member"] is not True:
    failures.append("5/8 should lie in D_3")

env = dict(os.environ, DARMONLAB_SEED="7")
if run(["verify", "--suite", "reciprocity"], env).stdout != run(
        ["verify", "--suite", "reciprocity", "--seed", "7"]).stdout:
    failures.append("DARMONLAB_SEED does not act like --seed")
if json.loads(run(["verify", "--suite", "reciprocity"], env).stdout)["seed"] != 7:
    failures.append("DARMONLAB_SEED ignored")

for args, code in [(["nonsense"], 1), (["hilbert", "1"], 1), (["hilbert", "0", "1"], 1),
                   (["prescribe", "--places", "2"], 1), (["hilbert", "1", "1", "--bogus"], 1),
                   (["--help"], 0)]:
    got = run(args).returncode
    if got != code:
        failures.append(f"{args}: exit {got}, expected {code}")

sexp = run(["formula", "--which", "empty", "--n", "1", "--export", "sexp"]).stdout
if not sexp.startswith("(forall ("):
    failures.append("sexp export does not start with a forall block")

for f in failures:
    print("FAIL", f)
print(f"{len(CASES)} schema cases, {len(failures)} failures")
sys.exit(1 if failures else 0)
