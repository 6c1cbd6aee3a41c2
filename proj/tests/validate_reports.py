"""Runs the CLI with --format json and validates each document against docs/report.schema.json."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path, tmp = sys.argv[1], sys.argv[2], sys.argv[3]
with open(schema_path) as f:
    schema = json.load(f)

runs = [
    ["check", "almost", "M(2, Z/2)", "--max-deg", "1"],
    ["check", "almost", "T(2, Z/2)"],
    ["check", "almost", "Z/4", "--bivariate", "1,1"],
    ["check", "almost", "M(2, Z/2)", "--bivariate", "0,1"],
    ["check", "almost", "M(2, Z/2)", "--laurent", "1"],
    ["check", "reduced", "Z/6"],
    ["check", "almost", "Z/4", "--samples", "3", "--seed", "1"],
    ["check", "almost", "M(2 Z/2"],
    ["check", "almost", "T(2, Z/3)", "--budget", "10"],
    ["radical", "Z/4"],
    ["radical", "M(2, Z/2)"],
    ["witness", "almost", "armendariz", "T(2, Z/2)", "--max-deg", "1"],
    ["witness", "weak", "almost", "Z/4", "--max-deg", "1"],
    ["describe", "trivext(Z/2)"],
    ["export", "Z/3", "--out", tmp],
    ["verify-paper", "--max-deg", "1"],
]
failures = 0
for args in runs:
    proc = subprocess.run([cli, *args, "--format", "json"], capture_output=True, text=True)
    try:
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, schema)
        assert doc["exit_code"] == proc.returncode, "exit_code field differs from process status"
        print("ok  ", " ".join(args))
    except Exception as e:  # noqa: BLE001
        failures += 1
        print("FAIL", " ".join(args), "::", e)
sys.exit(1 if failures else 0)
