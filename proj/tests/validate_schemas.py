"""Runs each grm subcommand twice, validates its JSON against schemas/ and
checks the two outputs are byte-identical."""
import json
import pathlib
import subprocess
import sys

import jsonschema

WITNESS = "y^2+x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2"

CASES = {
    "field-check": ["--q", "9"],
    "eval": ["--q", "3", "--m", "2", "--poly", "x1*x2"],
    "interpolate": ["--q", "3", "--m", "1", "--values", "1,0,0"],
    "weight": ["--q", "3", "--m", "2", "--poly", "x1*x2"],
    "distance": ["--q", "3", "--m", "3", "--poly", WITNESS],
    "quadric-classify": ["--q", "3", "--n", "3", "--poly", "x1*x2+x3^2"],
    "quadric-zeros": ["--q", "3", "--n", "2", "--poly", "x1*x2", "--linear", "1,0"],
    "quadric-distance": ["--q", "3", "--n", "2", "--poly", "x1^2+x2^2"],
    "rho2": ["--q", "3", "--m", "3"],
    "bounds": ["--q", "3", "--m", "5"],
    "radius": ["--q", "3", "--m", "2", "--r", "2"],
    "strength": ["--q", "2", "--m", "3"],
    "lift-witness": ["--q", "3", "--m", "3", "--poly", WITNESS],
    "search": ["--q", "3", "--m", "2", "--threshold", "5", "--shards", "3", "--shard-index", "1"],
    "equiv": ["--q", "3", "--m", "2", "--poly", "x*y", "--poly2", "x^2+2*y^2"],
    "verify": ["--profile", "quick", "--format", "json"],
}


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for command, args in CASES.items():
        schema = json.loads((schema_dir / f"{command}.json").read_text())
        run = subprocess.run([exe, command, *args], capture_output=True, text=True)
        try:
            if run.returncode != 0:
                raise RuntimeError(f"exit {run.returncode}: {run.stderr.strip()}")
            jsonschema.validate(json.loads(run.stdout), schema)
            again = subprocess.run([exe, command, *args], capture_output=True, text=True)
            if again.stdout != run.stdout:
                raise RuntimeError("output differs between two runs")
            print(f"ok   {command}")
        except Exception as exc:  # noqa: BLE001
            failures += 1
            print(f"FAIL {command}: {exc}")
    missing = {p.stem for p in schema_dir.glob("*.json")} ^ set(CASES)
    if missing:
        failures += 1
        print(f"FAIL schema set mismatch: {sorted(missing)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
