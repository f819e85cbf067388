"""Validate `homdim report --json` output for every fixture against docs/report.schema.json."""

import json
import pathlib
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, fixtures, schema_path = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    failures = 0
    for path in sorted(fixtures.glob("*.alg")):
        run = subprocess.run([exe, "report", str(path), "--json"], capture_output=True, text=True)
        try:
            jsonschema.validate(json.loads(run.stdout), schema)
            print(f"ok   {path.stem}")
        except (json.JSONDecodeError, jsonschema.ValidationError) as err:
            failures += 1
            print(f"FAIL {path.stem}: {err}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
