"""Run the curvlab binary on a fixed set of invocations and validate every
JSON document it prints against the schemas in schemas/."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = [
    ("length", ["length", "-g", "L2", "-e", "d(3)"]),
    ("length", ["length", "-g", "S3", "-e", "s t"]),
    ("length", ["length", "-g", "Heis", "-e", "Heis(2,1,1)"]),
    ("curvature", ["curvature", "-g", "L2", "-e", "d(5)*t^1", "-r", "3"]),
    ("curvature", ["curvature", "-g", "Z2", "-e", "(2,3)", "-r", "2", "--mode", "ball"]),
    ("curvature", ["curvature", "-g", "H2", "-e", "h(2,2)"]),
    ("deadend", ["deadend", "-g", "L2", "-e", "d(2)"]),
    ("deadend", ["deadend", "-g", "F2", "-e", "a b"]),
    ("deadend", ["deadend", "scan", "-g", "L2", "-r", "9"]),
    ("backtracks", ["backtracks", "-g", "L2", "-e", "d(1)"]),
    ("transport", ["transport", "-g", "S3", "-x", "s", "-e", "e"]),
    ("transport", ["transport", "-g", "F2", "-x", "e", "-e", "a", "--mode", "ball"]),
    ("probe", ["probe", "-g", "S3", "--sample-radius", "2"]),
    ("probe", ["probe", "-g", "Z2", "--sample-radius", "3"]),
    ("density", ["density", "-g", "Heis", "-r", "1", "-k", "20"]),
]


def documents(text):
    text = text.strip()
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        return [json.loads(line) for line in text.splitlines() if line.strip()]


def main():
    binary, schema_dir = pathlib.Path(sys.argv[1]), pathlib.Path(sys.argv[2])
    failures = 0
    for name, args in RUNS:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        proc = subprocess.run([str(binary), *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        docs = documents(proc.stdout)
        try:
            for doc in docs:
                jsonschema.validate(doc, schema)
        except jsonschema.ValidationError as err:
            print(f"FAIL {' '.join(args)}: {err.message}")
            failures += 1
            continue
        print(f"ok   {' '.join(args)} ({len(docs)} document{'s' if len(docs) != 1 else ''})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
