"""Reduces every corpus graph with every strategy and validates the traces."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    tool, schema_path, corpus = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        trace = pathlib.Path(tmp) / "trace.json"
        for graph in sorted(corpus.glob("*.col")):
            for strategy in ("max-clique", "stable-set", "collapse"):
                subprocess.run([tool, "reduce", str(graph), "--strategy", strategy,
                                "--trace", str(trace), "--output", str(pathlib.Path(tmp) / "r.col")],
                               check=True, capture_output=True)
                errors = list(validator.iter_errors(json.loads(trace.read_text())))
                for error in errors:
                    print(f"{graph.name} {strategy}: {error.message}")
                failures += len(errors)
    print("schema violations:", failures)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
