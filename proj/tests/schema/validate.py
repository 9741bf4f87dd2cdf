#!/usr/bin/env python3
"""Validates cdga --json and table outputs against the schemas in this directory."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

RUNS = [
    ("massey", ["massey", "iwasawa_complex", "--classes", "[phi1],[phi1],[phi2]", "--json"]),
    ("massey", ["massey", "iwasawa_real", "--classes", "[eta1],[eta3*eta4],[eta2]", "--json"]),
    ("massey", ["massey", "iwasawa_real", "--classes", "[eta1],[eta2],[eta3]", "--json"]),
    ("massey", ["massey", "iwasawa_real", "--classes", "[eta1],[eta1],[eta2]", "--vary-diagonal", "--json"]),
    ("massey", ["massey", "quadruple", "--classes", "[x],[y],[y],[x]", "--json"]),
    ("massey", ["massey", "quadruple", "--classes", "[x],[y],[y],[x]", "--adjoin-sqrt", "-1", "--json"]),
    ("massey", ["massey", "iwasawa_truncated", "--classes", "[eta1],[eta1],[eta2]", "--adjoin-sqrt", "2", "--json"]),
    ("cohomology", ["cohomology", "quadruple", "--degree", "8", "--json"]),
    ("cohomology", ["cohomology", "iwasawa_complex", "--degree", "2", "--json"]),
    ("check", ["check", "iwasawa_real", "--json"]),
    ("check", ["check", "quadruple", "--max-degree", "10", "--json"]),
    ("table", ["truncate", "iwasawa_real", "3", "-o", "-"]),
    ("table", ["dualize", "iwasawa_truncated", "-o", "-"]),
    ("table", ["extend", "iwasawa_truncated", "--adjoin-sqrt", "-1", "-o", "-"]),
]


def main():
    binary, schema_dir = sys.argv[1], Path(sys.argv[2])
    schemas = {name: json.loads((schema_dir / f"{name}.schema.json").read_text())
               for name in {kind for kind, _ in RUNS}}
    failures = 0
    for kind, args in RUNS:
        p = subprocess.run([binary, *args], capture_output=True, text=True, timeout=120)
        label = " ".join(args)
        try:
            if p.returncode != 0:
                raise ValueError(f"exit {p.returncode}: {p.stderr.strip()}")
            jsonschema.validate(json.loads(p.stdout), schemas[kind])
            print(f"ok   {label}")
        except (ValueError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL {label}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
