#!/usr/bin/env python3
"""Regenerate the CLI golden files under tests/golden/.

Each golden file records its command line in a leading '# argv:' comment;
the test suite re-runs that exact command and compares bytes.  Run this
after an intentional output-format change, then review the diff.
"""
import io
import shlex
import sys
from contextlib import redirect_stdout
from pathlib import Path

from skewgrowth.cli import main

CASES = [
    ("growth_example3_table", "growth --preset example3 --max-degree 6"),
    ("growth_braid3_json", "growth --preset braid3 --max-degree 6 --format json"),
    ("growth_mp_table", "growth --preset mp:p=4,8,16:K=3"),
    ("skew_example3_table", "skew --preset example3 --max-degree 6"),
    ("skew_zpos30_table", "skew --preset zpos:30"),
    ("skew_mp_json", "skew --preset mp:p=4,8,16:K=3 --format json"),
    ("skew_free2_table", "skew --preset free:2 --max-degree 4"),
    ("towers_example3_table", "towers --preset example3 --max-degree 4"),
    ("towers_braid3_dot", "towers --preset braid3 --format dot"),
    ("towers_zpos10_json", "towers --preset zpos:10 --format json"),
    ("atoms_mp_table", "atoms --preset mp:p=4,8,16:K=3"),
    ("atoms_zpos30_json", "atoms --preset zpos:30 --format json"),
    ("verify_braid3_json", "verify --preset braid3 --format json"),
    ("verify_example3_table", "verify --preset example3"),
    ("verify_zpos30_table", "verify --preset zpos:30"),
    ("cancel_check_example3", "cancel-check --preset example3"),
    # full command x model coverage
    ("growth_zpos30_table", "growth --preset zpos:30"),
    ("growth_free2_table", "growth --preset free:2 --max-degree 5"),
    ("skew_braid3_table", "skew --preset braid3"),
    ("towers_mp_table", "towers --preset mp:p=4,8,16:K=3"),
    ("towers_free2_table", "towers --preset free:2 --max-degree 5"),
    ("atoms_example3_table", "atoms --preset example3"),
    ("atoms_braid3_table", "atoms --preset braid3"),
    ("atoms_free2_table", "atoms --preset free:2 --max-degree 5"),
    ("verify_mp_table", "verify --preset mp:p=4,8,16:K=3"),
    ("verify_free2_table", "verify --preset free:2 --max-degree 5"),
    ("cancel_check_braid3", "cancel-check --preset braid3"),
    ("cancel_check_zpos30", "cancel-check --preset zpos:30"),
    ("cancel_check_mp", "cancel-check --preset mp:p=4,8,16:K=3"),
    ("cancel_check_free2", "cancel-check --preset free:2 --max-degree 5"),
]


def run() -> int:
    golden = Path(__file__).resolve().parent.parent / "tests" / "golden"
    golden.mkdir(parents=True, exist_ok=True)
    for name, argv_text in CASES:
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            rc = main(shlex.split(argv_text))
        if rc != 0:
            print(f"{name}: exit code {rc}, refusing to freeze", file=sys.stderr)
            return 1
        path = golden / f"{name}.txt"
        path.write_text(f"# argv: {argv_text}\n" + buffer.getvalue(), encoding="utf-8")
        print(f"wrote {path.relative_to(golden.parent.parent)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(run())
