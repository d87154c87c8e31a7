#!/usr/bin/env python3
"""Differential-test the native solver against the brute-force oracle and,
when AFSOLVE_SOLVER_CMD is set, against an external ASP solver.

Usage:
    python3 scripts/run_differential.py [count] [gen-spec]
    AFSOLVE_SOLVER_CMD='clingo --outf=0 -V0 0 {file}' \\
        python3 scripts/run_differential.py 100 er:n=10,p=0.2,seed=1
"""

import sys

from afsolve.cli import main


def run(count: int, spec: str) -> int:
    return main(["check", "--gen", spec, "--count", str(count), "--all"])


if __name__ == "__main__":
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    spec = sys.argv[2] if len(sys.argv) > 2 else "er:n=10,p=0.2,seed=1"
    sys.exit(run(count, spec))
