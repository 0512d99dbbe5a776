#!/usr/bin/env python3
"""Run the full verification sweep at acceptance scale and print the report."""

import sys

from hypmid.sweeps import SweepConfig, run_suite


def main() -> int:
    samples = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 42
    results = run_suite("all", SweepConfig(samples=samples, seed=seed))
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
