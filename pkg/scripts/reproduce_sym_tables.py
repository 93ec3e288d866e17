#!/usr/bin/env python3
"""Recompute the symmetrization determinant tables for n <= 7 and diff
them against the embedded reference data.  Exits nonzero on mismatch."""

import sys
import time

from symdet.golden import load_golden, verify_sym


def main() -> int:
    t0 = time.time()
    report = verify_sym(load_golden())
    for m in report.mismatches:
        print("MISMATCH:", m)
    print(f"{report.checked} checks, {len(report.mismatches)} mismatches "
          f"in {time.time() - t0:.1f}s")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
