#!/usr/bin/env python3
"""Long-running stretch check: the two weight-9 rows with known
determinant classes.  Budget around half an hour; exits nonzero on
mismatch."""

import sys
import time

from symdet.golden import load_golden
from symdet.gram import symmetrization_determinant


def main() -> int:
    golden = load_golden()
    ok = True
    for row in golden.stretch_rows:
        t0 = time.time()
        result = symmetrization_determinant(row.partition)
        dim_ok = result.dimension == row.dimension
        cls_ok = result.c_formula.reduced_key() == row.reduced_key()
        ok = ok and dim_ok and cls_ok
        print(
            f"{row.partition}: dimension {'ok' if dim_ok else 'MISMATCH'}, "
            f"class {'ok' if cls_ok else 'MISMATCH'} "
            f"({result.c_reduced().render_text()}) in {time.time() - t0:.0f}s"
        )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
