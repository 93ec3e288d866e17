"""Embedded reference tables and the verification pass.

The data file carries the known determinant tables in a documented
JSON schema (see README); verification recomputes everything in scope
with the engine and diffs against it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .combinat import Partition, partitions_of
from .exact import Poly, squarefree_part
from .gram import gram_block, symmetrization_determinant
from .refined import refined_decomposition


@dataclass(frozen=True)
class SymRow:
    partition: Partition
    dimension: Poly
    det_class: tuple[tuple[int, tuple[int, ...]], ...]  # (base, (k,...)) factors

    def reduced_key(self) -> tuple:
        """Canonical (prime, k-set) form of the class, with composite
        bases split into primes and exponents taken mod 2."""
        from .exact import factorint

        per_prime: dict[int, set[int]] = {}
        for base, ks in self.det_class:
            for p, e in factorint(base).items():
                if e % 2 == 0:
                    continue
                per_prime.setdefault(p, set()).symmetric_difference_update(ks)
        primes = tuple(sorted((p, tuple(sorted(ks))) for p, ks in per_prime.items() if ks))
        return primes, ()


@dataclass(frozen=True)
class RefinedRow:
    partition: Partition
    gamma: Partition
    multiplicity: int
    reduced_class: Poly  # squarefree constant times distinct linear factors


@dataclass
class GoldenTables:
    sym_rows: list[SymRow]
    stretch_rows: list[SymRow]
    refined_rows: list[RefinedRow]
    matrices: dict[tuple[Partition, tuple[int, ...]], tuple[tuple[int, ...], ...]]
    coupling_42_2: tuple[tuple[Poly, ...], ...]


def _poly_from_roots(roots: list[int], den: int) -> Poly:
    out = Poly.const(Fraction(1, den))
    for r in roots:
        out = out * Poly((-r, 1))
    return out


def _class_poly(constant: int, roots: list[int]) -> Poly:
    out = Poly.const(squarefree_part(constant)[0])
    for r in roots:
        out = out * Poly((-r, 1))
    return out


def load_golden(path: str | Path | None = None) -> GoldenTables:
    if path is None:
        text = resources.files("symdet.data").joinpath("golden.json").read_text()
    else:
        text = Path(path).read_text()
    doc = json.loads(text)
    if doc.get("version") != 1:
        raise ValueError("unsupported golden table version")

    def sym_rows(key: str) -> list[SymRow]:
        rows = []
        for row in doc[key]:
            dim = _poly_from_roots(row["dimension"]["roots"], row["dimension"]["den"])
            det = tuple((base, tuple(ks)) for base, ks in row["det_class"])
            rows.append(SymRow(Partition(row["partition"]), dim, det))
        return rows

    refined_rows = [
        RefinedRow(
            Partition(r["partition"]),
            Partition(r["gamma"]),
            r["multiplicity"],
            _class_poly(r["class_constant"], r["class_roots"]),
        )
        for r in doc["refined"]
    ]
    matrices = {}
    for key, mat in doc["matrices"].items():
        shape_s, pat_s = key.split("|")
        shape = Partition(tuple(int(x) for x in shape_s.split(",")))
        pattern = tuple(int(x) for x in pat_s.split(","))
        matrices[(shape, pattern)] = tuple(tuple(row) for row in mat)
    coupling = tuple(
        tuple(Poly(entry) for entry in row) for row in doc["coupling_42_2"]["matrix"]
    )
    return GoldenTables(
        sym_rows=sym_rows("symmetrizations"),
        stretch_rows=sym_rows("symmetrizations_stretch"),
        refined_rows=refined_rows,
        matrices=matrices,
        coupling_42_2=coupling,
    )


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyReport:
    checked: int
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_sym(golden: GoldenTables, jobs: int = 1) -> VerifyReport:
    """Recompute every table row and worked matrix; diff against golden."""
    mismatches = []
    checked = 0
    for row in golden.sym_rows:
        result = symmetrization_determinant(row.partition, jobs=jobs)
        checked += 1
        if result.dimension != row.dimension:
            mismatches.append(
                f"sym {row.partition}: dimension expected {row.dimension.factored_str()}, "
                f"got {result.dimension.factored_str()}"
            )
        expected = row.reduced_key()
        got = result.c_formula.reduced_key()
        if expected != got:
            mismatches.append(
                f"sym {row.partition}: class expected {_key_str(expected)}, got {_key_str(got)}"
            )
    for (shape, pattern), mat in sorted(golden.matrices.items()):
        checked += 1
        block = gram_block(shape, pattern)
        # the printed tableau order is not pinned down by the source
        # tables, so congruence by a basis permutation is accepted
        if block.matrix != mat and not _matrix_matches_up_to_order(block.matrix, mat):
            mismatches.append(
                f"matrix {shape} pattern {pattern}: expected {mat}, got {block.matrix}"
            )
    return VerifyReport(checked, mismatches)


def verify_refined(golden: GoldenTables) -> VerifyReport:
    """Recompute the constituent table for n <= 6 and diff against golden."""
    mismatches = []
    checked = 0
    expected_by_shape: dict[Partition, dict[Partition, RefinedRow]] = {}
    for row in golden.refined_rows:
        expected_by_shape.setdefault(row.partition, {})[row.gamma] = row
    for n in range(2, 7):
        for shape in partitions_of(n):
            single_column = all(p == 1 for p in shape.parts)
            expected = expected_by_shape.get(shape, {})
            result = refined_decomposition(shape)
            got = {c.gamma: c for c in result.constituents}
            checked += max(len(expected), 1)
            if single_column:
                if got:
                    mismatches.append(f"refined {shape}: expected no constituents")
                continue
            for gamma in sorted(set(expected) | set(got)):
                if gamma not in got:
                    mismatches.append(f"refined {shape}/{gamma}: missing constituent")
                    continue
                if gamma not in expected:
                    mismatches.append(f"refined {shape}/{gamma}: unexpected constituent")
                    continue
                e, g = expected[gamma], got[gamma]
                if e.multiplicity != g.multiplicity:
                    mismatches.append(
                        f"refined {shape}/{gamma}: multiplicity expected "
                        f"{e.multiplicity}, got {g.multiplicity}"
                    )
                if e.reduced_class != g.c_reduced:
                    mismatches.append(
                        f"refined {shape}/{gamma}: class expected "
                        f"{e.reduced_class.factored_str()}, got {g.c_reduced.factored_str()}"
                    )
    # the explicitly known multiplicity-two coupling matrix
    checked += 1
    c42 = refined_decomposition(Partition((4, 2)))
    coupling = {c.gamma: c for c in c42.constituents}[Partition((2,))]
    if not _matrix_matches_up_to_order(coupling.c_matrix, golden.coupling_42_2):
        mismatches.append("refined (4,2)/(2): coupling matrix differs from the known one")
    return VerifyReport(checked, mismatches)


def _matrix_matches_up_to_order(got, expected) -> bool:
    size = len(expected)
    if len(got) != size:
        return False
    import itertools

    for perm in itertools.permutations(range(size)):
        if all(
            got[perm[a]][perm[b]] == expected[a][b]
            for a in range(size)
            for b in range(size)
        ):
            return True
    return False


def _key_str(key) -> str:
    primes, _ = key
    return " * ".join(
        f"{p}^C(N,{{{','.join(map(str, ks))}}})" if len(ks) > 1 else f"{p}^C(N,{ks[0]})"
        for p, ks in primes
    ) or "1"
