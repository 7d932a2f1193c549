"""Orbit-separating invariants: derivation algebra dimension,
annihilators, centers, product-span dimensions, and the maximal
dimension of a trivial subalgebra.

All of these are semicontinuous along degenerations, which is what
makes them usable as non-degeneration certificates; the monotonicity
directions are asserted by the graph cross-checks, not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional

from .algebra import AlgebraStructure, Subspace
from .linalg import Matrix
from .polys import (
    DEFAULT_GROEBNER_BUDGET,
    MultiPoly,
    PolyIdeal,
    PolyRing,
    ideal_is_trivial,
)


class InconclusiveInvariant(Exception):
    """A budgeted decision inside an invariant ran out of budget."""


def der_dim(A: AlgebraStructure) -> int:
    """Dimension of the derivation algebra: nullity of the linear system
    D(e_i e_j) = D(e_i) e_j + e_i D(e_j) in the n^2 entries of D."""
    n = A.dim
    f = A.field
    zero = f.zero()
    rows = []
    # Unknown D given by D(e_i) = sum_p D[i][p] e_p; column index = i*n + p.
    for i in range(n):
        for j in range(n):
            cij = A.constants[i][j]
            for l in range(n):
                row = [zero] * (n * n)
                for k in range(n):
                    if cij[k]:
                        row[k * n + l] = row[k * n + l] + cij[k]
                for p in range(n):
                    cpj = A.constants[p][j][l]
                    if cpj:
                        row[i * n + p] = row[i * n + p] - cpj
                    cip = A.constants[i][p][l]
                    if cip:
                        row[j * n + p] = row[j * n + p] - cip
                rows.append(row)
    return len(Matrix(f, rows).nullspace())


def _kernel_subspace(A: AlgebraStructure, rows) -> Subspace:
    m = Matrix(A.field, rows)
    return Subspace(A.field, A.dim, m.nullspace())


def ann_left(A: AlgebraStructure) -> Subspace:
    """{a : x a = 0 for all x}."""
    n = A.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append([A.constants[i][j][k] for j in range(n)])
    return _kernel_subspace(A, rows)


def ann_right(A: AlgebraStructure) -> Subspace:
    """{a : a x = 0 for all x}."""
    n = A.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append([A.constants[j][i][k] for j in range(n)])
    return _kernel_subspace(A, rows)


def ann(A: AlgebraStructure) -> Subspace:
    return ann_left(A).intersect(ann_right(A))


def center(A: AlgebraStructure) -> Subspace:
    """The commutant {a : a x = x a for all x}."""
    n = A.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append(
                [A.constants[j][i][k] - A.constants[i][j][k] for j in range(n)]
            )
    return _kernel_subspace(A, rows)


def anticommutative_center(A: AlgebraStructure) -> Subspace:
    """{a : x a + a x = 0 for all x}."""
    n = A.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append(
                [A.constants[j][i][k] + A.constants[i][j][k] for j in range(n)]
            )
    return _kernel_subspace(A, rows)


def square_dim(A: AlgebraStructure) -> int:
    """dim span{e_i e_j}."""
    vectors = [
        list(A.constants[i][j]) for i in range(A.dim) for j in range(A.dim)
    ]
    return Subspace(A.field, A.dim, [v for v in vectors if any(v)]).dim


def plus2_dim(A: AlgebraStructure) -> int:
    """dim span{e_i e_j + e_j e_i}."""
    vectors = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            v = [a + b for a, b in zip(A.constants[i][j], A.constants[j][i])]
            if any(v):
                vectors.append(v)
    return Subspace(A.field, A.dim, vectors).dim


def _chart_row_basis(ring: PolyRing, n: int, pivots: tuple) -> List[List[MultiPoly]]:
    """Echelon chart of the Grassmannian for a pivot-column pattern:
    row r has 1 at pivots[r], 0 at other pivots and at columns left of
    its pivot, and a fresh unknown elsewhere."""
    rows = []
    var_index = 0
    for r, p in enumerate(pivots):
        row = []
        for c in range(n):
            if c == p:
                row.append(ring.one())
            elif c in pivots or c < p:
                row.append(ring.zero())
            else:
                row.append(ring.var(ring.vars[var_index]))
                var_index += 1
        rows.append(row)
    return rows


def _chart_unknown_count(n: int, pivots: tuple) -> int:
    count = 0
    for p in pivots:
        count += sum(
            1 for c in range(n) if c != p and c not in pivots and c >= p
        )
    return count


def msub0_dim(A: AlgebraStructure, budget: int = DEFAULT_GROEBNER_BUDGET) -> int:
    """Largest k such that some k-dimensional subspace U has U.U = 0.

    Decided chart by chart on the Grassmannian: each echelon pivot
    pattern gives a polynomial system "all products of chart basis
    vectors vanish", whose solvability over the algebraic closure is
    settled by a Groebner triviality check.  Exhaustive over charts, so
    the returned value is a certified maximum.  Raises
    InconclusiveInvariant only if some chart exceeds the budget while
    no solvable chart was found at that dimension.
    """
    n = A.dim
    if A.is_zero():
        return n
    for k in range(n - 1, 0, -1):
        any_inconclusive = False
        for pivots in combinations(range(n), k):
            count = _chart_unknown_count(n, pivots)
            names = [f"s{idx}" for idx in range(count)]
            ring = PolyRing(A.field, names)
            rows = _chart_row_basis(ring, n, pivots)
            gens = []
            for a in range(k):
                for b in range(k):
                    # coordinates of (row a) * (row b); each must vanish
                    for m in range(n):
                        term = ring.zero()
                        for i in range(n):
                            if not rows[a][i]:
                                continue
                            for j in range(n):
                                if not rows[b][j]:
                                    continue
                                c = A.constants[i][j][m]
                                if c:
                                    term = term + rows[a][i] * rows[b][j].scale(c)
                        if term:
                            gens.append(term)
            if not gens:
                return k
            verdict = ideal_is_trivial(PolyIdeal(ring, gens), budget)
            if verdict == "no":
                return k
            if verdict == "inconclusive":
                any_inconclusive = True
        if any_inconclusive:
            raise InconclusiveInvariant(
                f"trivial-subalgebra search undecided at dimension {k}"
            )
    return 0


@dataclass(frozen=True)
class InvariantProfile:
    """All scalar invariants of one algebra, bundled."""

    der_dim: int
    ann_l_dim: int
    ann_r_dim: int
    ann_dim: int
    center_dim: int
    az_dim: int
    square_dim: int
    plus2_dim: int
    msub0_dim: Optional[int]  # None when the chart search was inconclusive

    def as_dict(self) -> dict:
        return {
            "der": self.der_dim,
            "ann_l": self.ann_l_dim,
            "ann_r": self.ann_r_dim,
            "ann": self.ann_dim,
            "center": self.center_dim,
            "az": self.az_dim,
            "square": self.square_dim,
            "plus2": self.plus2_dim,
            "msub0": self.msub0_dim,
        }


def invariant_profile(
    A: AlgebraStructure, budget: int = DEFAULT_GROEBNER_BUDGET
) -> InvariantProfile:
    try:
        msub0 = msub0_dim(A, budget)
    except InconclusiveInvariant:
        msub0 = None
    return InvariantProfile(
        der_dim=der_dim(A),
        ann_l_dim=ann_left(A).dim,
        ann_r_dim=ann_right(A).dim,
        ann_dim=ann(A).dim,
        center_dim=center(A).dim,
        az_dim=anticommutative_center(A).dim,
        square_dim=square_dim(A),
        plus2_dim=plus2_dim(A),
        msub0_dim=msub0,
    )


# Criterion names -> (extractor, direction). Direction "source_gt" means
# the invariant of the degeneration source must strictly exceed the
# target's for a valid non-degeneration certificate; "source_lt" the
# reverse.
CRITERIA = {
    "ann_l": (lambda A: ann_left(A).dim, "source_gt"),
    "ann_r": (lambda A: ann_right(A).dim, "source_gt"),
    "ann": (lambda A: ann(A).dim, "source_gt"),
    "az": (lambda A: anticommutative_center(A).dim, "source_gt"),
    "msub0": (msub0_dim, "source_gt"),
    "center": (lambda A: center(A).dim, "source_gt"),
    "square": (square_dim, "source_lt"),
    "plus2": (plus2_dim, "source_lt"),
    "der_dim": (der_dim, "source_ge"),
}
