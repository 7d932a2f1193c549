"""Dense exact linear algebra over any of the scalar fields.

Everything is fraction-free from the caller's point of view: entries
stay in the ambient field and all pivoting is exact, so ranks, kernels
and determinants are never approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


class Matrix:
    """An immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows: Sequence[Sequence]):
        self.field = field
        self.rows = tuple(tuple(field.of(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    @staticmethod
    def identity(field, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return Matrix(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * ncols for _ in range(nrows)])

    def __getitem__(self, ij: Tuple[int, int]):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.col(j) for j in range(self.ncols)])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            self.field,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            self.field,
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.rows, other.rows)
            ],
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        zero = self.field.zero()
        ot = other.transpose()
        out = []
        for r in self.rows:
            out.append(
                [
                    sum((a * b for a, b in zip(r, c) if a and b), zero)
                    for c in ot.rows
                ]
            )
        return Matrix(self.field, out)

    def __mul__(self, scalar) -> "Matrix":
        c = self.field.of(scalar)
        return Matrix(self.field, [[x * c for x in r] for r in self.rows])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def apply_to_vector(self, v: Sequence) -> list:
        """Matrix @ column vector."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        zero = self.field.zero()
        vv = [self.field.of(x) for x in v]
        return [sum((a * b for a, b in zip(r, vv) if a and b), zero) for r in self.rows]

    # -- elimination ----------------------------------------------------

    def rref(self) -> Tuple["Matrix", List[int]]:
        """Reduced row echelon form and the pivot column indices."""
        rows = [list(r) for r in self.rows]
        pivots: List[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if rows[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = self.field.one() / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return Matrix(self.field, rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List[list]:
        """Exact kernel basis vectors (one per free column)."""
        R, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for fc in free:
            v = [zero] * self.ncols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -R[r, fc]
            basis.append(v)
        return basis

    def det(self):
        """Exact determinant via fraction-aware Gaussian elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        rows = [list(r) for r in self.rows]
        det = self.field.one()
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if rows[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                return self.field.zero()
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = self.field.one() / rows[c][c]
            for i in range(c + 1, n):
                if rows[i][c]:
                    factor = rows[i][c] * inv
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
        return det

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = Matrix(
            self.field,
            [list(r) + list(Matrix.identity(self.field, n).rows[i]) for i, r in enumerate(self.rows)],
        )
        R, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(self.field, [R.rows[i][n:] for i in range(n)])

    def __repr__(self):
        return "Matrix([" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + "])"


@dataclass
class LinearSolution:
    """Outcome of an exact linear solve: mat @ x = rhs (column sense).

    ``particular`` is None for an inconsistent system; ``nullspace``
    always holds an exact basis of ker(mat).
    """

    particular: Optional[List[list]]
    nullspace: List[list]

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def nullity(self) -> int:
        return len(self.nullspace)


def linear_solve(mat: Matrix, rhs: Matrix) -> LinearSolution:
    """Solve mat @ X = rhs exactly; inconsistency is a value, not an error."""
    if mat.nrows != rhs.nrows:
        raise ValueError("row count mismatch between matrix and right-hand side")
    n, m = mat.ncols, rhs.ncols
    aug = Matrix(mat.field, [list(a) + list(b) for a, b in zip(mat.rows, rhs.rows)])
    R, pivots = aug.rref()
    main_pivots = [p for p in pivots if p < n]
    if len(main_pivots) != len(pivots):
        return LinearSolution(particular=None, nullspace=mat.nullspace())
    zero = mat.field.zero()
    particular = [[zero] * m for _ in range(n)]
    for r, pc in enumerate(main_pivots):
        for j in range(m):
            particular[pc][j] = R[r, n + j]
    return LinearSolution(particular=particular, nullspace=mat.nullspace())
