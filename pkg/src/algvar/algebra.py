"""Structure-constant algebras, basis changes, identity checks, and
subspace arithmetic.

An algebra is an n^3 array of exact scalars c[i][j][k] meaning
e_i e_j = sum_k c[i][j][k] e_k.  All checks run on basis elements only,
which suffices by multilinearity, so every verdict is exact.
"""

from __future__ import annotations

from enum import Enum
from typing import List, Optional, Sequence, Tuple

from .linalg import Matrix


class IdentityKind(Enum):
    LEIBNIZ = "leibniz"
    ZINBIEL = "zinbiel"
    ASSOCIATIVE = "associative"
    THREE_STEP_NILPOTENT = "three_step_nilpotent"


class AlgebraStructure:
    """dim, field, and the n*n*n tuple of structure constants."""

    __slots__ = ("dim", "field", "constants")

    def __init__(self, field, constants: Sequence[Sequence[Sequence]]):
        self.field = field
        self.dim = len(constants)
        rows = []
        for plane in constants:
            if len(plane) != self.dim:
                raise ValueError("structure constant array is not cubical")
            new_plane = []
            for line in plane:
                if len(line) != self.dim:
                    raise ValueError("structure constant array is not cubical")
                new_plane.append(tuple(field.of(x) for x in line))
            rows.append(tuple(new_plane))
        self.constants = tuple(rows)

    @staticmethod
    def zero(field, dim: int) -> "AlgebraStructure":
        z = field.zero()
        return AlgebraStructure(
            field, [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        )

    @staticmethod
    def from_products(field, dim: int, products) -> "AlgebraStructure":
        """products: {(i, j): [(k, scalar), ...]} with 1-based indices."""
        z = field.zero()
        c = [[[z] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), combo in products.items():
            for k, scalar in combo:
                c[i - 1][j - 1][k - 1] = c[i - 1][j - 1][k - 1] + field.of(scalar)
        return AlgebraStructure(field, c)

    def is_zero(self) -> bool:
        return not any(x for plane in self.constants for line in plane for x in line)

    def product_of_basis(self, i: int, j: int) -> tuple:
        """Coordinates of e_i e_j (0-based indices)."""
        return self.constants[i][j]

    def multiply(self, x: Sequence, y: Sequence) -> list:
        """Bilinear product of two coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match the algebra dimension")
        f = self.field
        xv = [f.of(a) for a in x]
        yv = [f.of(b) for b in y]
        out = [f.zero()] * self.dim
        for i, a in enumerate(xv):
            if not a:
                continue
            for j, b in enumerate(yv):
                if not b:
                    continue
                ab = a * b
                line = self.constants[i][j]
                for k in range(self.dim):
                    if line[k]:
                        out[k] = out[k] + ab * line[k]
        return out

    def constants_in_basis(self, basis: Matrix) -> "AlgebraStructure":
        """Structure constants of this product in the basis given by the
        ROWS of ``basis`` (row i = coordinates of the new vector E_i).
        """
        if basis.nrows != self.dim or basis.ncols != self.dim:
            raise ValueError("basis matrix has the wrong shape")
        inv = basis.inverse()
        rows = []
        for i in range(self.dim):
            plane = []
            for j in range(self.dim):
                prod = self.multiply(basis.row(i), basis.row(j))
                # coords = c_tilde . basis, so c_tilde = coords . basis^-1
                plane.append(
                    tuple(
                        sum(
                            (prod[a] * inv[a, k] for a in range(self.dim) if prod[a]),
                            self.field.zero(),
                        )
                        for k in range(self.dim)
                    )
                )
            rows.append(tuple(plane))
        return AlgebraStructure(self.field, rows)

    def change_basis(self, g: Matrix) -> "AlgebraStructure":
        """The translated structure g*mu with
        (g*mu)(x, y) = g mu(g^-1 x, g^-1 y), for invertible g acting on
        column coordinate vectors.
        """
        ginv = g.inverse()
        # New constants are those of mu in the basis f_i = g^-1 e_i,
        # whose coordinate rows form (g^-1)^T.
        return self.constants_in_basis(ginv.transpose())

    def map_scalars(self, fn, new_field) -> "AlgebraStructure":
        return AlgebraStructure(
            new_field,
            [
                [[fn(x) for x in line] for line in plane]
                for plane in self.constants
            ],
        )

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraStructure)
            and self.dim == other.dim
            and self.constants == other.constants
        )

    def __hash__(self):
        return hash(self.constants)

    def nonzero_products(self) -> List[Tuple[int, int, int, object]]:
        """(i, j, k, c) for every nonzero c_{i,j}^k, 1-based."""
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    c = self.constants[i][j][k]
                    if c:
                        out.append((i + 1, j + 1, k + 1, c))
        return out

    def __repr__(self):
        prods = ", ".join(
            f"e{i}e{j}={c}*e{k}" for i, j, k, c in self.nonzero_products()
        )
        return f"AlgebraStructure(dim={self.dim}, {prods or 'zero'})"


def check_identity(
    A: AlgebraStructure, kind: IdentityKind
) -> Optional[Tuple[int, int, int]]:
    """None when the identity holds on every basis triple, else the first
    violating (i, j, k), 1-based.  Sufficient by multilinearity."""
    n = A.dim
    f = A.field
    basis = [
        [f.one() if a == b else f.zero() for b in range(n)] for a in range(n)
    ]
    for i in range(n):
        for j in range(n):
            xy = A.product_of_basis(i, j)
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                if kind is IdentityKind.LEIBNIZ:
                    # (xy)z = (xz)y + x(yz)
                    lhs = A.multiply(xy, z)
                    rhs1 = A.multiply(A.multiply(x, z), y)
                    rhs2 = A.multiply(x, A.product_of_basis(j, k))
                    ok = all(
                        l == r1 + r2 for l, r1, r2 in zip(lhs, rhs1, rhs2)
                    )
                elif kind is IdentityKind.ZINBIEL:
                    # (xy)z = x(yz + zy)
                    lhs = A.multiply(xy, z)
                    inner = [
                        a + b
                        for a, b in zip(
                            A.product_of_basis(j, k), A.product_of_basis(k, j)
                        )
                    ]
                    rhs = A.multiply(x, inner)
                    ok = lhs == rhs
                elif kind is IdentityKind.ASSOCIATIVE:
                    lhs = A.multiply(xy, z)
                    rhs = A.multiply(x, A.product_of_basis(j, k))
                    ok = lhs == rhs
                elif kind is IdentityKind.THREE_STEP_NILPOTENT:
                    left = A.multiply(xy, z)
                    right = A.multiply(x, A.product_of_basis(j, k))
                    ok = not any(left) and not any(right)
                else:  # pragma: no cover
                    raise ValueError(kind)
                if not ok:
                    return (i + 1, j + 1, k + 1)
    return None


class Subspace:
    """A subspace of the ambient coordinate space in reduced echelon
    form, so equality of subspaces is equality of representations."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim: int, vectors: Sequence[Sequence] = ()):
        self.field = field
        self.ambient_dim = ambient_dim
        vectors = [v for v in vectors]
        if not vectors:
            self.basis = ()
            return
        m = Matrix(field, vectors)
        if m.ncols != ambient_dim:
            raise ValueError("vector length does not match the ambient dimension")
        R, pivots = m.rref()
        self.basis = tuple(R.rows[i] for i in range(len(pivots)))

    @staticmethod
    def full(field, n: int) -> "Subspace":
        return Subspace(field, n, Matrix.identity(field, n).rows)

    @staticmethod
    def span_of_tail(field, n: int, start: int) -> "Subspace":
        """span(e_start, ..., e_n) with 1-based start; start = n+1 is 0."""
        one, zero = field.one(), field.zero()
        vectors = []
        for i in range(start - 1, n):
            vectors.append([one if j == i else zero for j in range(n)])
        return Subspace(field, n, vectors)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence) -> bool:
        v = [self.field.of(x) for x in vector]
        for row in self.basis:
            pivot = next(i for i, x in enumerate(row) if x)
            if v[pivot]:
                c = v[pivot]
                v = [a - c * b for a, b in zip(v, row)]
        return not any(v)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis)
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        """Kernel construction on stacked coordinates."""
        if not self.basis or not other.basis:
            return Subspace(self.field, self.ambient_dim)
        # Solve x in self, x in other: x = a . B1 = b . B2.
        k1, k2 = len(self.basis), len(other.basis)
        cols = []
        for j in range(self.ambient_dim):
            cols.append(
                [self.basis[i][j] for i in range(k1)]
                + [-other.basis[i][j] for i in range(k2)]
            )
        m = Matrix(self.field, cols)  # rows = coordinates, cols = (a, b)
        vectors = []
        for v in m.nullspace():
            a = v[:k1]
            vec = [self.field.zero()] * self.ambient_dim
            for coef, row in zip(a, self.basis):
                if coef:
                    vec = [x + coef * y for x, y in zip(vec, row)]
            if any(vec):
                vectors.append(vec)
        return Subspace(self.field, self.ambient_dim, vectors)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def transported(self, g: Matrix) -> "Subspace":
        """Image of the subspace under the matrix g (column action)."""
        return Subspace(
            self.field,
            self.ambient_dim,
            [g.apply_to_vector(list(row)) for row in self.basis],
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


def subspace_product(A: AlgebraStructure, U: Subspace, W: Subspace) -> Subspace:
    """span{uv : u in U, w in W} computed on basis pairs."""
    vectors = []
    for u in U.basis:
        for w in W.basis:
            p = A.multiply(list(u), list(w))
            if any(p):
                vectors.append(p)
    return Subspace(A.field, A.dim, vectors)


def circ_product(A: AlgebraStructure, U: Subspace, W: Subspace) -> Subspace:
    """U o W = UW + WU."""
    return subspace_product(A, U, W) + subspace_product(A, W, U)


def power_spaces(A: AlgebraStructure) -> List[Subspace]:
    """The chain A^1 >= A^2 >= ... down to stabilization, where
    A^k = sum over i+j=k of A^i A^j."""
    chain = [Subspace.full(A.field, A.dim)]
    while True:
        k = len(chain) + 1
        nxt = Subspace(A.field, A.dim)
        for i in range(1, k):
            j = k - i
            nxt = nxt + subspace_product(A, chain[i - 1], chain[j - 1])
        chain.append(nxt)
        if nxt.dim == 0 or nxt == chain[-2]:
            return chain


def is_nilpotent(A: AlgebraStructure) -> bool:
    return power_spaces(A)[-1].dim == 0
