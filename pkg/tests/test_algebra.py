import random
from fractions import Fraction

from algvar.algebra import (
    AlgebraStructure,
    IdentityKind,
    Subspace,
    check_identity,
    circ_product,
    is_nilpotent,
    power_spaces,
    subspace_product,
)
from algvar.catalog import get_entry, instantiate, structure
from algvar.linalg import Matrix
from algvar.scalars import QQI, GaussianRational


def basis_vec(i, n=4):
    return [QQI.one() if j == i - 1 else QQI.zero() for j in range(n)]


def test_multiply_on_basis():
    L2 = structure(get_entry("L2"))
    assert L2.multiply(basis_vec(1), basis_vec(1)) == basis_vec(2)
    assert L2.multiply([0, 0, 0, 0], basis_vec(1)) == [QQI.zero()] * 4
    N6 = structure(get_entry("N6"))
    assert N6.multiply(basis_vec(2), basis_vec(1)) == basis_vec(4)


def test_change_basis_identity_fixes_structure():
    A = structure(get_entry("Z5"))
    assert A.change_basis(Matrix.identity(QQI, 4)) == A


def test_n3_parameter_negation_isomorphism():
    a = GaussianRational(Fraction(2, 3), 1)
    A = instantiate(get_entry("N3"), {"alpha": a})
    B = instantiate(get_entry("N3"), {"alpha": -a})
    g = Matrix(QQI, [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert A.change_basis(g) == B


def test_n9_swap_example():
    a = GaussianRational(3)
    A = instantiate(get_entry("N9"), {"alpha": a})
    g = Matrix(QQI, [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    B = A.change_basis(g)
    # after the swap: e2 e1 = e4, e1 e2 = alpha e4, e1 e1 = e3
    assert B.constants[1][0][3] == QQI.one()
    assert B.constants[0][1][3] == a
    assert B.constants[0][0][2] == QQI.one()


def test_action_law_composition():
    rng = random.Random(11)
    A = structure(get_entry("N7"))

    def random_invertible():
        while True:
            m = Matrix(
                QQI,
                [[GaussianRational(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(4)] for _ in range(4)],
            )
            if m.det():
                return m

    for _ in range(5):
        g, h = random_invertible(), random_invertible()
        lhs = A.change_basis(h).change_basis(g)
        rhs = A.change_basis(g @ h)
        assert lhs == rhs


def test_identities_on_catalog_samples():
    Z5 = structure(get_entry("Z5"))
    assert check_identity(Z5, IdentityKind.ZINBIEL) is None
    L2 = structure(get_entry("L2"))
    assert check_identity(L2, IdentityKind.LEIBNIZ) is None
    assert check_identity(L2, IdentityKind.ZINBIEL) == (1, 1, 1)
    zero = AlgebraStructure.zero(QQI, 4)
    for kind in IdentityKind:
        assert check_identity(zero, kind) is None


def test_identity_invariant_under_basis_change():
    rng = random.Random(5)
    A = structure(get_entry("L6"))
    for _ in range(3):
        while True:
            g = Matrix(
                QQI,
                [[GaussianRational(rng.randint(-2, 2)) for _ in range(4)] for _ in range(4)],
            )
            if g.det():
                break
        B = A.change_basis(g)
        assert check_identity(B, IdentityKind.LEIBNIZ) is None
        assert check_identity(B, IdentityKind.ZINBIEL) is not None


def test_subspace_products():
    N6 = structure(get_entry("N6"))
    e1 = Subspace(QQI, 4, [basis_vec(1)])
    e2 = Subspace(QQI, 4, [basis_vec(2)])
    prod = circ_product(N6, e1, e2)
    assert prod == Subspace(QQI, 4, [basis_vec(3), basis_vec(4)])
    zero_space = Subspace(QQI, 4)
    assert subspace_product(N6, e1, zero_space).dim == 0
    L2 = structure(get_entry("L2"))
    full = Subspace.full(QQI, 4)
    assert subspace_product(L2, full, full) == Subspace(
        QQI, 4, [basis_vec(2), basis_vec(3), basis_vec(4)]
    )


def test_subspace_product_transport():
    rng = random.Random(9)
    A = structure(get_entry("N1"))
    U = Subspace(QQI, 4, [basis_vec(1), basis_vec(2)])
    W = Subspace(QQI, 4, [basis_vec(2), basis_vec(3)])
    while True:
        g = Matrix(
            QQI,
            [[GaussianRational(rng.randint(-2, 2)) for _ in range(4)] for _ in range(4)],
        )
        if g.det():
            break
    lhs = subspace_product(A, U, W).transported(g)
    rhs = subspace_product(A.change_basis(g), U.transported(g), W.transported(g))
    assert lhs == rhs


def test_power_spaces():
    N1 = structure(get_entry("N1"))
    chain = power_spaces(N1)
    assert [s.dim for s in chain[:3]] == [4, 2, 0]
    L2 = structure(get_entry("L2"))
    assert [s.dim for s in power_spaces(L2)] == [4, 3, 2, 1, 0]
    zero = AlgebraStructure.zero(QQI, 4)
    assert power_spaces(zero)[1].dim == 0
    assert is_nilpotent(L2)


def test_three_step_nilpotency_of_n_entries():
    for name in ["N1", "N6", "N10", "N3C"]:
        A = structure(get_entry(name), bindings=None)
        if A.field is not QQI:
            continue
        assert check_identity(A, IdentityKind.THREE_STEP_NILPOTENT) is None
