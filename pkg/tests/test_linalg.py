import random

from algvar.linalg import Matrix, linear_solve
from algvar.scalars import QQI, GaussianRational, tower


def test_identity_nullspace_is_trivial():
    m = Matrix.identity(QQI, 4)
    sol = linear_solve(m, Matrix.zero(QQI, 4, 1))
    assert sol.consistent and sol.nullity == 0


def test_zero_matrix_nullspace_is_everything():
    m = Matrix.zero(QQI, 4, 4)
    sol = linear_solve(m, Matrix.zero(QQI, 4, 1))
    assert sol.consistent and sol.nullity == 4


def test_inconsistent_system_is_a_value():
    m = Matrix(QQI, [[1, 1], [1, 1]])
    rhs = Matrix(QQI, [[1], [2]])
    sol = linear_solve(m, rhs)
    assert not sol.consistent
    assert sol.nullity == 1


def test_nullspace_vectors_satisfy_system():
    rng = random.Random(3)
    for _ in range(25):
        rows = [
            [GaussianRational(rng.randint(-3, 3), rng.randint(-1, 1)) for _ in range(5)]
            for _ in range(3)
        ]
        m = Matrix(QQI, rows)
        for v in m.nullspace():
            assert all(not x for x in m.apply_to_vector(v))
        assert m.rank() + len(m.nullspace()) == 5


def test_det_and_inverse():
    m = Matrix(QQI, [[1, 2], [3, 4]])
    assert m.det() == GaussianRational(-2)
    inv = m.inverse()
    assert m @ inv == Matrix.identity(QQI, 2)


def test_det_over_rational_functions():
    F = tower(["t"])
    t = F.gen()
    m = Matrix(F, [[t, F.one()], [F.zero(), t]])
    assert m.det() == t * t
    inv = m.inverse()
    assert (m @ inv) == Matrix.identity(F, 2)


def test_particular_solution():
    m = Matrix(QQI, [[1, 0, 1], [0, 1, 1]])
    rhs = Matrix(QQI, [[3], [5]])
    sol = linear_solve(m, rhs)
    assert sol.consistent
    x = [row[0] for row in sol.particular]
    applied = m.apply_to_vector(x)
    assert applied == [QQI.of(3), QQI.of(5)]
    assert sol.nullity == 1
