"""Tests for exact Gaussian-rational arithmetic and linear algebra."""
import random

import pytest

from nicholsforge.exact import (Matrix, Scalar, ScalarParseError, SingularMatrix,
                                XI, ONE, ZERO, THETA, xi_pow)


def test_theta_squared_is_two_xi():
    # theta = 1 + xi, theta^2 = 2*xi
    assert THETA * THETA == Scalar(0, 2)


def test_xi_has_order_four():
    assert XI * XI * XI * XI == ONE
    assert XI * XI == Scalar(-1)


def test_xi_inverse_is_minus_xi():
    assert XI.inverse() == -XI
    assert xi_pow(-1) == -XI
    assert xi_pow(3) == -XI


def test_scalar_field_axioms_randomized():
    rng = random.Random(20240817)

    def rand_scalar():
        return Scalar(rng.randint(-9, 9), rng.randint(-9, 9)) / Scalar(rng.randint(1, 9))

    for _ in range(10_000):
        x, y, z = rand_scalar(), rand_scalar(), rand_scalar()
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y == y + x
        assert x * y == y * x
        if x:
            assert x * x.inverse() == ONE


def test_scalar_pow():
    assert XI ** 5 == XI
    assert THETA ** 2 == Scalar(0, 2)
    assert (THETA ** -1) * THETA == ONE


@pytest.mark.parametrize("text", ["0", "1", "-1", "xi", "-xi", "1/2", "-3/7",
                                  "1/2 + 1/2*xi", "2 - 3*xi", "-1/2*xi",
                                  "5 + xi", "5 - xi"])
def test_scalar_format_round_trip(text):
    s = Scalar.parse(text)
    assert Scalar.parse(s.format()) == s


def test_scalar_format_round_trip_randomized():
    rng = random.Random(7)
    for _ in range(2000):
        s = Scalar(rng.randint(-50, 50), rng.randint(-50, 50)) / Scalar(rng.randint(1, 40))
        assert Scalar.parse(s.format()) == s


def test_scalar_parse_rejects_garbage():
    for bad in ["", "x", "1 +", "xi*xi", "1//2"]:
        with pytest.raises(ScalarParseError):
            Scalar.parse(bad)


def test_rank_identity_and_zero():
    assert Matrix.identity(4).rank() == 4
    assert Matrix.zeros(3, 5).rank() == 0


def test_invert_diagonal():
    m = Matrix.diagonal([XI, Scalar(-1)])
    inv = m.invert()
    assert inv == Matrix.diagonal([-XI, Scalar(-1)])
    assert (inv * m).is_identity()


def test_invert_singular_raises():
    m = Matrix([[ONE, ONE], [ONE, ONE]])
    assert m.rank() == 1
    with pytest.raises(SingularMatrix):
        m.invert()


def test_one_by_one_minus_one():
    m = Matrix([[Scalar(-1)]])
    assert m.invert() == Matrix([[Scalar(-1)]])


def test_rank_kernel_dimension_randomized():
    rng = random.Random(99)
    for _ in range(120):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        m = Matrix([[Scalar(rng.randint(-3, 3), rng.randint(-3, 3))
                     if rng.random() < 0.7 else ZERO
                     for _ in range(c)] for _ in range(r)])
        rk = m.rank()
        ker = m.kernel()
        assert rk + len(ker) == c
        for v in ker:
            assert all(e.is_zero() for e in m.apply(v))


def test_invert_times_self_randomized():
    rng = random.Random(5)
    produced = 0
    while produced < 40:
        n = rng.randint(1, 5)
        m = Matrix([[Scalar(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(n)]
                    for _ in range(n)])
        if m.rank() < n:
            continue
        produced += 1
        assert (m.invert() * m).is_identity()


def test_rank_independent_of_row_scaling():
    rng = random.Random(31)
    for _ in range(60):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[Scalar(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(c)]
                for _ in range(r)]
        m = Matrix(rows)
        scaled = Matrix([[Scalar(rng.randint(1, 5)) / Scalar(rng.randint(1, 5)) * e
                          for e in row] for row in rows])
        assert m.rank() == scaled.rank()


def test_kron_identity():
    a = Matrix([[ONE, XI], [ZERO, ONE]])
    k = a.kron(Matrix.identity(2))
    assert k.rows == 4 and k[(0, 2)] == XI and k[(1, 3)] == XI
