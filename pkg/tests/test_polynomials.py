import numpy as np
import pytest

from excodim.errors import ParameterError
from excodim.fforacle.fields import gf
from excodim.fforacle.polynomials import (
    MultiPoly,
    monomials,
    n_monomials,
    poly_from_line,
    poly_to_line,
)


def test_monomial_order_is_graded_lex():
    assert monomials(1, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials(2, 2) == (
        (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
    )
    assert len(monomials(3, 4)) == n_monomials(3, 4) == 35


def test_monomial_order_leading_variable_first():
    mons = monomials(2, 3)
    assert mons[0] == (3, 0, 0)
    assert mons[-1] == (0, 0, 3)
    # strictly decreasing in lex order with X0 > X1 > X2
    assert all(a > b for a, b in zip(mons, mons[1:]))


def test_multipoly_construction_checks():
    f = gf(2)
    with pytest.raises(ParameterError):
        MultiPoly(f, 2, 2, [0, 0, 0])  # wrong length
    with pytest.raises(ParameterError):
        MultiPoly(f, 1, 1, [2, 0])  # code out of range


def test_multiplication_small_case():
    f = gf(2)
    x0 = MultiPoly.variable(f, 1, 0)
    x1 = MultiPoly.variable(f, 1, 1)
    prod = (x0 + x1) * (x0 + x1)
    # char 2: (X0 + X1)^2 = X0^2 + X1^2
    assert list(prod.coeffs) == [1, 0, 1]


def test_multiplication_matches_reference():
    # compare against integer polynomial arithmetic reduced mod p
    f = gf(5)
    rng = np.random.default_rng(3)
    for _ in range(30):
        a = MultiPoly.random(f, 2, 2, rng)
        b = MultiPoly.random(f, 2, 3, rng)
        got = a * b
        ref = {}
        for ea, ca in a.support():
            for eb, cb in b.support():
                key = tuple(x + y for x, y in zip(ea, eb))
                ref[key] = (ref.get(key, 0) + ca * cb) % 5
        want = MultiPoly.from_terms(f, 2, 5, {k: v for k, v in ref.items() if v})
        assert got == want


def test_euler_identity():
    # sum_i X_i dF/dX_i = deg(F) * F, in any characteristic
    for p, e in [(2, 1), (3, 1), (2, 2), (5, 1)]:
        f = gf(p, e)
        rng = np.random.default_rng(p * 10 + e)
        for d in (2, 3, 4):
            F = MultiPoly.random(f, 2, d, rng)
            acc = MultiPoly.zero(f, 2, d)
            for i in range(3):
                acc = acc + MultiPoly.variable(f, 2, i) * F.partial(i)
            assert acc == F.scale(f.from_int(d))


def test_char2_derivative_cancellation():
    f = gf(2)
    F = MultiPoly.from_terms(f, 2, 3, {(2, 1, 0): 1})  # X0^2 X1
    assert F.partial(0).is_zero
    assert list(F.partial(1).support()) == [((2, 0, 0), 1)]
    assert F.partial(2).is_zero


def test_char2_square_has_even_exponents():
    f = gf(2)
    rng = np.random.default_rng(11)
    F = MultiPoly.random(f, 2, 3, rng)
    sq = F.square()
    for exp, _ in sq.support():
        assert all(e % 2 == 0 for e in exp)
    for i in range(3):
        assert sq.partial(i).is_zero


def test_serialization_round_trip_prime_field():
    f = gf(3)
    rng = np.random.default_rng(5)
    F = MultiPoly.random(f, 2, 4, rng)
    line = poly_to_line(F)
    assert line.startswith("3 1 2 4 :")
    again = poly_from_line(line)
    assert again == F
    assert poly_to_line(again) == line


def test_serialization_round_trip_extension_field():
    f = gf(2, 3)
    rng = np.random.default_rng(9)
    F = MultiPoly.random(f, 1, 5, rng)
    line = poly_to_line(F)
    assert line.startswith("2 3 1 5 :")
    again = poly_from_line(line)
    assert again == F
    assert poly_to_line(again) == line


def test_encode_decode_round_trip():
    f = gf(3)
    rng = np.random.default_rng(2)
    for _ in range(20):
        F = MultiPoly.random(f, 2, 2, rng)
        assert MultiPoly.decode(f, 2, 2, F.encode()) == F


def test_zero_polynomial_is_valid():
    f = gf(2)
    z = MultiPoly.zero(f, 3, 4)
    assert z.is_zero
    assert list(z.support()) == []
    assert (z * MultiPoly.variable(f, 3, 0)).is_zero
