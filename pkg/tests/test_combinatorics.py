import pytest

from excodim.combinatorics import INF, ExtInt, as_extint, binomial, ext_min, h_min
from excodim.errors import ParameterError


def test_binomial_values():
    assert binomial(7, 3) == 35
    assert binomial(6, 0) == 1
    assert binomial(3, 5) == 0


def test_binomial_rejects_negatives():
    with pytest.raises(ParameterError):
        binomial(-1, 0)
    with pytest.raises(ParameterError):
        binomial(3, -2)


def test_binomial_overflow_is_loud():
    with pytest.raises(OverflowError):
        binomial(200, 100)


def test_pascal_identity():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_h_min_known_values():
    assert h_min(4, 1, 6) == 25
    assert h_min(4, 2, 5) == 51
    assert h_min(4, 4, 3) == 35
    for d in range(1, 12):
        assert h_min(1, 1, d) == d + 1


def test_h_min_specializations():
    # plane curves: 2d + 1
    assert [h_min(2, 1, d) for d in (6, 5, 4)] == [13, 11, 9]
    for r in range(1, 8):
        for d in range(1, 8):
            assert h_min(r, r, d) == binomial(d + r, d)
            assert h_min(r, 0, d) == r + 1


def test_h_min_degree_step_identity():
    # first difference in d
    for r in range(11):
        for a in range(r + 1):
            for d in range(2, 13):
                lhs = h_min(r, a, d) - h_min(r, a, d - 1)
                rhs = (r - a) * binomial(d + a - 2, d - 1) + binomial(d + a - 1, d)
                assert lhs == rhs


def test_h_min_dimension_step_identity():
    # first difference in a
    for r in range(11):
        for a in range(r):
            for d in range(2, 13):
                lhs = h_min(r, a + 1, d) - h_min(r, a, d)
                rhs = (r - a) * binomial(d + a - 1, a + 1)
                assert lhs == rhs


def test_h_min_range_checks():
    with pytest.raises(ParameterError):
        h_min(3, 4, 2)
    with pytest.raises(ParameterError):
        h_min(3, -1, 2)
    with pytest.raises(ParameterError):
        h_min(3, 1, 0)


def test_extint_saturating_addition():
    assert (INF + 5) == INF
    assert (ExtInt(3) + ExtInt(4)) == ExtInt(7)
    assert (INF + INF) == INF


def test_extint_min_conventions():
    assert ext_min([]) == INF
    assert ext_min([INF, ExtInt(5), 7]) == ExtInt(5)
    assert min(INF, ExtInt(2)) == ExtInt(2)


def test_extint_subtraction_rules():
    assert (INF - 3) == INF
    assert (ExtInt(10) - ExtInt(4)) == ExtInt(6)
    with pytest.raises(ParameterError):
        _ = ExtInt(1) - INF


def test_extint_checked_range():
    big = 2**127 - 1
    assert int(ExtInt(big)) == big
    with pytest.raises(OverflowError):
        ExtInt(big) + 1
    with pytest.raises(OverflowError):
        ExtInt(big + 1)
    assert int(ExtInt(-(2**127))) == -(2**127)


def test_extint_comparisons_and_conversion():
    assert ExtInt(3) < INF
    assert not (INF < INF)
    assert as_extint(9) == ExtInt(9)
    with pytest.raises(ParameterError):
        int(INF)
