import pytest

from excodim.applications import (
    CONTAINS_LINE,
    CONTAINS_PLANE,
    ECKARDT_POINT,
    char2_threshold_report,
    e1_bound,
    lines_verdict,
    primed_span_bound,
    prop2r1_report,
    rnc_singular_conditions,
    rnc_stratum_codim_lower,
    singular_line_codim,
)
from excodim.errors import ParameterError
from excodim.strata import span_stratum_exact


def test_singular_line_codim_values():
    assert singular_line_codim(2, 5) == 9
    assert singular_line_codim(3, 7) == 18
    assert singular_line_codim(4, 3) == 7
    with pytest.raises(ParameterError):
        singular_line_codim(1, 5)
    with pytest.raises(ParameterError):
        singular_line_codim(3, 2)


def test_rnc_singular_conditions_values():
    assert rnc_singular_conditions(3, 0, 3) == 20
    # degree-2 curves sit below the proven range; the formula extrapolates
    assert rnc_singular_conditions(2, 1, 4) == 4 * 5 - 6 + (2 * 3 + 1)
    for ell in range(3, 10):
        assert rnc_singular_conditions(1, 0, ell) == ell + 1


def test_rnc_line_case_matches_stratum_bound():
    # conditions for a fixed line, minus the moduli of lines, is the stratum
    # codimension, which the degree-1 bound reproduces exactly
    for r in range(2, 11):
        for ell in range(3, 21):
            fixed = rnc_singular_conditions(1, r - 1, ell)
            assert fixed - 2 * (r - 1) == singular_line_codim(r, ell)
            assert rnc_stratum_codim_lower(1, r, ell) == singular_line_codim(r, ell)


def test_rnc_stratum_values_and_dominance():
    assert rnc_stratum_codim_lower(2, 3, 5) == 19
    assert rnc_stratum_codim_lower(3, 3, 3) == 8
    for r in range(3, 11):
        for ell in range(3, 21):
            assert ell * r - 2 * r - 2 > 0
            for i in range(2, r + 1):
                assert rnc_stratum_codim_lower(i, r, ell) > singular_line_codim(r, ell)


def test_primed_span_bound_values():
    assert primed_span_bound(4, 2, 3, 2) == 20
    for r in range(3, 9):
        for d in range(2, 7):
            assert primed_span_bound(r, 2, 2, d) == 3 * r * d - 3 * (r - 2)
            assert primed_span_bound(r, 2, r, d) == 2 * (r + 1) * d


def test_primed_span_bound_minimized_at_endpoints():
    for r in range(2, 11):
        for d in range(2, 7):
            values = [primed_span_bound(r, 2, b, d) for b in range(2, r + 1)]
            assert min(values) in (values[0], values[-1])


def test_threshold_report_examples():
    rep = char2_threshold_report(3, 5)
    assert rep.parity == "odd" and rep.d == 2
    assert tuple(v for _, v in rep.margins) == (3, 4)
    assert rep.holds

    rep = char2_threshold_report(3, 6)
    assert rep.parity == "even" and rep.d == 2
    assert dict(rep.margins)["d*r - 3*r + 3"] == 0
    assert not rep.holds

    rep = char2_threshold_report(4, 8)
    assert tuple(v for _, v in rep.margins) == (3, 3)
    assert rep.holds


def test_threshold_sweep_matches_degree_rule():
    for r in range(2, 9):
        for ell in range(3, 21):
            rep = char2_threshold_report(r, ell)
            if r == 2:
                assert rep.holds  # plane curves hold for every degree
            else:
                expected = (ell % 2 == 1 and ell >= 5) or (ell % 2 == 0 and ell >= 8)
                assert rep.holds == expected
    # the failure at degree 6 is the first even margin
    for r in range(3, 9):
        rep = char2_threshold_report(r, 6)
        assert dict(rep.margins)["d*r - 3*r + 3"] == 3 - r <= 0


def test_threshold_rule_is_exactly_ge7_or_5():
    for ell in range(3, 21):
        holds_everywhere = all(char2_threshold_report(r, ell).holds for r in range(2, 9))
        assert holds_everywhere == (ell >= 7 or ell == 5)


def test_prop2r1_values_and_crosscheck():
    assert prop2r1_report(4) == {"max_codim": 12, "second_codim": 15, "gap": 3}
    assert prop2r1_report(2) == {"max_codim": 5, "second_codim": 6, "gap": 1}
    assert prop2r1_report(5) == {"max_codim": 17, "second_codim": 21, "gap": 4}
    for r in range(2, 13):
        rep = prop2r1_report(r)
        assert rep["max_codim"] == span_stratum_exact(r, 1, tuple(range(2, r + 2)))
        assert rep["second_codim"] - rep["max_codim"] == rep["gap"] == r - 1


def test_e1_bound_values():
    assert e1_bound(3, 2) == 10 + 15
    assert e1_bound(4, 3) == 15 + 21 + 28
    for r in range(1, 9):
        assert e1_bound(r, 1) == (r + 2) * (r + 1) // 2


def test_lines_verdict_cases():
    assert lines_verdict(5, 4).maximal_components == {ECKARDT_POINT, CONTAINS_PLANE}
    assert lines_verdict(7, 6).maximal_components == {CONTAINS_PLANE}
    assert lines_verdict(4, 6).maximal_components == {CONTAINS_LINE}
    assert lines_verdict(6, 3).maximal_components == {ECKARDT_POINT}
    assert lines_verdict(4, 3).maximal_components == {ECKARDT_POINT}


def test_lines_verdict_unique_except_critical_pair():
    for r in range(2, 10):
        for d in range(3, 12):
            verdict = lines_verdict(r, d)
            if (r, d) == (5, 4):
                assert len(verdict.maximal_components) == 2
            else:
                assert len(verdict.maximal_components) == 1
            assert (verdict.universal_gap == r - 3) == (d == r - 1)


def test_lines_verdict_switches_at_rank_five():
    # in the critical degree the winner flips exactly at ambient dimension 5
    assert lines_verdict(4, 3).maximal_components == {ECKARDT_POINT}
    assert lines_verdict(5, 4).maximal_components == {ECKARDT_POINT, CONTAINS_PLANE}
    assert lines_verdict(6, 5).maximal_components == {CONTAINS_PLANE}
    assert lines_verdict(7, 6).maximal_components == {CONTAINS_PLANE}
