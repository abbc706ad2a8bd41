import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from excodim.combinatorics import INF, ExtInt
from excodim.errors import BudgetError, ParameterError
from excodim import strata
from excodim.strata import (
    INCONCLUSIVE,
    UNIQUE_MAX_LINEAR,
    ProblemSpec,
    analyze_spans,
    brute_force_f,
    cone_sequences,
    f_candidates,
    f_lower,
    g_lower,
    grassmannian_dim,
    h_gap,
    kcl_cone_min,
    nr_hypothesis,
    slope_gap,
    sorted_is_maximal,
    span_stratum_exact,
    worked_example,
)

EXAMPLE = (3, 4, 5, 6)


def test_problem_spec_sorts_and_validates():
    spec = ProblemSpec(4, 1, (6, 3, 5, 4))
    assert spec.degrees == EXAMPLE
    assert spec.k == 4 and spec.base_span == 1
    with pytest.raises(ParameterError):
        ProblemSpec(4, 1, ())
    with pytest.raises(ParameterError):
        ProblemSpec(4, 1, (0, 2))
    with pytest.raises(ParameterError):
        ProblemSpec(4, -1, (2,))


def test_f_lower_example_values():
    assert f_lower(4, 1, EXAMPLE) == (ExtInt(25), (4,))
    assert f_lower(3, 2, EXAMPLE) == (ExtInt(35), (3, 4))
    assert f_lower(2, 3, EXAMPLE)[0] == ExtInt(33)
    assert f_lower(5, 0, EXAMPLE) == (ExtInt(0), ())
    assert f_lower(4, 5, EXAMPLE) == (INF, ())


def test_f_lower_tie_breaks_lexicographically():
    # both single choices cost 3; the smaller index must win
    value, indices = f_lower(2, 1, (1, 1))
    assert value == ExtInt(3)
    assert indices == (1,)


def test_f_lower_rejects_undefined_condition_counts():
    with pytest.raises(ParameterError):
        f_lower(1, 1, (2, 2, 2))


def test_g_lower_example_values():
    assert int(g_lower(4, 1, 3, EXAMPLE)) == 31
    assert int(g_lower(4, 1, 2, EXAMPLE)) == 27
    assert int(g_lower(4, 1, 1, EXAMPLE)) == 16
    with pytest.raises(ParameterError):
        g_lower(4, 1, 0, EXAMPLE)


def test_span_stratum_exact_values():
    assert span_stratum_exact(4, 1, EXAMPLE) == 16
    assert span_stratum_exact(4, 1, (2, 3, 4, 5)) == 12
    for r in range(2, 8):
        for ds in ((2,) * r, tuple(range(2, r + 2))):
            assert span_stratum_exact(r, 1, ds) == -2 * (r - 1) + sum(d + 1 for d in ds)


def test_h_gap_example():
    assert int(h_gap(4, 1, 4, EXAMPLE)) == 9


@pytest.mark.parametrize("r", range(2, 9))
@pytest.mark.parametrize("d", range(2, 7))
def test_equal_degree_gap_closed_forms(r, d):
    for k in range(r, r + 4):
        ds = (d,) * k
        a = k - r + 1  # excess pinned so the base span is a line
        assert int(h_gap(r, a, 2, ds)) == r - 1 + (d - 2) * (r - 2) + d * (k - r)
        assert int(h_gap(r, a, r, ds)) == d * (k - r) * (r - 1) + (r - 1)


def test_equal_degree_quadratic_identity():
    # closed form for every stratum at equal degrees, and endpoint minimality
    for r in range(2, 7):
        for d in range(2, 6):
            for k in range(r, r + 3):
                a = k - r + 1
                values = {}
                for b in range(1, r + 1):
                    got = int(g_lower(r, a, b, (d,) * k))
                    expected = -(b + 1) * (r - b) + (a + r - b) * (d * b + 1)
                    assert got == expected
                    values[b] = got
                interior_min = min(values[b] for b in range(2, r + 1))
                assert interior_min in (values[2], values[r])


def test_analysis_of_running_example():
    report = analyze_spans(4, 1, EXAMPLE)
    assert int(report.base_codim) == 16
    bounds = {s.b: int(s.value) for s in report.strata}
    assert bounds == {1: 16, 2: 27, 3: 31, 4: 25}
    assert [s.exact for s in report.strata] == [True, False, False, False]
    assert int(report.runner_up) == 25
    assert int(report.gap) == 9
    assert report.verdict == UNIQUE_MAX_LINEAR


def test_analysis_accepts_unsorted_degrees():
    assert analyze_spans(4, 1, (6, 5, 4, 3)).spec.degrees == EXAMPLE


def test_analysis_empty_locus():
    report = analyze_spans(4, 2, (3,))
    assert report.base_codim == INF
    assert report.runner_up == INF
    assert report.gap is None
    assert report.verdict == INCONCLUSIVE
    assert all(s.value.is_infinite for s in report.strata)


def test_stratum_exactness_flags():
    report = analyze_spans(3, 1, (2, 2, 2))
    for s in report.strata:
        assert s.exact == (s.b == report.spec.base_span or s.value.is_infinite)
        if not s.value.is_infinite:
            assert len(s.argmin_indices) == report.spec.a + report.spec.r - s.b
            assert all(x < y for x, y in zip(s.argmin_indices, s.argmin_indices[1:]))


def test_quadric_tuple_gap_is_r_minus_1():
    for r in range(2, 8):
        report = analyze_spans(r, 1, (2,) * r)
        assert report.verdict == UNIQUE_MAX_LINEAR
        assert int(report.gap) == r - 1


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_dp_matches_enumeration(data):
    k = data.draw(st.integers(1, 10))
    r = data.draw(st.integers(1, 6))
    a = data.draw(st.integers(max(0, k - r), k))
    degrees = tuple(data.draw(st.integers(1, 5)) for _ in range(k))
    assert f_lower(r, a, degrees) == brute_force_f(r, a, degrees)


def test_dp_matches_enumeration_bulk():
    rng = np.random.default_rng(6021023)
    checked = 0
    while checked < 1000:
        k = int(rng.integers(1, 11))
        r = int(rng.integers(1, 7))
        lo = max(0, k - r)
        a = int(rng.integers(lo, k + 1))
        degrees = tuple(int(x) for x in rng.integers(1, 6, size=k))
        assert f_lower(r, a, degrees) == brute_force_f(r, a, degrees)
        checked += 1


def test_base_stratum_matches_closed_form_sampled():
    rng = np.random.default_rng(415926)
    for _ in range(300):
        r = int(rng.integers(1, 7))
        k = int(rng.integers(1, 9))
        a = int(rng.integers(max(0, k - r), k + 1))
        degrees = tuple(sorted(int(x) for x in rng.integers(1, 6, size=k)))
        assert int(g_lower(r, a, r - k + a, degrees)) == span_stratum_exact(r, a, degrees)


def test_sorted_order_sharpens_the_bound():
    # the minimum depends on the order; nondecreasing order maximizes it
    rng = np.random.default_rng(28182)
    for _ in range(120):
        k = int(rng.integers(2, 7))
        r = int(rng.integers(max(1, k - 3), 7))
        a = int(rng.integers(max(1, k - r), k + 1))
        degrees = tuple(int(x) for x in rng.integers(1, 6, size=k))
        assert sorted_is_maximal(r, a, degrees)


def test_candidate_chains_of_running_example():
    assert [v for _, v in f_candidates(4, 1, EXAMPLE)] == [25, 51, 55, 35]
    assert [v for _, v in f_candidates(3, 2, EXAMPLE)] == [35, 44, 39, 61, 56, 55]
    assert [v for _, v in f_candidates(2, 3, EXAMPLE)] == [33, 34, 38, 46]


def test_nr_hypothesis():
    assert nr_hypothesis((3, 4, 5, 6))
    assert not nr_hypothesis((2, 2, 100))
    assert nr_hypothesis((2,) * 9)
    with pytest.raises(ParameterError):
        nr_hypothesis((3, 2))
    with pytest.raises(ParameterError):
        nr_hypothesis((1, 2))


def test_slope_gap_values():
    assert slope_gap(4, 4, 3) == 3
    assert slope_gap(4, 5, 3) == 8
    assert slope_gap(5, 5, 2) == 4
    with pytest.raises(ParameterError):
        slope_gap(4, 3, 3)


def test_cone_shape():
    # slope 1 cone for the smallest degree
    seqs = list(cone_sequences(2, 3))
    assert (2, 2, 2) in seqs and (2, 3, 4) in seqs
    assert max(s[2] for s in seqs) == 4
    assert all(s[0] == 2 and s[1] <= 3 for s in seqs)
    truncated = list(cone_sequences(2, 3, max_count=2))
    assert len(truncated) == 2


def test_kcl_examples():
    assert kcl_cone_min(4, 1, 2, 2, 4, 10_000) == ((2, 2, 2, 2), 3)
    assert kcl_cone_min(3, 1, 3, 2, 3, 10_000) == ((2, 2, 2), 2)
    with pytest.raises(BudgetError):
        kcl_cone_min(4, 1, 2, 4, 4, 3)
    with pytest.raises(ParameterError):
        kcl_cone_min(4, 2, 2, 2, 4, 10)


def test_kcl_constant_sequence_minimizes():
    ran = 0
    for r in range(2, 7):
        for d in range(2, 5):
            k = r  # base span is a line
            for b in (2, r):
                try:
                    seq, value = kcl_cone_min(r, 1, b, d, k, 60_000)
                except BudgetError:
                    continue  # cone too large for the enumeration budget
                assert seq == (d,) * k
                assert value == int(h_gap(r, 1, b, (d,) * k))
                ran += 1
    assert ran >= 12


def test_cone_verdict_end_to_end_sampled():
    for r in range(2, 7):
        for d1 in (2, 3):
            for ds in cone_sequences(d1, r, max_count=40):
                report = analyze_spans(r, 1, ds)
                assert report.verdict == UNIQUE_MAX_LINEAR
                assert int(report.gap) >= slope_gap(r, r, d1)


def test_worked_example_report():
    w = worked_example()
    assert w.degrees == EXAMPLE
    assert w.line_codim == 16
    assert w.codim == 16
    assert w.second_largest_lower_bound == 25
    assert w.verdict == UNIQUE_MAX_LINEAR
    by_b = {stage.b: stage for stage in w.stages}
    assert [v for _, v in by_b[4].candidates] == [25, 51, 55, 35]
    assert by_b[4].chain_min == 25 and by_b[4].bound == 25
    assert [v for _, v in by_b[3].candidates] == [35, 44, 39, 61, 56, 55]
    assert by_b[3].chain_min == 35 and by_b[3].bound == 31
    assert by_b[2].chain_min == 33 and by_b[2].bound == 27
    assert w.summary == {1: 16, 2: 27, 3: 31, 4: 25}


def test_grassmannian_dim():
    assert grassmannian_dim(1, 4) == 6
    assert grassmannian_dim(3, 4) == 4
    assert grassmannian_dim(4, 4) == 0
