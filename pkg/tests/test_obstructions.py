import pytest
from hypothesis import assume, given, strategies as st

from hkequiv.obstructions import (
    ComplexDegreeData,
    InfeasibleRanks,
    Orientation,
    check_classical,
    check_prefix,
    derive_complex_ranks,
    full_report,
    power_sum_crosscheck,
    reverse_data,
    stiefel_route,
)

KOSZUL3 = [[3], [2, 2, 2], [1, 1, 1], [0]]


def data(m, terms):
    return ComplexDegreeData(m, tuple(tuple(t) for t in terms))


@st.composite
def feasible_data(draw, max_terms=6, max_dim=5, max_degree=9):
    L = draw(st.integers(2, max_terms))
    t = [0] + draw(st.lists(st.integers(0, 3), min_size=L - 1, max_size=L - 1)) + [0]
    dims = [t[i - 1] + t[i] for i in range(1, L + 1)]
    assume(all(1 <= c <= max_dim for c in dims))
    terms = [draw(st.lists(st.integers(0, max_degree), min_size=c, max_size=c)) for c in dims]
    return data(draw(st.integers(1, 8)), terms)


def test_derive_ranks_examples():
    assert derive_complex_ranks(data(3, KOSZUL3)) == [2, 0]
    assert derive_complex_ranks(data(1, [[0], [0]])) == [0]
    with pytest.raises(InfeasibleRanks):
        derive_complex_ranks(data(2, [[1, 1], [0]]))
    with pytest.raises(InfeasibleRanks):
        derive_complex_ranks(data(2, [[1], [0, 0]]))


def test_degree_data_validation():
    with pytest.raises(ValueError):
        ComplexDegreeData(0, ((1,), (1,)))
    with pytest.raises(ValueError):
        ComplexDegreeData(2, ((1,),))
    with pytest.raises(ValueError):
        ComplexDegreeData(2, ((1.5,), (1,)))


def test_check_prefix_examples():
    pc = check_prefix(data(3, KOSZUL3), 1)
    assert pc.r == 2 and pc.ok and pc.checked == (3, 2)

    # prefix v = (1), w = (1, 2), completed to an exact sequence
    pc = check_prefix(data(3, [[1], [1, 2], [0]]), 1)
    assert pc.r == 1 and pc.u == (1, 2) and pc.ok

    pc = check_prefix(data(3, [[0], [1, 2], [5]]), 1)
    assert pc.violations == ((2, 2, 0),)


def test_check_prefix_bad_q():
    with pytest.raises(ValueError):
        check_prefix(data(3, KOSZUL3), 3)


def test_classical_examples():
    checks = check_classical(data(3, KOSZUL3))
    assert [(c.i, c.lhs, c.rhs, c.ok) for c in checks] == [
        (0, 4, 4, True), (1, 6, 6, True), (2, 12, 12, True)]
    for m in (1, 2, 6):
        assert all(c.ok for c in check_classical(data(m, [[0], [0]])))
    checks = check_classical(data(2, [[1], [0]]))
    assert [(c.i, c.lhs, c.rhs, c.ok) for c in checks] == [(0, 1, 1, True), (1, 0, 1, False)]
    assert [c.i for c in check_classical(data(1, KOSZUL3))] == [0]


def test_crosscheck_examples():
    assert power_sum_crosscheck(data(3, KOSZUL3), 1)
    assert power_sum_crosscheck(data(3, KOSZUL3), 2, Orientation.REVERSED)
    assert not power_sum_crosscheck(data(3, [[0], [1, 2], [5]]), 1)


def test_reverse_examples():
    d = data(3, KOSZUL3)
    assert reverse_data(d).terms == ((0,), (1, 1, 1), (2, 2, 2), (3,))
    pal = data(2, [[1], [0, 2], [1]])
    assert reverse_data(pal) == pal


@given(feasible_data())
def test_reverse_is_involutive(d):
    assert reverse_data(reverse_data(d)) == d


def test_full_report_examples():
    assert full_report(data(3, KOSZUL3)).verdict

    bad = full_report(data(3, [[3], [2, 2, 2], [1, 1, 2], [0]]))
    assert not bad.verdict
    c1 = bad.classical[1]
    assert (c1.i, c1.lhs, c1.rhs, c1.ok) == (1, 6, 7, False)

    k2 = full_report(data(4, [[2], [1, 1], [0]]))
    assert not k2.verdict
    c2 = k2.classical[2]
    assert (c2.lhs, c2.rhs) == (2, 4)

    inf = full_report(data(2, [[1, 1], [0]]))
    assert inf.infeasible and not inf.verdict and "negative" in inf.reason


def test_range_is_m_minus_one():
    d = data(3, KOSZUL3)
    assert full_report(d).verdict
    wide = full_report(d.with_variables(5))
    assert not wide.verdict
    c3 = wide.classical[3]
    assert (c3.lhs, c3.rhs) == (24, 30)


@given(feasible_data(), st.data())
def test_routes_agree(d, draw):
    q = draw.draw(st.integers(1, len(d.pairs())))
    for orientation in Orientation:
        pc = check_prefix(d, q, orientation)
        assert power_sum_crosscheck(d, q, orientation) == pc.ok
        first, survives = stiefel_route(d, q, orientation)
        assert survives == pc.ok
        assert (first is not None and first[0] < d.variables) == (not pc.ok)


@given(feasible_data(), st.integers(1, 4))
def test_classical_scaling(d, lam):
    scaled = ComplexDegreeData(d.variables, tuple(tuple(lam * x for x in t) for t in d.terms))
    assert [c.ok for c in check_classical(scaled)] == [c.ok for c in check_classical(d)]


@given(feasible_data(), st.integers(-5, 5))
def test_shift_keeps_low_classical_checks(d, k):
    shifted = d.shifted(k)
    derive_complex_ranks(shifted)
    low = lambda dd: all(c.ok for c in check_classical(dd.with_variables(2)))
    if len(d.a_side()) == len(d.b_side()):
        assert low(shifted) == low(d)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("shift", [0, 1, 5, -2])
def test_shifted_koszul_passes(m, shift):
    from math import comb
    terms = [[m - k] * comb(m, m - k) for k in range(m + 1)]
    assert full_report(data(m, terms).shifted(shift)).verdict
