import pytest
from hypothesis import given, strategies as st

from hkequiv.exterior import ExtElement, alpha, gamma, gen, kappa
from hkequiv.moduli import (
    ExactShape,
    InvalidShape,
    KappaGenerator,
    SignConvention,
    cohomology_rank,
    derive_ranks,
    expand_kappa,
    fold_once,
    kappa_generators,
    poincare_polynomial,
    prefix_merge,
    shape_from_dims,
    stiefel_comparison,
    stiefel_restriction,
)

PAPER_DIMS = (1, 4, 5, 4, 3, 1)
KOSZUL3 = ((3,), (2, 2, 2), (1, 1, 1), (0,))


@st.composite
def exact_shapes(draw, max_len=8, max_rank=4):
    L = draw(st.integers(2, max_len))
    inner = draw(st.lists(st.integers(0, max_rank), min_size=L - 1, max_size=L - 1))
    t = [0] + inner + [0]
    dims = [t[i - 1] + t[i] for i in range(1, L + 1)]
    terms = [tuple(draw(st.lists(st.integers(-5, 9), min_size=c, max_size=c))) for c in dims]
    return ExactShape(tuple(terms))


def test_derive_ranks_examples():
    assert shape_from_dims(PAPER_DIMS).ranks[1:] == (1, 3, 2, 2, 1, 0)
    assert derive_ranks(KOSZUL3).ranks[1:] == (1, 2, 1, 0)
    with pytest.raises(InvalidShape):
        shape_from_dims((2, 1))
    with pytest.raises(InvalidShape):
        shape_from_dims((1, 2))
    with pytest.raises(InvalidShape):
        shape_from_dims((1,))


def test_odd_length_is_padded():
    s = derive_ranks([(1,), (2, 3), (4,)])
    assert s.length == 4
    assert s.dims == (1, 2, 1, 0)


def test_worked_kappa_generators():
    gens = kappa_generators(shape_from_dims(PAPER_DIMS))
    supports = {(k.i, k.j): k.support for k in gens}
    assert supports == {
        (1, 1): (1, 6),
        (2, 2): (2, 5),
        (2, 3): (2, 3),
        (2, 4): (2, 2),
        (3, 4): (3, 3),
        (3, 5): (3, 3),
        (4, 3): (4, 4),
        (4, 4): (4, 4),
        (5, 3): (5, 5),
    }


def test_small_kappa_examples():
    assert kappa_generators(shape_from_dims((1, 1))) == [KappaGenerator(1, 1, 2)]
    gens = kappa_generators(shape_from_dims((1, 3, 3, 1)))
    assert {(k.i, k.j): k.support for k in gens} == {
        (1, 1): (1, 4),
        (2, 2): (2, 3),
        (2, 3): (2, 2),
        (3, 3): (3, 3),
    }


def test_expand_kappa_examples():
    gens = {(k.i, k.j): k for k in kappa_generators(shape_from_dims(PAPER_DIMS))}
    expected = sum((gen(gamma(r, 2)) for r in range(2, 6)), ExtElement())
    assert expand_kappa(gens[2, 2]) == expected
    assert expand_kappa(gens[4, 3]) == gen(gamma(4, 3))
    # the alternating convention carries (-1)^(k-1), so even rows flip sign
    assert expand_kappa(gens[4, 3], SignConvention.EQUATION_NU) == -gen(gamma(4, 3))
    assert expand_kappa(gens[5, 3], SignConvention.EQUATION_NU) == gen(gamma(5, 3))
    k11 = kappa_generators(shape_from_dims((1, 1)))[0]
    assert expand_kappa(k11, SignConvention.EQUATION_NU) == gen(gamma(1, 1)) - gen(gamma(2, 1))
    assert expand_kappa(gens[1, 1]) == sum((gen(gamma(r, 1)) for r in range(1, 7)), ExtElement())


def test_cohomology_counts():
    s = shape_from_dims(PAPER_DIMS)
    assert cohomology_rank(s) == 2**9
    assert sum(poincare_polynomial(s)) == 2**9
    # Gl(1) x ... : X(1;1) is C^*, cohomology Lambda(kappa_{1,1})
    assert poincare_polynomial(shape_from_dims((1, 1))) == [1, 1]


def test_fold_once_rule():
    shape = derive_ranks(KOSZUL3)
    folded, psi = fold_once(shape)
    assert folded.term_weights == ((2, 2, 2), (3, 1, 1, 1), (0,), ())
    assert shape_from_dims((1, 1, 0, 0)).dims == (1, 1)
    # kappa'_{1,j} -> kappa_{1,j} + kappa_{2,j} + kappa_{3,j}
    for k in kappa_generators(folded):
        img = psi(gen(k.label))
        old = {(g.i, g.j) for g in kappa_generators(shape)}
        if k.i == 1:
            want = sum((gen(kappa(r, k.j)) for r in (1, 2, 3) if (r, k.j) in old), ExtElement())
        else:
            want = gen(kappa(k.i + 1, k.j)) if (k.i + 1, k.j) in old else ExtElement()
        assert img == want


def test_fold_first_row_images():
    # c = (1, 2, 2, 1): t = (1, 1, 1, 0); N = {k11, k22, k32}
    shape = shape_from_dims((1, 2, 2, 1))
    folded, psi = fold_once(shape)
    assert folded.dims == (2, 3, 1, 0)
    assert psi(gen(kappa(1, 1))) == gen(kappa(1, 1))
    assert psi(gen(kappa(1, 2))) == gen(kappa(2, 2)) + gen(kappa(3, 2))
    # kappa'_{2,3} -> kappa_{3,3}, which is not a generator
    assert psi(gen(kappa(2, 3))) == 0


@given(exact_shapes())
def test_fold_first_row_uses_exactly_one_of_rows_one_two(shape):
    folded, psi = fold_once(shape)
    old = {(k.i, k.j) for k in kappa_generators(shape)}
    for k in kappa_generators(folded):
        if k.i != 1:
            continue
        img = psi(gen(k.label))
        words = {w[0] for w in img.terms}
        assert len(words & {kappa(1, k.j), kappa(2, k.j)}) == 1
        assert (kappa(3, k.j) in words) == ((3, k.j) in old)


def test_fold_two_terms_swaps():
    shape = derive_ranks([(1, 2), (3, 4)])
    folded, psi = fold_once(shape)
    assert folded.term_weights == ((3, 4), (1, 2))
    assert psi(gen(kappa(1, 2))) == gen(kappa(1, 2))


def test_prefix_merge_examples():
    shape = derive_ranks(KOSZUL3)
    assert prefix_merge(shape, 1) == shape
    merged = prefix_merge(shape, 2)
    assert merged.term_weights == ((3, 1, 1, 1), (2, 2, 2, 0))
    assert merged.ranks == (0, 4, 0)
    with pytest.raises(ValueError):
        prefix_merge(shape, 3)


def test_stiefel_comparison_examples():
    sc = stiefel_comparison(derive_ranks(KOSZUL3))
    assert (sc.n, sc.m) == (3, 1)
    assert sc.u_weights == (2, 2, 2) and sc.v_weights == (3,)
    assert sc.induced(gen(alpha(3))) == gen(kappa(2, 3))

    sc = stiefel_comparison(shape_from_dims((1, 1)))
    assert sc.induced(gen(alpha(1))) == 0

    sc = stiefel_comparison(shape_from_dims(PAPER_DIMS))
    assert (sc.n, sc.m) == (4, 1)
    assert set(sc.induced.images) == {alpha(4)}
    assert sc.induced(gen(alpha(4))) == gen(kappa(2, 4))


def test_stiefel_restriction_examples():
    m = stiefel_restriction(5, 2, 1)
    assert set(m.images) == {alpha(4), alpha(5)}
    assert m(ExtElement.monomial(alpha(4), alpha(5))) == ExtElement.monomial(alpha(4), alpha(5))
    assert set(stiefel_restriction(4, 2, 0).images) == {alpha(3), alpha(4)}
    m = stiefel_restriction(3, 1, 2)
    assert m(gen(alpha(3))) == gen(alpha(3))
    with pytest.raises(ValueError):
        stiefel_restriction(3, 2, 2)


@given(exact_shapes())
def test_generator_count(shape):
    gens = kappa_generators(shape)
    assert len(gens) == sum(shape.ranks)
    assert cohomology_rank(shape) == 2 ** len(gens)


@given(exact_shapes())
def test_kappa_invariants(shape):
    gens = kappa_generators(shape)
    present = {(k.i, k.j) for k in gens}
    for (i, j) in present:
        assert (i == 1 and (2, j) in present) is False
    by_col = {}
    for k in gens:
        assert shape.t(k.i - 1) < k.j <= shape.c(k.i)
        assert shape.t(k.end) < k.j
        assert all(shape.t(r) >= k.j for r in range(k.i, k.end))
        by_col.setdefault(k.j, []).append(range(k.i, k.end + 1))
    for runs in by_col.values():
        rows = [r for run in runs for r in run]
        assert len(rows) == len(set(rows))


@given(exact_shapes(), st.data())
def test_folding_agrees_with_prefix_merge(shape, data):
    q = data.draw(st.integers(1, shape.length // 2))
    folded = shape
    for _ in range(2 * q - 2):
        folded, psi = fold_once(folded)
    assert folded == prefix_merge(shape, q)


@given(exact_shapes())
def test_fold_map_multiplicative(shape):
    folded, psi = fold_once(shape)
    gens = [k.label for k in kappa_generators(folded)]
    for a in gens:
        for b in gens:
            prod = ExtElement.monomial(a, b)
            assert psi(prod) == psi(gen(a)) * psi(gen(b))


@given(exact_shapes())
def test_stiefel_degrees(shape):
    sc = stiefel_comparison(shape)
    for g, img in sc.induced.images.items():
        assert img.degrees() <= {g.degree}
