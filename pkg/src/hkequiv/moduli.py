"""Spaces of long exact sequences of graded vector spaces.

A space ``X`` is described by the weight vectors of its terms.  Its
cohomology is the exterior algebra on the generators ``kappa_{i,j}``
(with ``t_{i-1} < j <= c_i``), each a sum of ``gamma_{k,j}`` along the
run of rows where column ``j`` is not yet absorbed by the exactness rank.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .exterior import AlgebraMap, ExtElement, alpha, gamma, gen, kappa


class InvalidShape(ValueError):
    """No exact sequence exists with the given dimensions."""


def alternating_ranks(dims: Sequence[int]) -> list[int]:
    """``[t_0, ..., t_L]`` with ``t_0 = 0`` and ``t_i = c_i - t_{i-1}``."""
    t = [0]
    for c in dims:
        t.append(c - t[-1])
    return t


@dataclass(frozen=True)
class ExactShape:
    """Term weights of an exact sequence, injective end first.

    Stored in canonical form: trailing empty terms are dropped (keeping at
    least two terms) and an odd length is padded with one empty term.
    Terms and the ranks ``t`` are 1-indexed in the accessors, matching
    ``c_i``/``t_i``.
    """

    term_weights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        terms = tuple(tuple(int(x) for x in w) for w in self.term_weights)
        if len(terms) < 2:
            raise InvalidShape("an exact sequence needs at least two terms")
        while len(terms) > 2 and not terms[-1]:
            terms = terms[:-1]
        if len(terms) % 2:
            terms += ((),)
        object.__setattr__(self, "term_weights", terms)
        t = alternating_ranks(self.dims)
        bad = [i for i, x in enumerate(t) if x < 0]
        if bad:
            raise InvalidShape(f"rank t_{bad[0]} = {t[bad[0]]} is negative for dims {self.dims}")
        if t[-1] != 0:
            raise InvalidShape(f"final rank t_{len(t) - 1} = {t[-1]} is nonzero for dims {self.dims}")

    @property
    def length(self) -> int:
        return len(self.term_weights)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.term_weights)

    @property
    def ranks(self) -> tuple[int, ...]:
        """``(t_0, t_1, ..., t_L)``."""
        return tuple(alternating_ranks(self.dims))

    def c(self, i: int) -> int:
        return self.dims[i - 1] if 1 <= i <= self.length else 0

    def t(self, i: int) -> int:
        return self.ranks[i] if 0 <= i <= self.length else 0

    def weights(self, i: int) -> tuple[int, ...]:
        return self.term_weights[i - 1]


def derive_ranks(term_weights) -> ExactShape:
    return ExactShape(tuple(tuple(w) for w in term_weights))


def shape_from_dims(dims: Sequence[int]) -> ExactShape:
    """Shape with all weights zero; handy when only dimensions matter."""
    return ExactShape(tuple((0,) * c for c in dims))


@dataclass(frozen=True, order=True)
class KappaGenerator:
    """``kappa_{i,j}`` with support rows ``i..end``."""

    i: int
    j: int
    end: int

    @property
    def support(self) -> tuple[int, int]:
        return (self.i, self.end)

    @property
    def degree(self) -> int:
        return 2 * self.j - 1

    @property
    def label(self):
        return kappa(self.i, self.j)


def kappa_generators(shape: ExactShape) -> list[KappaGenerator]:
    """The generating set ``N(X)``, ordered by row then column."""
    out = []
    L = shape.length
    for i in range(1, L + 1):
        for j in range(shape.t(i - 1) + 1, shape.c(i) + 1):
            end = next(l for l in range(i, L + 1) if shape.t(l) < j)
            out.append(KappaGenerator(i, j, end))
    return out


def generator_index(shape: ExactShape) -> dict[tuple[int, int], KappaGenerator]:
    return {(k.i, k.j): k for k in kappa_generators(shape)}


class SignConvention(enum.Enum):
    ALL_POSITIVE = "all-positive"
    EQUATION_NU = "alternating"


def expand_kappa(k: KappaGenerator, convention: SignConvention = SignConvention.ALL_POSITIVE) -> ExtElement:
    """``kappa_{i,j}`` as a combination of the ``gamma_{r,j}`` in its support."""
    out = ExtElement()
    for r in range(k.i, k.end + 1):
        sign = 1 if convention is SignConvention.ALL_POSITIVE else (-1) ** (r - 1)
        out = out + sign * gen(gamma(r, k.j))
    return out


def cohomology_rank(shape: ExactShape) -> int:
    """Rank of ``H^*(X)`` as a free module: ``2**|N|``."""
    return 2 ** len(kappa_generators(shape))


def poincare_polynomial(shape: ExactShape) -> list[int]:
    """Coefficient list of ``prod(1 + s^(2j-1))`` over ``N(X)``."""
    poly = [1]
    for k in kappa_generators(shape):
        d = k.degree
        poly = poly + [0] * d
        for e in range(len(poly) - 1, d - 1, -1):
            poly[e] += poly[e - d]
    return poly


def fold_once(shape: ExactShape) -> tuple[ExactShape, AlgebraMap]:
    """Dualize the first term into the third; returns ``(X', psi*)``.

    ``X'`` has terms ``B_1, A_1 + A_2, B_2, ...`` and ``psi*`` maps
    ``Lambda(N(X'))`` to ``Lambda(N(X))``.  A two-term shape is folded
    against an empty third term.
    """
    tw = shape.term_weights
    if len(tw) < 3:
        tw = tw + ((),)
    folded = ExactShape((tw[1], tw[0] + tw[2]) + tw[3:])
    old = generator_index(shape)

    def k(i, j):
        return gen(kappa(i, j)) if (i, j) in old else ExtElement()

    images = {}
    for g in kappa_generators(folded):
        if g.i == 1:
            img = k(1, g.j) + k(2, g.j) + k(3, g.j)
        else:
            img = k(g.i + 1, g.j)
        images[g.label] = img
    return folded, AlgebraMap(images, zero_default=True)


def prefix_merge(shape: ExactShape, q: int) -> ExactShape:
    """Collapse the first ``q`` (A, B) pairs into a single pair."""
    n = shape.length // 2
    if not 1 <= q <= n:
        raise ValueError(f"q must lie in 1..{n}")
    tw = shape.term_weights
    a_block = tuple(x for i in range(0, 2 * q, 2) for x in tw[i])
    b_block = tuple(x for i in range(1, 2 * q, 2) for x in tw[i])
    return ExactShape((a_block, b_block) + tw[2 * q:])


class StiefelComparison(NamedTuple):
    n: int
    m: int
    u_weights: tuple[int, ...]
    v_weights: tuple[int, ...]
    induced: AlgebraMap


def stiefel_comparison(shape: ExactShape) -> StiefelComparison:
    """Projection ``X -> W(b_1, a_1)`` keeping only the first differential.

    On cohomology ``alpha_j -> kappa_{2,j}`` for ``b_1 - a_1 < j <= b_1``,
    with zero where ``kappa_{2,j}`` is not a generator.
    """
    n, m = shape.c(2), shape.c(1)
    old = generator_index(shape)
    images = {}
    for j in range(n - m + 1, n + 1):
        images[alpha(j)] = gen(kappa(2, j)) if (2, j) in old else ExtElement()
    return StiefelComparison(n, m, shape.weights(2), shape.weights(1), AlgebraMap(images))


def stiefel_generators(n: int, m: int) -> list:
    """``alpha_{n-m+1}, ..., alpha_n``: the exterior generators of ``W(n, m)``."""
    return [alpha(i) for i in range(n - m + 1, n + 1)]


def stiefel_restriction(n: int, m: int, m_prime: int) -> AlgebraMap:
    """Inclusion ``H^*(W(n,m)) -> H^*(W(n,m+m'))`` induced by projection."""
    if m < 0 or m_prime < 0 or m + m_prime > n:
        raise ValueError("need 0 <= m, m' and m + m' <= n")
    return AlgebraMap({g: gen(g) for g in stiefel_generators(n, m)})
