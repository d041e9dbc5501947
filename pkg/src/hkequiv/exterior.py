"""Exterior algebras over the integers on named odd-degree generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Gen:
    """An odd-degree generator such as ``alpha_3`` or ``kappa_{2,4}``.

    A single index ``i`` has degree ``2i - 1``; a pair ``(i, j)`` (row,
    column) has degree ``2j - 1``.  Pairs sort by column, then row.
    """

    symbol: str
    index: tuple[int, ...]

    def __post_init__(self):
        if len(self.index) not in (1, 2):
            raise ValueError("generator index must be a singleton or a pair")
        if self.degree < 1:
            raise ValueError(f"generator {self} has nonpositive degree")

    @property
    def degree(self) -> int:
        return 2 * self.index[-1] - 1

    @property
    def sort_key(self):
        return (self.symbol, self.index[::-1])

    def __lt__(self, other: "Gen") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if len(self.index) == 1:
            return f"{self.symbol}_{self.index[0]}"
        return f"{self.symbol}_{{{self.index[0]},{self.index[1]}}}"


def alpha(i: int, primes: int = 0) -> Gen:
    return Gen("alpha" + "'" * primes, (i,))


def gamma(i: int, j: int) -> Gen:
    return Gen("gamma", (i, j))


def kappa(i: int, j: int) -> Gen:
    return Gen("kappa", (i, j))


def _sort_with_sign(gens: Iterable[Gen]):
    """Sort a word of generators; return ``(sign, word)`` or ``(0, None)``."""
    word = list(gens)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(word)):
        j = i
        while j > 0 and word[j] < word[j - 1]:
            word[j], word[j - 1] = word[j - 1], word[j]
            sign = -sign
            j -= 1
    for a, b in zip(word, word[1:]):
        if a == b:
            return 0, None
    return sign, tuple(word)


@dataclass(frozen=True)
class ExtElement:
    """Integer combination of sorted monomials in the generators."""

    terms: Mapping[tuple[Gen, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: c for k, c in dict(self.terms).items() if c != 0})

    @classmethod
    def monomial(cls, *gens: Gen, coeff: int = 1) -> "ExtElement":
        sign, word = _sort_with_sign(gens)
        if sign == 0:
            return cls()
        return cls({word: sign * coeff})

    @classmethod
    def one(cls) -> "ExtElement":
        return cls({(): 1})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "ExtElement") -> "ExtElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ExtElement(out)

    def __neg__(self) -> "ExtElement":
        return ExtElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "ExtElement":
        return ExtElement({k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(self, other)
        return wedge_product(self, other)

    def generators(self) -> set[Gen]:
        return {g for word in self.terms for g in word}

    def degrees(self) -> set[int]:
        return {sum(g.degree for g in word) for word in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), [g.sort_key for g in w])):
            c = self.terms[word]
            body = "*".join(str(g) for g in word) if word else "1"
            if word and abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}" if word else str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + text)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def scalar_mul(x: ExtElement, c: int) -> ExtElement:
    return ExtElement({k: c * v for k, v in x.terms.items()})


def wedge_product(a: ExtElement, b: ExtElement) -> ExtElement:
    out: dict[tuple[Gen, ...], int] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            sign, word = _sort_with_sign(wa + wb)
            if sign:
                out[word] = out.get(word, 0) + sign * ca * cb
    return ExtElement(out)


def gen(g: Gen) -> ExtElement:
    return ExtElement.monomial(g)


def basis(gens: Iterable[Gen]) -> list[tuple[Gen, ...]]:
    """All ``2**k`` sorted monomials on the given generators."""
    gs = sorted(set(gens))
    return [c for k in range(len(gs) + 1) for c in combinations(gs, k)]


class UndefinedGenerator(KeyError):
    pass


@dataclass(frozen=True)
class AlgebraMap:
    """Ring map of exterior algebras determined by generator images.

    With ``zero_default`` set, generators absent from ``images`` go to 0.
    """

    images: Mapping[Gen, ExtElement]
    zero_default: bool = False

    def __post_init__(self):
        for g, img in self.images.items():
            bad = img.degrees() - {g.degree}
            if bad:
                raise ValueError(f"image of {g} has degree(s) {sorted(bad)}, expected {g.degree}")

    def image(self, g: Gen) -> ExtElement:
        if g in self.images:
            return self.images[g]
        if self.zero_default:
            return ExtElement()
        raise UndefinedGenerator(str(g))

    def __call__(self, x: ExtElement) -> ExtElement:
        return extend_algebra_map(self, x)

    def compose(self, inner: "AlgebraMap") -> "AlgebraMap":
        """``self`` after ``inner``."""
        return AlgebraMap({g: self(img) for g, img in inner.images.items()}, inner.zero_default)


def extend_algebra_map(m: AlgebraMap, x: ExtElement) -> ExtElement:
    out = ExtElement()
    for word, c in x.terms.items():
        acc = ExtElement.one()
        for g in word:
            acc = wedge_product(acc, m.image(g))
            if not acc:
                break
        out = out + scalar_mul(acc, c)
    return out


def direct_sum_homology_map(n: int, mdim: int) -> AlgebraMap:
    """Homology map of block direct sum ``Gl(n) x Gl(m) -> Gl(n+m)``.

    The source tensor product is modelled as the exterior algebra on
    ``alpha_i`` and ``alpha'_j``; ``alpha_i (x) alpha'_j`` is their wedge,
    which lands on ``alpha''_i alpha''_j``.
    """
    if n < 1 or mdim < 1:
        raise ValueError("dimensions must be positive")
    images = {alpha(i): gen(alpha(i, 2)) for i in range(1, n + 1)}
    images.update({alpha(j, 1): gen(alpha(j, 2)) for j in range(1, mdim + 1)})
    return AlgebraMap(images)


def inverse_involution(n: int, primes: int = 0) -> AlgebraMap:
    """Map induced by ``a -> a^-1`` (equivalently ``a -> a'``): ``alpha_i -> -alpha_i``."""
    return AlgebraMap({alpha(i, primes): -gen(alpha(i, primes)) for i in range(1, n + 1)})
