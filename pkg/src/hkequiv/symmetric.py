"""Exact symmetric-function arithmetic.

Elementary symmetric functions, power sums, Newton conversion, truncated
power series and the quotient/remainder split used by the Stiefel and
Herzog-Kuhl computations.  Everything is integer or :class:`Fraction`
valued; there are no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

MAX_PRIME_BOUND = 10**6


def elementary_symmetric(v: Sequence[int], up_to: int) -> list[int]:
    """Return ``[e_0, ..., e_up_to]`` of the weights ``v``.

    These are the coefficients of ``prod(1 + v_i t)``; ``e_k`` is zero for
    ``k > len(v)``.
    """
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    e = [1] + [0] * up_to
    for x in v:
        # multiply by (1 + x t), highest degree first so e[k-1] is still old
        for k in range(up_to, 0, -1):
            e[k] += x * e[k - 1]
    return e


def power_sums(v: Sequence[int], up_to: int) -> list[int]:
    """Return ``[p_1, ..., p_up_to]`` with ``p_i = sum(x**i for x in v)``."""
    if up_to < 1:
        raise ValueError("up_to must be at least 1")
    return [sum(x**i for x in v) for i in range(1, up_to + 1)]


def newton_e_to_p(e: Sequence, up_to: int) -> list[Fraction]:
    """Power sums of the virtual root multiset with elementary functions ``e``.

    ``e[0]`` must be 1; entries past the end of ``e`` count as zero.
    """
    if not e or e[0] != 1:
        raise ValueError("e[0] must be 1")

    def ek(k):
        return Fraction(e[k]) if k < len(e) else Fraction(0)

    p: list[Fraction] = []
    for k in range(1, up_to + 1):
        acc = Fraction(0)
        for i in range(1, k):
            term = ek(i) * p[k - i - 1]
            acc += term if i % 2 == 1 else -term
        last = k * ek(k)
        acc += last if k % 2 == 1 else -last
        p.append(acc)
    return p


def newton_p_to_e(p: Sequence, up_to: int) -> list[Fraction]:
    """Inverse of :func:`newton_e_to_p`: ``[e_0..e_up_to]`` from ``[p_1..]``.

    Uses ``k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i``.
    """
    def pk(k):
        return Fraction(p[k - 1]) if k <= len(p) else Fraction(0)

    e = [Fraction(1)]
    for k in range(1, up_to + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            term = e[k - i] * pk(i)
            acc += term if i % 2 == 1 else -term
        e.append(acc / k)
    return e


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series in ``t`` known modulo ``t^(order+1)``."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_list(cls, coeffs: Iterable, order: int) -> "TruncatedSeries":
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def product_of_linear(cls, weights: Sequence[int], order: int) -> "TruncatedSeries":
        """``prod(1 + w t)`` truncated at ``order``."""
        return cls.from_list(elementary_symmetric(weights, order), order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise ValueError("series have different truncation orders")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return TruncatedSeries(tuple(out))

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coefficients[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for k in range(1, n + 1):
            acc = sum(self.coefficients[i] * inv[k - i] for i in range(1, k + 1))
            inv[k] = -acc / c0
        return TruncatedSeries(tuple(inv))

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()


@dataclass(frozen=True)
class SSeries:
    """Integers ``s_0 = 1, s_1, ..., s_r``; ``s_i`` is zero past ``r``."""

    s: tuple[int, ...]

    def __post_init__(self):
        if not self.s or self.s[0] != 1:
            raise ValueError("s_0 must be 1")

    @property
    def r(self) -> int:
        return len(self.s) - 1

    def __getitem__(self, k: int) -> int:
        return self.s[k] if 0 <= k < len(self.s) else 0


def series_quotient_remainder(w: Sequence[int], v: Sequence[int], r: int, order: int):
    """Divide ``prod(1 + w t)`` by ``prod(1 + v t)`` and split at degree ``r``.

    Returns ``(SSeries, remainder)`` where the s-series is the quotient
    truncated at degree ``r`` and ``remainder[k - r - 1]`` is
    ``C_k = e_k(w) - sum_j e_j(v) s_{k-j}`` for ``r < k <= order``.
    """
    if r < 0:
        raise ValueError("split degree must be nonnegative")
    if order < r:
        raise ValueError("truncation order must be at least the split degree")
    num = TruncatedSeries.product_of_linear(w, order)
    den = TruncatedSeries.product_of_linear(v, order)
    quotient = num / den
    s = []
    for c in quotient.coefficients[: r + 1]:
        # den has constant term 1 and integer coefficients, so this is exact
        assert c.denominator == 1
        s.append(int(c))
    head = TruncatedSeries.from_list(s, order)
    residual = num - den * head
    assert all(c == 0 for c in residual.coefficients[: r + 1])
    return SSeries(tuple(s)), list(residual.coefficients[r + 1:])


def _primes_upto(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, bound + 1, p)))
    return [p for p, flag in enumerate(sieve) if flag]


def _distinct_root_count(coeffs: Sequence[int], p: int) -> int:
    count = 0
    for a in range(p):
        acc = 0
        for c in coeffs:
            acc = (acc * a + c) % p
        if acc == 0:
            count += 1
    return count


def splits_mod(coeffs: Sequence[int], p: int) -> bool:
    """True iff the monic polynomial has ``deg`` distinct roots in ``Z/p``.

    ``coeffs`` lists the leading coefficient first.
    """
    return _distinct_root_count(coeffs, p) == len(coeffs) - 1


def find_splitting_primes(coeffs: Sequence[int], bound: int) -> list[int]:
    """Primes ``p <= bound`` over which ``f`` splits into distinct linear factors.

    ``coeffs`` is leading-coefficient first, constant term last, and must
    describe a monic polynomial of degree at least one.  Primes dividing the
    discriminant (where roots collide) are not reported.
    """
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) < 2:
        raise ValueError("polynomial must have degree at least 1")
    if coeffs[0] != 1:
        raise ValueError("polynomial must be monic (leading coefficient 1)")
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if bound > MAX_PRIME_BOUND:
        raise ValueError(f"bound must not exceed {MAX_PRIME_BOUND}")
    return [p for p in _primes_upto(bound) if splits_mod(coeffs, p)]
