"""Herzog-Kuhl type obstructions for graded free complexes.

Input is degree data only: for each term of the complex (injective end
first) the multiset of generator degrees.  Odd positions are the A side
(``F_1, F_3, ...``), even positions the B side.  A complex with finite
length homology gives an equivariant map ``C^m - 0 -> X``; the checks
below are the numerical shadows of that map's existence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .moduli import alternating_ranks
from .symmetric import elementary_symmetric, newton_e_to_p, power_sums, series_quotient_remainder
from .transgression import obstruction_survival, stiefel_first_differential


class InfeasibleRanks(ValueError):
    """The dimensions admit no exact sequence off the origin."""


class Orientation(enum.Enum):
    FORWARD = "forward"
    REVERSED = "reversed"


@dataclass(frozen=True)
class ComplexDegreeData:
    variables: int
    terms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if isinstance(self.variables, bool) or not isinstance(self.variables, int) or self.variables < 1:
            raise ValueError("variables must be a positive integer")
        terms = []
        for t in self.terms:
            t = tuple(t)
            if any(isinstance(d, bool) or not isinstance(d, int) for d in t):
                raise ValueError(f"degrees must be integers, got {list(t)}")
            terms.append(t)
        if len(terms) < 2:
            raise ValueError("a complex needs at least two terms")
        object.__setattr__(self, "terms", tuple(terms))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self.terms)

    def pairs(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """(A, B) pairs; an odd-length complex gets an empty final B."""
        terms = list(self.terms)
        if len(terms) % 2:
            terms.append(())
        return [(terms[i], terms[i + 1]) for i in range(0, len(terms), 2)]

    def a_side(self) -> tuple[int, ...]:
        return tuple(d for a, _ in self.pairs() for d in a)

    def b_side(self) -> tuple[int, ...]:
        return tuple(d for _, b in self.pairs() for d in b)

    def shifted(self, k: int) -> "ComplexDegreeData":
        return ComplexDegreeData(self.variables, tuple(tuple(d + k for d in t) for t in self.terms))

    def with_variables(self, m: int) -> "ComplexDegreeData":
        return ComplexDegreeData(m, self.terms)


def reverse_data(data: ComplexDegreeData) -> ComplexDegreeData:
    """The dual complex: same degree multisets, terms in reverse order."""
    return ComplexDegreeData(data.variables, tuple(reversed(data.terms)))


def oriented(data: ComplexDegreeData, orientation: Orientation) -> ComplexDegreeData:
    return data if orientation is Orientation.FORWARD else reverse_data(data)


def derive_complex_ranks(data: ComplexDegreeData) -> list[int]:
    """``r_q = sum_{i <= q} (b_i - a_i)`` for every prefix of pairs."""
    dims = [len(t) for pair in data.pairs() for t in pair]
    t = alternating_ranks(dims)
    for i, x in enumerate(t):
        if x < 0:
            raise InfeasibleRanks(f"alternating sum t_{i} = {x} is negative for dims {list(data.dims)}")
    if t[-1] != 0:
        raise InfeasibleRanks(f"final alternating sum t_{len(t) - 1} = {t[-1]} is nonzero for dims {list(data.dims)}")
    return [t[2 * q] for q in range(1, len(dims) // 2 + 1)]


def prefix_weights(data: ComplexDegreeData, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pairs = data.pairs()
    if not 1 <= q <= len(pairs):
        raise ValueError(f"q must lie in 1..{len(pairs)}")
    v = tuple(d for a, _ in pairs[:q] for d in a)
    w = tuple(d for _, b in pairs[:q] for d in b)
    return v, w


@dataclass(frozen=True)
class PrefixCheck:
    q: int
    orientation: Orientation
    r: int
    u: tuple[int, ...]
    checked: tuple[int, int]
    violations: tuple[tuple[int, int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def check_prefix(data: ComplexDegreeData, q: int, orientation: Orientation = Orientation.FORWARD) -> PrefixCheck:
    """Check ``e_i(w_q) = sum_j e_j(v_q) u_{i-j}`` for ``r_q < i < m``.

    ``u`` is the quotient ``prod(1 + w t) / prod(1 + v t)`` cut off at
    degree ``r_q``.  A violation is reported as ``(i, lhs, rhs)``.
    """
    data = oriented(data, orientation)
    v, w = prefix_weights(data, q)
    r = derive_complex_ranks(data)[q - 1]
    m = data.variables
    top = max(r, m - 1)
    s, remainder = series_quotient_remainder(w, v, r, top)
    ew = elementary_symmetric(w, top)
    violations = []
    for i in range(r + 1, m):
        c = remainder[i - r - 1]
        if c != 0:
            violations.append((i, ew[i], int(ew[i] - c)))
    return PrefixCheck(q, orientation, r, s.s, (r + 1, m - 1), tuple(violations))


def power_sum_crosscheck(data: ComplexDegreeData, q: int, orientation: Orientation = Orientation.FORWARD) -> bool:
    """Same condition via power sums of the ``r_q`` virtual roots.

    The virtual roots have elementary functions ``u``; the condition is
    ``p_i(w_q) = p_i(v_q) + p_i(virtual)`` for ``r_q < i < m``.
    """
    data = oriented(data, orientation)
    v, w = prefix_weights(data, q)
    r = derive_complex_ranks(data)[q - 1]
    m = data.variables
    if r + 1 > m - 1:
        return True
    s, _ = series_quotient_remainder(w, v, r, r)
    pw, pv = power_sums(w, m - 1), power_sums(v, m - 1)
    virtual = newton_e_to_p(list(s.s), m - 1)
    return all(pw[i - 1] == pv[i - 1] + virtual[i - 1] for i in range(r + 1, m))


@dataclass(frozen=True)
class ClassicalCheck:
    i: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def check_classical(data: ComplexDegreeData) -> list[ClassicalCheck]:
    """``sum of B-side degrees^i == sum of A-side degrees^i`` for ``0 <= i < m``."""
    a, b = data.a_side(), data.b_side()
    out = [ClassicalCheck(0, len(b), len(a))]
    if data.variables > 1:
        pb, pa = power_sums(b, data.variables - 1), power_sums(a, data.variables - 1)
        out += [ClassicalCheck(i, pb[i - 1], pa[i - 1]) for i in range(1, data.variables)]
    return out


@dataclass(frozen=True)
class PrefixEntry:
    check: PrefixCheck
    crosscheck_ok: bool
    first_differential: tuple[int, int] | None
    survives: bool


@dataclass(frozen=True)
class ObstructionReport:
    data: ComplexDegreeData
    classical: tuple[ClassicalCheck, ...] = ()
    prefixes: tuple[PrefixEntry, ...] = ()
    ranks: tuple[int, ...] = ()
    reason: str | None = None
    infeasible: bool = False
    failures: tuple[str, ...] = field(default=())

    @property
    def verdict(self) -> bool:
        return not self.infeasible and not self.failures


def stiefel_route(data: ComplexDegreeData, q: int, orientation: Orientation = Orientation.FORWARD):
    """First transgression of the Stiefel manifold ``W(|w_q|, |v_q|)`` the prefix maps to."""
    data = oriented(data, orientation)
    v, w = prefix_weights(data, q)
    first = stiefel_first_differential(len(w), len(v), w, v)
    return first, obstruction_survival(data.variables, first)


def full_report(data: ComplexDegreeData,
                orientations: Sequence[Orientation] = (Orientation.FORWARD, Orientation.REVERSED)) -> ObstructionReport:
    """Classical checks plus every prefix check in each requested orientation."""
    try:
        ranks = derive_complex_ranks(data)
    except InfeasibleRanks as exc:
        return ObstructionReport(data, reason=str(exc), infeasible=True, failures=("infeasible ranks",))

    failures = []
    classical = check_classical(data)
    failures += [f"classical i={c.i}: {c.lhs} != {c.rhs}" for c in classical if not c.ok]

    entries = []
    for orientation in orientations:
        for q in range(1, len(data.pairs()) + 1):
            pc = check_prefix(data, q, orientation)
            cross = power_sum_crosscheck(data, q, orientation)
            first, survives = stiefel_route(data, q, orientation)
            entries.append(PrefixEntry(pc, cross, first, survives))
            for i, lhs, rhs in pc.violations:
                failures.append(f"prefix q={q} ({orientation.value}) i={i}: {lhs} != {rhs}")
            # independent routes must agree; a disagreement is a bug, not an obstruction
            if cross != pc.ok or survives != pc.ok:
                raise AssertionError(f"checker routes disagree at q={q} ({orientation.value})")
    return ObstructionReport(data, tuple(classical), tuple(entries), tuple(ranks), failures=tuple(failures))
