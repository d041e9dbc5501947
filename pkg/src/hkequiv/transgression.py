"""Transgressions ``d_2k(alpha_k) = C theta^k`` in equivariant Serre spectral sequences.

Three circle actions are covered: ``Gl(n)`` acted on from the left,
``Gl(n)`` acted on from both sides, and the Stiefel manifold ``W(n, m)``
of surjections ``C^n -> C^m``.  Each differential is only determined
modulo the earlier coefficients; that indeterminacy is kept as a list and
never quotiented out.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .symmetric import elementary_symmetric


class Status(enum.Enum):
    EXACT = "exact"
    FIRST_NONZERO = "first-nonzero"
    CONJECTURAL = "conjectural"


class SpaceKind(enum.Enum):
    GL_LEFT = "gl-left"
    GL_LEFT_RIGHT = "gl-leftright"
    STIEFEL = "stiefel"


@dataclass(frozen=True)
class DifferentialRecord:
    k: int
    coefficient: int
    modulo: tuple[int, ...] = ()
    status: Status = Status.EXACT

    @property
    def page(self) -> int:
        return 2 * self.k

    @property
    def theta_power(self) -> int:
        return self.k

    def vanishes(self) -> bool:
        return self.coefficient == 0 and not any(self.modulo)

    def __str__(self) -> str:
        s = f"d_{self.page}(alpha_{self.k}) = {self.coefficient} theta^{self.k}"
        if self.modulo:
            s += " mod (" + ", ".join(str(c) for c in self.modulo) + ")"
        if self.status is not Status.EXACT:
            s += f"  [{self.status.value}]"
        return s


@dataclass(frozen=True)
class TransgressionTable:
    kind: SpaceKind
    u: tuple[int, ...]
    v: tuple[int, ...]
    records: tuple[DifferentialRecord, ...] = field(default=())

    def first_nonzero(self) -> DifferentialRecord | None:
        return next((r for r in self.records if r.coefficient != 0), None)


def _table(kind, u, v, coefficients, start):
    records = []
    for offset, c in enumerate(coefficients):
        records.append(DifferentialRecord(start + offset, c, tuple(coefficients[:offset])))
    return TransgressionTable(kind, tuple(u), tuple(v), tuple(records))


def gl_left_differentials(n: int, w: Sequence[int]) -> TransgressionTable:
    """``d_2k(alpha_k) = e_k(w) theta^k`` modulo ``e_1(w), ..., e_{k-1}(w)``."""
    if len(w) != n:
        raise ValueError(f"expected {n} weights, got {len(w)}")
    e = elementary_symmetric(w, n)
    return _table(SpaceKind.GL_LEFT, w, (), e[1:], 1)


def gl_leftright_differentials(n: int, u: Sequence[int], v: Sequence[int]) -> TransgressionTable:
    """``d_2k(alpha_k) = (e_k(u) - e_k(v)) theta^k`` modulo the earlier differences."""
    if len(u) != n or len(v) != n:
        raise ValueError(f"both weight vectors must have length {n}")
    eu, ev = elementary_symmetric(u, n), elementary_symmetric(v, n)
    return _table(SpaceKind.GL_LEFT_RIGHT, u, v, [a - b for a, b in zip(eu[1:], ev[1:])], 1)


def _stiefel_check(n, m, u, v):
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    if len(u) != n or len(v) != m:
        raise ValueError(f"weights have lengths {len(u)}, {len(v)}; expected {n}, {m}")


def stiefel_coefficients(n: int, m: int, u: Sequence[int], v: Sequence[int],
                         truncation: int | None = None) -> dict[int, int]:
    """``C_k`` for ``n-m < k <= n`` by direct recursive substitution.

    ``s_0 = 1`` and ``s_i = e_i(u) - sum_{j=1}^{i} e_j(v) s_{i-j}`` for
    ``i <= n - m``; ``C_k = e_k(u) - sum_{j=0}^{k} e_j(v) s_{k-j}``.
    """
    _stiefel_check(n, m, u, v)
    top = n if truncation is None else truncation
    if top < n:
        raise ValueError("truncation must be at least n")
    r = n - m
    eu, ev = elementary_symmetric(u, top), elementary_symmetric(v, top)
    s = [1]
    for i in range(1, r + 1):
        s.append(eu[i] - sum(ev[j] * s[i - j] for j in range(1, i + 1)))

    def s_at(i):
        return s[i] if 0 <= i <= r else 0

    return {k: eu[k] - sum(ev[j] * s_at(k - j) for j in range(0, k + 1)) for k in range(r + 1, n + 1)}


def stiefel_first_differential(n: int, m: int, u: Sequence[int], v: Sequence[int],
                               truncation: int | None = None) -> tuple[int, int] | None:
    """First nonzero transgression ``(k, C)`` for ``W(n, m)``, or ``None``."""
    coeffs = stiefel_coefficients(n, m, u, v, truncation)
    return next(((k, c) for k, c in coeffs.items() if c != 0), None)


def stiefel_differentials(n: int, m: int, u: Sequence[int], v: Sequence[int]) -> TransgressionTable:
    """All records for ``W(n, m)``; those past the first nonzero one are conjectural."""
    coeffs = stiefel_coefficients(n, m, u, v)
    records = []
    seen_nonzero = False
    earlier: list[int] = []
    for k, c in coeffs.items():
        if seen_nonzero:
            status = Status.CONJECTURAL
        elif c != 0:
            status = Status.FIRST_NONZERO
            seen_nonzero = True
        else:
            status = Status.EXACT
        records.append(DifferentialRecord(k, c, tuple(earlier), status))
        earlier.append(c)
    return TransgressionTable(SpaceKind.STIEFEL, tuple(u), tuple(v), tuple(records))


def obstruction_survival(m: int, first_nonzero: tuple[int, int] | None) -> bool:
    """Can ``theta^j`` survive for every ``j < m``?

    An equivariant map from ``C^m - 0`` forces the bottom row to stay
    nonzero below ``theta^m``, so the first transgression must not occur
    before page ``2m``.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    return first_nonzero is None or first_nonzero[0] >= m
