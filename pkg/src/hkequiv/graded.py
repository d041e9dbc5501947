"""Graded vector spaces and circle actions on matrices between them.

A graded space is represented only by its weight vector.  A linear map
between graded spaces carries a matrix whose entries are monomials
``c * z**e`` in a formal unit-circle parameter ``z``; the two circle
actions shift exponents, the conjugate dual transposes and inverts ``z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg


def _entry(c, e=0) -> tuple[Fraction, int]:
    c = Fraction(c)
    return (c, int(e)) if c != 0 else (Fraction(0), 0)


@dataclass(frozen=True)
class MonomialMatrix:
    entries: tuple[tuple[tuple[Fraction, int], ...], ...]
    cols: int

    def __post_init__(self):
        rows = tuple(tuple(_entry(*x) for x in row) for row in self.entries)
        if any(len(row) != self.cols for row in rows):
            raise ValueError("ragged monomial matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "MonomialMatrix":
        """Build from rows of ``(coefficient, exponent)`` pairs or bare scalars."""
        fixed = []
        for row in rows:
            fixed.append(tuple(x if isinstance(x, tuple) else (x, 0) for x in row))
        if cols is None:
            cols = len(fixed[0]) if fixed else 0
        return cls(tuple(fixed), cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "MonomialMatrix":
        return MonomialMatrix(
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.rows,
        )

    def shift_exponents(self, shift) -> "MonomialMatrix":
        """Add ``shift(i, j)`` to the exponent of every nonzero entry."""
        return MonomialMatrix(
            tuple(
                tuple(_entry(c, e + shift(i, j)) for j, (c, e) in enumerate(row))
                for i, row in enumerate(self.entries)
            ),
            self.cols,
        )

    def specialize(self, z) -> list[list[Fraction]]:
        z = Fraction(z)
        if z == 0:
            raise ValueError("z must be nonzero")
        return [[c * z**e for c, e in row] for row in self.entries]


@dataclass(frozen=True)
class GradedHom:
    source_weights: tuple[int, ...]
    target_weights: tuple[int, ...]
    matrix: MonomialMatrix

    def __post_init__(self):
        object.__setattr__(self, "source_weights", tuple(self.source_weights))
        object.__setattr__(self, "target_weights", tuple(self.target_weights))
        if self.matrix.rows != len(self.target_weights) or self.matrix.cols != len(self.source_weights):
            raise ValueError(
                f"matrix is {self.matrix.rows}x{self.matrix.cols}, weights give "
                f"{len(self.target_weights)}x{len(self.source_weights)}"
            )


def apply_left_action(h: GradedHom) -> GradedHom:
    """``diag(z^w) A``: row ``i`` exponents rise by the target weight ``w_i``."""
    w = h.target_weights
    return GradedHom(h.source_weights, w, h.matrix.shift_exponents(lambda i, j: w[i]))


def apply_left_right_action(h: GradedHom) -> GradedHom:
    """``diag(z^w) A diag(z^-v)``."""
    v, w = h.source_weights, h.target_weights
    return GradedHom(v, w, h.matrix.shift_exponents(lambda i, j: w[i] - v[j]))


def conjugate_dual(h: GradedHom) -> GradedHom:
    """Hermitian conjugate ``A'`` as a map ``W* -> V*``.

    Rational coefficients are self-conjugate, so only ``z -> 1/z`` acts on
    entries.  Dual spaces keep the weights of the original spaces.
    """
    t = h.matrix.transpose()
    dual = MonomialMatrix(tuple(tuple((c, -e) for c, e in row) for row in t.entries), t.cols)
    return GradedHom(h.target_weights, h.source_weights, dual)


def specialized_rank(h: GradedHom, z) -> int:
    return linalg.rank(h.matrix.specialize(z))


def weight_scaling(weights: Sequence[int], z) -> list[Fraction]:
    """Diagonal of ``diag(z^w)`` for a nonzero rational ``z``."""
    z = Fraction(z)
    return [z**w for w in weights]
