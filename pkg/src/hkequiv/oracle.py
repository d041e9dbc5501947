"""Concrete graded free complexes over Q[x_1..x_m] used as ground truth.

A complex is stored injective end first: ``matrices[i]`` maps term ``i``
to term ``i + 1``, so it has ``len(shifts[i + 1])`` rows and
``len(shifts[i])`` columns.  Entry ``(r, c)`` must be homogeneous of
degree ``shifts[i][c] - shifts[i + 1][r]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from . import linalg
from .obstructions import ComplexDegreeData
from .polys import MultiPoly, format_poly, parse_poly

DEFAULT_SEED = 7


@dataclass(frozen=True)
class GradedFreeComplex:
    variables: int
    shifts: tuple[tuple[int, ...], ...]
    matrices: tuple[tuple[tuple[MultiPoly, ...], ...], ...]

    def __post_init__(self):
        shifts = tuple(tuple(s) for s in self.shifts)
        mats = tuple(tuple(tuple(row) for row in mat) for mat in self.matrices)
        if len(mats) != max(len(shifts) - 1, 0):
            raise ValueError(f"{len(shifts)} terms need {len(shifts) - 1} matrices, got {len(mats)}")
        for i, mat in enumerate(mats):
            rows, cols = len(shifts[i + 1]), len(shifts[i])
            if len(mat) != rows or any(len(row) != cols for row in mat):
                raise ValueError(f"matrix {i} should be {rows}x{cols}")
            for row in mat:
                for p in row:
                    if p.nvars != self.variables:
                        raise ValueError(f"matrix {i} has an entry in {p.nvars} variables")
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "matrices", mats)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.shifts)

    def shifted(self, k: int) -> "GradedFreeComplex":
        return GradedFreeComplex(self.variables, tuple(tuple(d + k for d in s) for s in self.shifts), self.matrices)

    def with_entry(self, i: int, r: int, c: int, p: MultiPoly) -> "GradedFreeComplex":
        mats = [list(list(row) for row in mat) for mat in self.matrices]
        mats[i][r][c] = p
        return GradedFreeComplex(self.variables, self.shifts, tuple(tuple(map(tuple, m)) for m in mats))


def build_koszul(m: int) -> GradedFreeComplex:
    """Koszul complex on ``x_1..x_m``, from ``Lambda^m`` down to ``Lambda^0``.

    Basis of ``Lambda^k`` is the lexicographically sorted ``k``-subsets;
    ``d(e_S) = sum_p (-1)^(|S|-1-p) x_{s_p} e_{S - s_p}``.
    """
    if not 1 <= m <= 8:
        raise ValueError("m must lie in 1..8")
    bases = [list(combinations(range(1, m + 1), k)) for k in range(m, -1, -1)]
    shifts = tuple((m - pos,) * len(b) for pos, b in enumerate(bases))
    zero = MultiPoly.zero(m)
    matrices = []
    for pos in range(m):
        src, dst = bases[pos], bases[pos + 1]
        index = {s: r for r, s in enumerate(dst)}
        mat = [[zero] * len(src) for _ in dst]
        for c, subset in enumerate(src):
            k = len(subset)
            for p, var in enumerate(subset):
                rest = subset[:p] + subset[p + 1:]
                sign = 1 if (k - 1 - p) % 2 == 0 else -1
                mat[index[rest]][c] = MultiPoly.var(m, var) * sign
        matrices.append(tuple(tuple(row) for row in mat))
    return GradedFreeComplex(m, shifts, tuple(matrices))


def _matmul(a, b, nvars):
    zero = MultiPoly.zero(nvars)
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = zero
            for k in range(inner):
                if a[i][k].terms and b[k][j].terms:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def validate_complex(c: GradedFreeComplex) -> list[str]:
    """All homogeneity and ``d^2 = 0`` violations; empty means valid."""
    problems = []
    for i, mat in enumerate(c.matrices):
        for r, row in enumerate(mat):
            for col, p in enumerate(row):
                want = c.shifts[i][col] - c.shifts[i + 1][r]
                if not p.is_homogeneous(want):
                    problems.append(
                        f"matrix {i} entry ({r},{col}): {format_poly(p)} is not homogeneous of degree {want}")
    for i in range(len(c.matrices) - 1):
        prod = _matmul(c.matrices[i + 1], c.matrices[i], c.variables)
        for r, row in enumerate(prod):
            for col, p in enumerate(row):
                if not p.is_zero():
                    problems.append(f"d^2 != 0: matrices {i + 1}*{i} entry ({r},{col}) = {format_poly(p)}")
    return problems


@dataclass(frozen=True)
class ExactnessResult:
    point: tuple[Fraction, ...]
    ranks: tuple[int, ...]
    exact: bool
    defects: tuple[int, ...]


def evaluate(c: GradedFreeComplex, point: Sequence) -> list[list[list[Fraction]]]:
    return [[[p.evaluate(point) for p in row] for row in mat] for mat in c.matrices]


def evaluate_and_check_exactness(c: GradedFreeComplex, point: Sequence) -> ExactnessResult:
    """Substitute ``point`` and check the numeric sequence is exact.

    Every term touched by a map must satisfy ``rank(in) + rank(out) = dim``
    (the end terms have a zero map on the missing side).  ``defects[i]`` is
    ``dim - rank(in) - rank(out)`` at term ``i``.
    """
    point = tuple(Fraction(x) for x in point)
    if len(point) != c.variables:
        raise ValueError(f"point has {len(point)} coordinates, expected {c.variables}")
    ranks = tuple(linalg.rank(m) if m and m[0] else 0 for m in evaluate(c, point))
    defects = []
    for i, dim in enumerate(c.dims):
        if not ranks:
            defects.append(0)
            continue
        r_in = ranks[i - 1] if i > 0 else 0
        r_out = ranks[i] if i < len(ranks) else 0
        defects.append(dim - r_in - r_out)
    return ExactnessResult(point, ranks, all(d == 0 for d in defects), tuple(defects))


def random_points(m: int, count: int, seed: int = DEFAULT_SEED) -> list[tuple[Fraction, ...]]:
    """Seeded nonzero rational points with coordinates in ``[-5, 5]``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pt = []
        for _ in range(m):
            den = rng.choice((1, 2, 3, 4))
            pt.append(Fraction(rng.randint(-5 * den, 5 * den), den))
        pt = tuple(pt)
        if any(pt):
            out.append(pt)
    return out


def check_points(c: GradedFreeComplex, count: int, seed: int = DEFAULT_SEED) -> list[ExactnessResult]:
    return [evaluate_and_check_exactness(c, pt) for pt in random_points(c.variables, count, seed)]


def extract_degree_data(c: GradedFreeComplex) -> ComplexDegreeData:
    return ComplexDegreeData(c.variables, c.shifts)


def koszul_degree_terms(m: int) -> list[list[int]]:
    return [[m - k] * comb(m, m - k) for k in range(m + 1)]


def complex_to_json(c: GradedFreeComplex) -> dict:
    return {
        "variables": c.variables,
        "shifts": [list(s) for s in c.shifts],
        "matrices": [[[format_poly(p) for p in row] for row in mat] for mat in c.matrices],
    }


class ComplexFormatError(ValueError):
    pass


def complex_from_json(obj) -> GradedFreeComplex:
    if not isinstance(obj, dict):
        raise ComplexFormatError("complex file must hold a JSON object")
    extra = set(obj) - {"variables", "shifts", "matrices"}
    if extra:
        raise ComplexFormatError(f"unknown keys: {sorted(extra)}")
    m = obj.get("variables")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ComplexFormatError("'variables' must be a positive integer")
    shifts = obj.get("shifts")
    if not isinstance(shifts, list) or not all(
            isinstance(s, list) and all(isinstance(d, int) and not isinstance(d, bool) for d in s) for s in shifts):
        raise ComplexFormatError("'shifts' must be a list of integer lists")
    mats_raw = obj.get("matrices")
    if not isinstance(mats_raw, list):
        raise ComplexFormatError("'matrices' must be a list")
    mats = []
    for i, mat in enumerate(mats_raw):
        if not isinstance(mat, list):
            raise ComplexFormatError(f"matrix {i} must be a list of rows")
        rows = []
        for r, row in enumerate(mat):
            if not isinstance(row, list):
                raise ComplexFormatError(f"matrix {i} row {r} must be a list")
            entries = []
            for col, s in enumerate(row):
                if not isinstance(s, str):
                    raise ComplexFormatError(f"matrix {i} entry ({r},{col}) must be a string")
                try:
                    entries.append(parse_poly(s, m))
                except ValueError as exc:
                    raise ComplexFormatError(f"matrix {i} entry ({r},{col}): {exc}") from exc
            rows.append(tuple(entries))
        mats.append(tuple(rows))
    try:
        return GradedFreeComplex(m, tuple(tuple(s) for s in shifts), tuple(mats))
    except ValueError as exc:
        raise ComplexFormatError(str(exc)) from exc
