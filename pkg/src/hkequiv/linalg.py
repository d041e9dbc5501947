"""Exact rank of rational matrices."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import lcm


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers, so every intermediate value is an
    exact integer.
    """
    a = _integer_rows(matrix)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            for k in range(c, ncols):
                a[i][k] = (p * a[i][k] - f * a[r][k]) // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def _sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(square) -> Fraction:
    n = len(square)
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(_sign(perm))
        for i, j in enumerate(perm):
            term *= square[i][j]
            if term == 0:
                break
        total += term
    return total


def minor_rank(matrix) -> int:
    """Largest size of a nonzero minor.  Brute force; only for small matrices."""
    if not matrix or not matrix[0]:
        return 0
    nrows, ncols = len(matrix), len(matrix[0])
    for k in range(min(nrows, ncols), 0, -1):
        for rs in combinations(range(nrows), k):
            for cs in combinations(range(ncols), k):
                if leibniz_det([[matrix[i][j] for j in cs] for i in rs]) != 0:
                    return k
    return 0
