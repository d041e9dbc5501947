"""Sparse multivariate polynomials over Q and the poly-string format.

Grammar (whitespace is insignificant)::

    poly   := ["+" | "-"] term (("+" | "-") term)*
    term   := factor (["*"] factor)*
    factor := INT | VAR ["^" INT]
    VAR    := "x" INT            (1-based, at most the number of variables)

Exponents must be positive.  Example: ``"-x1^2*x3 + 4x2"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence


class PolyParseError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class MultiPoly:
    nvars: int
    terms: Mapping[tuple[int, ...], Fraction]

    def __post_init__(self):
        clean = {}
        for exps, c in dict(self.terms).items():
            exps = tuple(exps)
            if len(exps) != self.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {self.nvars} variables")
            c = Fraction(c)
            if c != 0:
                clean[exps] = clean.get(exps, 0) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v != 0})

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "MultiPoly":
        """``x_i ** power`` with ``i`` 1-based."""
        exps = [0] * nvars
        exps[i - 1] = power
        return cls(nvars, {tuple(exps): 1})

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MultiPoly(self.nvars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return MultiPoly(self.nvars, {k: c * other for k, c in self.terms.items()})
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")
        out: dict[tuple[int, ...], Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = tuple(a + b for a, b in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return MultiPoly(self.nvars, out)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self, degree: int) -> bool:
        """True for the zero polynomial or when every term has total degree ``degree``."""
        return all(sum(k) == degree for k in self.terms)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(pt, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: MultiPoly) -> str:
    """Canonical poly-string; integer coefficients only (rationals render as ``a/b``)."""
    if not p.terms:
        return "0"
    parts = []
    for exps in sorted(p.terms, key=lambda k: (-sum(k), [-e for e in k])):
        c = p.terms[exps]
        factors = []
        for i, e in enumerate(exps, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d+)|(?P<op>[-+*^])|(?P<bad>\S))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise PolyParseError(f"unexpected character {m.group(kind)!r}", text, start)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    return out


def parse_poly(text: str, nvars: int) -> MultiPoly:
    """Parse a poly-string in ``nvars`` variables."""
    toks = _tokens(text)
    if not toks:
        raise PolyParseError("empty polynomial", text, 0)
    i = 0
    result = MultiPoly.zero(nvars)

    def peek():
        return toks[i] if i < len(toks) else (None, None, len(text))

    sign = 1
    kind, val, pos = peek()
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        i += 1
    while True:
        coeff = Fraction(sign)
        exps = [0] * nvars
        nfactors = 0
        prev_int = False
        while True:
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                if nfactors == 0:
                    raise PolyParseError("'*' without a left factor", text, pos)
                i += 1
                kind, val, pos = peek()
                if kind not in ("int", "var"):
                    raise PolyParseError("expected a factor after '*'", text, pos)
                prev_int = False
            if kind == "int":
                if prev_int:
                    raise PolyParseError("two adjacent integers", text, pos)
                coeff *= int(val)
                prev_int = True
                i += 1
            elif kind == "var":
                idx = int(val[1:])
                if not 1 <= idx <= nvars:
                    raise PolyParseError(f"variable {val} outside x1..x{nvars}", text, pos)
                i += 1
                power = 1
                k2, v2, p2 = peek()
                if k2 == "op" and v2 == "^":
                    i += 1
                    k3, v3, p3 = peek()
                    if k3 != "int":
                        raise PolyParseError("expected an exponent after '^'", text, p3)
                    power = int(v3)
                    if power < 1:
                        raise PolyParseError("exponent must be positive", text, p3)
                    i += 1
                exps[idx - 1] += power
                prev_int = False
            else:
                break
            nfactors += 1
        if nfactors == 0:
            raise PolyParseError("expected a term", text, pos)
        result = result + MultiPoly(nvars, {tuple(exps): coeff})
        kind, val, pos = peek()
        if kind is None:
            return result
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise PolyParseError(f"unexpected {val!r}", text, pos)
