"""Laurent polynomials in one indeterminate ``N`` with exact rational coefficients."""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "N", "interpolate", "format_rational"]


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class LaurentPoly:
    """Immutable map ``exponent -> coefficient`` with no stored zeros.

    >>> p = LaurentPoly({2: 1, 0: -1})
    >>> str(p)
    'N^2 - 1'
    >>> str(p.substitute_neg() * LaurentPoly({-1: 1}))
    'N - 1/N'
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            v = _to_fraction(v)
            if v:
                c[int(e)] = v
        self._c = c

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_json(cls, data: Mapping[str, str] | str) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls({int(e): Fraction(v) for e, v in data.items()})

    # -- inspection --------------------------------------------------------

    def coeff(self, exponent: int) -> Fraction:
        return self._c.get(exponent, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        """Terms in descending exponent order."""
        return sorted(self._c.items(), reverse=True)

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    @property
    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[self.degree] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.constant(_to_fraction(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        try:
            return self._c == LaurentPoly.constant(_to_fraction(other))._c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # -- N -> -N and evaluation ---------------------------------------------

    def substitute_neg(self) -> "LaurentPoly":
        return LaurentPoly({e: -v if e % 2 else v for e, v in self._c.items()})

    def evaluate(self, n) -> Fraction:
        n = _to_fraction(n)
        if n == 0 and any(e < 0 for e in self._c):
            raise ZeroDivisionError("Laurent polynomial has a pole at N = 0")
        return sum((v * n**e for e, v in self._c.items()), Fraction(0))

    __call__ = evaluate

    # -- rendering ---------------------------------------------------------

    def to_json_obj(self) -> dict[str, str]:
        return {str(e): format_rational(v) for e, v in self.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_json_obj()})"

    def to_text(self) -> str:
        if not self._c:
            return "0"
        out = []
        for i, (e, v) in enumerate(self.items()):
            mag = _text_term(e, abs(v))
            if i == 0:
                out.append(("-" if v < 0 else "") + mag)
            else:
                out.append((" - " if v < 0 else " + ") + mag)
        return "".join(out)

    def to_latex(self) -> str:
        if not self._c:
            return "0"
        out = []
        for i, (e, v) in enumerate(self.items()):
            mag = _latex_term(e, abs(v))
            if v < 0:
                out.append("-" + mag)
            else:
                out.append(("+" if i else "") + mag)
        return "".join(out)


def _text_term(e: int, v: Fraction) -> str:
    p, q = v.numerator, v.denominator
    if e == 0:
        return format_rational(v)
    if e > 0:
        mono = "N" if e == 1 else f"N^{e}"
        if v == 1:
            return mono
        return f"{p}{mono}" if q == 1 else f"({p}/{q}){mono}"
    mono = "N" if e == -1 else f"N^{-e}"
    return f"{p}/{mono}" if q == 1 else f"{p}/({q}{mono})"


def _latex_term(e: int, v: Fraction) -> str:
    p, q = v.numerator, v.denominator
    if e == 0:
        return str(p) if q == 1 else rf"\frac{{{p}}}{{{q}}}"
    if e > 0:
        mono = "N" if e == 1 else f"N^{{{e}}}"
        if v == 1:
            return mono
        return f"{p}{mono}" if q == 1 else rf"\frac{{{p}}}{{{q}}}{mono}"
    mono = "N" if e == -1 else f"N^{{{-e}}}"
    return rf"\frac{{{p}}}{{{mono}}}" if q == 1 else rf"\frac{{{p}}}{{{q}{mono}}}"


N = LaurentPoly.monomial(1)


def interpolate(points: Iterable[tuple[object, object]]) -> LaurentPoly:
    """Polynomial of degree < len(points) through ``points``, by Newton divided differences."""
    pts = [(_to_fraction(x), _to_fraction(y)) for x, y in points]
    if not pts:
        raise ValueError("interpolation needs at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be pairwise distinct")
    m = len(pts)
    table = [y for _, y in pts]
    newton = [table[0]]
    for level in range(1, m):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(m - level)]
        newton.append(table[0])
    # Horner on the Newton basis, in plain coefficient lists (index = exponent)
    coeffs = [newton[-1]]
    for j in range(m - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= xs[j] * c
        shifted[0] += newton[j]
        coeffs = shifted
    return LaurentPoly(dict(enumerate(coeffs)))
