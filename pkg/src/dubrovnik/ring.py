"""Integer Laurent polynomials in ``l`` (lambda) and ``z``.

The coefficient ring carries a third generator ``delta`` tied to the others by
``l^-1 - l = z (delta - 1)``.  We never store ``delta``: every occurrence is
replaced by ``(l^-1 - l) z^-1 + 1`` as soon as it is built, so each value has a
single canonical form (a map from exponent pairs to nonzero integers).
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "NEG_INFINITY",
    "POS_INFINITY",
    "ZERO",
    "ONE",
    "L",
    "LINV",
    "Z",
    "delta_power",
    "lam_power",
    "z_degree",
    "z_min_degree",
    "render",
    "parse_poly",
]

NEG_INFINITY = -math.inf
POS_INFINITY = math.inf


class LaurentPoly:
    """Immutable sparse polynomial ``sum c * l^a * z^b`` with integer ``c``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[(int(key[0]), int(key[1]))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, coef: int, lam: int = 0, z: int = 0) -> "LaurentPoly":
        return cls({(lam, z): coef})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return ZERO
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, lam: int = 0, z: int = 0) -> "LaurentPoly":
        """Multiply by the monomial ``l^lam z^z``."""
        if lam == 0 and z == 0:
            return self
        return LaurentPoly._raw({(a + lam, b + z): c for (a, b), c in self._terms.items()})

    def z_part(self, b: int) -> "LaurentPoly":
        """The coefficient of ``z^b`` as a polynomial in ``l`` alone."""
        return LaurentPoly._raw({(a, 0): c for (a, bb), c in self._terms.items() if bb == b})

    def substitute_lambda_inverse(self) -> "LaurentPoly":
        return LaurentPoly._raw({(-a, b): c for (a, b), c in self._terms.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
L = LaurentPoly.monomial(1, 1, 0)
LINV = LaurentPoly.monomial(1, -1, 0)
Z = LaurentPoly.monomial(1, 0, 1)


def lam_power(n: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, n, 0)


@lru_cache(maxsize=None)
def delta_power(n: int) -> LaurentPoly:
    """``delta**n`` with ``delta = (l^-1 - l) z^-1 + 1``."""
    if n < 0:
        raise ValueError("delta_power needs n >= 0")
    if n == 0:
        return ONE
    delta = LaurentPoly({(-1, -1): 1, (1, -1): -1, (0, 0): 1})
    return delta_power(n - 1) * delta


def z_degree(p: LaurentPoly) -> float | int:
    """Highest power of z, or ``NEG_INFINITY`` for the zero polynomial."""
    if not p._terms:
        return NEG_INFINITY
    return max(b for (_, b) in p._terms)


def z_min_degree(p: LaurentPoly) -> float | int:
    if not p._terms:
        return POS_INFINITY
    return min(b for (_, b) in p._terms)


def _sorted_terms(p: LaurentPoly) -> list[tuple[tuple[int, int], int]]:
    return sorted(p._terms.items(), key=lambda kv: (-kv[0][1], kv[0][0]))


def render(p: LaurentPoly) -> str:
    """Deterministic text form, e.g. ``1 l^-1 z^-1 + -1 l^1 z^-1 + 1 l^0 z^0``."""
    if not p._terms:
        return "0"
    return " + ".join(f"{c} l^{a} z^{b}" for (a, b), c in _sorted_terms(p))


_TERM = re.compile(r"^\s*(-?\d+)\s+l\^(-?\d+)\s+z\^(-?\d+)\s*$")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        return ZERO
    terms: dict[tuple[int, int], int] = {}
    for chunk in text.split(" + "):
        m = _TERM.match(chunk)
        if not m:
            raise ValueError(f"bad polynomial term: {chunk!r}")
        c, a, b = (int(g) for g in m.groups())
        key = (a, b)
        if key in terms:
            raise ValueError(f"repeated monomial l^{a} z^{b}")
        if c == 0:
            raise ValueError("zero coefficient in canonical form")
        terms[key] = c
    return LaurentPoly(terms)


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[tuple[int, int], int] = {}
    for p in polys:
        for k, c in p._terms.items():
            out[k] = out.get(k, 0) + c
    return LaurentPoly(out)
