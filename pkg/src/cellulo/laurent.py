"""Sparse Laurent polynomials in Z[v, v^-1] with the bar involution."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "lsum", "ZERO", "ONE", "V", "V_INV"]


class LaurentPoly:
    """An element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal
    exactly when their dictionaries are equal.  Instances are treated as
    immutable; every operation returns a new object.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        if coeffs is None:
            self._c = {}
        else:
            self._c = {int(e): int(c) for e, c in coeffs.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._c = d
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._wrap({exponent: coeff} if coeff else {})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    # -- inspection ---------------------------------------------------

    def coeff(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def items(self) -> list[tuple[int, int]]:
        """Terms in ascending exponent order."""
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def __call__(self, x):
        return sum(c * x**e for e, c in self._c.items())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        d = dict(self._c)
        for e, c in other._c.items():
            s = d.get(e, 0) + c
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return LaurentPoly._wrap(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._wrap({e: c * other for e, c in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(b) == 1:
            (f, k), = b.items()
            return LaurentPoly._wrap({e + f: c * k for e, c in a.items()})
        if len(a) == 1:
            (f, k), = a.items()
            return LaurentPoly._wrap({e + f: c * k for e, c in b.items()})
        d: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                d[e] = d.get(e, 0) + c1 * c2
        return LaurentPoly._wrap({e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1 or next(iter(self._c.values())) not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            (e, c), = self._c.items()
            return LaurentPoly._wrap({-e * (-n): c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> "LaurentPoly":
        """The ring involution v -> v^-1."""
        return LaurentPoly._wrap({-e: c for e, c in self._c.items()})

    def symmetric_nonpositive_part(self) -> "LaurentPoly":
        """The unique bar-invariant q with ``self - q`` in vZ[v]."""
        d = {}
        for e, c in self._c.items():
            if e < 0:
                d[e] = c
                d[-e] = c
            elif e == 0:
                d[0] = c
        return LaurentPoly._wrap(d)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- text format --------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{c}*v^{e}" for e, c in self.items())

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"

    _TERM = re.compile(r"^\s*([+-]?\d+)\s*\*\s*v\^\s*([+-]?\d+)\s*$")

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: ``'1*v^-2 + 3*v^0'``; ``'0'`` is zero."""
        text = text.strip()
        if text == "0":
            return ZERO
        d: dict[int, int] = {}
        for chunk in text.split("+"):
            m = cls._TERM.match(chunk)
            if m is None:
                raise ValueError(f"bad Laurent term {chunk!r} in {text!r}")
            c, e = int(m.group(1)), int(m.group(2))
            d[e] = d.get(e, 0) + c
        return cls(d)


def lsum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    d: dict[int, int] = {}
    for p in polys:
        for e, c in p._c.items():
            d[e] = d.get(e, 0) + c
    return LaurentPoly({e: c for e, c in d.items() if c})


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
