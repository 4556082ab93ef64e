"""The antispherical right module sgn (x)_{H_f} H_ext.

Basis ``N_x = 1 (x) H_x`` for x in fW (shortest elements of the cosets
W_f \\ W_ext).  Since ``H_w = H_u H_x`` for w = u x with u in W_f, we get
``1 (x) H_w = (-v)^{l(u)} N_x``.
"""

from __future__ import annotations

from typing import Mapping

from .hecke import (
    V_INV_MINUS_V,
    CanonicalTable,
    HeckeElt,
    TableRadiusError,
    _axpy,
    canonical_generator,
)
from .laurent import ONE, V, ZERO, LaurentPoly
from .rootdata import DatumError
from .weyl import AffineWeylGroup, WeylElt

__all__ = [
    "AsphElt",
    "project",
    "act",
    "canonical_asph",
    "canonical_asph_recursive",
    "expand_in_canonical_asph",
]

MINUS_V = -V


class AsphElt:
    """A finite combination of N_x, x in fW; other indices are rejected."""

    __slots__ = ("group", "terms")

    def __init__(self, group: AffineWeylGroup, terms: Mapping[WeylElt, LaurentPoly] | None = None, *, check: bool = True):
        self.group = group
        self.terms: dict[WeylElt, LaurentPoly] = {x: c for x, c in (terms or {}).items() if c}
        if check:
            for x in self.terms:
                if not group.in_fw(x):
                    raise ValueError(f"{x} is not a minimal coset representative")

    @classmethod
    def basis(cls, x: WeylElt, coeff: LaurentPoly = ONE) -> "AsphElt":
        return cls(x.group, {x: coeff})

    def coeff(self, x: WeylElt) -> LaurentPoly:
        return self.terms.get(x, ZERO)

    def __add__(self, other: "AsphElt"):
        acc = dict(self.terms)
        for x, c in other.terms.items():
            _axpy(acc, x, c)
        return AsphElt(self.group, acc, check=False)

    def __neg__(self):
        return AsphElt(self.group, {x: -c for x, c in self.terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly) -> "AsphElt":
        return AsphElt(self.group, {x: c * p for x, p in self.terms.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return act(self, other)
        if isinstance(other, LaurentPoly):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AsphElt):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*N[{x}]" for x, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key()))

    def bar_coefficients(self) -> dict:
        return {x: c.bar() for x, c in self.terms.items()}


def project(h: HeckeElt) -> AsphElt:
    """1 (x) h."""
    g = h.group
    out: dict = {}
    for w, c in h.terms.items():
        x = g.min_coset_rep(w.trans)
        k = g.length(w) - g.length(x)
        _axpy(out, x, c * MINUS_V**k)
    return AsphElt(g, out, check=False)


def _act_gen(g: AffineWeylGroup, terms: dict, s: WeylElt) -> dict:
    """terms * H_s on the N-basis."""
    out: dict = {}
    for x, c in terms.items():
        xs = g.mul(x, s)
        if g.length(xs) < g.length(x):
            _axpy(out, xs, c)
            _axpy(out, x, c * V_INV_MINUS_V)
        elif g.in_fw(xs):
            _axpy(out, xs, c)
        else:
            # xs = s' x with s' a finite simple reflection
            _axpy(out, x, c * MINUS_V)
    return out


def act(m: AsphElt, h: HeckeElt) -> AsphElt:
    """The right action ``m * h``, one generator at a time."""
    g = m.group
    if h.group is not g and h.group.datum != g.datum:
        raise DatumError("module element and Hecke element over different root data")
    out: dict = {}
    for y, c in h.terms.items():
        omega, word = g.decompose(y)
        cur = {x: p * c for x, p in m.terms.items()}
        if omega != g.identity:
            cur = {g.mul(x, omega): p for x, p in cur.items()}
        for k in word:
            cur = _act_gen(g, cur, g.generators[k])
        for x, p in cur.items():
            _axpy(out, x, p)
    return AsphElt(g, out, check=False)


def canonical_asph(table: CanonicalTable, omegas=None) -> dict[WeylElt, AsphElt]:
    """``N_w = 1 (x) H_w`` for w in fW within the table, optionally times right Omega-translates."""
    g = table.group
    out = {}
    for w in table.elements():
        if not g.in_fw(w):
            continue
        n = project(table.element(w))
        out[w] = n
        for om in omegas or ():
            if om != g.identity:
                out[g.mul(w, om)] = AsphElt(g, {g.mul(x, om): c for x, c in n.terms.items()}, check=False)
    return out


def canonical_asph_recursive(g: AffineWeylGroup, L: int) -> dict[WeylElt, AsphElt]:
    """The antispherical canonical basis on fW n W, computed inside the module.

    ``N_w`` comes from ``N_{ws} (H_s + v)`` by subtracting, from the top down,
    the bar-invariant part of every coefficient that is not in vZ[v].
    """
    basis: dict[WeylElt, AsphElt] = {}
    for w in g.ball(L):
        if not g.in_fw(w):
            continue
        if w == g.identity:
            basis[w] = AsphElt(g, {w: ONE}, check=False)
            continue
        k = g.right_descents(w)[0]
        s = g.generators[k]
        wp = g.mul(w, s)
        m = act(basis[wp], canonical_generator(g, k)).terms
        basis[w] = AsphElt(g, _strip(m, w, basis), check=False)
    return basis


def _strip(m: dict, top: WeylElt, basis: Mapping[WeylElt, AsphElt]) -> dict:
    m = dict(m)
    done = set()
    while True:
        cands = [x for x in m if x != top and x not in done]
        if not cands:
            return m
        x = max(cands, key=WeylElt.sort_key)
        done.add(x)
        q = m[x].symmetric_nonpositive_part()
        if q:
            for y, c in basis[x].terms.items():
                _axpy(m, y, -(q * c))


def expand_in_canonical_asph(m: AsphElt, basis: Mapping[WeylElt, AsphElt]) -> dict[WeylElt, LaurentPoly]:
    """Coefficients c_w with ``m = sum c_w N_w`` (canonical), by back-substitution."""
    cur = dict(m.terms)
    out: dict[WeylElt, LaurentPoly] = {}
    while cur:
        x = max(cur, key=WeylElt.sort_key)
        if x not in basis:
            raise TableRadiusError(f"{x} is outside the antispherical basis")
        c = cur[x]
        out[x] = c
        for y, p in basis[x].terms.items():
            _axpy(cur, y, -(c * p))
    return out
