"""The extended affine Hecke algebra and its Kazhdan-Lusztig basis.

Normalization: ``(H_s + v)(H_s - v^-1) = 0``, so ``H_s^2 = 1 + (v^-1 - v) H_s``
and the canonical element of a simple reflection is ``H_s + v``.  The
canonical table is built for the Coxeter group W only; elements of
W_ext = W * Omega are reached through ``H_{w omega} = H_w H_omega``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Protocol

from .laurent import ONE, V, V_INV, ZERO, LaurentPoly
from .rootdata import DatumError, RootDatum
from .weyl import AffineWeylGroup, WeylElt, weyl_group

__all__ = [
    "HeckeElt",
    "CanonicalTable",
    "BasisProvider",
    "TableRadiusError",
    "canonical_basis",
    "mul_standard",
    "expand_in_canonical",
    "extend_by_omega",
    "bar",
]

V_INV_MINUS_V = V_INV - V
V_MINUS_V_INV = V - V_INV
QUANTUM_TWO = V + V_INV


class TableRadiusError(RuntimeError):
    """A computation needed canonical elements beyond the table's radius."""


def _axpy(acc: dict, key, poly: LaurentPoly):
    cur = acc.get(key)
    new = poly if cur is None else cur + poly
    if new:
        acc[key] = new
    elif cur is not None:
        del acc[key]


class HeckeElt:
    """A finite Z[v, v^-1]-combination of standard basis elements H_w."""

    __slots__ = ("group", "terms")

    def __init__(self, group: AffineWeylGroup, terms: Mapping[WeylElt, LaurentPoly] | None = None):
        self.group = group
        self.terms: dict[WeylElt, LaurentPoly] = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w: WeylElt, coeff: LaurentPoly = ONE) -> "HeckeElt":
        return cls(w.group, {w: coeff})

    @classmethod
    def zero(cls, group: AffineWeylGroup) -> "HeckeElt":
        return cls(group)

    def coeff(self, w: WeylElt) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def support(self) -> list[WeylElt]:
        return sorted(self.terms, key=WeylElt.sort_key)

    def _check(self, other: "HeckeElt"):
        if other.group is not self.group and other.group.datum != self.group.datum:
            raise DatumError("Hecke elements over different root data")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            _axpy(acc, w, c)
        return HeckeElt(self.group, acc)

    def __neg__(self):
        return HeckeElt(self.group, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly) -> "HeckeElt":
        return HeckeElt(self.group, {w: c * p for w, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other if isinstance(other, LaurentPoly) else LaurentPoly.const(other))
        if isinstance(other, HeckeElt):
            return mul_standard(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other if isinstance(other, LaurentPoly) else LaurentPoly.const(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*H[{w}]" for w, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key()))

    def bar(self) -> "HeckeElt":
        return bar(self)


# -- multiplication -------------------------------------------------------


def _rmul_gen(group: AffineWeylGroup, terms: dict, s: WeylElt) -> dict:
    """terms * H_s."""
    out: dict = {}
    for x, c in terms.items():
        xs = group.mul(x, s)
        _axpy(out, xs, c)
        if group.length(xs) < group.length(x):
            _axpy(out, x, c * V_INV_MINUS_V)
    return out


def _lmul_gen(group: AffineWeylGroup, s: WeylElt, terms: dict) -> dict:
    """H_s * terms."""
    out: dict = {}
    for x, c in terms.items():
        sx = group.mul(s, x)
        _axpy(out, sx, c)
        if group.length(sx) < group.length(x):
            _axpy(out, x, c * V_INV_MINUS_V)
    return out


def _rmul_canonical_gen(group: AffineWeylGroup, terms: dict, s: WeylElt) -> dict:
    """terms * (H_s + v)."""
    out: dict = {}
    for x, c in terms.items():
        xs = group.mul(x, s)
        _axpy(out, xs, c)
        if group.length(xs) > group.length(x):
            _axpy(out, x, c * V)
        else:
            _axpy(out, x, c * V_INV)
    return out


def _rmul_omega(group: AffineWeylGroup, terms: dict, omega: WeylElt) -> dict:
    return {group.mul(x, omega): c for x, c in terms.items()}


def mul_standard(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in the standard basis.

    Each ``H_y`` of ``b`` is split as ``H_omega H_{s_1} ... H_{s_m}`` along a
    reduced decomposition, and ``a`` is multiplied by the factors in turn.
    """
    a._check(b)
    g = a.group
    out: dict = {}
    for y, c in b.terms.items():
        omega, word = g.decompose(y)
        cur = {x: p * c for x, p in a.terms.items()}
        if omega != g.identity:
            cur = _rmul_omega(g, cur, omega)
        for k in word:
            cur = _rmul_gen(g, cur, g.generators[k])
        for x, p in cur.items():
            _axpy(out, x, p)
    return HeckeElt(g, out)


def standard_generator(group: AffineWeylGroup, k: int) -> HeckeElt:
    return HeckeElt.basis(group.generators[k])


def canonical_generator(group: AffineWeylGroup, k: int) -> HeckeElt:
    s = group.generators[k]
    return HeckeElt(group, {s: ONE, group.identity: V})


# -- bar involution -------------------------------------------------------


class _BarCache:
    def __init__(self, group: AffineWeylGroup):
        self.group = group
        self.cache: dict[WeylElt, dict] = {group.identity: {group.identity: ONE}}

    def bar_standard(self, w: WeylElt) -> dict:
        """bar(H_w) = (H_{w^-1})^-1 as a dict in the standard basis."""
        r = self.cache.get(w)
        if r is not None:
            return r
        g = self.group
        omega, word = g.decompose(w)
        if not word:
            r = {w: ONE}
        else:
            # w = w' s with l(w') = l(w) - 1; bar(H_w) = bar(H_w') (H_s + v - v^-1)
            s = g.generators[word[-1]]
            prev = self.bar_standard(g.mul(w, s))
            r = _rmul_gen(g, prev, s)
            for x, c in prev.items():
                _axpy(r, x, c * V_MINUS_V_INV)
        self.cache[w] = r
        return r


_bar_caches: dict[RootDatum, _BarCache] = {}


def bar(h: HeckeElt) -> HeckeElt:
    """The bar involution: v -> v^-1 on scalars and H_w -> (H_{w^-1})^-1."""
    bc = _bar_caches.get(h.group.datum)
    if bc is None:
        bc = _bar_caches[h.group.datum] = _BarCache(h.group)
    out: dict = {}
    for w, c in h.terms.items():
        cb = c.bar()
        for x, p in bc.bar_standard(w).items():
            _axpy(out, x, cb * p)
    return HeckeElt(h.group, out)


# -- canonical basis -------------------------------------------------------


class BasisProvider(Protocol):
    """What the cells module needs from a canonical basis (any characteristic)."""

    group: AffineWeylGroup
    radius: int

    def element(self, w: WeylElt) -> HeckeElt: ...

    def mu_below(self, w: WeylElt) -> Mapping[WeylElt, int]: ...

    def covers(self, w: WeylElt) -> bool: ...


class CanonicalTable:
    """Kazhdan-Lusztig basis elements ``H_w = sum_x h_{x,w} H_x`` for w in a ball of W."""

    def __init__(self, group: AffineWeylGroup, radius: int):
        self.group = group
        self.radius = radius
        self.entries: dict[WeylElt, dict[WeylElt, LaurentPoly]] = {}
        self.mu: dict[WeylElt, dict[WeylElt, int]] = {}

    def covers(self, w: WeylElt) -> bool:
        u, _ = self.group.omega_of(w)
        return u in self.entries

    def h(self, x: WeylElt, w: WeylElt) -> LaurentPoly:
        return self.entries[w].get(x, ZERO)

    def mu_coeff(self, x: WeylElt, w: WeylElt) -> int:
        return self.mu[w].get(x, 0)

    def mu_below(self, w: WeylElt) -> dict[WeylElt, int]:
        return self.mu[w]

    def element(self, w: WeylElt) -> HeckeElt:
        """The canonical element for any w in W_ext whose W-part lies in the table."""
        u, omega = self.group.omega_of(w)
        terms = self.entries.get(u)
        if terms is None:
            raise TableRadiusError(f"{w} is outside the table (radius {self.radius})")
        if omega == self.group.identity:
            return HeckeElt(self.group, terms)
        return HeckeElt(self.group, _rmul_omega(self.group, terms, omega))

    def __contains__(self, w: WeylElt) -> bool:
        return w in self.entries

    def __len__(self):
        return len(self.entries)

    def elements(self) -> list[WeylElt]:
        return sorted(self.entries, key=WeylElt.sort_key)


def canonical_basis(d: RootDatum | AffineWeylGroup, L: int) -> CanonicalTable:
    """Canonical elements for every w in W with l(w) <= L.

    By increasing length: for w = w's with l(w') < l(w),
    ``H_w = H_w' (H_s + v) - sum_{x : xs < x} mu(x, w') H_x``.
    """
    g = d if isinstance(d, AffineWeylGroup) else weyl_group(d)
    table = CanonicalTable(g, L)
    for w in g.ball(L):
        if w == g.identity:
            table.entries[w] = {w: ONE}
            table.mu[w] = {}
            continue
        k = g.right_descents(w)[0]
        s = g.generators[k]
        wp = g.mul(w, s)
        terms = _rmul_canonical_gen(g, table.entries[wp], s)
        for x, m in table.mu[wp].items():
            if g.length(g.mul(x, s)) < g.length(x):
                for y, c in table.entries[x].items():
                    _axpy(terms, y, c * (-m))
        table.entries[w] = terms
        table.mu[w] = {x: c.coeff(1) for x, c in terms.items() if x != w and c.coeff(1)}
    return table


def extend_by_omega(table: CanonicalTable, w: WeylElt, omega: WeylElt, side: str = "right") -> HeckeElt:
    """``H_{w omega} = H_w H_omega`` (side='right') or ``H_{omega w} = H_omega H_w``."""
    g = table.group
    if g.length(omega) != 0:
        raise ValueError(f"{omega} does not have length zero")
    base = table.element(w)
    if side == "right":
        return mul_standard(base, HeckeElt.basis(omega))
    if side == "left":
        return mul_standard(HeckeElt.basis(omega), base)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def expand_in_canonical(h: HeckeElt, table: CanonicalTable) -> dict[WeylElt, LaurentPoly]:
    """Coefficients c_w with ``h = sum c_w H_w`` (canonical elements), by back-substitution."""
    g = table.group
    cur = dict(h.terms)
    out: dict[WeylElt, LaurentPoly] = {}
    while cur:
        x = max(cur, key=WeylElt.sort_key)
        c = cur[x]
        out[x] = c
        for y, p in table.element(x).terms.items():
            _axpy(cur, y, -(c * p))
        assert x not in cur
    return out


def assemble(coeffs: Mapping[WeylElt, LaurentPoly], table: CanonicalTable) -> HeckeElt:
    g = table.group
    out: dict = {}
    for w, c in coeffs.items():
        for y, p in table.element(w).terms.items():
            _axpy(out, y, c * p)
    return HeckeElt(g, out)


def canonical_product_generator(table: CanonicalTable, x: WeylElt, k: int, side: str) -> dict[WeylElt, LaurentPoly]:
    """``H_x H_s`` (side='right') or ``H_s H_x`` (side='left') in the canonical basis,
    from mu-values alone.  x may lie in W_ext; s is the k-th Coxeter generator.
    """
    g = table.group
    u, omega = g.omega_of(x)
    if u not in table.mu:
        raise TableRadiusError(f"{x} is outside the table")
    if side == "right":
        # H_u H_omega H_s = H_u H_{s'} H_omega with s' = omega s omega^-1
        kk = g.conjugate_generator(omega, k)
        s = g.generators[kk]
        us = g.mul(u, s)
        if g.length(us) < g.length(u):
            return {x: QUANTUM_TWO}
        out = {g.mul(us, omega): ONE}
        for y, m in table.mu[u].items():
            if g.length(g.mul(y, s)) < g.length(y):
                out[g.mul(y, omega)] = LaurentPoly.const(m)
        return out
    if side == "left":
        s = g.generators[k]
        su = g.mul(s, u)
        if g.length(su) < g.length(u):
            return {x: QUANTUM_TWO}
        out = {g.mul(su, omega): ONE}
        for y, m in table.mu[u].items():
            if g.length(g.mul(s, y)) < g.length(y):
                out[g.mul(y, omega)] = LaurentPoly.const(m)
        return out
    raise ValueError(side)
