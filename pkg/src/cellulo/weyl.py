"""The extended affine Weyl group W_ext = W_f x| X.

An element is stored as a pair ``(fin, trans)`` standing for the affine
map ``mu -> fin(mu + trans)``, i.e. the product ``fin * t_trans``.  The
finite part is an index into an enumeration of W_f (by matrices acting
on X).  Under this convention the closed length formula reads

    l(v t_tau) = sum_{a > 0, v(a) > 0} |<tau, a^vee>|
               + sum_{a > 0, v(a) < 0} |1 + <tau, a^vee>|,

which is the reading that agrees with word length in the Coxeter
generators (checked against breadth-first search in the test-suite;
the other reading, with ``tau`` replaced by ``v(tau)``, gives
``l(s_0) = 3`` for A1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .rootdata import (
    Config,
    DatumError,
    RootDatum,
    _check_integral,
    coxeter_number,
    pairing,
    two_rho,
)

__all__ = [
    "WeylElt",
    "AffineWeylGroup",
    "AlcoveCoords",
    "weyl_group",
    "alcove_of",
]


class WeylElt:
    """An element ``fin * t_trans`` of W_ext; immutable and hashable."""

    __slots__ = ("group", "fin", "trans", "_hash")

    def __init__(self, group: "AffineWeylGroup", fin: int, trans: tuple[int, ...]):
        self.group = group
        self.fin = fin
        self.trans = trans
        self._hash = hash((fin, trans))

    def __eq__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return (
            self.fin == other.fin
            and self.trans == other.trans
            and (self.group is other.group or self.group.datum == other.group.datum)
        )

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if not isinstance(other, WeylElt):
            return NotImplemented
        return self.group.mul(self, other)

    def __repr__(self):
        return f"WeylElt({self.group.format(self)})"

    def __str__(self):
        return self.group.format(self)

    @property
    def length(self) -> int:
        return self.group.length(self)

    def inverse(self) -> "WeylElt":
        return self.group.inverse(self)

    def sort_key(self):
        return (self.group.length(self), self.fin, self.trans)


@dataclass(frozen=True)
class AlcoveCoords:
    """Integers ``n_alpha`` (one per positive root, in datum order) of a lower closure."""

    n: tuple[int, ...]

    def contains(self, lam, d: RootDatum, ell: int) -> bool:
        return alcove_of(lam, d, ell) == self


def _matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(m, v):
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


class AffineWeylGroup:
    """Arithmetic in W_ext for a fixed root datum."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        self.rank = datum.rank
        self._enumerate_finite()
        self._pos_coroots = datum.positive_coroots
        self._pos_roots = datum.positive_roots
        neg = {tuple(-x for x in r) for r in self._pos_roots}
        # flags[v][k] = 1 iff v sends the k-th positive root to a negative root
        self._flags = [
            tuple(int(_matvec(m, r) in neg) for r in self._pos_roots) for m in self._fmats
        ]
        self._flen = [sum(f) for f in self._flags]
        tr = two_rho(datum)
        # v(rho) - rho, integral
        self._rho_shift = []
        for m in self._fmats:
            diff = tuple(a - b for a, b in zip(_matvec(m, tr), tr))
            assert all(x % 2 == 0 for x in diff)
            self._rho_shift.append(tuple(x // 2 for x in diff))
        self.w0_index = max(range(len(self._fmats)), key=lambda i: self._flen[i])
        self.identity = WeylElt(self, 0, (0,) * self.rank)
        self._len_cache: dict[WeylElt, int] = {}
        self._mul_cache: dict[tuple[WeylElt, WeylElt], WeylElt] = {}
        self._decomp_cache: dict[WeylElt, tuple] = {}
        self._omega_cache: dict[WeylElt, tuple] = {}
        self._mincoset_cache: dict[tuple, WeylElt] = {}
        self._build_generators()

    # -- finite Weyl group ---------------------------------------------

    def _enumerate_finite(self):
        d = self.datum
        n = self.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self._sref = []
        for a, ac in zip(d.simple_roots, d.simple_coroots):
            # s(lam) = lam - <lam, a^vee> a
            self._sref.append(
                tuple(tuple(int(i == j) - a[i] * ac[j] for j in range(n)) for i in range(n))
            )
        self._fmats = [ident]
        self._fwords: list[tuple[int, ...]] = [()]
        self._findex = {ident: 0}
        frontier = [0]
        while frontier:
            new = []
            for idx in frontier:
                for i, s in enumerate(self._sref):
                    m = _matmul(s, self._fmats[idx])
                    if m not in self._findex:
                        self._findex[m] = len(self._fmats)
                        self._fmats.append(m)
                        self._fwords.append((i,) + self._fwords[idx])
                        new.append(self._findex[m])
            frontier = new
        self._fmul_cache: dict[tuple[int, int], int] = {}
        self._finv_cache: dict[int, int] = {}

    @property
    def finite_order(self) -> int:
        return len(self._fmats)

    def fmul(self, i: int, j: int) -> int:
        key = (i, j)
        r = self._fmul_cache.get(key)
        if r is None:
            r = self._findex[_matmul(self._fmats[i], self._fmats[j])]
            self._fmul_cache[key] = r
        return r

    def finv(self, i: int) -> int:
        r = self._finv_cache.get(i)
        if r is None:
            m = self._fmats[0]
            for k in self._fwords[i]:  # inverse of s_a...s_b is s_b...s_a
                m = _matmul(self._sref[k], m)
            r = self._findex[m]
            self._finv_cache[i] = r
        return r

    def fapply(self, i: int, lam: Sequence) -> tuple:
        return _matvec(self._fmats[i], lam)

    def finite_matrix(self, i: int):
        return self._fmats[i]

    def finite_length(self, i: int) -> int:
        return self._flen[i]

    # -- elements --------------------------------------------------------

    def elt(self, fin: int = 0, trans: Sequence[int] | None = None) -> WeylElt:
        if trans is None:
            trans = (0,) * self.rank
        return WeylElt(self, fin, _check_integral(trans))

    def translation(self, lam: Sequence[int]) -> WeylElt:
        return self.elt(0, lam)

    def finite_elt(self, i: int) -> WeylElt:
        return WeylElt(self, i, (0,) * self.rank)

    def finite_elements(self) -> list[WeylElt]:
        return [self.finite_elt(i) for i in range(self.finite_order)]

    def mul(self, x: WeylElt, y: WeylElt) -> WeylElt:
        """(v1 t_a)(v2 t_b) = v1 v2 t_{v2^-1 a + b}."""
        key = (x, y)
        r = self._mul_cache.get(key)
        if r is not None:
            return r
        if x.group is not self and x.group.datum != self.datum:
            raise DatumError("elements belong to different root data")
        if y.group is not self and y.group.datum != self.datum:
            raise DatumError("elements belong to different root data")
        a = self.fapply(self.finv(y.fin), x.trans)
        r = WeylElt(self, self.fmul(x.fin, y.fin), tuple(p + q for p, q in zip(a, y.trans)))
        if len(self._mul_cache) < 2_000_000:
            self._mul_cache[key] = r
        return r

    def inverse(self, x: WeylElt) -> WeylElt:
        # (v t_a)^-1 = t_-a v^-1 = v^-1 t_{-v a}
        vi = self.finv(x.fin)
        return WeylElt(self, vi, tuple(-c for c in self.fapply(x.fin, x.trans)))

    def prod(self, elts: Iterable[WeylElt]) -> WeylElt:
        r = self.identity
        for e in elts:
            r = self.mul(r, e)
        return r

    def length(self, w: WeylElt) -> int:
        r = self._len_cache.get(w)
        if r is None:
            r = 0
            tau = w.trans
            for cr, f in zip(self._pos_coroots, self._flags[w.fin]):
                r += abs(pairing(tau, cr) + f)
            self._len_cache[w] = r
        return r

    def length_alternative_reading(self, w: WeylElt) -> int:
        """The closed formula with the translation written on the left (t_lam v).

        Kept only to document that this reading disagrees with word length.
        """
        lam = self.fapply(w.fin, w.trans)
        return sum(
            abs(pairing(lam, cr) + f) for cr, f in zip(self._pos_coroots, self._flags[w.fin])
        )

    def act(self, w: WeylElt, mu: Sequence) -> tuple:
        """The (undilated) affine action mu -> fin(mu + trans)."""
        return self.fapply(w.fin, tuple(a + b for a, b in zip(mu, w.trans)))

    # -- Coxeter structure -----------------------------------------------

    def _build_generators(self):
        d = self.datum
        gens, names = [], []
        for i in range(d.n_simple):
            idx = self._findex[self._sref[i]]
            gens.append(self.finite_elt(idx))
            names.append(f"s{i + 1}")
        for c in range(len(d.components)):
            theta, ctheta = d.highest_short_root(c)
            n = self.rank
            m = tuple(tuple(int(i == j) - theta[i] * ctheta[j] for j in range(n)) for i in range(n))
            # affine reflection mu -> s_theta(mu) + theta = s_theta(mu - theta)
            gens.append(WeylElt(self, self._findex[m], tuple(-x for x in theta)))
            names.append("s0" + chr(ord("a") + c))
        self.generators: list[WeylElt] = gens
        self.generator_names: list[str] = names
        self.n_finite_generators = d.n_simple
        self._gen_by_name = dict(zip(names, gens))
        self._gen_index = {g: k for k, g in enumerate(gens)}

    def generator_index(self, s: WeylElt) -> int:
        return self._gen_index[s]

    def right_descents(self, w: WeylElt) -> list[int]:
        lw = self.length(w)
        return [k for k, s in enumerate(self.generators) if self.length(self.mul(w, s)) < lw]

    def left_descents(self, w: WeylElt) -> list[int]:
        lw = self.length(w)
        return [k for k, s in enumerate(self.generators) if self.length(self.mul(s, w)) < lw]

    def decompose(self, w: WeylElt) -> tuple[WeylElt, tuple[int, ...]]:
        """Write ``w = omega * s_{k1} ... s_{km}`` with ``l(omega) = 0`` and a reduced word."""
        r = self._decomp_cache.get(w)
        if r is not None:
            return r
        word = []
        x = w
        lx = self.length(x)
        while lx > 0:
            for k, s in enumerate(self.generators):
                y = self.mul(x, s)
                ly = self.length(y)
                if ly < lx:
                    word.append(k)
                    x, lx = y, ly
                    break
            else:  # pragma: no cover - would mean the length function is wrong
                raise AssertionError(f"no descent found for {w}")
        r = (x, tuple(reversed(word)))
        self._decomp_cache[w] = r
        return r

    def omega_of(self, w: WeylElt) -> tuple[WeylElt, WeylElt]:
        """Return ``(u, omega)`` with ``w = u * omega``, u in W and ``l(omega) = 0``."""
        r = self._omega_cache.get(w)
        if r is not None:
            return r
        omega, word = self.decompose(w)
        # w = omega * s... = (omega s... omega^-1) omega
        u = self.mul(w, self.inverse(omega))
        r = (u, omega)
        self._omega_cache[w] = r
        return r

    def in_W(self, w: WeylElt) -> bool:
        return self.omega_of(w)[1] == self.identity

    def conjugate_generator(self, omega: WeylElt, k: int) -> int:
        """Index of the generator ``omega s_k omega^-1``."""
        c = self.mul(self.mul(omega, self.generators[k]), self.inverse(omega))
        return self._gen_index[c]

    def omegas(self) -> list[WeylElt]:
        """All length-zero elements (semisimple data only; Omega ~ X / Z Phi)."""
        if not self.datum.is_semisimple():
            raise DatumError("Omega is infinite for non-semisimple data; use omega_generators")
        return list(self._omegas_semisimple())

    @lru_cache(maxsize=None)
    def _omegas_semisimple(self) -> list[WeylElt]:
        from sympy import Matrix

        order = abs(int(Matrix(self.datum.cartan).det()))
        found = {self.identity}
        # fundamental weights represent every class of X / Z Phi
        for i in range(self.rank):
            lam = tuple(int(i == j) for j in range(self.rank))
            found.add(self.omega_of(self.translation(lam))[1])
        frontier = list(found)
        while frontier:
            new = []
            for a in frontier:
                for b in list(found):
                    c = self.mul(a, b)
                    if c not in found:
                        found.add(c)
                        new.append(c)
            frontier = new
        assert len(found) == order, (len(found), order)
        return sorted(found, key=lambda w: (w.fin, w.trans))

    def omega_generators(self) -> list[WeylElt]:
        """A generating set of Omega closed under inverses.

        Semisimple: all of Omega minus the identity.  GL data: for each
        block the length-zero element of the coset of ``t_{e_first}``, and
        its inverse.
        """
        if self.datum.is_semisimple():
            return [w for w in self.omegas() if w != self.identity]
        if self.datum.gl_blocks is None:
            raise DatumError("Omega generators are only provided for semisimple and GL data")
        out = []
        offset = 0
        for size in self.datum.gl_blocks:
            lam = tuple(int(j == offset) for j in range(self.rank))
            om = self.omega_of(self.translation(lam))[1]
            out.extend([om, self.inverse(om)])
            offset += size
        return out

    def omega_set(self, bound: int = 1) -> list[WeylElt]:
        """Omega itself (semisimple) or products of generator powers in [-bound, bound] (GL)."""
        if self.datum.is_semisimple():
            return self.omegas()
        gens = self.omega_generators()[::2]
        out = [self.identity]
        for g in gens:
            powers = [self.identity]
            p = self.identity
            q = self.identity
            gi = self.inverse(g)
            for _ in range(bound):
                p = self.mul(p, g)
                q = self.mul(q, gi)
                powers.extend([p, q])
            out = [self.mul(a, b) for a in out for b in powers]
        return sorted(set(out), key=lambda w: (w.fin, w.trans))

    # -- cosets ------------------------------------------------------------

    def min_coset_rep(self, lam: Sequence[int]) -> WeylElt:
        """w_lam: the shortest element of the right coset W_f t_lam."""
        lam = _check_integral(lam)
        r = self._mincoset_cache.get(lam)
        if r is None:
            best = None
            for i in range(self.finite_order):
                w = WeylElt(self, i, lam)
                if best is None or self.length(w) < self.length(best):
                    best = w
            r = best
            self._mincoset_cache[lam] = r
        return r

    def in_fw(self, w: WeylElt) -> bool:
        """No left descent in W_f (w is the shortest element of W_f w)."""
        lw = self.length(w)
        return all(
            self.length(self.mul(self.generators[i], w)) > lw for i in range(self.n_finite_generators)
        )

    def in_fwf(self, w: WeylElt) -> bool:
        if not self.in_fw(w):
            return False
        return all(pairing(w.trans, cr) <= 0 for cr in self.datum.simple_coroots)

    def is_double_coset_minimal(self, w: WeylElt) -> bool:
        lw = self.length(w)
        for i in range(self.n_finite_generators):
            s = self.generators[i]
            if self.length(self.mul(s, w)) < lw or self.length(self.mul(w, s)) < lw:
                return False
        return True

    # -- dot action and alcoves -----------------------------------------

    def dot(self, w: WeylElt, mu: Sequence, ell: int, rho_vec: Sequence | None = None) -> tuple:
        """w ._ell mu = v(mu + ell*lam + rho) - rho for w = v t_lam.

        ``rho_vec`` may be any central shift of rho; the result does not
        depend on the choice.
        """
        base = tuple(m + ell * t for m, t in zip(mu, w.trans))
        if rho_vec is None:
            moved = self.fapply(w.fin, base)
            return tuple(a + b for a, b in zip(moved, self._rho_shift[w.fin]))
        shifted = tuple(a + b for a, b in zip(base, rho_vec))
        moved = self.fapply(w.fin, shifted)
        return tuple(a - b for a, b in zip(moved, rho_vec))

    def longest_finite(self) -> WeylElt:
        return self.finite_elt(self.w0_index)

    # -- balls -------------------------------------------------------------

    def ball(self, L: int, omegas: Sequence[WeylElt] | None = None) -> list[WeylElt]:
        """All w in W with l(w) <= L, optionally times right Omega-translates.

        Sorted by (length, finite index, translation).
        """
        if L < 0:
            raise ValueError("radius must be nonnegative")
        seen = {self.identity}
        layer = [self.identity]
        for _ in range(L):
            new = []
            for w in layer:
                lw = self.length(w)
                for s in self.generators:
                    x = self.mul(w, s)
                    if x not in seen and self.length(x) == lw + 1:
                        seen.add(x)
                        new.append(x)
            layer = new
        out = seen
        if omegas is not None:
            out = {self.mul(w, om) for w in seen for om in omegas}
        return sorted(out, key=WeylElt.sort_key)

    # -- text format -------------------------------------------------------

    @lru_cache(maxsize=None)
    def _lex_word(self, fin: int) -> tuple[int, ...]:
        word = []
        i = fin
        while self._flen[i] > 0:
            for k in range(self.n_finite_generators):
                si = self._findex[self._sref[k]]
                j = self.fmul(si, i)
                if self._flen[j] < self._flen[i]:
                    word.append(k)
                    i = j
                    break
        return tuple(word)

    def format(self, w: WeylElt) -> str:
        """``t[lam]*word`` with ``w = t_lam * x``, x in W_f as its lex-first reduced word."""
        lam = self.fapply(w.fin, w.trans)
        word = "".join(self.generator_names[k] for k in self._lex_word(w.fin)) or "e"
        return "t[" + ",".join(str(c) for c in lam) + "]*" + word

    _TOKEN = re.compile(r"s0[a-z]|s[1-9][0-9]*|e")

    def parse(self, text: str) -> WeylElt:
        """Inverse of ``format``; the word may use any generator names."""
        text = text.strip().replace(" ", "")
        w = self.identity
        rest = text
        if text.startswith("t["):
            close = text.index("]")
            body = text[2:close]
            lam = tuple(int(x) for x in body.split(",")) if body else ()
            if len(lam) != self.rank:
                raise ValueError(f"translation {lam} has wrong rank in {text!r}")
            w = self.translation(lam)
            rest = text[close + 1 :]
            if rest.startswith("*"):
                rest = rest[1:]
            elif rest:
                raise ValueError(f"expected '*' after translation in {text!r}")
        pos = 0
        while pos < len(rest):
            m = self._TOKEN.match(rest, pos)
            if m is None:
                raise ValueError(f"cannot parse word {rest!r}")
            tok = m.group(0)
            if tok != "e":
                if tok not in self._gen_by_name:
                    raise ValueError(f"unknown generator {tok!r}")
                w = self.mul(w, self._gen_by_name[tok])
            pos = m.end()
        return w


@lru_cache(maxsize=None)
def weyl_group(d: RootDatum) -> AffineWeylGroup:
    return AffineWeylGroup(d)


def alcove_of(lam: Sequence, d: RootDatum, ell: int) -> AlcoveCoords:
    """The lower closure containing lam: n_a ell <= <lam + rho, a^vee> < (n_a + 1) ell."""
    if ell <= coxeter_number(d):
        raise DatumError(f"ell = {ell} must exceed the Coxeter number")
    lam = _check_integral(lam)
    return AlcoveCoords(
        tuple((pairing(lam, cr) + ht) // ell for cr, ht in zip(d.positive_coroots, d.coroot_heights))
    )


def alcove_of_elt(w: WeylElt, cfg: Config) -> AlcoveCoords:
    return alcove_of(w.group.dot(w, (0,) * w.group.rank, cfg.ell), w.group.datum, cfg.ell)
