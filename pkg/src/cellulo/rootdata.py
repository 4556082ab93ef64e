"""Root data, weights, pairings and the built-in test zoo.

Weights are plain tuples of coordinates in a fixed basis of X; coweights
are tuples in the dual basis of Y, so the pairing is the dot product.
Elements of X are integer tuples; rho and rho-shifted quantities may
carry ``Fraction`` entries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

__all__ = [
    "RootDatum",
    "Config",
    "DatumError",
    "pairing",
    "build_gl",
    "build_simple",
    "datum_from_json",
    "parse_datum_selector",
    "coxeter_number",
    "rho",
    "is_dominant",
]

Weight = tuple


class DatumError(ValueError):
    pass


def pairing(lam: Sequence, cow: Sequence):
    return sum(a * b for a, b in zip(lam, cow))


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vscale(k, a):
    return tuple(k * x for x in a)


@dataclass(frozen=True)
class RootDatum:
    """A based root datum.

    ``cartan[i][j] = <alpha_j, alpha_i^vee>`` (row indexes the coroot).
    """

    rank: int
    simple_roots: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[tuple[int, ...], ...]
    name: str = ""
    gl_blocks: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        if self.rank < 1:
            raise DatumError("rank must be positive")
        if len(self.simple_roots) != len(self.simple_coroots):
            raise DatumError("need as many simple coroots as simple roots")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.rank:
                raise DatumError(f"vector {v} does not have length {self.rank}")
        c = self.cartan
        n = len(c)
        for i in range(n):
            if c[i][i] != 2:
                raise DatumError(f"cartan[{i}][{i}] = {c[i][i]} != 2")
            for j in range(n):
                if i != j and (c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0)):
                    raise DatumError("not a generalized Cartan matrix")
        if not self.is_torsion_free():
            raise DatumError("Y / Z Phi^vee has torsion")
        self.positive_roots  # noqa: B018 -- fails fast on infinite type

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(pairing(self.simple_roots[j], self.simple_coroots[i]) for j in range(self.n_simple))
            for i in range(self.n_simple)
        )

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Simple indices grouped into connected components of the Dynkin graph."""
        n = self.n_simple
        seen: set[int] = set()
        comps = []
        for start in range(n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.cartan[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def component_labels(self) -> tuple[tuple[int, ...], ...]:
        return self.components

    @cached_property
    def _root_system(self):
        # roots in simple-root coordinates paired with coroots in simple-coroot coordinates
        n = self.n_simple
        c = self.cartan
        start = [(tuple(int(i == k) for k in range(n)), tuple(int(i == k) for k in range(n))) for i in range(n)]
        seen = set(start)
        frontier = list(start)
        while frontier:
            new = []
            for r, cr in frontier:
                for j in range(n):
                    a = sum(r[k] * c[j][k] for k in range(n))
                    b = sum(cr[k] * c[k][j] for k in range(n))
                    r2 = tuple(r[k] - (a if k == j else 0) for k in range(n))
                    cr2 = tuple(cr[k] - (b if k == j else 0) for k in range(n))
                    if (r2, cr2) not in seen:
                        seen.add((r2, cr2))
                        new.append((r2, cr2))
                        if len(seen) > 10_000:
                            raise DatumError("root system is not finite")
            frontier = new
        pos = [(r, cr) for r, cr in seen if all(x >= 0 for x in r)]
        pos.sort(key=lambda rc: (sum(rc[0]), tuple(-x for x in rc[0])))
        return pos

    @cached_property
    def positive_roots_simple_coords(self) -> tuple[tuple[int, ...], ...]:
        return tuple(r for r, _ in self._root_system)

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        """Positive roots as vectors in X, sorted by height."""
        out = []
        for r, _ in self._root_system:
            v = (0,) * self.rank
            for k, m in enumerate(r):
                v = _vadd(v, _vscale(m, self.simple_roots[k]))
            out.append(v)
        return tuple(out)

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """Coroots aligned with ``positive_roots``, as vectors in Y."""
        out = []
        for _, cr in self._root_system:
            v = (0,) * self.rank
            for k, m in enumerate(cr):
                v = _vadd(v, _vscale(m, self.simple_coroots[k]))
            out.append(v)
        return tuple(out)

    @cached_property
    def coroot_heights(self) -> tuple[int, ...]:
        """``<rho, alpha^vee>`` for each positive coroot."""
        return tuple(sum(cr) for _, cr in self._root_system)

    def highest_root(self, component: int) -> Weight:
        comp = set(self.components[component])
        best = None
        for rs, root in zip(self.positive_roots_simple_coords, self.positive_roots):
            if all(rs[k] == 0 for k in range(self.n_simple) if k not in comp):
                if best is None or sum(rs) > best[0]:
                    best = (sum(rs), root)
        return best[1]

    def highest_short_root(self, component: int) -> tuple[Weight, tuple[int, ...]]:
        """The positive root of ``component`` whose coroot is the highest coroot, with that coroot.

        Translations in W are by Z Phi, so the affine simple reflection of W
        is the reflection in ``<mu, theta^vee> = 1`` for this root theta.
        """
        comp = set(self.components[component])
        best = None
        for (_, cr), root, coroot in zip(self._root_system, self.positive_roots, self.positive_coroots):
            if all(cr[k] == 0 for k in range(self.n_simple) if k not in comp):
                if best is None or sum(cr) > best[0]:
                    best = (sum(cr), root, coroot)
        return best[1], best[2]

    def is_semisimple(self) -> bool:
        return self.n_simple == self.rank

    def is_torsion_free(self) -> bool:
        """Whether Y / Z Phi^vee is torsion-free (Smith normal form of the coroot matrix)."""
        if not self.simple_coroots:
            return True
        from sympy import Matrix, ZZ
        from sympy.matrices.normalforms import smith_normal_form

        snf = smith_normal_form(Matrix(self.simple_coroots).T, domain=ZZ)
        diag = [abs(snf[i, i]) for i in range(min(snf.shape))]
        return all(d == 1 for d in diag)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "simple_roots": [list(r) for r in self.simple_roots],
            "simple_coroots": [list(r) for r in self.simple_coroots],
            "name": self.name,
        }


@dataclass(frozen=True)
class Config:
    ell: int
    ball_radius: int = 8

    def validate(self, d: RootDatum) -> "Config":
        h = coxeter_number(d)
        if self.ell <= h:
            raise DatumError(f"ell = {self.ell} must exceed the Coxeter number {h}")
        if self.ball_radius < 0:
            raise DatumError("ball_radius must be nonnegative")
        return self


# -- constructors ------------------------------------------------------


def build_gl(a: Sequence[int]) -> RootDatum:
    """Root datum of GL_{a_1} x ... x GL_{a_k} with X = Z^(sum a)."""
    a = tuple(int(x) for x in a)
    if not a or any(x < 1 for x in a):
        raise DatumError("GL block sizes must be a nonempty tuple of positive integers")
    n = sum(a)
    roots = []
    offset = 0
    for size in a:
        for j in range(offset, offset + size - 1):
            roots.append(tuple(1 if k == j else -1 if k == j + 1 else 0 for k in range(n)))
        offset += size
    name = "GL:" + ",".join(map(str, a))
    return RootDatum(n, tuple(roots), tuple(roots), name=name, gl_blocks=a)


_CARTANS = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def build_simple(type_label: str, lattice: str = "simply-connected") -> RootDatum:
    """Simply connected datum of type A1, A2, B2 or G2.

    X is the weight lattice in the basis of fundamental weights, so the
    simple coroots are the standard basis of Y and the simple root
    alpha_j has coordinates given by column j of the Cartan matrix.
    """
    if lattice != "simply-connected":
        raise DatumError(f"unsupported lattice {lattice!r}")
    try:
        c = _CARTANS[type_label]
    except KeyError:
        raise DatumError(f"unsupported type {type_label!r}") from None
    n = len(c)
    roots = tuple(tuple(c[i][j] for i in range(n)) for j in range(n))
    coroots = tuple(tuple(int(i == k) for k in range(n)) for i in range(n))
    return RootDatum(n, roots, coroots, name=type_label)


def datum_from_json(obj: dict | str) -> RootDatum:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return RootDatum(
            int(obj["rank"]),
            tuple(tuple(int(x) for x in r) for r in obj["simple_roots"]),
            tuple(tuple(int(x) for x in r) for r in obj["simple_coroots"]),
            name=str(obj.get("name", "")),
        )
    except (KeyError, TypeError) as exc:
        raise DatumError(f"malformed datum description: {exc}") from exc


def parse_datum_selector(sel: str) -> RootDatum:
    """``'A2'`` or ``'GL:2,3'``."""
    sel = sel.strip()
    if sel.upper().startswith("GL:"):
        try:
            blocks = tuple(int(x) for x in sel[3:].split(","))
        except ValueError:
            raise DatumError(f"bad GL selector {sel!r}") from None
        return build_gl(blocks)
    return build_simple(sel)


# -- basic invariants --------------------------------------------------


def coxeter_number(d: RootDatum) -> int:
    """Height of the highest root plus one, maximised over components; 1 for a torus."""
    if not d.components:
        return 1
    best = 0
    for comp in d.components:
        comp_set = set(comp)
        for rs in d.positive_roots_simple_coords:
            if all(rs[k] == 0 for k in range(d.n_simple) if k not in comp_set):
                best = max(best, sum(rs))
    return best + 1


def rho(d: RootDatum) -> tuple[Fraction, ...]:
    total = (0,) * d.rank
    for r in d.positive_roots:
        total = _vadd(total, r)
    return tuple(Fraction(x, 2) for x in total)


def two_rho(d: RootDatum) -> tuple[int, ...]:
    total = (0,) * d.rank
    for r in d.positive_roots:
        total = _vadd(total, r)
    return total


def rho_integral(d: RootDatum) -> tuple[int, ...]:
    """For GL data, the integral central shift (n-1, ..., 0) of rho in each block."""
    if d.gl_blocks is None:
        raise DatumError("integral rho is only provided for GL data")
    out = []
    for size in d.gl_blocks:
        out.extend(range(size - 1, -1, -1))
    return tuple(out)


def _check_integral(lam: Sequence) -> tuple[int, ...]:
    out = []
    for x in lam:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise DatumError(f"weight {tuple(lam)} is not integral")
            x = x.numerator
        elif not isinstance(x, int):
            raise DatumError(f"weight {tuple(lam)} is not integral")
        out.append(int(x))
    return tuple(out)


def is_dominant(lam: Sequence, d: RootDatum) -> bool:
    lam = _check_integral(lam)
    return all(pairing(lam, cr) >= 0 for cr in d.simple_coroots)
