"""Multipartition combinatorics for general linear groups.

Nilpotent orbits of GL_a = GL_{a_1} x ... x GL_{a_k} are labelled by
multipartitions of a.  The reductive part of the centralizer of the orbit
labelled by pi is GL_{mult(pi)}, and iterating gives chains of
multipartitions; those that reach a torus are the weight-cell labels.

Also here: the zero-orbit weight formula, the l-adic descent of weights,
the Frobenius projectivity bound, and nilpotent orbit counts for the
small types used by the cell-count checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .rootdata import Config, DatumError, RootDatum, _check_integral, is_dominant, pairing, two_rho
from .weyl import weyl_group

__all__ = [
    "Partition",
    "Multipartition",
    "CellLabel",
    "OutOfRegime",
    "partitions",
    "mult",
    "enumerate_multipartitions",
    "semisimple_rank",
    "enumerate_cell_labels",
    "format_table1",
    "zero_orbit_label",
    "regular_label",
    "in_zero_orbit_regime",
    "zero_orbit_sigma",
    "w_mu",
    "scaling_step",
    "scaling_chain",
    "frobenius_projective_bound",
    "orbit_count",
]

BULLET = "•"


class OutOfRegime(ValueError):
    """The weight is outside -X^+ - 2rho."""


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> tuple[int, ...]:
        """Exponents of the distinct parts, largest part first."""
        out: list[int] = []
        prev = None
        for p in self.parts:
            if p == prev:
                out[-1] += 1
            else:
                out.append(1)
                prev = p
        return tuple(out)

    def __str__(self) -> str:
        chunks = []
        for p in dict.fromkeys(self.parts):
            k = self.parts.count(p)
            chunks.append(str(p) if k == 1 else f"{p}^{k}")
        return "[" + ",".join(chunks) + "]"


@dataclass(frozen=True)
class Multipartition:
    parts: tuple[Partition, ...]

    @classmethod
    def of(cls, *parts: Iterable[int]) -> "Multipartition":
        return cls(tuple(Partition.of(p) for p in parts))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(p.size for p in self.parts)

    def is_zero_orbit(self) -> bool:
        return all(set(p.parts) == {1} for p in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def mult(pi: Multipartition) -> tuple[int, ...]:
    """Concatenated multiplicity lists of the constituents of ``pi``."""
    out: list[int] = []
    for p in pi.parts:
        out.extend(p.multiplicities())
    return tuple(out)


def _trivial(a: Sequence[int]) -> bool:
    return all(x == 1 for x in a)


@dataclass(frozen=True)
class CellLabel:
    """Nontrivial prefix of an eventually trivial chain of multipartitions of ``a``."""

    a: tuple[int, ...]
    seq: tuple[Multipartition, ...]

    def __post_init__(self):
        cur = tuple(self.a)
        if not self.seq and not _trivial(cur):
            raise ValueError(f"empty chain for nontrivial a = {cur}")
        for j, pi in enumerate(self.seq):
            if _trivial(cur):
                raise ValueError(f"term {j} follows a trivial group")
            if pi.sizes != cur:
                raise ValueError(f"term {j} = {pi} is not a multipartition of {cur}")
            cur = mult(pi)
        if not _trivial(cur):
            raise ValueError("chain does not end at a torus")

    def __len__(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return "(" + "".join(f"{pi}, " for pi in self.seq) + BULLET + ")"


def partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order: ``[n]`` first, ``[1^n]`` last."""

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in rec(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _multipartitions(a: tuple[int, ...]) -> tuple[Multipartition, ...]:
    return tuple(Multipartition(ps) for ps in product(*(tuple(partitions(x)) for x in a)))


def enumerate_multipartitions(a: Sequence[int]) -> list[Multipartition]:
    """All multipartitions of ``a``; each component runs in reverse-lex order, the last fastest."""
    a = tuple(int(x) for x in a)
    if any(x < 1 for x in a):
        raise ValueError("entries of a must be positive")
    return list(_multipartitions(a))


def semisimple_rank(a: Sequence[int]) -> int:
    return sum(x - 1 for x in a)


def enumerate_cell_labels(a: Sequence[int], max_terms: int) -> list[CellLabel]:
    """Eventually trivial chains with at most ``max_terms`` nontrivial terms, depth first."""
    a = tuple(int(x) for x in a)
    if max_terms < 0:
        raise ValueError("max_terms must be nonnegative")
    out: list[CellLabel] = []

    def rec(prefix: tuple[Multipartition, ...], b: tuple[int, ...]):
        if _trivial(b):
            out.append(CellLabel(a, prefix))
            return
        if len(prefix) == max_terms:
            return
        for pi in _multipartitions(b):
            rec(prefix + (pi,), mult(pi))

    rec((), a)
    return out


def format_table1(labels: Iterable[CellLabel]) -> str:
    return "".join(f"{lab}\n" for lab in labels)


def zero_orbit_label(a: Sequence[int]) -> Multipartition:
    return Multipartition.of(*([1] * x for x in a))


def regular_label(a: Sequence[int]) -> Multipartition:
    return Multipartition.of(*([x] for x in a))


# -- weights ------------------------------------------------------------


def in_zero_orbit_regime(mu: Sequence, d: RootDatum) -> bool:
    """mu in -X^+ - 2rho, i.e. <mu, alpha^vee> <= -2 for every simple coroot."""
    mu = _check_integral(mu)
    return all(pairing(mu, cr) <= -2 for cr in d.simple_coroots)


def zero_orbit_sigma(mu: Sequence, d: RootDatum) -> tuple[int, ...]:
    """``w0 mu - 2 rho``: the highest weight paired with mu on the zero orbit."""
    mu = _check_integral(mu)
    if not in_zero_orbit_regime(mu, d):
        raise OutOfRegime(f"{mu} is not in -X^+ - 2rho")
    g = weyl_group(d)
    w0mu = g.fapply(g.w0_index, mu)
    return tuple(x - y for x, y in zip(w0mu, two_rho(d)))


def w_mu(mu: Sequence, d: RootDatum):
    """The element of fW_ext^f attached to an antidominant weight."""
    mu = _check_integral(mu)
    if any(pairing(mu, cr) > 0 for cr in d.simple_coroots):
        raise DatumError(f"{mu} is not antidominant")
    return weyl_group(d).min_coset_rep(mu)


def scaling_step(mu_prev: Sequence, cfg: Config) -> tuple[int, ...] | None:
    """mu with ``mu_prev = ell * mu``, or None if ``mu_prev`` is not in ell X."""
    mu_prev = _check_integral(mu_prev)
    if any(x % cfg.ell for x in mu_prev):
        return None
    return tuple(x // cfg.ell for x in mu_prev)


def scaling_chain(mu: Sequence, cfg: Config, d: RootDatum) -> list[tuple[int, ...]]:
    """``mu_0 = mu, mu_1, ...`` with ``mu_{i-1} = ell mu_i``, all in -X^+ - 2rho.

    Stops at the first step that leaves the lattice or the regime; the
    depth of the chain is ``len - 1``.
    """
    cur = _check_integral(mu)
    if not in_zero_orbit_regime(cur, d):
        raise OutOfRegime(f"{cur} is not in -X^+ - 2rho")
    chain = [cur]
    while True:
        nxt = scaling_step(cur, cfg)
        if nxt is None or not in_zero_orbit_regime(nxt, d):
            return chain
        chain.append(nxt)
        cur = nxt


def frobenius_projective_bound(nu: Sequence, m: int, cfg: Config, d: RootDatum) -> bool:
    """Whether ``<nu, alpha^vee> >= ell^m - 1`` for every simple coroot."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if not is_dominant(nu, d):
        raise DatumError(f"{tuple(nu)} is not dominant")
    bound = cfg.ell**m - 1
    return all(pairing(nu, cr) >= bound for cr in d.simple_coroots)


# -- orbit counts -------------------------------------------------------


def _count_partitions(n: int, keep) -> int:
    return sum(1 for p in partitions(n) if keep(p))


def _type_b(rank: int) -> int:
    # so_{2n+1}: partitions of 2n+1 whose even parts occur with even multiplicity
    return _count_partitions(2 * rank + 1, lambda p: all(p.parts.count(x) % 2 == 0 for x in set(p.parts) if x % 2 == 0))


def _type_c(rank: int) -> int:
    # sp_{2n}: partitions of 2n whose odd parts occur with even multiplicity
    return _count_partitions(2 * rank, lambda p: all(p.parts.count(x) % 2 == 0 for x in set(p.parts) if x % 2 == 1))


# G2 orbits by Bala-Carter label: 0, A1, ~A1, G2(a1), G2.  Distinguished
# parabolics of G2 give G2 and G2(a1); Levi subalgebras A1 (long root)
# and ~A1 (short root) contribute their principal orbits; the zero orbit
# comes from the Cartan.
_G2_ORBITS = ("0", "A1", "~A1", "G2(a1)", "G2")


def _component_type(d: RootDatum, comp: tuple[int, ...]) -> tuple[str, int]:
    c = d.cartan
    n = len(comp)
    if n == 1:
        return "A", 1
    links = {}
    for i in comp:
        for j in comp:
            if i < j and c[i][j] != 0:
                links[(i, j)] = c[i][j] * c[j][i]
    degree = {i: sum(1 for e in links if i in e) for i in comp}
    if len(links) != n - 1 or max(degree.values()) > 2:
        raise DatumError("only type A, B2 and G2 components are supported")
    bonds = sorted(links.values())
    if bonds == [1] * (n - 1):
        return "A", n
    if n == 2 and bonds == [2]:
        return "B", 2
    if n == 2 and bonds == [3]:
        return "G", 2
    raise DatumError("only type A, B2 and G2 components are supported")


def orbit_count(d: RootDatum) -> int:
    """Number of nilpotent orbits of the Lie algebra of the datum's group.

    A product over Dynkin components; the centre contributes one orbit.
    For GL_a this is the number of multipartitions of a.
    """
    if d.gl_blocks is not None:
        return len(_multipartitions(tuple(d.gl_blocks)))
    total = 1
    for comp in d.components:
        kind, rank = _component_type(d, comp)
        if kind == "A":
            total *= _count_partitions(rank + 1, lambda p: True)
        elif kind == "B":
            total *= _type_b(rank)
        else:
            total *= len(_G2_ORBITS)
    return total
