"""Cells from principal based submodules and ideals on truncated balls.

Vertices are canonical basis indices inside a ball; an edge ``u -> x``
records that the canonical element at x occurs in the product of the one
at u with a generator (a canonical ``H_s`` or a length-zero ``H_omega``).
Reachability from u is then the index set of the principal based
submodule (or ideal) generated by u, and cells are the strongly connected
components.

Completeness protocol.  Products of frontier vertices leave the ball, so
a path between two vertices may exist that the truncated graph does not
see.  A cell is ``certified`` when it cannot reach the frontier at all:
then nothing outside the ball can change it.  Infinite cells always reach
the frontier, and elements near the boundary often return to their cell
only through longer elements.  So components are computed on the ball of
radius ``R + margin`` and reported on the ball of radius R, and the whole
computation is repeated at ``R + 2 margin``; a reported cell is
``complete`` when it is certified or when the second computation yields
the same set.  Anything else is reported as incomplete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .asph import AsphElt, act, canonical_asph, expand_in_canonical_asph
from .hecke import (
    CanonicalTable,
    HeckeElt,
    TableRadiusError,
    canonical_basis,
    canonical_generator,
    canonical_product_generator,
    expand_in_canonical,
    mul_standard,
)
from .rootdata import Config, RootDatum
from .weyl import AffineWeylGroup, WeylElt, weyl_group

__all__ = [
    "CellGraph",
    "Cell",
    "CellPartition",
    "build_cell_graph",
    "cells_from_graph",
    "compute_cells",
    "check_two_sided_vs_antispherical",
    "check_omega_stability",
    "check_w_restriction",
    "MatchingReport",
    "SIDES",
]

SIDES = ("antispherical", "right", "left", "two-sided")


@dataclass
class CellGraph:
    group: AffineWeylGroup
    side: str
    radius: int
    vertices: list[WeylElt]
    edges: dict[WeylElt, set[WeylElt]]
    frontier: set[WeylElt]
    omega_generators: list[WeylElt] = field(default_factory=list)
    omega_set: list[WeylElt] = field(default_factory=list)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        for u, targets in self.edges.items():
            g.add_edges_from((u, x) for x in targets)
        return g


@dataclass
class Cell:
    id: int
    members: list[WeylElt]
    complete: bool
    certified: bool
    touches_frontier: bool


@dataclass
class CellPartition:
    side: str
    radius: int
    cells: list[Cell]
    order: set[tuple[int, int]]  # (i, j): cell j lies in the closure of cell i
    cell_of: dict[WeylElt, int]
    margin: int | None = None

    def complete_cells(self) -> list[Cell]:
        return [c for c in self.cells if c.complete]

    def same_cell(self, x: WeylElt, y: WeylElt) -> bool:
        return self.cell_of[x] == self.cell_of[y]


def _vertex_set(g: AffineWeylGroup, radius: int, side: str, omega_set: Sequence[WeylElt]) -> list[WeylElt]:
    verts = g.ball(radius, omegas=omega_set)
    if side == "antispherical":
        verts = [w for w in verts if g.in_fw(w)]
    return verts


def _default_omegas(g: AffineWeylGroup, with_omega: bool, omega_bound: int):
    if not with_omega:
        return [g.identity], []
    return g.omega_set(omega_bound), g.omega_generators()


def build_cell_graph(
    d: RootDatum | AffineWeylGroup,
    cfg: Config,
    side: str,
    *,
    table: CanonicalTable | None = None,
    method: str = "mu",
    with_omega: bool = True,
    omega_bound: int = 1,
) -> CellGraph:
    """Edges of the based-closure relation on a ball of radius ``cfg.ball_radius``.

    ``method='mu'`` reads products off the mu-coefficients of the table
    (radius >= ball radius).  ``method='expand'`` multiplies out in the
    standard basis and expands back into the canonical basis, which needs
    a table of radius ``ball_radius + 1``; it is the slow cross-check.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    g = d if isinstance(d, AffineWeylGroup) else weyl_group(d)
    R = cfg.ball_radius
    need = R if method == "mu" else R + 1
    if table is None:
        table = canonical_basis(g, need)
    elif table.radius < need:
        raise TableRadiusError(f"table radius {table.radius} < required {need}")
    omega_set, omega_gens = _default_omegas(g, with_omega, omega_bound)
    verts = _vertex_set(g, R, side, omega_set)
    vset = set(verts)
    edges: dict[WeylElt, set[WeylElt]] = {u: set() for u in verts}
    frontier: set[WeylElt] = set()

    acting = {"antispherical": ("right",), "right": ("right",), "left": ("left",), "two-sided": ("right", "left")}[side]
    ngen = len(g.generators)

    if method == "expand":
        gens_h = [canonical_generator(g, k) for k in range(ngen)]
        if side == "antispherical":
            nbasis = canonical_asph(table, omegas=omega_set)

    for u in verts:
        targets: set[WeylElt] = set()
        for how in acting:
            for k in range(ngen):
                if method == "mu":
                    prod = canonical_product_generator(table, u, k, how)
                    if side == "antispherical":
                        prod = {x: c for x, c in prod.items() if g.in_fw(x)}
                    targets.update(prod)
                elif side == "antispherical":
                    m = act(nbasis[u], gens_h[k])
                    try:
                        targets.update(expand_in_canonical_asph(m, nbasis))
                    except TableRadiusError:
                        raise TableRadiusError(f"product of {u} escapes the expansion table") from None
                else:
                    hu = table.element(u)
                    prod_h = mul_standard(hu, gens_h[k]) if how == "right" else mul_standard(gens_h[k], hu)
                    targets.update(expand_in_canonical(prod_h, table))
            for om in omega_gens:
                targets.add(g.mul(u, om) if how == "right" else g.mul(om, u))
        for x in targets:
            if x in vset:
                edges[u].add(x)
            else:
                frontier.add(u)
    return CellGraph(g, side, R, verts, edges, frontier, list(omega_gens), list(omega_set))


def _sccs(graph: CellGraph) -> list[list[WeylElt]]:
    nxg = graph.to_networkx()
    comps = [sorted(c, key=WeylElt.sort_key) for c in nx.strongly_connected_components(nxg)]
    comps.sort(key=lambda c: c[0].sort_key())
    return comps


def _restricted(comps, keep) -> list[list[WeylElt]]:
    out = [[x for x in c if x in keep] for c in comps]
    out = [c for c in out if c]
    out.sort(key=lambda c: c[0].sort_key())
    return out


def cells_from_graph(
    graph: CellGraph,
    probe: CellGraph | None = None,
    inner_radius: int | None = None,
) -> CellPartition:
    """Strongly connected components, numbered by their shortest member.

    With ``inner_radius`` the components are restricted to vertices of
    length at most ``inner_radius``.  ``probe`` is the same relation on a
    larger ball; a cell is complete when the probe yields the same set on
    the reported vertices (see the module docstring).
    """
    g = graph.group
    full = _sccs(graph)
    keep = set(graph.vertices)
    if inner_radius is not None:
        keep = {x for x in graph.vertices if g.length(x) <= inner_radius}
    comps = _restricted(full, keep)
    cell_of = {x: i for i, comp in enumerate(comps) for x in comp}

    full_of = {x: i for i, comp in enumerate(full) for x in comp}
    cond = nx.condensation(graph.to_networkx(), scc=[set(c) for c in full])
    frontier_full = {full_of[x] for x in graph.frontier}
    reach_full = {i: nx.descendants(cond, i) | {i} for i in cond.nodes}
    order = set()
    for i, comp in enumerate(comps):
        fi = full_of[comp[0]]
        targets = {cell_of[x] for j in reach_full[fi] for x in full[j] if x in cell_of}
        order.update((i, j) for j in targets)

    probe_sets = None
    if probe is not None:
        probe_sets = {frozenset(c) for c in _restricted(_sccs(probe), keep)}
    cells = []
    for i, comp in enumerate(comps):
        fi = full_of[comp[0]]
        certified = not (reach_full[fi] & frontier_full)
        complete = certified or (probe_sets is not None and frozenset(comp) in probe_sets)
        cells.append(Cell(i, comp, complete, certified, fi in frontier_full))
    radius = graph.radius if inner_radius is None else inner_radius
    margin = graph.radius - radius if inner_radius is not None else None
    return CellPartition(graph.side, radius, cells, order, cell_of, margin)


def compute_cells(
    d: RootDatum | AffineWeylGroup,
    cfg: Config,
    side: str,
    *,
    margin: int = 2,
    with_omega: bool = True,
    omega_bound: int = 1,
    table: CanonicalTable | None = None,
) -> CellPartition:
    """Cells on ``ball(cfg.ball_radius)``.

    Components are computed on the ball of radius ``R + margin`` and
    restricted to radius R; completeness is judged against a second
    computation at ``R + 2 * margin``.
    """
    g = d if isinstance(d, AffineWeylGroup) else weyl_group(d)
    R = cfg.ball_radius
    outer, far = R + margin, R + 2 * margin
    if table is None or table.radius < far:
        table = canonical_basis(g, far)
    kw = dict(table=table, with_omega=with_omega, omega_bound=omega_bound)
    graph = build_cell_graph(g, Config(cfg.ell, outer), side, **kw)
    probe = build_cell_graph(g, Config(cfg.ell, far), side, **kw) if margin > 0 else None
    return cells_from_graph(graph, probe, inner_radius=R)


@dataclass
class MatchingReport:
    """Two-sided cells against antispherical cells on the same ball."""

    bijection: list[tuple[int, int]]  # (two-sided id, antispherical id)
    ok: bool
    problems: list[str]
    incomplete_two_sided: list[int]
    incomplete_antispherical: list[int]

    def to_json(self) -> dict:
        return {
            "bijection": [list(p) for p in self.bijection],
            "ok": self.ok,
            "problems": list(self.problems),
            "incomplete_two_sided": list(self.incomplete_two_sided),
            "incomplete_antispherical": list(self.incomplete_antispherical),
        }


def check_two_sided_vs_antispherical(
    d: RootDatum | AffineWeylGroup,
    cfg: Config,
    *,
    margin: int = 2,
    two_sided: CellPartition | None = None,
    antispherical: CellPartition | None = None,
) -> MatchingReport:
    """Every complete two-sided cell should meet fW in exactly one complete antispherical cell.

    Only complete cells on both sides are matched; incomplete ones are
    listed, never guessed.  ``ok`` requires the matching to be a bijection
    between the complete cells and each antispherical cell to lie inside
    its two-sided cell.
    """
    g = d if isinstance(d, AffineWeylGroup) else weyl_group(d)
    if two_sided is None or antispherical is None:
        table = canonical_basis(g, cfg.ball_radius + 2 * margin)
        if two_sided is None:
            two_sided = compute_cells(g, cfg, "two-sided", margin=margin, table=table)
        if antispherical is None:
            antispherical = compute_cells(g, cfg, "antispherical", margin=margin, table=table)
    problems: list[str] = []
    done_a = {c.id for c in antispherical.cells if c.complete}
    pairs: list[tuple[int, int]] = []
    for c in two_sided.cells:
        if not c.complete:
            continue
        hit = {antispherical.cell_of[x] for x in c.members if x in antispherical.cell_of}
        bad = sorted(hit - done_a)
        good = sorted(hit & done_a)
        if bad:
            problems.append(f"two-sided cell {c.id} meets incomplete antispherical cells {bad}")
        if len(good) != 1:
            problems.append(f"two-sided cell {c.id} meets {len(good)} complete antispherical cells")
            continue
        a = good[0]
        outside = [x for x in antispherical.cells[a].members if two_sided.cell_of.get(x) != c.id]
        if outside:
            problems.append(f"antispherical cell {a} is not contained in two-sided cell {c.id}")
        pairs.append((c.id, a))
    hit_a = [a for _, a in pairs]
    if len(set(hit_a)) != len(hit_a):
        problems.append("two complete two-sided cells share an antispherical cell")
    missing = sorted(done_a - set(hit_a))
    if missing:
        problems.append(f"complete antispherical cells {missing} are not matched")
    return MatchingReport(
        pairs,
        not problems,
        problems,
        [c.id for c in two_sided.cells if not c.complete],
        [c.id for c in antispherical.cells if not c.complete],
    )


def check_omega_stability(partition: CellPartition, d: RootDatum | AffineWeylGroup) -> bool:
    """``w omega ~ w' omega'  <=>  w ~ w'`` on complete cells, for w, w' in W.

    Writing each member as ``x = u omega`` with u in W, the equivalence says
    that the cell of u determines the cell of x, injectively.  Members
    whose W-part lies outside the partition or in an incomplete cell are
    skipped.  With trivial Omega the check is vacuous.
    """
    g = d if isinstance(d, AffineWeylGroup) else weyl_group(d)
    complete = {c.id for c in partition.cells if c.complete}
    forward: dict[int, int] = {}
    seen: dict[int, int] = {}
    for x, cx in partition.cell_of.items():
        if cx not in complete:
            continue
        u, _omega = g.omega_of(x)
        cu = partition.cell_of.get(u)
        if cu is None or cu not in complete:
            continue
        if forward.setdefault(cu, cx) != cx:
            return False
    # injectivity: two W-cells never share an extended cell unless equal
    for cu, cx in forward.items():
        if seen.setdefault(cx, cu) != cu:
            return False
    return True


def check_w_restriction(
    d: RootDatum | AffineWeylGroup,
    cfg: Config,
    side: str = "antispherical",
    *,
    margin: int = 2,
) -> bool:
    """Cells of W_ext restricted to W agree with cells computed inside W.

    Compared on elements of W lying in complete cells of both partitions.
    """
    g = d if isinstance(d, AffineWeylGroup) else weyl_group(d)
    table = canonical_basis(g, cfg.ball_radius + 2 * margin)
    ext = compute_cells(g, cfg, side, margin=margin, table=table)
    inner = compute_cells(g, cfg, side, margin=margin, table=table, with_omega=False)
    ok_ext = {c.id for c in ext.cells if c.complete}
    ok_in = {c.id for c in inner.cells if c.complete}
    common = [
        x for x in inner.cell_of
        if inner.cell_of[x] in ok_in and ext.cell_of.get(x) in ok_ext
    ]
    pair_map: dict[int, int] = {}
    back: dict[int, int] = {}
    for x in common:
        a, b = inner.cell_of[x], ext.cell_of[x]
        if pair_map.setdefault(a, b) != b or back.setdefault(b, a) != a:
            return False
    return True
