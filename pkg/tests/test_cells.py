import pytest

from cellulo.cells import (
    Cell,
    CellGraph,
    CellPartition,
    build_cell_graph,
    cells_from_graph,
    check_omega_stability,
    check_two_sided_vs_antispherical,
    check_w_restriction,
    compute_cells,
)
from cellulo.glcells import orbit_count
from cellulo.hecke import TableRadiusError, canonical_basis
from cellulo.rootdata import Config, build_gl, build_simple
from cellulo.weyl import weyl_group
from conftest import table_for
from oracles import mutual_reachability_classes


def test_a1_antispherical_edges(a1):
    s, s0 = a1.generators
    e = a1.identity
    graph = build_cell_graph(a1, Config(5, 6), "antispherical", table=table_for("A1", 7))
    assert s0 in graph.edges[e]
    assert s0 in graph.edges[s0 * s]
    assert e not in graph.edges[s0]


@pytest.mark.parametrize("side", ["antispherical", "right", "left", "two-sided"])
@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_mu_edges_match_expansion(label, side):
    g = weyl_group(build_simple(label))
    t = table_for(label, 6)
    cfg = Config(7, 5)
    fast = build_cell_graph(g, cfg, side, table=t, method="mu")
    slow = build_cell_graph(g, cfg, side, table=t, method="expand")
    assert fast.edges == slow.edges and fast.frontier == slow.frontier


def test_expand_needs_one_more_stratum(a1):
    with pytest.raises(TableRadiusError):
        build_cell_graph(a1, Config(5, 4), "antispherical", table=table_for("A1", 4), method="expand")


def test_bad_side(a1):
    with pytest.raises(ValueError):
        build_cell_graph(a1, Config(5, 2), "diagonal")


def test_edges_stay_in_ball(a2):
    graph = build_cell_graph(a2, Config(7, 5), "two-sided", table=table_for("A2", 5))
    verts = set(graph.vertices)
    assert all(x in verts for xs in graph.edges.values() for x in xs)
    assert all(u in verts for u in graph.frontier)


def test_singleton_graph(a1):
    e = a1.identity
    graph = CellGraph(a1, "antispherical", 0, [e], {e: set()}, set())
    part = cells_from_graph(graph)
    assert len(part.cells) == 1 and part.cells[0].complete and part.cells[0].certified


@pytest.mark.parametrize("label,radius", [("A1", 8), ("A2", 6), ("B2", 6), ("G2", 6)])
@pytest.mark.parametrize("side", ["antispherical", "two-sided"])
def test_sccs_match_floyd_warshall(label, radius, side):
    g = weyl_group(build_simple(label))
    graph = build_cell_graph(g, Config(7, radius), side, table=table_for(label, radius))
    part = cells_from_graph(graph)
    ours = {frozenset(c.members) for c in part.cells}
    assert ours == set(mutual_reachability_classes(graph.vertices, graph.edges))


def test_order_is_reachability(a2):
    part = compute_cells(a2, Config(4, 6), "antispherical", table=table_for("A2", 10))
    assert all((c.id, c.id) in part.order for c in part.cells)
    # the cell of the identity lies below nothing else: nothing reaches it
    e_cell = part.cell_of[a2.identity]
    assert {i for i, j in part.order if j == e_cell} == {e_cell}


def test_a1_cells():
    g = weyl_group(build_simple("A1"))
    part = compute_cells(g, Config(5, 16), "antispherical", table=table_for("A1", 20))
    assert len(part.complete_cells()) == 2 == len(part.cells)
    omega_cell = {g.identity} | set(g.omegas())
    assert set(part.cells[0].members) == omega_cell
    rest = [w for w in g.ball(16, omegas=g.omegas()) if g.in_fw(w) and w.length >= 1]
    assert set(part.cells[1].members) == set(rest)


def test_a2_cells():
    part = compute_cells(build_simple("A2"), Config(4, 12), "antispherical", table=table_for("A2", 16))
    assert len(part.complete_cells()) == 3 == orbit_count(build_simple("A2"))


def test_b2_cells():
    part = compute_cells(build_simple("B2"), Config(5, 16), "antispherical", table=table_for("B2", 20))
    assert len(part.complete_cells()) == 4 == orbit_count(build_simple("B2"))


def test_boundary_fragments_are_flagged_incomplete(g2):
    part = compute_cells(g2, Config(7, 11), "antispherical")
    assert len(part.cells) == 5
    assert len(part.complete_cells()) == 3


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_complete_cells_survive_a_larger_margin(label):
    d = build_simple(label)
    for R in range(2, 11):
        ref = compute_cells(d, Config(7, R), "antispherical", margin=4)
        ref_sets = {frozenset(c.members) for c in ref.cells}
        part = compute_cells(d, Config(7, R), "antispherical", margin=2)
        assert all(frozenset(c.members) in ref_sets for c in part.complete_cells())


def test_gl_cells_match_multipartitions():
    for a, R in [((2,), 10), ((3,), 8), ((1, 2), 8)]:
        d = build_gl(a)
        part = compute_cells(d, Config(5, R), "antispherical")
        assert len(part.complete_cells()) == orbit_count(d)


@pytest.mark.parametrize("label,radius", [("A1", 16), ("A2", 12)])
def test_two_sided_bijection(label, radius):
    d = build_simple(label)
    rep = check_two_sided_vs_antispherical(d, Config(7, radius))
    assert rep.ok, rep.problems
    assert len(rep.bijection) == {"A1": 2, "A2": 3}[label]
    assert sorted(a for _, a in rep.bijection) == list(range(len(rep.bijection)))


def test_empty_bijection(a1):
    empty = CellPartition("two-sided", 0, [], set(), {})
    rep = check_two_sided_vs_antispherical(a1, Config(5, 0), two_sided=empty, antispherical=CellPartition("antispherical", 0, [], set(), {}))
    assert rep.bijection == [] and rep.ok


def test_omega_stability_examples(a1, g2):
    part = compute_cells(a1, Config(5, 10), "antispherical")
    assert part.same_cell(a1.identity, [w for w in a1.omegas() if w != a1.identity][0])
    assert check_omega_stability(part, a1)
    part_g2 = compute_cells(g2, Config(7, 6), "antispherical")
    assert len(g2.omegas()) == 1 and check_omega_stability(part_g2, g2)


def test_omega_stability_a2_unions_of_orbits(a2):
    part = compute_cells(a2, Config(4, 12), "antispherical", table=table_for("A2", 16))
    assert check_omega_stability(part, a2)
    for c in part.complete_cells():
        members = set(c.members)
        for x in c.members:
            u, _ = a2.omega_of(x)
            if part.cells[part.cell_of[u]].complete:
                assert {u * om for om in a2.omegas()} <= members


def test_omega_stability_detects_tampering(a2):
    part = compute_cells(a2, Config(4, 8), "antispherical", table=table_for("A2", 12))
    big = max(part.cells, key=lambda c: len(c.members))
    other = next(c for c in part.cells if c is not big and len(c.members) > 3)
    # move one non-W element into another cell
    victim = next(x for x in big.members if not a2.in_W(x))
    cell_of = dict(part.cell_of)
    cell_of[victim] = other.id
    cells = [Cell(c.id, [x for x in c.members if cell_of[x] == c.id] + ([victim] if c.id == other.id else []), True, False, False) for c in part.cells]
    assert not check_omega_stability(CellPartition(part.side, part.radius, cells, part.order, cell_of), a2)


@pytest.mark.parametrize("label,radius", [("A1", 12), ("A2", 10), ("B2", 12)])
def test_w_restriction(label, radius):
    assert check_w_restriction(build_simple(label), Config(7, radius))


@pytest.mark.parametrize("label,radius", [("A2", 12), ("B2", 16)])
def test_complete_cells_meet_fwf(label, radius):
    g = weyl_group(build_simple(label))
    part = compute_cells(g, Config(7, radius), "antispherical", table=table_for(label, radius + 4))
    for c in part.complete_cells():
        assert any(g.in_fwf(x) for x in c.members)


def test_deterministic_numbering(b2):
    a = compute_cells(b2, Config(5, 8), "two-sided")
    b = compute_cells(b2, Config(5, 8), "two-sided")
    assert [c.members for c in a.cells] == [c.members for c in b.cells]
    keys = [c.members[0].sort_key() for c in a.cells]
    assert keys == sorted(keys)
