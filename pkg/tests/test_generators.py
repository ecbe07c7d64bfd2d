import pytest

from cutwiener.cuts import odd_cycle_cut_family, wiener_cut, wiener_scaled
from cutwiener.errors import CellsNotConnected, DimensionOutOfRange, Disconnected, EmptySystem, SizeOutOfRange
from cutwiener.generators import (
    HEX_CORNERS,
    HexSystem,
    benzenoid,
    cartesian_product,
    circumcoronene,
    circumcoronene_cells,
    cycle,
    hex_corners,
    hypercube,
    path,
    prufer_decode,
    random_tree,
)
from cutwiener.graph import build_graph, wiener_brute
from cutwiener.theta import is_partial_cube

from oracles import floyd_warshall, wiener_enumerate


def same_graph(g, h):
    return g.n == h.n and sorted(g.edges) == sorted(h.edges)


def test_hypercube_small():
    assert same_graph(hypercube(1), path(2))
    assert same_graph(hypercube(2), build_graph(4, [(0, 1), (1, 3), (3, 2), (2, 0)]))
    q3 = hypercube(3)
    assert (q3.n, q3.m, wiener_brute(q3)) == (8, 12, 48)


@pytest.mark.parametrize("d", range(1, 9))
def test_hypercube_counts(d):
    g = hypercube(d)
    assert g.n == 2**d and g.m == d * 2 ** (d - 1)
    for u, v in g.edges:
        assert bin(u ^ v).count("1") == 1


def test_hypercube_range():
    for d in (0, 21):
        with pytest.raises(DimensionOutOfRange):
            hypercube(d)


def test_path_cycle_tree_ranges():
    with pytest.raises(SizeOutOfRange):
        path(0)
    with pytest.raises(SizeOutOfRange):
        cycle(2)
    with pytest.raises(SizeOutOfRange):
        random_tree(0)
    assert same_graph(path(2), hypercube(1))
    assert is_partial_cube(cycle(6))
    assert not is_partial_cube(cycle(5))


def test_cycle_edge_order():
    assert cycle(5).edges == ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4))


def test_prufer_known_sequence():
    # sequence (3, 3, 3, 4) decodes to the star around 3 with 4-5 attached
    assert sorted(tuple(sorted(e)) for e in prufer_decode([3, 3, 3, 4], 6)) == [
        (0, 3), (1, 3), (2, 3), (3, 4), (4, 5)
    ]


@pytest.mark.parametrize("n", [1, 2, 3, 10, 57])
def test_random_tree_is_tree_and_deterministic(n):
    t = random_tree(n, seed=11)
    assert t.m == n - 1 and t.is_connected()
    assert random_tree(n, seed=11).edges == t.edges
    if n > 5:
        assert any(random_tree(n, seed=s).edges != t.edges for s in range(12, 16))


def test_product_examples():
    k2 = path(2)
    assert same_graph(cartesian_product(k2, k2), hypercube(2))
    ladder = cartesian_product(path(3), k2)
    assert (ladder.n, ladder.m) == (6, 7)
    assert is_partial_cube(ladder)
    assert wiener_brute(ladder) == 25 == wiener_enumerate(ladder)
    q3 = cartesian_product(cartesian_product(k2, k2), k2)
    assert wiener_brute(q3) == 48
    assert floyd_warshall(q3) == floyd_warshall(hypercube(3))
    with pytest.raises(Disconnected):
        cartesian_product(k2, build_graph(2, []))


def test_product_vertex_index():
    g = cartesian_product(path(3), cycle(4))
    # (a, x) -> a * 4 + x; (1, 2) adjacent to (1, 3) and (2, 2)
    assert g.has_edge(6, 7) and g.has_edge(6, 10) and not g.has_edge(6, 11)


@pytest.mark.parametrize(
    "g, h",
    [(path(3), path(2)), (cycle(4), path(3)), (cycle(5), path(2)), (random_tree(6, 1), cycle(6))],
    ids=["P3K2", "C4P3", "C5K2", "T6C6"],
)
def test_product_wiener_identity(g, h):
    gh = cartesian_product(g, h)
    assert wiener_brute(gh) == h.n**2 * wiener_brute(g) + g.n**2 * wiener_brute(h)
    assert wiener_brute(gh) == wiener_enumerate(gh)


def test_hex_offsets_share_one_edge():
    ring = hex_corners(0, 0)
    assert len(set(ring)) == 6 == len(HEX_CORNERS)
    for dq, dr in ((1, 0), (0, 1), (1, -1), (-1, 0), (0, -1), (-1, 1)):
        other = hex_corners(dq, dr)
        shared = set(ring) & set(other)
        assert len(shared) == 2
        i, j = sorted(ring.index(p) for p in shared)
        assert j - i in (1, 5)
    assert not set(ring) & set(hex_corners(1, 1))


def test_benzenoid_examples():
    benzene = benzenoid([(0, 0)])
    assert (benzene.n, benzene.m) == (6, 6)
    assert sorted(len(a) for a in benzene.adjacency) == [2] * 6
    naphthalene = benzenoid([(0, 0), (1, 0)])
    assert (naphthalene.n, naphthalene.m) == (10, 11)
    assert wiener_brute(naphthalene) == 109 == wiener_enumerate(naphthalene)
    with pytest.raises(EmptySystem):
        HexSystem.of([])
    with pytest.raises(CellsNotConnected):
        benzenoid([(0, 0), (2, 0)])


@pytest.mark.parametrize(
    "cells",
    [
        [(0, 0), (1, 0), (2, 0)],
        [(0, 0), (1, 0), (0, 1)],
        [(0, 0), (1, 0), (1, 1), (2, 1)],
        [(0, 0), (1, -1), (2, -1), (2, 0), (1, 1)],
    ],
    ids=["anthracene", "phenalene", "chrysene-like", "five-ring"],
)
def test_benzenoids_are_partial_cubes(cells):
    g = benzenoid(cells)
    assert is_partial_cube(g)
    assert wiener_cut(g)[0] == wiener_brute(g)


@pytest.mark.parametrize("k, n, m", [(1, 6, 6), (2, 24, 30), (3, 54, 72), (4, 96, 132), (5, 150, 210)])
def test_circumcoronene_counts(k, n, m):
    g = circumcoronene(k)
    assert (g.n, g.m) == (n, m) == (6 * k * k, 9 * k * k - 3 * k)
    assert len(circumcoronene_cells(k).cells) == 3 * k * (k - 1) + 1


def test_circumcoronene_values():
    assert wiener_brute(circumcoronene(1)) == 27
    assert wiener_brute(circumcoronene(2)) == 1002 == wiener_enumerate(circumcoronene(2))
    with pytest.raises(SizeOutOfRange):
        circumcoronene(0)


@pytest.mark.parametrize("m", range(1, 6))
def test_odd_cycles_scaled_family(m):
    n = 2 * m + 1
    assert not is_partial_cube(cycle(n))
    assert wiener_scaled(cycle(n), odd_cycle_cut_family(n)) == wiener_brute(cycle(n))
