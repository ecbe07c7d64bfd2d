"""Deterministic constructors for hypercubes, paths, cycles, trees, Cartesian
products and benzenoid systems."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .errors import CellsNotConnected, DimensionOutOfRange, Disconnected, EmptySystem, SizeOutOfRange
from .graph import Graph, build_graph

MAX_HYPERCUBE_DIM = 20


def hypercube(d: int) -> Graph:
    """``Q_d`` with vertex ``v`` standing for the bit tuple of ``v``."""
    if not 1 <= d <= MAX_HYPERCUBE_DIM:
        raise DimensionOutOfRange(f"dimension must be in 1..{MAX_HYPERCUBE_DIM}, got {d}")
    edges = [(v, v | 1 << i) for v in range(1 << d) for i in range(d) if not v >> i & 1]
    return build_graph(1 << d, edges)


def path(n: int) -> Graph:
    if n < 1:
        raise SizeOutOfRange(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """``C_n``; edge ``j`` joins ``j`` and ``j+1 mod n``."""
    if n < 3:
        raise SizeOutOfRange(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    if leaves < 1:
        raise SizeOutOfRange(f"star needs at least one leaf, got {leaves}")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise SizeOutOfRange(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}``: vertices ``0..a-1`` on one side, ``a..a+b-1`` on the other."""
    if a < 1 or b < 1:
        raise SizeOutOfRange(f"both sides must be non-empty, got {a}, {b}")
    return build_graph(a + b, [(u, a + x) for u in range(a) for x in range(b)])


def prufer_decode(seq, n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree on ``n`` vertices, fixed by ``seed``."""
    if n < 1:
        raise SizeOutOfRange(f"tree needs n >= 1, got {n}")
    if n == 1:
        return build_graph(1, [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return build_graph(n, sorted((min(e), max(e)) for e in prufer_decode(seq, n)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h``; vertex ``(a, x)`` gets index ``a * h.n + x``."""
    if not g.is_connected() or not h.is_connected():
        raise Disconnected("Cartesian product factors must be connected")
    k = h.n
    edges = [(a * k + x, b * k + x) for a, b in g.edges for x in range(k)]
    edges += [(a * k + x, a * k + y) for a in range(g.n) for x, y in h.edges]
    return build_graph(g.n * k, sorted(edges))


# --- benzenoids ---------------------------------------------------------------

# Pointy-top hexagon on a doubled integer lattice: cell (q, r) has center
# (2q + r, 3r) and these corner offsets in ring order.  Neighboring cells
# share exactly two consecutive corners.
HEX_CORNERS = ((1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1))
HEX_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


@dataclass(frozen=True)
class HexSystem:
    cells: frozenset

    def __post_init__(self):
        if not self.cells:
            raise EmptySystem("a hexagonal system needs at least one cell")
        start = next(iter(self.cells))
        seen = {start}
        stack = [start]
        while stack:
            q, r = stack.pop()
            for dq, dr in HEX_NEIGHBORS:
                c = (q + dq, r + dr)
                if c in self.cells and c not in seen:
                    seen.add(c)
                    stack.append(c)
        if len(seen) != len(self.cells):
            raise CellsNotConnected(f"{len(self.cells) - len(seen)} cell(s) not reachable from {start}")

    @classmethod
    def of(cls, cells):
        return cls(frozenset((int(q), int(r)) for q, r in cells))


def hex_corners(q: int, r: int) -> list[tuple[int, int]]:
    cx, cy = 2 * q + r, 3 * r
    return [(cx + dx, cy + dy) for dx, dy in HEX_CORNERS]


def benzenoid(system) -> Graph:
    """Graph of hexagon corners and sides; vertices numbered by sorted corner."""
    if not isinstance(system, HexSystem):
        system = HexSystem.of(system)
    sides = set()
    for q, r in system.cells:
        ring = hex_corners(q, r)
        for i in range(6):
            a, b = ring[i], ring[(i + 1) % 6]
            sides.add((a, b) if a < b else (b, a))
    corners = sorted({p for side in sides for p in side})
    index = {p: i for i, p in enumerate(corners)}
    edges = sorted((index[a], index[b]) if index[a] < index[b] else (index[b], index[a]) for a, b in sides)
    return build_graph(len(corners), edges)


def circumcoronene_cells(k: int) -> HexSystem:
    if k < 1:
        raise SizeOutOfRange(f"circumcoronene needs k >= 1, got {k}")
    span = range(-(k - 1), k)
    return HexSystem.of((q, r) for q in span for r in span if abs(q + r) <= k - 1)


def circumcoronene(k: int) -> Graph:
    """``H_k``: hexagon-shaped benzenoid with ``k`` rings of cells (``H_1`` is benzene)."""
    return benzenoid(circumcoronene_cells(k))
