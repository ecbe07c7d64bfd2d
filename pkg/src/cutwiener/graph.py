"""Simple undirected graphs, BFS distances and the brute-force Wiener index.

Vertices are the integers ``0..n-1``.  An edge is identified by its position
in :attr:`Graph.edges`, which keeps the order the pairs were supplied in.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    Disconnected,
    DuplicateEdge,
    EdgeIndexOutOfRange,
    SelfLoop,
    SizeCapExceeded,
    VertexOutOfRange,
    checked_add,
)

UNREACHABLE = -1
DEFAULT_SIZE_CAP = 20000


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _index: dict = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises ``KeyError`` when absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return UNREACHABLE not in bfs_distances(self, 0)


def build_graph(n: int, edge_pairs) -> Graph:
    """Normalize ``edge_pairs`` to ``u < v`` and build a :class:`Graph`.

    Loops and repeated pairs are rejected rather than dropped.
    """
    if n < 0:
        raise VertexOutOfRange(f"negative vertex count {n}")
    edges = []
    index = {}
    neighbors = [[] for _ in range(n)]
    for u, v in edge_pairs:
        u, v = int(u), int(v)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in index:
            raise DuplicateEdge(f"edge {key} listed twice (first at index {index[key]})")
        index[key] = len(edges)
        edges.append(key)
        neighbors[u].append(v)
        neighbors[v].append(u)
    adjacency = tuple(tuple(sorted(nb)) for nb in neighbors)
    return Graph(n, tuple(edges), adjacency, index)


def bfs_distances(g: Graph, s: int) -> list[int]:
    """Hop counts from ``s``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= s < g.n:
        raise VertexOutOfRange(f"source {s} not in 0..{g.n - 1}")
    dist = [UNREACHABLE] * g.n
    dist[s] = 0
    queue = deque([s])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceOracle:
    """All-pairs hop counts as a read-only ``n x n`` int32 table."""

    n: int
    dist: np.ndarray = field(repr=False)

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def diameter(self) -> int:
        return int(self.dist.max()) if self.n else 0


def all_pairs(g: Graph, size_cap: int = DEFAULT_SIZE_CAP) -> DistanceOracle:
    if g.n > size_cap:
        raise SizeCapExceeded(f"{g.n} vertices exceeds the all-pairs cap of {size_cap}")
    if g.n == 0:
        return DistanceOracle(0, np.zeros((0, 0), dtype=np.int32))
    if g.m:
        u, v = np.array(g.edges, dtype=np.int64).T
    else:
        u = v = np.zeros(0, dtype=np.int64)
    adj = csr_matrix((np.ones(g.m, dtype=np.int8), (u, v)), shape=(g.n, g.n))
    raw = shortest_path(adj, method="D", directed=False, unweighted=True)
    if not np.isfinite(raw).all():
        raise Disconnected("graph is not connected")
    dist = raw.astype(np.int32)
    dist.setflags(write=False)
    return DistanceOracle(g.n, dist)


@dataclass(frozen=True)
class BipartiteCheck:
    """Outcome of :func:`is_bipartite`; truthy iff the graph is bipartite."""

    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.coloring is not None


def is_bipartite(g: Graph) -> BipartiteCheck:
    """2-color ``g`` by BFS from vertex 0.

    On failure the witness is an odd cycle as a vertex sequence (closing edge
    implied from the last vertex back to the first).
    """
    _require_connected(g)
    if g.n == 0:
        return BipartiteCheck(coloring=())
    depth = [UNREACHABLE] * g.n
    parent = [-1] * g.n
    depth[0] = 0
    queue = deque([0])
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.adjacency[u]:
            if depth[w] == UNREACHABLE:
                depth[w] = depth[u] + 1
                parent[w] = u
                queue.append(w)
    for u, v in g.edges:
        if depth[u] % 2 == depth[v] % 2:
            # BFS layers differ by at most one, so u and v share a layer
            left, right = [u], [v]
            a, b = u, v
            while a != b:
                a, b = parent[a], parent[b]
                left.append(a)
                right.append(b)
            cycle = left + right[-2::-1]
            return BipartiteCheck(odd_cycle=tuple(cycle))
    return BipartiteCheck(coloring=tuple(d % 2 for d in depth))


def components_excluding(g: Graph, removed_edges=()) -> tuple[list[int], int]:
    """Label connected components of ``g`` minus the given edge indices.

    Component ids follow the order of each component's smallest vertex.
    """
    removed = set()
    for e in removed_edges:
        if not 0 <= e < g.m:
            raise EdgeIndexOutOfRange(f"edge index {e} not in 0..{g.m - 1}")
        removed.add(g.edges[e])
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = count
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if label[w] == -1 and ((u, w) if u < w else (w, u)) not in removed:
                    label[w] = count
                    stack.append(w)
        count += 1
    return label, count


def _row_sum(g: Graph, s: int) -> int:
    dist = bfs_distances(g, s)
    if UNREACHABLE in dist:
        raise Disconnected(f"vertex {dist.index(UNREACHABLE)} unreachable from {s}")
    return sum(dist)


def wiener_brute(g: Graph, threads: int = 1) -> int:
    """Half the sum of all BFS distances, one BFS per source vertex."""
    _require_connected(g)
    sources = range(g.n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda s: _row_sum(g, s), sources))
    else:
        rows = [_row_sum(g, s) for s in sources]
    return checked_add(0, sum(rows) // 2)


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise Disconnected("graph is not connected")
