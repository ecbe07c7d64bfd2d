"""Djokovic-Winkler relation, its closure into classes, and partial-cube recognition.

Edges ``xy`` and ``uv`` are related when
``d(x, u) + d(y, v) != d(x, v) + d(y, u)``.  The relation is reflexive and
symmetric on every connected graph; it is transitive on partial cubes, where
its classes are exactly the coordinates of an isometric hypercube embedding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Disconnected, EdgeIndexOutOfRange
from .graph import DistanceOracle, Graph, all_pairs, components_excluding, is_bipartite

# Rows of the m x m relation matrix computed per block; bounds peak memory.
_BLOCK = 512


class DisjointSet:
    """Union-find over ``0..size-1`` with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def theta_related(d: DistanceOracle, e, f) -> bool:
    (x, y), (u, v) = e, f
    for w in (x, y, u, v):
        if not 0 <= w < d.n:
            raise EdgeIndexOutOfRange(f"endpoint {w} not in 0..{d.n - 1}")
    dist = d.dist
    return int(dist[x, u]) + int(dist[y, v]) != int(dist[x, v]) + int(dist[y, u])


def theta_matrix(g: Graph, d: DistanceOracle) -> np.ndarray:
    """Boolean ``m x m`` table of the relation over all edge pairs."""
    m = g.m
    out = np.zeros((m, m), dtype=bool)
    if not m:
        return out
    x, y = np.array(g.edges, dtype=np.intp).T
    D = d.dist.astype(np.int64)
    for lo in range(0, m, _BLOCK):
        hi = min(lo + _BLOCK, m)
        xs, ys = x[lo:hi], y[lo:hi]
        same = D[np.ix_(xs, x)] + D[np.ix_(ys, y)]
        cross = D[np.ix_(xs, y)] + D[np.ix_(ys, x)]
        out[lo:hi] = same != cross
    return out


@dataclass(frozen=True)
class ThetaPartition:
    """Edge classes of the transitive closure of the relation.

    ``links`` holds the related edge pairs that caused each merge, a spanning
    forest over every class; it witnesses that each class is a closure chain.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    links: tuple[tuple[int, int], ...] = ()

    @property
    def k(self) -> int:
        return len(self.classes)


def theta_classes(g: Graph, d: DistanceOracle | None = None, related: np.ndarray | None = None) -> ThetaPartition:
    if d is None:
        d = all_pairs(g)
    elif d.n != g.n:
        raise ValueError("distance oracle does not belong to this graph")
    if related is None:
        related = theta_matrix(g, d)
    ds = DisjointSet(g.m)
    links = []
    rows, cols = np.nonzero(np.triu(related, k=1))
    for a, b in zip(rows.tolist(), cols.tolist()):
        if ds.union(a, b):
            links.append((a, b))
    # ids by smallest member: scanning edges in order meets each class at its minimum
    ids = {}
    class_of = []
    members = []
    for e in range(g.m):
        root = ds.find(e)
        if root not in ids:
            ids[root] = len(members)
            members.append([])
        class_of.append(ids[root])
        members[ids[root]].append(e)
    return ThetaPartition(tuple(class_of), tuple(tuple(c) for c in members), tuple(links))


# --- recognition -------------------------------------------------------------


@dataclass(frozen=True)
class NotBipartite:
    odd_cycle: tuple[int, ...]

    def __str__(self):
        return f"NotBipartite odd cycle {' '.join(map(str, self.odd_cycle))}"


@dataclass(frozen=True)
class ThetaNotTransitive:
    """Edges ``e ~ f`` and ``f ~ g`` are related but ``e`` and ``g`` are not."""

    e: int
    f: int
    g: int

    def __str__(self):
        return f"ThetaNotTransitive edges {self.e} {self.f} {self.g}"


@dataclass(frozen=True)
class ClassRemovalNotTwoComponents:
    class_id: int
    components: int

    def __str__(self):
        return f"ClassRemovalNotTwoComponents class {self.class_id} leaves {self.components} components"


@dataclass(frozen=True)
class IsometryFailure:
    u: int
    v: int
    distance: int
    hamming: int

    def __str__(self):
        return f"IsometryFailure pair {self.u} {self.v} distance {self.distance} hamming {self.hamming}"


@dataclass(frozen=True)
class PartialCubeCertificate:
    """Isometric embedding into ``Q_k``.

    ``side_of[i][v]`` is 1 iff ``v`` lies in the component of ``G - F_i`` not
    containing vertex 0; ``labels[v]`` reads those bits in class order.
    """

    bipartition: tuple[int, ...]
    side_of: np.ndarray
    labels: tuple[str, ...]

    @property
    def k(self) -> int:
        return int(self.side_of.shape[0])

    def side_sizes(self) -> list[tuple[int, int]]:
        ones = self.side_of.sum(axis=1).tolist()
        n = self.side_of.shape[1]
        return [(n - c, c) for c in ones]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "bipartition": list(self.bipartition),
            "labels": list(self.labels),
        }


@dataclass(frozen=True)
class Recognition:
    """Result of :func:`is_partial_cube`; truthy iff a certificate was verified."""

    partition: ThetaPartition | None = None
    certificate: PartialCubeCertificate | None = None
    reason: object = None

    def __bool__(self) -> bool:
        return self.certificate is not None


def hamming_matrix(side_of: np.ndarray) -> np.ndarray:
    n = side_of.shape[1]
    ham = np.zeros((n, n), dtype=np.int32)
    for row in side_of:
        ham += row[:, None] != row[None, :]
    return ham


def _transitivity_witness(related: np.ndarray, partition: ThetaPartition):
    """Lexicographically first (e, f, g) breaking transitivity, if any."""
    broken = False
    for members in partition.classes:
        idx = np.array(members)
        if not related[np.ix_(idx, idx)].all():
            broken = True
            break
    if not broken:
        return None
    for e in range(related.shape[0]):
        row = related[e]
        for f in np.flatnonzero(row).tolist():
            if f == e:
                continue
            hits = np.flatnonzero(related[f] & ~row)
            if hits.size:
                return ThetaNotTransitive(e, f, int(hits[0]))
    raise AssertionError("closure class not fully related but no broken triple found")


def is_partial_cube(g: Graph, d: DistanceOracle | None = None) -> Recognition:
    """Recognize partial cubes and return a verified embedding certificate.

    Steps: bipartite test, relation closure, a transitivity check inside each
    class, a two-component check per class, then a full comparison of graph
    distance against label Hamming distance over all vertex pairs.
    """
    if d is None:
        d = all_pairs(g)
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    bip = is_bipartite(g)
    if not bip:
        return Recognition(reason=NotBipartite(bip.odd_cycle))
    related = theta_matrix(g, d)
    partition = theta_classes(g, d, related)
    witness = _transitivity_witness(related, partition)
    if witness is not None:
        return Recognition(partition=partition, reason=witness)

    side_of = np.zeros((partition.k, g.n), dtype=np.uint8)
    for i, members in enumerate(partition.classes):
        label, count = components_excluding(g, members)
        if count != 2:
            return Recognition(partition=partition, reason=ClassRemovalNotTwoComponents(i, count))
        side_of[i] = label

    ham = hamming_matrix(side_of)
    bad = np.argwhere(np.triu(ham != d.dist, k=1))
    if bad.size:
        u, v = bad[0].tolist()
        return Recognition(
            partition=partition,
            reason=IsometryFailure(u, v, d(u, v), int(ham[u, v])),
        )
    side_of.setflags(write=False)
    labels = tuple("".join("1" if b else "0" for b in side_of[:, v]) for v in range(g.n))
    cert = PartialCubeCertificate(bip.coloring, side_of, labels)
    return Recognition(partition=partition, certificate=cert)


def verify_certificate(g: Graph, d: DistanceOracle, cert: PartialCubeCertificate) -> bool:
    """Recheck a certificate from its labels alone."""
    if len(cert.labels) != g.n or any(len(s) != cert.k for s in cert.labels):
        return False
    bits = np.array([[c == "1" for c in s] for s in cert.labels], dtype=np.uint8).reshape(g.n, cert.k).T
    for u, v in g.edges:
        if cert.bipartition[u] == cert.bipartition[v]:
            return False
    return bool((hamming_matrix(bits) == d.dist).all())
