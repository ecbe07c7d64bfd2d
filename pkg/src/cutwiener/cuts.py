"""Edge cuts, convexity, cut-partition validation and the cut-method formulas.

A cut splits the graph into two sides.  When both sides are convex for every
cut of an edge partition, the Wiener index is the sum of the side-size
products.  A family covering each edge ``k`` times gives ``k`` times the index.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CoverageMismatch,
    CutEdgeInsideSide,
    EdgeIndexOutOfRange,
    EmptySet,
    EvenOrTooSmall,
    InducedSubgraphDisconnected,
    InvalidFamily,
    InvalidPartition,
    NotDivisibleByScale,
    NotPartialCube,
    NotTwoComponents,
    PreconditionFailed,
    checked_add,
)
from .generators import cycle
from .graph import DistanceOracle, Graph, all_pairs, components_excluding
from .theta import ThetaPartition, is_partial_cube


@dataclass(frozen=True)
class Cut:
    edge_ids: tuple[int, ...]
    sides: tuple[tuple[int, ...], tuple[int, ...]] = field(repr=False)

    @property
    def n1(self) -> int:
        return len(self.sides[0])

    @property
    def n2(self) -> int:
        return len(self.sides[1])

    @property
    def product(self) -> int:
        return self.n1 * self.n2


def split_by_cut(g: Graph, edge_ids) -> Cut:
    """Remove ``edge_ids`` and return the two sides, smallest vertex's side first."""
    ids = tuple(sorted(set(edge_ids)))
    if not ids:
        raise EmptySet("a cut needs at least one edge")
    label, count = components_excluding(g, ids)
    if count != 2:
        raise NotTwoComponents(count, ids)
    for e in ids:
        u, v = g.edges[e]
        if label[u] == label[v]:
            raise CutEdgeInsideSide(e)
    first = tuple(v for v in range(g.n) if label[v] == 0)
    second = tuple(v for v in range(g.n) if label[v] == 1)
    return Cut(ids, (first, second))


@dataclass(frozen=True)
class ScaledCutFamily:
    """Cuts covering every edge exactly ``scale`` times (repeats allowed)."""

    cuts: tuple[Cut, ...]
    scale: int = 1

    @classmethod
    def from_edge_sets(cls, g: Graph, edge_sets, scale: int = 1):
        if scale < 1:
            raise ValueError(f"scale must be a positive integer, got {scale}")
        edge_sets = [list(s) for s in edge_sets]
        counts = Counter()
        for s in edge_sets:
            for e in s:
                if not 0 <= e < g.m:
                    raise EdgeIndexOutOfRange(f"edge index {e} not in 0..{g.m - 1}")
            counts.update(set(s))
        for e in range(g.m):
            if counts[e] != scale:
                raise CoverageMismatch(e, counts[e], scale)
        return cls(tuple(split_by_cut(g, s) for s in edge_sets), scale)

    def product_sum(self) -> int:
        total = 0
        for cut in self.cuts:
            total = checked_add(total, cut.product)
        return total


class CutPartition(ScaledCutFamily):
    """Cuts covering every edge exactly once."""

    @classmethod
    def from_edge_sets(cls, g: Graph, edge_sets, scale: int = 1):
        if scale != 1:
            raise ValueError("a cut partition has scale 1; use ScaledCutFamily")
        return super().from_edge_sets(g, edge_sets, 1)

    @classmethod
    def from_theta(cls, g: Graph, partition: ThetaPartition):
        return cls.from_edge_sets(g, partition.classes)


# --- convexity -----------------------------------------------------------------


def _induced_connected(g: Graph, members: set) -> bool:
    start = next(iter(members))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def convexity_witness(g: Graph, d: DistanceOracle, vertices):
    """First ``(u, v, w)`` with ``u, v`` in the set and ``w`` outside it on a
    shortest ``u``-``v`` path, scanning ``w`` then ``u`` then ``v`` ascending;
    ``None`` if the set is convex."""
    members = sorted(set(vertices))
    if not members:
        raise EmptySet("convexity of the empty set is undefined")
    if not _induced_connected(g, set(members)):
        raise InducedSubgraphDisconnected(f"{len(members)}-vertex set does not induce a connected subgraph")
    inside = np.zeros(g.n, dtype=bool)
    inside[members] = True
    S = np.array(members)
    inner = d.dist[np.ix_(S, S)].astype(np.int64)
    for w in np.flatnonzero(~inside).tolist():
        to_w = d.dist[S, w].astype(np.int64)
        through = to_w[:, None] + to_w[None, :]
        hits = np.argwhere(through == inner)
        if hits.size:
            i, j = hits[0].tolist()
            return members[i], members[j], w
    return None


def is_convex(g: Graph, d: DistanceOracle, vertices) -> bool:
    return convexity_witness(g, d, vertices) is None


# --- shortest-path DAG crossing counts ---------------------------------------------


def crossing_bounds(g: Graph, d: DistanceOracle, source: int, cut_of_edge: np.ndarray, ncuts: int):
    """Min and max number of edges from each cut crossed by shortest paths
    from ``source`` to every vertex.

    Walks the shortest-path DAG rooted at ``source`` in distance order;
    ``cut_of_edge[e]`` is the cut holding edge ``e`` (-1 for none).  Returns two
    ``n x ncuts`` arrays.  Exact over all shortest paths, of which there may be
    exponentially many.
    """
    dist = d.dist[source]
    order = np.argsort(dist, kind="stable").tolist()
    big = np.iinfo(np.int32).max
    lo = np.full((g.n, ncuts), big, dtype=np.int32)
    hi = np.full((g.n, ncuts), -1, dtype=np.int32)
    lo[source] = 0
    hi[source] = 0
    for v in order:
        if v == source:
            continue
        dv = dist[v]
        best_lo = None
        for a in g.adjacency[v]:
            if dist[a] != dv - 1:
                continue
            c = cut_of_edge[g.edge_index(a, v)]
            step_lo = lo[a].copy()
            step_hi = hi[a].copy()
            if c >= 0:
                step_lo[c] += 1
                step_hi[c] += 1
            if best_lo is None:
                best_lo, best_hi = step_lo, step_hi
            else:
                np.minimum(best_lo, step_lo, out=best_lo)
                np.maximum(best_hi, step_hi, out=best_hi)
        lo[v] = best_lo
        hi[v] = best_hi
    return lo, hi


def _one_shortest_path(g: Graph, d: DistanceOracle, u: int, v: int) -> list[int]:
    """Greedy descent from ``v`` to ``u``, always taking the smallest eligible neighbor."""
    path = [v]
    x = v
    while x != u:
        target = d.dist[u, x] - 1
        x = next(w for w in g.adjacency[x] if d.dist[u, w] == target)
        path.append(x)
    path.reverse()
    return path


# --- validation ----------------------------------------------------------------------


@dataclass(frozen=True)
class CutCheck:
    index: int
    side1_convex: bool
    side2_convex: bool
    condition_iii: bool | None = None

    @property
    def ok(self) -> bool:
        return self.side1_convex and self.side2_convex and self.condition_iii is not False


@dataclass(frozen=True)
class Counterexample:
    cut: int
    condition: str
    u: int
    v: int
    detail: str

    def __str__(self):
        return f"cut {self.cut} condition ({self.condition}): vertices {self.u} {self.v}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    checks: tuple[CutCheck, ...]
    counterexample: Counterexample | None = None

    def __bool__(self) -> bool:
        return self.valid

    def summary(self) -> str:
        if self.valid:
            return f"valid ({len(self.checks)} cuts)"
        return str(self.counterexample)


def verify_ipartition(g: Graph, d: DistanceOracle, p: ScaledCutFamily, check_iii: bool = False) -> ValidationReport:
    """Check each cut's sides for convexity (conditions (i), (ii)) and, when
    asked, count cut edges on one shortest path per cross pair (condition (iii))."""
    checks = []
    first = None
    for i, cut in enumerate(p.cuts):
        convex = []
        for label, side in zip(("i", "ii"), cut.sides):
            w = convexity_witness(g, d, side)
            convex.append(w is None)
            if w is not None and first is None:
                a, b, out = w
                first = Counterexample(i, label, a, b, f"shortest path through vertex {out} outside the side")
        iii = None
        if check_iii:
            iii = True
            cut_edges = {g.edges[e] for e in cut.edge_ids}
            for a in cut.sides[0]:
                for b in cut.sides[1]:
                    path = _one_shortest_path(g, d, a, b)
                    crossed = sum(
                        1 for x, y in zip(path, path[1:]) if ((x, y) if x < y else (y, x)) in cut_edges
                    )
                    if crossed != 1:
                        iii = False
                        if first is None:
                            first = Counterexample(
                                i, "iii", a, b, f"shortest path {path} crosses the cut {crossed} times"
                            )
                        break
                if not iii:
                    break
        checks.append(CutCheck(i, convex[0], convex[1], iii))
    valid = all(c.ok for c in checks)
    return ValidationReport(valid, tuple(checks), None if valid else first)


@dataclass(frozen=True)
class RedundancyReport:
    """Exhaustive condition-(iii) check; ``violations`` should always be empty."""

    pairs_checked: int
    violations: tuple[tuple[int, int, int, int, int], ...]  # (cut, u, v, min, max)

    def __bool__(self) -> bool:
        return not self.violations


def condition_iii_implied(g: Graph, d: DistanceOracle, p: ScaledCutFamily) -> RedundancyReport:
    """Confirm that every shortest path between the two sides of each cut
    crosses that cut exactly once, given that both sides are convex."""
    report = verify_ipartition(g, d, p)
    if not report:
        raise PreconditionFailed(report)
    # scaled families repeat edges, so crossings are tallied per group of edge-disjoint cuts
    violations = []
    pairs = 0
    cuts = list(p.cuts)
    groups = _disjoint_groups(cuts, g.m)
    for group in groups:
        cut_of_edge = np.full(g.m, -1, dtype=np.int64)
        for slot, ci in enumerate(group):
            cut_of_edge[list(cuts[ci].edge_ids)] = slot
        side_flag = np.zeros((len(group), g.n), dtype=bool)
        for slot, ci in enumerate(group):
            side_flag[slot, list(cuts[ci].sides[1])] = True
        for u in range(g.n):
            lo, hi = crossing_bounds(g, d, u, cut_of_edge, len(group))
            for slot, ci in enumerate(group):
                if side_flag[slot, u]:
                    continue
                targets = np.flatnonzero(side_flag[slot])
                pairs += targets.size
                bad = targets[(lo[targets, slot] != 1) | (hi[targets, slot] != 1)]
                for v in bad.tolist():
                    violations.append((ci, u, v, int(lo[v, slot]), int(hi[v, slot])))
    violations.sort()
    return RedundancyReport(pairs, tuple(violations))


def _disjoint_groups(cuts, m):
    """Split cut indices into groups whose edge sets are pairwise disjoint."""
    groups = []
    used = []
    for i, cut in enumerate(cuts):
        for group, taken in zip(groups, used):
            if taken.isdisjoint(cut.edge_ids):
                group.append(i)
                taken.update(cut.edge_ids)
                break
        else:
            groups.append([i])
            used.append(set(cut.edge_ids))
    return groups


# --- Wiener formulas -----------------------------------------------------------------------


def wiener_from_partition(g: Graph, p: CutPartition, d: DistanceOracle | None = None) -> int:
    """Sum of side-size products over a validated cut partition."""
    if p.scale != 1:
        raise ValueError("use wiener_scaled for families with scale > 1")
    if d is None:
        d = all_pairs(g)
    report = verify_ipartition(g, d, p)
    if not report:
        raise InvalidPartition(report)
    return p.product_sum()


def wiener_cut(g: Graph, d: DistanceOracle | None = None):
    """Wiener index of a partial cube from its edge classes.

    Returns ``(value, partition, certificate)``; raises
    :class:`NotPartialCube` otherwise.
    """
    if d is None:
        d = all_pairs(g)
    rec = is_partial_cube(g, d)
    if not rec:
        raise NotPartialCube(rec.reason)
    total = 0
    for n1, n2 in rec.certificate.side_sizes():
        total = checked_add(total, n1 * n2)
    return total, rec.partition, rec.certificate


def wiener_scaled(g: Graph, fam: ScaledCutFamily, d: DistanceOracle | None = None) -> int:
    """Product sum over a validated family, divided exactly by its scale."""
    if d is None:
        d = all_pairs(g)
    report = verify_ipartition(g, d, fam)
    if not report:
        raise InvalidFamily(report)
    total = fam.product_sum()
    q, r = divmod(total, fam.scale)
    if r:
        raise NotDivisibleByScale(f"product sum {total} is not divisible by scale {fam.scale}")
    return q


def odd_cycle_edge_sets(n: int) -> list[list[int]]:
    if n < 3 or n % 2 == 0:
        raise EvenOrTooSmall(f"odd cycle family needs odd n >= 3, got {n}")
    q = n // 2
    return [[i, (i + q) % n] for i in range(n)]


def odd_cycle_cut_family(n: int) -> ScaledCutFamily:
    """Scale-2 family on ``C_n``: cut ``i`` removes edges ``i`` and ``i + n//2``.

    Edge ``j`` is ``(j, j+1 mod n)``, matching :func:`cutwiener.generators.cycle`.
    """
    edge_sets = odd_cycle_edge_sets(n)
    return ScaledCutFamily.from_edge_sets(cycle(n), edge_sets, scale=2)
