"""Slow, independent reference computations used to derive expected values.

Nothing here touches numpy, scipy, or the package's own BFS/closure code; it
only reads ``g.n`` and ``g.edges``.
"""

from itertools import combinations

INF = float("inf")


def floyd_warshall(g):
    n = g.n
    dist = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges:
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            di = dist[i]
            dik = di[k]
            if dik == INF:
                continue
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return dist


def wiener_enumerate(g):
    dist = floyd_warshall(g)
    return sum(dist[u][v] for u, v in combinations(range(g.n), 2))


def theta_pair(dist, e, f):
    (x, y), (u, v) = e, f
    return dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]


def theta_closure_naive(g):
    """Classes of the transitive closure, by repeated set merging."""
    dist = floyd_warshall(g)
    groups = [{i} for i in range(len(g.edges))]
    changed = True
    while changed:
        changed = False
        for a, b in combinations(range(len(groups)), 2):
            if any(theta_pair(dist, g.edges[i], g.edges[j]) for i in groups[a] for j in groups[b]):
                groups[a] |= groups[b]
                del groups[b]
                changed = True
                break
    return sorted(tuple(sorted(s)) for s in groups)


def all_shortest_paths(g, dist, u, v):
    adj = {x: set() for x in range(g.n)}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    out = []

    def walk(path):
        x = path[-1]
        if x == v:
            out.append(list(path))
            return
        for w in sorted(adj[x]):
            if dist[w][v] == dist[x][v] - 1:
                path.append(w)
                walk(path)
                path.pop()

    walk([u])
    return out


def convex_by_paths(g, members):
    dist = floyd_warshall(g)
    members = set(members)
    for u, v in combinations(sorted(members), 2):
        for p in all_shortest_paths(g, dist, u, v):
            if not set(p) <= members:
                return False
    return True


def crossing_counts(g, edge_ids, u, v):
    """Set of cut-crossing counts over every explicit shortest u-v path."""
    dist = floyd_warshall(g)
    cut = {g.edges[e] for e in edge_ids}
    counts = set()
    for p in all_shortest_paths(g, dist, u, v):
        counts.add(sum(1 for a, b in zip(p, p[1:]) if (min(a, b), max(a, b)) in cut))
    return counts
