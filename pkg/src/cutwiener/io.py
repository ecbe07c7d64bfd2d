"""Text formats: edge-list graph files and cut partition files.

Edge list::

    # comments start with '#'
    n m
    u v        (exactly m lines, edge index = order of appearance)

Partition file: one cut per data line, listing edge indices.
"""

from __future__ import annotations

import re
import sys

from .errors import ParseError, WienerError
from .graph import Graph, build_graph

_INTS = re.compile(r"\d+(?:[ \t]+\d+)*")


def data_lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(lineno: int, line: str) -> list[int]:
    if not _INTS.fullmatch(line):
        raise ParseError(lineno, f"expected whitespace-separated non-negative integers, got {line!r}")
    return [int(tok) for tok in line.split()]


def parse_edge_list(text: str) -> Graph:
    lines = data_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError(1, "missing 'n m' header")
    lineno, line = header
    fields = _ints(lineno, line)
    if len(fields) != 2:
        raise ParseError(lineno, "header must be 'n m'")
    n, m = fields
    pairs = []
    last = lineno
    for lineno, line in lines:
        last = lineno
        if len(pairs) == m:
            raise ParseError(lineno, f"more than the declared {m} edge lines")
        uv = _ints(lineno, line)
        if len(uv) != 2:
            raise ParseError(lineno, "edge line must be 'u v'")
        try:
            build_graph(n, [uv])
        except WienerError as exc:
            raise ParseError(lineno, str(exc)) from None
        pairs.append((lineno, uv))
    if len(pairs) != m:
        raise ParseError(last, f"declared {m} edges, found {len(pairs)}")
    seen = {}
    for lineno, (u, v) in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key} (first on line {seen[key]})")
        seen[key] = lineno
    return build_graph(n, [uv for _, uv in pairs])


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def parse_partition(text: str, m: int | None = None) -> list[list[int]]:
    """Edge-index lists, one per cut; indices checked against ``m`` if given."""
    cuts = []
    for lineno, line in data_lines(text):
        ids = _ints(lineno, line)
        if m is not None:
            for e in ids:
                if e >= m:
                    raise ParseError(lineno, f"edge index {e} not in 0..{m - 1}")
        if len(set(ids)) != len(ids):
            raise ParseError(lineno, "edge index repeated within one cut")
        cuts.append(ids)
    return cuts


def format_partition(edge_sets) -> str:
    return "".join(" ".join(str(e) for e in sorted(s)) + "\n" for s in edge_sets)


def read_text(path: str) -> str:
    """Read ``path`` as ASCII; ``-`` means standard input."""
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii", newline="") as fh:
        return fh.read()
