"""Isomorph-free enumeration of small graphs.

Every graph G on n vertices arises from some graph on n-1 vertices by
appending a vertex whose degree equals the minimum degree of G (delete a
minimum-degree vertex to see it). Level n is therefore generated from level
n-1 by appending vertices of degree d <= delta(parent) + 1, keeping a child
only when d == delta(child), and deduplicating children by canonical form.
"""
from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Iterator

from .canon import canonical_form
from .graph import Graph
from .graph6 import read_graph6_file, to_graph6

BUILTIN_MAX_N = 10


class EnumerationLimitError(ValueError):
    pass


def _children(parent: Graph) -> Iterator[Graph]:
    m = parent.n
    dmax = min(parent.min_degree() + 1, m) if m else 0
    for d in range(dmax + 1):
        for nbrs in combinations(range(m), d):
            mask = 0
            for v in nbrs:
                mask |= 1 << v
            child = parent.add_vertex(mask)
            if child.min_degree() == d:
                yield child


def _next_level(level: list[Graph]) -> Iterator[Graph]:
    seen: set[tuple[int, ...]] = set()
    for parent in level:
        for child in _children(parent):
            c = canonical_form(child)
            if c.rows not in seen:
                seen.add(c.rows)
                yield c


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of n-vertex graphs."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > BUILTIN_MAX_N:
        raise EnumerationLimitError(
            f"built-in enumeration stops at n = {BUILTIN_MAX_N}; supply a graph6 corpus instead"
        )
    if n == 0:
        yield Graph.empty(0)
        return
    level = [Graph.empty(1)]
    for _ in range(2, n):
        level = list(_next_level(level))
    stream = iter(level) if n == 1 else _next_level(level)
    for g in stream:
        if not connected_only or g.is_connected():
            yield g


def graphs_from_corpus(path: str | Path, n: int | None = None, connected_only: bool = False) -> Iterator[Graph]:
    """Graphs from a graph6/sparse6 file, e.g. the output of an external generator."""
    for g in read_graph6_file(path):
        if n is not None and g.n != n:
            continue
        if connected_only and not g.is_connected():
            continue
        yield g


def write_enumeration(path: str | Path, n: int, connected_only: bool = False) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in enumerate_graphs(n, connected_only):
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count
