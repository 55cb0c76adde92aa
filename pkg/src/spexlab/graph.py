"""Simple undirected graphs stored as adjacency bitsets.

Row ``i`` of a :class:`Graph` is an int whose bit ``j`` is set iff ``ij`` is
an edge. Graphs are immutable; every operation returns a new graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 64


class GraphOrderError(ValueError):
    """Raised when a graph would exceed :data:`MAX_ORDER` vertices."""


def _check_order(n: int) -> None:
    if n < 0:
        raise GraphOrderError(f"negative order {n}")
    if n > MAX_ORDER:
        raise GraphOrderError(f"order {n} exceeds maximum {MAX_ORDER}")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_order(self.n)
        if len(self.rows) != self.n:
            raise ValueError("row count does not match order")

    # -- construction -------------------------------------------------
    @classmethod
    def empty(cls, n: int) -> Graph:
        _check_order(n)
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}{v} out of range for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, a) -> Graph:
        a = np.asarray(a)
        n = a.shape[0]
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    # -- basic queries ------------------------------------------------
    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        out = []
        for i, r in enumerate(self.rows):
            out.extend((i, j) for j in bits(r >> (i + 1) << (i + 1)))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(self.n), 2) if not self.rows[i] >> j & 1]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def edges_within(self, mask: int) -> int:
        """e(S): number of edges with both ends in ``mask``."""
        return sum((self.rows[v] & mask).bit_count() for v in bits(mask)) // 2

    def edges_between(self, s: int, t: int) -> int:
        """e(S, T) for disjoint masks ``s`` and ``t``."""
        return sum((self.rows[v] & t).bit_count() for v in bits(s))

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    # -- rewrites -----------------------------------------------------
    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.rows)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> Graph:
        return self.add_edges([(u, v)])

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_vertex(self, nbr_mask: int) -> Graph:
        """Append vertex ``n`` adjacent to the vertices in ``nbr_mask``."""
        n = self.n
        rows = [r | ((nbr_mask >> i & 1) << n) for i, r in enumerate(self.rows)]
        rows.append(nbr_mask & self.all_mask)
        return Graph(n + 1, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph on ``vertices``, relabelled 0..k-1 in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(pos[u] for u in bits(self.rows[v]) if u in pos))
        return Graph(len(vertices), tuple(rows))

    def restrict(self, mask: int) -> Graph:
        """Same vertex set, keeping only edges with both ends in ``mask``."""
        return Graph(self.n, tuple((r & mask) if mask >> i & 1 else 0 for i, r in enumerate(self.rows)))

    def delete_vertices(self, mask: int) -> Graph:
        return self.induced([v for v in range(self.n) if not mask >> v & 1])

    def permute(self, perm: Sequence[int]) -> Graph:
        """Relabel vertex ``v`` as ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[u] for u in bits(r))
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.all_mask
        return Graph(self.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- named graphs -----------------------------------------------------------

def complete(r: int) -> Graph:
    return Graph.from_edges(r, combinations(range(r), 2))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def path(k: int) -> Graph:
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def star(t: int) -> Graph:
    return complete_bipartite(1, t)


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; ``h``'s vertices follow ``g``'s."""
    _check_order(g.n + h.n)
    shift = g.n
    return Graph(g.n + h.n, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    u = union(g, h)
    left = g.all_mask
    right = h.all_mask << g.n
    rows = [r | (right if i < g.n else left) for i, r in enumerate(u.rows)]
    return Graph(u.n, tuple(rows))


def build_book(s: int, t: int) -> Graph:
    """Generalized book K_s joined with t isolated vertices; clique is 0..s-1."""
    if s < 0 or t < 0:
        raise ValueError("book parameters must be non-negative")
    _check_order(s + t)
    return join(complete(s), Graph.empty(t))
