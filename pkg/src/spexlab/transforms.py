"""Graph rewrites around a dominating set L.

V \\ L splits into S'' (vertices adjacent to all of L) and S' (the rest).
G0 rewires S' onto L. G1 also drops every S'-S edge and leaves a single
missing L-edge at u_k. G2 restores that edge and strips S''-edges at a
path P0 so that P0 becomes linear inside S''.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, bits, mask_of


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    graph: Graph
    L: frozenset[int]
    Sprime: frozenset[int]
    Sdoubleprime: frozenset[int]

    @property
    def l_mask(self) -> int:
        return mask_of(self.L)

    @property
    def sp_mask(self) -> int:
        return mask_of(self.Sprime)

    @property
    def spp_mask(self) -> int:
        return mask_of(self.Sdoubleprime)

    @property
    def s_mask(self) -> int:
        return self.sp_mask | self.spp_mask

    def missing_in_L(self, u: int) -> frozenset[int]:
        """L_u: vertices of L not adjacent to u."""
        return frozenset(v for v in self.L if not self.graph.has_edge(u, v))


def partition_by_dominators(g: Graph, L: Iterable[int]) -> Partition:
    lm = mask_of(L)
    if lm & ~g.all_mask:
        raise TransformError("L contains vertices outside the graph")
    spp = [v for v in range(g.n) if not lm >> v & 1 and g.rows[v] & lm == lm]
    sp = [v for v in range(g.n) if not lm >> v & 1 and g.rows[v] & lm != lm]
    return Partition(g, frozenset(bits(lm)), frozenset(sp), frozenset(spp))


def _check_partition(g: Graph, p: Partition) -> None:
    if p.graph.n != g.n:
        raise TransformError("partition belongs to a graph of different order")


def transform_G0(g: Graph, p: Partition) -> Graph:
    """Every S' vertex gets neighbourhood exactly L."""
    _check_partition(g, p)
    sp, lm = p.sp_mask, p.l_mask
    rows = list(g.rows)
    for v in range(g.n):
        if sp >> v & 1:
            rows[v] = lm
        else:
            rows[v] &= ~sp
            if lm >> v & 1:
                rows[v] |= sp
    return Graph(g.n, tuple(rows))


def transform_G1(g: Graph, p: Partition, k: int, jk: int) -> Graph:
    """Drop all S'-S edges, join S' to all of L, then remove the edge u_k v_jk."""
    _check_partition(g, p)
    if not p.Sprime:
        raise TransformError("S' is empty")
    if k not in p.Sprime:
        raise TransformError(f"u_k = {k} is not in S'")
    if jk not in p.L:
        raise TransformError(f"v_jk = {jk} is not in L")
    if g.has_edge(k, jk):
        raise TransformError(f"v_jk = {jk} is adjacent to u_k = {k}, so it is not in L_k")
    sp, s, lm = p.sp_mask, p.s_mask, p.l_mask
    rows = list(g.rows)
    for v in range(g.n):
        if sp >> v & 1:
            rows[v] = (rows[v] & ~s) | lm
        elif s >> v & 1:
            rows[v] &= ~sp
        else:
            rows[v] |= sp
    rows[k] &= ~(1 << jk)
    rows[jk] &= ~(1 << k)
    return Graph(g.n, tuple(rows))


def is_path_in(g: Graph, seq: Sequence[int]) -> bool:
    return (
        len(seq) >= 1
        and len(set(seq)) == len(seq)
        and all(0 <= v < g.n for v in seq)
        and all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))
    )


def transform_G2(g1: Graph, p: Partition, k: int, jk: int, p0: Sequence[int]) -> Graph:
    """Restore u_k v_jk and delete S''-edges touching P0 that are not edges of P0."""
    _check_partition(g1, p)
    p0 = list(p0)
    if not is_path_in(g1, p0):
        raise TransformError(f"{p0} is not a path of the graph")
    spp = p.spp_mask
    pm = mask_of(p0)
    if pm & ~spp:
        raise TransformError("P0 leaves S''")
    keep = {(min(a, b), max(a, b)) for a, b in zip(p0, p0[1:])}
    drop = []
    for u in p0:
        for w in bits(g1.rows[u] & spp):
            e = (min(u, w), max(u, w))
            if e not in keep:
                drop.append(e)
    return g1.add_edge(k, jk).remove_edges(drop)


@dataclass(frozen=True)
class LinearPath:
    vertices: tuple[int, ...]

    def errors(self, g: Graph) -> list[str]:
        """Problems with this sequence as a linear path in ``g``; empty when valid.

        The endpoints may coincide (a cycle through one branch point).
        """
        seq = self.vertices
        errs = []
        closed = len(seq) > 2 and seq[0] == seq[-1]
        body = seq[:-1] if closed else seq
        if len(set(body)) != len(body):
            errs.append("repeated vertex")
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                errs.append(f"{a}{b} is not an edge")
        for w in seq[1:-1]:
            if g.degree(w) != 2:
                errs.append(f"internal vertex {w} has degree {g.degree(w)}")
        return errs

    def is_valid(self, g: Graph) -> bool:
        return not self.errors(g)


def peel_min_degree(g: Graph, s: Iterable[int]) -> list[int]:
    """Repeatedly remove a minimum-degree vertex of the remaining induced subgraph."""
    rest = mask_of(s)
    out = []
    while rest:
        v = min(bits(rest), key=lambda u: ((g.rows[u] & rest).bit_count(), u))
        out.append(v)
        rest &= ~(1 << v)
    return out


def argmin_entry(x, vertices: Iterable[int]) -> int:
    """Vertex of smallest Perron entry; lowest index on ties."""
    x = np.asarray(x)
    return min(vertices, key=lambda v: (x[v], v))


@dataclass(frozen=True)
class PathSearchResult:
    path: tuple[int, ...]
    reached: bool
    exact: bool


def find_longest_path_within(
    g: Graph, s: Iterable[int], target_len: int, node_limit: int | None = None
) -> PathSearchResult:
    """A path inside ``s`` with at least ``target_len`` vertices, or the longest one seen.

    ``exact`` is False only when ``node_limit`` cut the search short.
    """
    sm = mask_of(s)
    rows = [r & sm for r in g.rows]
    best: list[int] = []
    nodes = 0
    stop = False

    def rec(seq: list[int], used: int) -> bool:
        nonlocal best, nodes, stop
        nodes += 1
        if len(seq) > len(best):
            best = list(seq)
            if len(best) >= target_len:
                return True
        if node_limit is not None and nodes >= node_limit:
            stop = True
            return False
        for w in bits(rows[seq[-1]] & ~used):
            seq.append(w)
            if rec(seq, used | 1 << w):
                return True
            seq.pop()
            if stop:
                return False
        return False

    for v in bits(sm):
        if rec([v], 1 << v) or stop:
            break
    reached = len(best) >= target_len
    return PathSearchResult(tuple(best), reached, reached or not stop)
