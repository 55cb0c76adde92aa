"""Canonical labelling and small isomorphism utilities.

canonical_form uses colour refinement to an equitable partition, then
individualizes vertices of the first non-singleton cell and keeps the
largest adjacency certificate over all leaves of the search tree. Leaves
with equal certificates give automorphisms, and these prune sibling
branches that lie in the same orbit under automorphisms fixing the
current prefix. For n <= 8 a plain permutation scan
(:func:`canonical_form_bruteforce`) gives an independent reference.
"""
from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .graph import Graph, bits
from .graph6 import to_graph6


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(len(colors))]
        order = sorted(set(sigs))
        if len(order) == ncells:
            rank = {s: i for i, s in enumerate(order)}
            return [rank[s] for s in sigs]
        rank = {s: i for i, s in enumerate(order)}
        colors = [rank[s] for s in sigs]
        ncells = len(order)


def _individualize(colors: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in colors]
    out[v] -= 1
    return out


def _certificate(g: Graph, lab: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    cert = []
    for v in lab:
        r = 0
        for u in bits(g.rows[v]):
            r |= 1 << pos[u]
        cert.append(r)
    return tuple(cert)


class _Canon:
    def __init__(self, g: Graph):
        self.g = g
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.best_cert: tuple[int, ...] | None = None
        self.best_lab: list[int] | None = None
        self.first_cert: tuple[int, ...] | None = None
        self.first_lab: list[int] | None = None
        self.autos: list[list[int]] = []

    def _record_auto(self, lab_a: list[int], lab_b: list[int]) -> None:
        gamma = [0] * self.g.n
        for a, b in zip(lab_a, lab_b):
            gamma[a] = b
        if any(gamma[v] != v for v in range(self.g.n)):
            self.autos.append(gamma)

    def _orbit_rep(self, prefix: list[int]) -> list[int]:
        parent = list(range(self.g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.g.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.g.n)]

    def search(self, colors: list[int], prefix: list[int]) -> None:
        colors = _refine(self.nbrs, colors)
        n = self.g.n
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        if len(cells) == n:
            lab = sorted(range(n), key=colors.__getitem__)
            cert = _certificate(self.g, lab)
            if self.first_cert is None:
                self.first_cert, self.first_lab = cert, lab
            elif cert == self.first_cert:
                self._record_auto(self.first_lab, lab)
            if self.best_cert is None or cert > self.best_cert:
                self.best_cert, self.best_lab = cert, lab
            elif cert == self.best_cert and self.best_lab is not self.first_lab:
                self._record_auto(self.best_lab, lab)
            return
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
        done: list[int] = []
        for v in target:
            if done:
                rep = self._orbit_rep(prefix)
                if any(rep[v] == rep[w] for w in done):
                    continue
            self.search(_individualize(colors, v), prefix + [v])
            done.append(v)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``lab`` with ``lab[i]`` the vertex placed at canonical position ``i``."""
    if g.n == 0:
        return []
    c = _Canon(g)
    c.search([r.bit_count() for r in g.rows], [])
    return c.best_lab


def canonical_form(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(lab):
        perm[v] = i
    return g.permute(perm)


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def canonical_form_bruteforce(g: Graph) -> Graph:
    """Lexicographically largest relabelling over all n! permutations."""
    if g.n > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    best = None
    for perm in permutations(range(g.n)):
        h = g.permute(perm)
        if best is None or h.rows > best.rows:
            best = h
    return best if best is not None else g


def find_monomorphism(pattern: Graph, host: Graph) -> list[int] | None:
    """Injective map ``V(pattern) -> V(host)`` preserving edges (not necessarily induced)."""
    p, h = pattern, host
    if p.n > h.n or p.num_edges() > h.num_edges():
        return None
    order = sorted(range(p.n), key=lambda v: -p.degree(v))
    # bring each vertex after as many of its neighbours as possible
    placed: list[int] = []
    rest = set(order)
    while rest:
        v = max(rest, key=lambda x: (sum(1 for u in placed if p.has_edge(u, x)), p.degree(x), -x))
        placed.append(v)
        rest.remove(v)
    hdeg = h.degrees()
    phi = [-1] * p.n

    def extend(i: int, used: int) -> bool:
        if i == len(placed):
            return True
        v = placed[i]
        cand = h.all_mask & ~used
        for u in bits(p.rows[v]):
            if phi[u] >= 0:
                cand &= h.rows[phi[u]]
        dv = p.degree(v)
        for x in bits(cand):
            if hdeg[x] < dv:
                continue
            phi[v] = x
            if extend(i + 1, used | 1 << x):
                return True
        phi[v] = -1
        return False

    return list(phi) if extend(0, 0) else None


def is_subgraph_isomorphic(pattern: Graph, host: Graph) -> bool:
    return find_monomorphism(pattern, host) is not None
