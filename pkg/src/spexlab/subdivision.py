"""Topological-minor (H-subdivision) containment with witness models.

The search works on a reduced form of the pattern. Degree-2 pattern vertices
are suppressed, so each maximal chain of them becomes one "chain" between
kernel vertices (degree != 2, plus one representative per cycle component)
that must be routed through at least as many host vertices as it has
suppressed vertices. A model of H exists iff such a chain routing exists:
concatenating edge paths gives a routing, and splitting a routing at its
first internal vertices recovers a model.

Search order: kernel vertices by descending degree, each next one chosen
with the most chains to already placed kernel vertices; a chain is routed
as soon as both its ends are placed. Chain routes are tried shortest first.
Two routes of one chain with the same internal vertex set are equivalent,
and a route whose internal set contains an already tried one is dominated
(it only blocks more vertices), so both are skipped. A chain without
suppressed vertices whose ends are adjacent is routed over that edge only;
any model can be rewritten this way. The same argument justifies
normalizing returned witnesses: a path whose endpoints are adjacent is
replaced by the edge, which only frees vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .canon import canonical_graph6, is_subgraph_isomorphic
from .graph import Graph, bits, mask_of
from .graph6 import to_graph6


@dataclass(frozen=True)
class SubdivisionModel:
    pattern: Graph
    host: Graph
    phi: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]  # one per pattern edge, in pattern.edges() order

    @property
    def total_size(self) -> int:
        return sum(len(p) for p in self.paths)

    @property
    def vertex_mask(self) -> int:
        m = mask_of(self.phi)
        for p in self.paths:
            m |= mask_of(p)
        return m

    def vertices(self) -> frozenset[int]:
        return frozenset(bits(self.vertex_mask))

    def to_json(self) -> dict:
        return {
            "pattern": to_graph6(self.pattern),
            "host": to_graph6(self.host),
            "phi": list(self.phi),
            "paths": [list(p) for p in self.paths],
            "total_size": self.total_size,
        }


def model_errors(model: SubdivisionModel) -> list[str]:
    """Check every model invariant directly on the host; empty list means valid."""
    h, g, phi = model.pattern, model.host, model.phi
    errs = []
    if len(phi) != h.n:
        return [f"phi has {len(phi)} entries for {h.n} pattern vertices"]
    if len(set(phi)) != len(phi):
        errs.append("phi is not injective")
    if any(not 0 <= x < g.n for x in phi):
        errs.append("phi maps outside the host")
        return errs
    edges = h.edges()
    if len(model.paths) != len(edges):
        errs.append(f"{len(model.paths)} paths for {len(edges)} pattern edges")
        return errs
    branch = set(phi)
    inner_seen: set[int] = set()
    for (i, j), p in zip(edges, model.paths):
        if len(p) < 2 or p[0] != phi[i] or p[-1] != phi[j]:
            errs.append(f"path for edge {i}{j} has wrong endpoints: {p}")
            continue
        if len(set(p)) != len(p):
            errs.append(f"path for edge {i}{j} repeats a vertex: {p}")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                errs.append(f"path for edge {i}{j} uses non-edge {a}{b}")
        for w in p[1:-1]:
            if w in branch:
                errs.append(f"internal vertex {w} of edge {i}{j} is a branch vertex")
            if w in inner_seen:
                errs.append(f"internal vertex {w} is shared between paths")
            inner_seen.add(w)
        if len(p) > 2 and g.has_edge(p[0], p[-1]):
            errs.append(f"path for edge {i}{j} is not the direct edge although its ends are adjacent")
    return errs


def is_valid_model(model: SubdivisionModel) -> bool:
    return not model_errors(model)


# -- pattern reduction ------------------------------------------------------

@dataclass(frozen=True)
class _Chain:
    a: int
    b: int
    inner: tuple[int, ...]

    @property
    def min_internal(self) -> int:
        return len(self.inner)


def _reduce(h: Graph) -> tuple[list[int], list[_Chain]]:
    deg = h.degrees()
    kernel = {v for v in range(h.n) if deg[v] != 2}
    seen: set[tuple[int, int]] = set()
    chains: list[_Chain] = []

    def walk(a: int, w: int) -> None:
        prev, cur, inner = a, w, []
        seen.add((min(a, w), max(a, w)))
        while cur not in kernel:
            inner.append(cur)
            nxt = next(u for u in h.neighbors(cur) if u != prev)
            seen.add((min(cur, nxt), max(cur, nxt)))
            prev, cur = cur, nxt
        chains.append(_Chain(a, cur, tuple(inner)))

    for a in sorted(kernel):
        for w in h.neighbors(a):
            if (min(a, w), max(a, w)) not in seen:
                walk(a, w)
    for v in range(h.n):
        # pure cycle components have no kernel vertex yet
        if deg[v] == 2 and any((min(v, u), max(v, u)) not in seen for u in h.neighbors(v)):
            kernel.add(v)
            walk(v, h.neighbors(v)[0])
    return sorted(kernel), chains


class _Search:
    def __init__(self, g: Graph, h: Graph):
        self.g, self.h = g, h
        self.kernel, self.chains = _reduce(h)
        self.hdeg = h.degrees()
        self.gdeg = g.degrees()
        self.order, self.schedule = self._plan()
        self.phi: dict[int, int] = {}
        self.routes: dict[int, list[int]] = {}

    def _plan(self) -> tuple[list[int], list[list[int]]]:
        kernel = self.kernel
        if not kernel:
            return [], []
        placed: list[int] = []
        rest = set(kernel)
        while rest:
            pset = set(placed)

            def links(v):
                return sum(1 for c in self.chains if (c.a == v and c.b in pset) or (c.b == v and c.a in pset))

            v = max(rest, key=lambda x: (links(x), self.hdeg[x], -x))
            placed.append(v)
            rest.remove(v)
        pos = {v: i for i, v in enumerate(placed)}
        schedule: list[list[int]] = [[] for _ in placed]
        for ci, c in enumerate(self.chains):
            schedule[max(pos[c.a], pos[c.b])].append(ci)
        return placed, schedule

    def degree_feasible(self) -> bool:
        need = sorted((self.hdeg[v] for v in self.kernel), reverse=True)
        have = sorted(self.gdeg, reverse=True)
        return len(need) <= len(have) and all(a >= b for a, b in zip(have, need))

    # -- chain routing -------------------------------------------------------
    def _routes(self, s: int, t: int, avail: int, lo: int, hi: int) -> Iterator[tuple[list[int], int]]:
        rows = self.g.rows
        if s != t and lo == 0 and rows[s] >> t & 1:
            yield [], 0
            return
        lo = max(lo, 2 if s == t else 1)
        found: list[int] = []

        def dominated(m: int) -> bool:
            return any(y & ~m == 0 for y in found)

        for length in range(lo, hi + 1):
            reached = False

            def rec(cur: int, depth: int, mask: int, seq: list[int]):
                nonlocal reached
                if depth == length:
                    reached = True
                    if rows[cur] >> t & 1 and not dominated(mask):
                        found.append(mask)
                        yield seq, mask
                    return
                for nxt in bits(rows[cur] & avail & ~mask):
                    m2 = mask | 1 << nxt
                    if dominated(m2):
                        continue
                    seq.append(nxt)
                    yield from rec(nxt, depth + 1, m2, seq)
                    seq.pop()

            for seq, mask in rec(s, 0, 0, []):
                yield list(seq), mask
            if not reached:
                return

    # -- existence -----------------------------------------------------------
    def find(self) -> bool:
        self.budget = None
        return self._place(0, 0, 0)

    def _candidates(self, v: int, used: int) -> Iterator[int]:
        need = self.hdeg[v]
        for x in bits(self.g.all_mask & ~used):
            if self.gdeg[x] >= need:
                yield x

    def _place(self, i: int, used: int, spent: int) -> bool:
        if i == len(self.order):
            return self._complete()
        v = self.order[i]
        for x in self._candidates(v, used):
            self.phi[v] = x
            if self._route(i, 0, used | 1 << x, spent):
                return True
        self.phi.pop(v, None)
        return False

    def _route(self, i: int, j: int, used: int, spent: int) -> bool:
        sched = self.schedule[i]
        if j == len(sched):
            return self._place(i + 1, used, spent)
        c = self.chains[sched[j]]
        s, t = self.phi[c.a], self.phi[c.b]
        avail = self.g.all_mask & ~used
        hi = avail.bit_count()
        if self.budget is not None:
            reserve = sum(self.chains[k].min_internal for k in self._pending(i, j + 1))
            hi = min(hi, self.budget - spent - reserve)
            if hi < c.min_internal:
                return False
        for seq, mask in self._routes(s, t, avail, c.min_internal, hi):
            self.routes[sched[j]] = seq
            if self._route(i, j + 1, used | mask, spent + len(seq)):
                return True
        self.routes.pop(sched[j], None)
        return False

    def _pending(self, i: int, j: int) -> Iterator[int]:
        yield from self.schedule[i][j:]
        for k in range(i + 1, len(self.schedule)):
            yield from self.schedule[k]

    def _complete(self) -> bool:
        if self.budget is None:
            return True
        m = self.build_model(normalize=False)
        score = (m.vertex_mask & self.prefer).bit_count()
        if self.best is None or score > self.best_score:
            self.best, self.best_score = m, score
        return score >= self.score_cap

    # -- minimal models ------------------------------------------------------
    def find_minimal(self, prefer: int) -> SubdivisionModel | None:
        self.prefer = prefer
        base = sum(c.min_internal for c in self.chains)
        for budget in range(base, self.g.n - len(self.kernel) + 1):
            self.budget = budget
            self.best, self.best_score = None, -1
            self.score_cap = min(prefer.bit_count(), len(self.kernel) + budget)
            self.phi.clear()
            self.routes.clear()
            self._place(0, 0, 0)
            if self.best is not None:
                return self.best
        return None

    # -- witness assembly ----------------------------------------------------
    def build_model(self, normalize: bool = True) -> SubdivisionModel:
        h, g = self.h, self.g
        phi = [-1] * h.n
        for v, x in self.phi.items():
            phi[v] = x
        seg: dict[tuple[int, int], list[int]] = {}
        for ci, c in enumerate(self.chains):
            route = self.routes[ci]
            full = [self.phi[c.a]] + route + [self.phi[c.b]]
            hv = [c.a, *c.inner, c.b]
            pos = [0] + list(range(1, len(c.inner) + 1)) + [len(full) - 1]
            for k, u in enumerate(c.inner):
                phi[u] = route[k]
            for k in range(len(hv) - 1):
                p = full[pos[k]:pos[k + 1] + 1]
                u, w = hv[k], hv[k + 1]
                if u > w:
                    u, w, p = w, u, p[::-1]
                seg[(u, w)] = p
        paths = []
        for e in h.edges():
            p = seg[e]
            if normalize and len(p) > 2 and g.has_edge(p[0], p[-1]):
                p = [p[0], p[-1]]
            paths.append(tuple(p))
        return SubdivisionModel(h, g, tuple(phi), tuple(paths))


def contains_subdivision(g: Graph, h: Graph) -> SubdivisionModel | None:
    """A model of ``h`` in ``g`` if ``g`` contains a subdivision of ``h``, else None."""
    if h.n == 0:
        return SubdivisionModel(h, g, (), ())
    if h.n > g.n or h.num_edges() > g.num_edges():
        return None
    s = _Search(g, h)
    if not s.degree_feasible():
        return None
    if not s.find():
        return None
    return s.build_model()


def find_minimal_subdivision(g: Graph, h: Graph, prefer: Sequence[int] | frozenset[int] = ()) -> SubdivisionModel | None:
    """Model minimizing total path size; among those, using most vertices of ``prefer``."""
    if h.n == 0:
        return SubdivisionModel(h, g, (), ())
    if h.n > g.n or h.num_edges() > g.num_edges():
        return None
    s = _Search(g, h)
    if not s.degree_feasible():
        return None
    return s.find_minimal(mask_of(prefer))


def is_family_subdivision_free(g: Graph, family: Sequence[Graph]) -> bool:
    return all(contains_subdivision(g, h) is None for h in family)


def first_contained(g: Graph, family: Sequence[Graph]) -> SubdivisionModel | None:
    for h in family:
        m = contains_subdivision(g, h)
        if m is not None:
            return m
    return None


def is_subdivision_saturated(g: Graph, family: Sequence[Graph]) -> bool:
    """Free of every member, and adding any non-edge creates some member's subdivision.

    Non-edges between different components count like any other.
    """
    if not is_family_subdivision_free(g, family):
        return False
    return all(first_contained(g.add_edge(u, v), family) is not None for u, v in g.non_edges())


def induced_subgraphs_of_size(h: Graph, s: int) -> list[Graph]:
    """Gamma_s(H): distinct (up to isomorphism) induced subgraphs on s vertices."""
    if s < 0 or s > h.n:
        raise ValueError(f"no induced subgraphs of size {s} in a graph of order {h.n}")
    out: dict[str, Graph] = {}
    for sub in combinations(range(h.n), s):
        k = h.induced(sub)
        out.setdefault(canonical_graph6(k), k)
    return [out[key] for key in sorted(out)]


def irreducible_members(members: Sequence[Graph]) -> list[Graph]:
    """Members not containing another member as a proper (spanning) subgraph."""
    out = []
    for m in members:
        reducible = any(
            other.num_edges() < m.num_edges() and is_subgraph_isomorphic(other, m)
            for other in members
        )
        if not reducible:
            out.append(m)
    return out


def gamma_family_subgraphs(family: Sequence[Graph], gamma_family: int) -> list[Graph]:
    """Gamma(family): irreducible (|H| - gamma)-vertex induced subgraphs of each member, deduplicated."""
    out: dict[str, Graph] = {}
    for h in family:
        s = h.n - gamma_family
        if s < 0:
            raise ValueError(f"member of order {h.n} is smaller than gamma_family = {gamma_family}")
        for k in irreducible_members(induced_subgraphs_of_size(h, s)):
            out.setdefault(canonical_graph6(k), k)
    return [out[key] for key in sorted(out)]
