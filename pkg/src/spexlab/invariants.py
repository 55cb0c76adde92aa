"""Independence number, gamma values, family profiles and level sets."""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Sequence

from .canon import canonical_graph6
from .graph import Graph, bits
from .graph6 import to_graph6
from .spectral import SpectrumResult


def _clique_cover_bound(rows: Sequence[int], p: int) -> int:
    """Number of cliques in a greedy clique cover of the vertices in ``p``."""
    count = 0
    while p:
        low = p & -p
        v = low.bit_length() - 1
        clique_cand = rows[v] & p
        p &= ~low
        # grow a clique greedily from v
        while clique_cand:
            w_low = clique_cand & -clique_cand
            w = w_low.bit_length() - 1
            p &= ~w_low
            clique_cand &= rows[w]
        count += 1
    return count


def independence_number(g: Graph) -> int:
    rows = g.rows
    best = 0

    def branch(p: int, size: int) -> None:
        nonlocal best
        # vertices of degree <= 1 inside p are always safe to take
        while p:
            for v in bits(p):
                if (rows[v] & p).bit_count() <= 1:
                    size += 1
                    p &= ~(rows[v] | 1 << v)
                    break
            else:
                break
        if not p:
            best = max(best, size)
            return
        if size + _clique_cover_bound(rows, p) <= best:
            return
        v = max(bits(p), key=lambda u: (rows[u] & p).bit_count())
        branch(p & ~(rows[v] | 1 << v), size + 1)
        branch(p & ~(1 << v), size)

    branch(g.all_mask, 0)
    return best


def gamma_of(h: Graph) -> int:
    """|H| - alpha(H) - 1."""
    return h.n - independence_number(h) - 1


@dataclass
class FamilyProfile:
    members: list[Graph]
    alpha: list[int]
    gamma: list[int]
    gamma_family: int
    alpha_family: int
    minimal_members: list[int]
    c_family: int
    zeta: int
    warnings: list[str] = field(default_factory=list)

    @property
    def gamma_ok(self) -> bool:
        """True when the family meets the gamma >= 1 hypothesis of the book results."""
        return self.gamma_family >= 1

    def to_json(self) -> dict:
        return {
            "members": [to_graph6(h) for h in self.members],
            "alpha": self.alpha,
            "gamma": self.gamma,
            "gamma_family": self.gamma_family,
            "alpha_family": self.alpha_family,
            "minimal_members": self.minimal_members,
            "minimal_canonical": sorted({canonical_graph6(self.members[i]) for i in self.minimal_members}),
            "c_family": self.c_family,
            "zeta": self.zeta,
            "gamma_ok": self.gamma_ok,
            "warnings": self.warnings,
        }


def family_profile(family: Sequence[Graph]) -> FamilyProfile:
    if not family:
        raise ValueError("family must contain at least one graph")
    members = list(family)
    for h in members:
        if h.n < 1:
            raise ValueError("family members need at least one vertex")
    alpha = [independence_number(h) for h in members]
    gamma = [h.n - a - 1 for h, a in zip(members, alpha)]
    gmin = min(gamma)
    attain = [i for i, g in enumerate(gamma) if g == gmin]
    order = min(members[i].n for i in attain)
    minimal = [i for i in attain if members[i].n == order]
    alpha_family = alpha[minimal[0]]
    c_family = max(max(2 * h.n**3, 100 * h.num_edges()) for h in members) + 1
    zeta = max(2 * h.n**2 for h in members)
    notes = []
    if gmin < 1:
        notes.append(f"gamma_family = {gmin} < 1: generalized-book results do not apply")
        warnings.warn(notes[-1], stacklevel=2)
    return FamilyProfile(members, alpha, gamma, gmin, alpha_family, minimal, c_family, zeta, notes)


@dataclass
class LevelSets:
    graph: Graph
    perron: object
    c: int
    sets: dict[int, frozenset[int]]


def level_sets(g: Graph, spec: SpectrumResult, c: int, lambdas: Sequence[int]) -> LevelSets:
    """L^lambda = {u : x_u >= (10c)^(-lambda) * x_max} for each requested lambda."""
    if c < 1:
        raise ValueError("c must be at least 1")
    x = spec.perron
    if len(x) != g.n:
        raise ValueError("spectrum result does not belong to this graph")
    xmax = float(x[spec.max_entry_vertex])
    sets = {}
    for lam in lambdas:
        threshold = xmax / (10 * c) ** lam
        sets[lam] = frozenset(u for u in range(g.n) if x[u] >= threshold)
    return LevelSets(g, x, c, sets)
