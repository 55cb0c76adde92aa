import os
import random
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from spexlab.graph import Graph  # noqa: E402
from spexlab.transforms import partition_by_dominators  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8, p: float | None = None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph.from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])


@st.composite
def graph_and_perm(draw, max_n: int = 6):
    g = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


def random_instance(rnd: random.Random, n_max: int = 10):
    """Random graph, L, and a G1 choice (k, jk) with S' non-empty."""
    while True:
        n = rnd.randint(3, n_max)
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < rnd.choice([0.3, 0.5, 0.8])])
        L = rnd.sample(range(n), rnd.randint(1, n - 1))
        p = partition_by_dominators(g, L)
        if p.Sprime:
            k = rnd.choice(sorted(p.Sprime))
            jk = rnd.choice(sorted(p.missing_in_L(k)))
            return g, p, k, jk


def random_path(rnd: random.Random, g: Graph, allowed: frozenset[int]) -> list[int]:
    if not allowed:
        return []
    seq = [rnd.choice(sorted(allowed))]
    while rnd.random() < 0.85:
        nxt = [w for w in g.neighbors(seq[-1]) if w in allowed and w not in seq]
        if not nxt:
            break
        seq.append(rnd.choice(nxt))
    return seq
