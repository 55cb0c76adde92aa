from itertools import combinations

import pytest

from oracles import classify_labeled, connected_counts_from_totals, count_graphs_burnside
from spexlab.canon import canonical_form
from spexlab.enumeration import EnumerationLimitError, enumerate_graphs, graphs_from_corpus, write_enumeration
from spexlab.graph import Graph
from spexlab.graph6 import to_graph6


def test_examples():
    assert sum(1 for _ in enumerate_graphs(4)) == 11
    assert sum(1 for _ in enumerate_graphs(5)) == 34
    assert sum(1 for _ in enumerate_graphs(1)) == 1
    assert list(enumerate_graphs(0)) == [Graph.empty(0)]


@pytest.mark.parametrize("n", range(1, 6))
def test_labeled_classification(n):
    assert sum(1 for _ in enumerate_graphs(n)) == classify_labeled(n)
    assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == classify_labeled(n, connected_only=True)


def test_counts_through_seven():
    totals = [1] + [count_graphs_burnside(n) for n in range(1, 8)]
    connected = connected_counts_from_totals(totals)
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_graphs(n)) == totals[n]
        assert sum(1 for _ in enumerate_graphs(n, connected_only=True)) == connected[n]


@pytest.mark.parametrize("n", [5, 6])
def test_complete_and_canonical(n):
    out = list(enumerate_graphs(n))
    assert all(canonical_form(g) == g for g in out)
    assert len({g.rows for g in out}) == len(out)
    pairs = list(combinations(range(n), 2))
    if n == 5:
        forms = {canonical_form(Graph.from_edges(n, [p for i, p in enumerate(pairs) if m >> i & 1])).rows for m in range(1 << len(pairs))}
        assert forms == {g.rows for g in out}


def test_limit():
    with pytest.raises(EnumerationLimitError):
        next(enumerate_graphs(11))
    with pytest.raises(ValueError):
        next(enumerate_graphs(-1))


def test_corpus_roundtrip(tmp_path):
    p = tmp_path / "five.g6"
    assert write_enumeration(p, 5) == 34
    extra = tmp_path / "mixed.g6"
    extra.write_text(p.read_text() + to_graph6(Graph.empty(3)) + "\n")
    assert sum(1 for _ in graphs_from_corpus(extra, 5)) == 34
    assert sum(1 for _ in graphs_from_corpus(extra, 5, connected_only=True)) == 21
    assert sum(1 for _ in graphs_from_corpus(extra)) == 35
