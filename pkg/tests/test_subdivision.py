from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import contains_subdivision_bruteforce, minimal_model_profile_bruteforce
from spexlab.canon import are_isomorphic, is_subgraph_isomorphic
from spexlab.graph import Graph, build_book, complete, complete_bipartite, cycle, path, union
from spexlab.invariants import gamma_of, independence_number
from spexlab.subdivision import (
    SubdivisionModel,
    contains_subdivision,
    find_minimal_subdivision,
    gamma_family_subgraphs,
    induced_subgraphs_of_size,
    irreducible_members,
    is_family_subdivision_free,
    is_subdivision_saturated,
    is_valid_model,
    model_errors,
)

PATTERNS = [complete(4), cycle(5), complete_bipartite(2, 3), path(6), complete(3), path(3), union(complete(2), complete(1))]


def test_cycle_in_cycle():
    m = contains_subdivision(cycle(9), cycle(5))
    assert m is not None and is_valid_model(m)


@pytest.mark.parametrize("n", range(4, 11))
def test_book_has_no_tk4(n):
    assert contains_subdivision(build_book(2, n - 2), complete(4)) is None


def test_empty_pattern():
    m = contains_subdivision(cycle(4), Graph.empty(0))
    assert m is not None and m.total_size == 0 and is_valid_model(m)


def test_isolated_vertices_in_pattern():
    h = union(complete(2), Graph.empty(2))
    assert contains_subdivision(path(4), h) is not None
    assert contains_subdivision(path(3), h) is None


@given(graphs(max_n=6), st.sampled_from(PATTERNS))
def test_matches_bruteforce(g, h):
    m = contains_subdivision(g, h)
    assert (m is not None) == contains_subdivision_bruteforce(g, h)
    if m is not None:
        assert model_errors(m) == []


@given(graphs(max_n=7), st.sampled_from(PATTERNS), st.data())
def test_monotone(g, h, data):
    missing = g.non_edges()
    extra = data.draw(st.lists(st.sampled_from(missing), max_size=3)) if missing else []
    if contains_subdivision(g, h) is not None:
        assert contains_subdivision(g.add_edges(extra), h) is not None


def test_validator_catches_errors():
    g, h = complete(4), complete(3)
    good = contains_subdivision(g, h)
    assert is_valid_model(good)
    bad_phi = SubdivisionModel(h, g, (0, 0, 1), good.paths)
    assert model_errors(bad_phi)
    # path through a branch image, and an unnormalized path
    detour = SubdivisionModel(h, g, (0, 1, 2), ((0, 1), (0, 3, 2), (1, 2)))
    assert not is_valid_model(detour)
    crossing = SubdivisionModel(h, Graph.from_edges(5, [(0, 3), (3, 1), (1, 2), (2, 0)]), (0, 1, 2), ((0, 3, 1), (0, 2), (1, 2)))
    assert is_valid_model(crossing)
    assert not is_valid_model(SubdivisionModel(h, crossing.host, (0, 1, 2), ((0, 3, 1), (0, 4), (1, 2))))


def test_minimal_k4_pendant():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    m = find_minimal_subdivision(g, complete(4))
    assert m.total_size == 12 and 4 not in m.vertices()


def test_minimal_cycle_in_c9():
    g = cycle(9)
    m = find_minimal_subdivision(g, cycle(5))
    assert m.total_size == minimal_model_profile_bruteforce(g, cycle(5), set())[0] == 14


def test_prefer_selects_witness():
    g = union(cycle(4), cycle(4))
    plain = find_minimal_subdivision(g, complete(3))
    left = find_minimal_subdivision(g, complete(3), range(4))
    right = find_minimal_subdivision(g, complete(3), range(4, 8))
    assert plain.total_size == left.total_size == right.total_size == 7
    assert left.vertices() == frozenset(range(4))
    assert right.vertices() == frozenset(range(4, 8))
    full = find_minimal_subdivision(g, complete(3), range(8))
    assert full.total_size == 7


@settings(max_examples=60)
@given(graphs(max_n=6), st.sampled_from(PATTERNS[:5]), st.data())
def test_minimal_matches_bruteforce(g, h, data):
    prefer = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)))) if g.n else set()
    ref = minimal_model_profile_bruteforce(g, h, prefer)
    m = find_minimal_subdivision(g, h, prefer)
    if ref is None:
        assert m is None
        return
    assert is_valid_model(m)
    assert m.total_size == ref[0]
    assert len(m.vertices() & prefer) == ref[1]


def test_family_free_examples():
    for n in range(3, 13):
        assert is_family_subdivision_free(build_book(2, n - 2), [complete(4)])
    for n in range(4, 9):
        assert not is_family_subdivision_free(complete(n), [complete(4)])
    assert is_family_subdivision_free(Graph.empty(6), [complete(4), path(2), cycle(3)])


def test_saturation_examples():
    for n in range(4, 11):
        assert is_subdivision_saturated(build_book(2, n - 2), [complete(4)])
    assert not is_subdivision_saturated(complete(5), [complete(4)])
    for n in range(2, 7):
        assert is_subdivision_saturated(Graph.empty(n), [complete(2)])


def test_saturation_disconnected_literal():
    # two disjoint triangles are K4-free; joining them by one edge stays K4-free
    g = union(complete(3), complete(3))
    assert is_family_subdivision_free(g, [complete(4)])
    assert not is_subdivision_saturated(g, [complete(4)])


def test_gamma_family_examples():
    g = gamma_family_subgraphs([complete(4)], 2)
    assert len(g) == 1 and are_isomorphic(g[0], complete(2))
    g = gamma_family_subgraphs([cycle(5)], 2)
    assert len(g) == 1 and are_isomorphic(g[0], union(complete(2), complete(1)))
    g = gamma_family_subgraphs([complete(3)], 1)
    assert len(g) == 1 and are_isomorphic(g[0], complete(2))
    with pytest.raises(ValueError):
        gamma_family_subgraphs([complete(3)], 4)


def test_gamma_family_c5_components():
    gam3 = induced_subgraphs_of_size(cycle(5), 3)
    assert len(gam3) == 2
    kept = irreducible_members(gam3)
    assert len(kept) == 1 and kept[0].num_edges() == 1


@given(st.sampled_from([complete(4), complete(5), cycle(5), cycle(7), path(6), complete_bipartite(2, 3)]))
def test_gamma_family_members_are_induced_and_irreducible(h):
    gam = gamma_of(h)
    out = gamma_family_subgraphs([h], gam)
    pool = induced_subgraphs_of_size(h, h.n - gam)
    for k in out:
        assert any(are_isomorphic(k, p) for p in pool)
    for a in out:
        for b in out:
            if a is not b:
                assert not (b.num_edges() < a.num_edges() and is_subgraph_isomorphic(b, a))


@pytest.mark.parametrize("h", [complete(4), complete(5), cycle(5), cycle(7), path(6), path(8)], ids=["K4", "K5", "C5", "C7", "P6", "P8"])
def test_book_and_bipartite_host_contain_pattern(h):
    g, a = gamma_of(h), independence_number(h)
    assert contains_subdivision(build_book(g + 1, a), h) is not None
    assert contains_subdivision(complete_bipartite(g + 1, a + comb(g + 1, 2)), h) is not None


@given(graphs(max_n=8))
def test_free_graphs_respect_edge_bound(g):
    fam = [complete(4), cycle(5)]
    active = sum(1 for r in g.rows if r)
    if is_family_subdivision_free(g, fam):
        for h in fam:
            assert g.num_edges() <= 100 * h.num_edges() * active
