import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import independence_bruteforce
from spexlab.canon import canonical_graph6
from spexlab.graph import Graph, build_book, complete, complete_bipartite, cycle, join, path, star
from spexlab.invariants import family_profile, gamma_of, independence_number, level_sets
from spexlab.spectral import spectral_radius


@pytest.mark.parametrize("r", range(1, 9))
def test_alpha_complete(r):
    assert independence_number(complete(r)) == 1


def test_alpha_examples():
    assert independence_number(cycle(5)) == 2
    assert independence_number(Graph.empty(0)) == 0
    assert independence_number(Graph.empty(7)) == 7
    assert independence_number(complete_bipartite(3, 5)) == 5


@given(graphs(max_n=14))
def test_alpha_bruteforce(g):
    assert independence_number(g) == independence_bruteforce(g)


@given(graphs(max_n=6), graphs(max_n=6))
def test_alpha_join(g, h):
    assert independence_number(join(g, h)) == max(independence_number(g), independence_number(h))


def test_gamma_examples():
    for r in range(3, 9):
        assert gamma_of(complete(r)) == r - 2
    for ell in range(1, 6):
        assert gamma_of(cycle(2 * ell + 1)) == ell
    for k in range(1, 6):
        assert gamma_of(path(2 * k)) == k - 1


@pytest.mark.parametrize("s", range(0, 5))
@pytest.mark.parametrize("t", range(2, 6))
def test_gamma_book(s, t):
    assert gamma_of(build_book(s, t)) == s - 1


def test_profile_k4():
    p = family_profile([complete(4)])
    assert (p.gamma_family, p.alpha_family, p.minimal_members, p.zeta) == (2, 1, [0], 32)


def test_profile_mixed():
    p = family_profile([complete(5), cycle(7), path(8)])
    assert p.gamma == [3, 3, 3]
    assert p.gamma_family == 3
    assert p.minimal_members == [0]
    assert p.alpha_family == 1


@pytest.mark.filterwarnings("ignore::UserWarning")
def test_c_family():
    assert family_profile([complete(3)]).c_family == 301
    for fam in ([complete(5), cycle(7)], [path(8), star(6)]):
        p = family_profile(fam)
        assert all(p.c_family > 2 * h.n**3 and p.c_family > 100 * h.num_edges() for h in fam)


def test_profile_errors_and_warning():
    with pytest.raises(ValueError):
        family_profile([])
    with pytest.raises(ValueError):
        family_profile([Graph.empty(0)])
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        p = family_profile([complete(2)])
    assert p.gamma_family == 0 and not p.gamma_ok and p.warnings and w


fam_pool = [complete(4), complete(5), cycle(5), cycle(7), path(6), path(8), complete_bipartite(2, 3), star(4)]


@given(st.lists(st.sampled_from(fam_pool), min_size=1, max_size=4, unique_by=canonical_graph6), st.randoms())
def test_profile_permutation_invariant(fam, rnd):
    shuffled = list(fam)
    rnd.shuffle(shuffled)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        a, b = family_profile(fam), family_profile(shuffled)
    assert a.gamma_family == b.gamma_family and a.alpha_family == b.alpha_family
    assert a.to_json()["minimal_canonical"] == b.to_json()["minimal_canonical"]
    for i in a.minimal_members:
        h = a.members[i]
        assert a.alpha[i] == h.n - a.gamma_family - 1
    assert len({a.alpha[i] for i in a.minimal_members}) == 1


def test_level_sets_regular():
    g = cycle(6)
    ls = level_sets(g, spectral_radius(g), 301, [1, 2])
    assert all(s == frozenset(range(6)) for s in ls.sets.values())


def test_level_sets_star():
    g = star(8)
    ls = level_sets(g, spectral_radius(g), 301, [0, 1])
    assert ls.sets[1] == frozenset(range(9))
    assert ls.sets[0] == frozenset({0})


@given(graphs(min_n=1, max_n=9))
def test_level_sets_nested(g):
    spec = spectral_radius(g)
    ls = level_sets(g, spec, 2, [0, 1, 2, 3])
    for lam in range(3):
        assert ls.sets[lam] <= ls.sets[lam + 1]
    assert spec.max_entry_vertex in ls.sets[1]


def test_level_sets_errors():
    g = cycle(4)
    with pytest.raises(ValueError):
        level_sets(g, spectral_radius(g), 0, [1])
    with pytest.raises(ValueError):
        level_sets(cycle(5), spectral_radius(g), 3, [1])
