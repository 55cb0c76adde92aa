import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from oracles import spectral_radius_dense
from spexlab.enumeration import enumerate_graphs
from spexlab.graph import Graph, build_book, complete, complete_bipartite, path, union
from spexlab.spectral import (
    ConvergenceError,
    DegenerateOverlapError,
    EmptyGraphError,
    co_extremal,
    rayleigh_shift_lower_bound,
    spectral_radius,
    two_vector_shift,
)


@pytest.mark.parametrize("r", range(2, 11))
def test_complete(r):
    assert abs(spectral_radius(complete(r)).rho - (r - 1)) <= 1e-9


@pytest.mark.parametrize("s", range(1, 9))
@pytest.mark.parametrize("t", range(1, 9))
def test_complete_bipartite(s, t):
    assert abs(spectral_radius(complete_bipartite(s, t)).rho - math.sqrt(s * t)) <= 1e-9


def test_book_against_dense():
    b = build_book(2, 4)
    assert abs(spectral_radius(b).rho - spectral_radius_dense(b)) <= 1e-9
    # largest root of the book's characteristic polynomial: (1 + sqrt(33)) / 2
    assert abs(spectral_radius(b).rho - (1 + math.sqrt(33)) / 2) <= 1e-9


@given(graphs(min_n=1, max_n=10))
def test_result_invariants(g):
    res = spectral_radius(g)
    e = g.num_edges()
    assert abs(res.rho - spectral_radius_dense(g)) <= 1e-8
    assert np.all(res.perron >= 0)
    assert abs(np.linalg.norm(res.perron) - 1) <= 1e-12
    assert res.residual <= 1e-10
    assert res.rho <= math.sqrt(2 * e) + 1e-10
    assert res.rho >= 2 * e / g.n - 1e-10
    assert res.perron[res.max_entry_vertex] == res.perron.max()
    if g.is_connected() and g.n > 1:
        assert np.all(res.perron > 0)


def test_disconnected_tie_lowest_component():
    g = union(complete(3), complete(3))
    res = spectral_radius(g)
    assert abs(res.rho - 2) <= 1e-12
    assert np.all(res.perron[:3] > 0) and np.all(res.perron[3:] == 0)
    edgeless = Graph.empty(4)
    r0 = spectral_radius(edgeless)
    assert r0.rho == 0 and r0.perron[0] == 1


def test_errors():
    with pytest.raises(EmptyGraphError):
        spectral_radius(Graph.empty(0))
    with pytest.raises(ValueError):
        spectral_radius(complete(3), tol=0)
    with pytest.raises(ConvergenceError):
        spectral_radius(path(30), tol=1e-15, max_iter=3)


def test_monotone_under_edge_addition():
    for n in range(2, 7):
        for g in enumerate_graphs(n, connected_only=True):
            base = spectral_radius(g).rho
            for u, v in g.non_edges():
                assert spectral_radius(g.add_edge(u, v)).rho - base > 1e-9


@pytest.mark.parametrize("gamma", range(1, 5))
def test_book_lower_bound(gamma):
    for n in range(gamma + 1, 13):
        assert spectral_radius(build_book(gamma, n - gamma)).rho >= math.sqrt(gamma * (n - gamma)) - 1e-9


def test_rayleigh_examples():
    g = complete_bipartite(2, 3)
    x = spectral_radius(g).perron
    assert rayleigh_shift_lower_bound(g, g, x) == 0
    s = 1 / math.sqrt(2)
    assert abs(rayleigh_shift_lower_bound(Graph.empty(2), complete(2), [s, s]) - 1.0) <= 1e-15


def test_rayleigh_errors():
    with pytest.raises(ValueError):
        rayleigh_shift_lower_bound(complete(2), complete(3), [1, 0, 0])
    with pytest.raises(ValueError):
        rayleigh_shift_lower_bound(complete(2), complete(2), [1, 1])


@given(graphs(min_n=2, max_n=10), st.data())
def test_rayleigh_is_lower_bound(g, data):
    missing = g.non_edges()
    extra = data.draw(st.lists(st.sampled_from(missing), max_size=4)) if missing else []
    g2 = g.add_edges(extra)
    x = spectral_radius(g).perron
    assert rayleigh_shift_lower_bound(g, g2, x) <= spectral_radius(g2).rho - spectral_radius(g).rho + 1e-8


def test_two_vector_examples():
    y = spectral_radius(path(3)).perron
    z = spectral_radius(complete(3)).perron
    # P_3 as 0-1-2 is K_3 minus edge 02, so both live on the same vertex set
    assert abs(two_vector_shift(path(3), complete(3), y, z) - (2 - math.sqrt(2))) <= 1e-6
    g = complete_bipartite(2, 2)
    x = spectral_radius(g).perron
    assert abs(two_vector_shift(g, g, x, x)) <= 1e-15


def test_two_vector_degenerate():
    with pytest.raises(DegenerateOverlapError):
        two_vector_shift(complete(2), complete(2), [1, 0], [0, 1])


def test_co_extremal():
    assert co_extremal(1.0, 1.0 + 5e-9)
    assert not co_extremal(1.0, 1.0 + 5e-8)
