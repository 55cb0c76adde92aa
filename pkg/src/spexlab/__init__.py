"""Desk-scale spectral extremal graph theory over subdivision-free families."""
from .graph import (
    Graph,
    GraphOrderError,
    build_book,
    complete,
    complete_bipartite,
    cycle,
    join,
    path,
    star,
    union,
)
from .graph6 import from_graph6, from_sparse6, to_graph6
from .canon import are_isomorphic, canonical_form, canonical_graph6
from .spectral import SpectrumResult, rayleigh_shift_lower_bound, spectral_radius, two_vector_shift
from .invariants import FamilyProfile, family_profile, gamma_of, independence_number, level_sets
from .subdivision import (
    SubdivisionModel,
    contains_subdivision,
    find_minimal_subdivision,
    gamma_family_subgraphs,
    is_family_subdivision_free,
    is_subdivision_saturated,
)
from .transforms import (
    LinearPath,
    Partition,
    find_longest_path_within,
    partition_by_dominators,
    peel_min_degree,
    transform_G0,
    transform_G1,
    transform_G2,
)
from .enumeration import enumerate_graphs
from .search import SpexReport, contains_spanning_book, spex_search, verify_corollary_1, verify_theorem_5_1
from .families import parse_family

__version__ = "0.1.0"
