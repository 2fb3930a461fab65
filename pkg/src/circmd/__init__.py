"""Metric dimension of circulant graphs C(n, +/-{1..t}).

Closed-form dimensions and bounds, exact symmetry-reduced search with an
independent brute-force oracle, explicit basis constructions, and an
empirically validated registry of the lower-bound lemma battery.
"""

from .constructions import ConstructionReport, basis_t4, verify_construction_range
from .formulas import BoundsReport, formula_dim, known_bounds
from .graph import (
    CirculantGraph,
    diameter,
    diameter_set,
    distance_bfs,
    distance_closed_form,
    make_consecutive,
    split_8k_r,
)
from .lemmas import (
    REGISTRY,
    LemmaDescriptor,
    check_all,
    check_lemma,
    instantiate,
    manifest,
    window_bound_counterexample,
    window_tightness,
)
from .resolve import (
    Cluster,
    RepresentationVector,
    WitnessPair,
    equivalence_classes,
    is_block,
    is_cluster_for,
    is_resolving,
    pair_resolvers,
    representation,
    resolves_cluster,
)
from .solver import (
    BudgetExceededError,
    DimResult,
    SearchOptions,
    brute_force_dim,
    exact_dim,
    find_basis_of_size,
    min_resolvers,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BudgetExceededError",
    "CirculantGraph",
    "Cluster",
    "ConstructionReport",
    "DimResult",
    "LemmaDescriptor",
    "REGISTRY",
    "RepresentationVector",
    "SearchOptions",
    "WitnessPair",
    "basis_t4",
    "brute_force_dim",
    "check_all",
    "check_lemma",
    "diameter",
    "diameter_set",
    "distance_bfs",
    "distance_closed_form",
    "equivalence_classes",
    "exact_dim",
    "find_basis_of_size",
    "formula_dim",
    "instantiate",
    "is_block",
    "is_cluster_for",
    "is_resolving",
    "known_bounds",
    "make_consecutive",
    "manifest",
    "min_resolvers",
    "pair_resolvers",
    "representation",
    "resolves_cluster",
    "split_8k_r",
    "verify_construction_range",
    "window_bound_counterexample",
    "window_tightness",
]
