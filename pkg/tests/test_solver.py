import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circmd.graph import CirculantGraph, make_consecutive
from circmd.resolve import Cluster, is_resolving
from circmd.solver import (
    BudgetExceededError,
    DimResult,
    SearchOptions,
    brute_force_dim,
    exact_dim,
    find_basis_of_size,
    min_resolvers,
)


def test_exact_matches_oracle_on_small_orders():
    for n, t, expected in [(10, 4, 5), (11, 4, 4), (12, 4, 4), (13, 3, 5),
                           (8, 4, 7), (9, 4, 8), (9, 2, 4), (12, 2, 3)]:
        g = make_consecutive(n, t)
        res = exact_dim(g)
        oracle = brute_force_dim(g)
        assert res.dim == expected
        assert res.dim == oracle.dim
        assert is_resolving(g, res.basis) is None


def test_result_is_least_basis_containing_zero():
    g = make_consecutive(12, 4)
    res = exact_dim(g)
    assert res.basis[0] == 0
    assert res.basis == brute_force_dim(g).basis


def test_dim_result_equality_ignores_search_effort():
    a = DimResult(4, (0, 1, 2, 3), "search", nodes_explored=10)
    b = DimResult(4, (0, 1, 2, 3), "search", nodes_explored=99,
                  exhausted_sizes=(3,))
    assert a == b


def test_worker_count_does_not_change_the_result():
    g = make_consecutive(21, 4)
    baseline = exact_dim(g, SearchOptions(worker_count=1))
    for workers in (2, 3, 5):
        assert exact_dim(g, SearchOptions(worker_count=workers)) == baseline


@given(st.integers(min_value=10, max_value=20),
       st.booleans(), st.booleans(), st.booleans())
@settings(deadline=None, max_examples=40)
def test_pruning_options_do_not_change_the_result(n, sym, hits, classes):
    g = make_consecutive(n, 4)
    baseline = exact_dim(g)
    opts = SearchOptions(use_symmetry=sym, use_hitting_sets=hits,
                         use_class_prune=classes)
    assert exact_dim(g, opts) == baseline


def test_nonconsecutive_steps_are_searchable():
    g = CirculantGraph(12, (1, 5))
    assert exact_dim(g).dim == brute_force_dim(g).dim


def test_max_k_raises_when_exceeded():
    g = make_consecutive(10, 4)
    with pytest.raises(BudgetExceededError):
        exact_dim(g, SearchOptions(max_k=3))


def test_budget_guard_raises_before_enumerating():
    g = make_consecutive(30, 4)
    with pytest.raises(BudgetExceededError):
        exact_dim(g, SearchOptions(budget=10))
    with pytest.raises(BudgetExceededError):
        brute_force_dim(g, budget=10)


def test_find_basis_of_size():
    g = make_consecutive(13, 4)
    assert find_basis_of_size(g, 4) is None
    basis = find_basis_of_size(g, 5)
    assert len(basis) == 5 and is_resolving(g, basis) is None
    with pytest.raises(ValueError):
        find_basis_of_size(g, 0)


def test_min_resolvers_example():
    g = make_consecutive(13, 4)
    cluster = Cluster([[0, 1], [2, 3, 4]])
    res = min_resolvers(g, cluster, g.vertices)
    assert res.size == 3
    assert res.witness == (0, 2, 3)


def test_min_resolvers_capped_reports_no_witness():
    g = make_consecutive(13, 4)
    cluster = Cluster([[0, 1], [2, 3, 4]])
    res = min_resolvers(g, cluster, g.vertices, max_size=2)
    assert res.size is None and res.capped


def test_min_resolvers_unresolvable_allowed_set():
    g = make_consecutive(13, 4)
    # no vertex in the allowed set separates 6 from 7
    cluster = Cluster([[6, 7]])
    allowed = set(g.vertices) - set(range(2, 12))
    res = min_resolvers(g, cluster, allowed)
    assert res.size is None and not res.capped


def test_min_resolvers_monotone_in_allowed():
    g = make_consecutive(13, 4)
    cluster = Cluster([[0, 1], [2, 3, 4]])
    full = min_resolvers(g, cluster, g.vertices)
    shrunk = min_resolvers(g, cluster, set(g.vertices) - {0, 2})
    assert shrunk.size is None or shrunk.size >= full.size


def test_lower_bound_never_exceeds_dimension():
    for n in range(10, 26):
        g = make_consecutive(n, 4)
        res = exact_dim(g)
        assert res.lower_bound_used <= res.dim
