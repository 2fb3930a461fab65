import pytest

from circmd.graph import make_consecutive
from circmd.lemmas import (
    ANCHOR_PROBES,
    REGISTRY,
    DegenerateInstantiationError,
    check_lemma,
    instantiate,
    manifest,
    window_bound_counterexample,
    window_tightness,
)
from circmd.resolve import Cluster, representation
from circmd.solver import min_resolvers

EXPECTED_IDS = {
    "L3.1-window", "Obs-0123", "L-2-4-3-r56", "L-8-AkBk", "L-7-Ak",
    "L-7-AkBk", "L-2-22-3", "r5-0156", "r5-025-67", "r5-lemma-01",
    "r5-lemma-02", "r5-01257", "r5-023568", "r5-lemma-03", "m3-2-3-2",
    "m3-2-7-2a", "m3-2-5-2", "m3-222", "m3-2-7-2b", "m3-2-1-2",
    "min-dist-789", "thm-general-t", "thm-vetrik-lb",
}


def test_registry_has_exactly_the_23_descriptors():
    assert set(REGISTRY) == EXPECTED_IDS
    assert len(REGISTRY) == 23


def test_manifest_covers_registry():
    entries = manifest()
    assert {e["id"] for e in entries} == EXPECTED_IDS
    for e in entries:
        assert e["claim"]
        assert e["kind"] in ("cluster", "basis-gap", "dim-lower")


def test_instantiate_example():
    d = REGISTRY["L-2-4-3-r56"]
    g, cluster, allowed = instantiate(d, 13, {"a": 0, "ell": 0, "sign": 1})
    assert cluster.blocks == (frozenset({0, 1}), frozenset({2, 3, 4}))
    assert allowed == frozenset(range(13))


def test_instantiate_rejects_wrong_residue():
    d = REGISTRY["m3-2-1-2"]
    with pytest.raises(ValueError):
        instantiate(d, 13, {"a": 0})


def test_wraparound_collision_is_degenerate():
    d = REGISTRY["L-2-22-3"]
    # at k = 1, ell = 1 the triple {a+15, a+16, a+17} wraps onto itself
    with pytest.raises(DegenerateInstantiationError):
        instantiate(d, 15, {"a": 0, "ell": 1})


def test_fast_descriptors_pass_at_k1():
    for did in ("Obs-0123", "r5-0156", "m3-2-1-2", "m3-222"):
        report = check_lemma(REGISTRY[did], (1,))
        assert report.ok
        assert any(r.status == "pass" for r in report.results)


def test_min_k_scoping_skips_small_orders():
    report = check_lemma(REGISTRY["m3-2-5-2"], (1,))
    assert report.results == ()


def test_anchor_probes_are_translations():
    assert ANCHOR_PROBES == (0, 1)


# the three statements below pin published bounds that are actually false
# on excluded slices of their parameter space; the registry must keep
# excluding them, and these counterexamples must stay counterexamples


def test_window_bound_fails_for_residues_3_and_4():
    for n in (11, 12, 19, 20, 27, 28, 35, 36):
        subset, probes = window_bound_counterexample(n)
        g = make_consecutive(n, 4)
        reps = [representation(g, v, probes).coords for v in subset]
        assert len(set(reps)) == len(subset)  # 2 probes resolve a 4-set
        assert len(probes) == 2 < len(subset) - 1
    with pytest.raises(ValueError):
        window_bound_counterexample(13)


def test_window_residues_exclude_3_and_4():
    assert set(REGISTRY["L3.1-window"].residues) == {2, 5, 6, 7, 8, 9}


def test_r56_pair_triple_bound_fails_at_ell_k_for_r2():
    for k in (1, 2, 3):
        n = 8 * k + 2
        g = make_consecutive(n, 4)
        cluster = Cluster([[0, 1], [4 * k + 2, 4 * k + 3, 4 * k + 4]])
        res = min_resolvers(g, cluster, g.vertices)
        assert res.size == 2  # the published claim says >= 3
        grid = list(REGISTRY["L-2-4-3-r56"].param_grid(n, k))
        assert all(p["ell"] <= k - 1 for p in grid)


def test_pair_ladder_bound_fails_at_n11():
    g = make_consecutive(11, 4)
    cluster = Cluster([[0, 1], [7, 8]])
    res = min_resolvers(g, cluster, g.vertices)
    assert res.size == 1  # the published claim says >= 2 for all 8k+3


def test_window_tightness_witnesses():
    witnesses = window_tightness(13)
    assert set(witnesses) == {2, 3, 4, 5}
    g = make_consecutive(13, 4)
    for ell, w in witnesses.items():
        assert len(w["subset"]) == ell
        assert len(w["resolvers"]) == ell - 1
        cluster = Cluster([list(w["subset"])])
        exact = min_resolvers(g, cluster, g.vertices)
        assert exact.size == ell - 1


def test_dim_lower_descriptors_pass():
    for did in ("thm-general-t", "thm-vetrik-lb"):
        report = check_lemma(REGISTRY[did], (1,))
        assert report.ok
        assert all(r.status == "pass" for r in report.results)
