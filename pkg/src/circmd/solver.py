"""Exact metric dimension by symmetry-reduced branch-and-prune search.

Two routes are provided and deliberately kept separate:

- ``exact_dim``: iterative deepening over the basis size.  Vertex 0 is
  fixed in every candidate (rotations act transitively), candidates are
  canonicalized under the reflection v -> -v (an automorphism of every
  circulant with a symmetric step set), partial sets are pruned when the
  representation classes they induce cannot be refined down to singletons
  with the remaining slots, and for consecutive step sets the "every
  basis hits every adjacent-pair resolver set" constraint is propagated.

- ``brute_force_dim``: plain lexicographic enumeration of k-subsets
  containing 0, with no other pruning.  It shares no search code with
  ``exact_dim`` and serves as the independent oracle.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Optional

from .formulas import known_bounds
from .graph import CirculantGraph
from .resolve import Cluster, is_resolving, pair_resolvers, resolves_cluster

DEFAULT_BUDGET = int(os.environ.get("CIRCMD_BUDGET", 20_000_000))


class BudgetExceededError(RuntimeError):
    """Raised when a search would enumerate more candidates than allowed."""


@dataclass(frozen=True)
class SearchOptions:
    max_k: Optional[int] = None
    use_symmetry: bool = True
    use_hitting_sets: bool = True
    use_class_prune: bool = True
    worker_count: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_k is not None and self.max_k < 1:
            raise ValueError("max_k must be at least 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")


@dataclass(frozen=True)
class DimResult:
    dim: int
    basis: tuple[int, ...]
    method: str  # "formula" | "search" | "oracle"
    nodes_explored: int = field(compare=False, default=0)
    lower_bound_used: int = 1
    exhausted_sizes: tuple[int, ...] = field(compare=False, default=())


def _counting_lower_bound(g: CirculantGraph) -> int:
    """Least k with (diameter + 1)^k >= n: k landmarks admit at most
    (diameter + 1)^k distinct representations."""
    base = g.diameter + 1
    k, reach = 1, base
    while reach < g.n:
        k += 1
        reach *= base
    return k


def _search_lower_bound(g: CirculantGraph) -> int:
    lb = _counting_lower_bound(g)
    if g.is_consecutive and g.n >= 2 * g.t + 2 and g.t >= 2:
        lb = max(lb, known_bounds(g.n, g.t).lower)
    return lb


class _Refiner:
    """Representation-class partition of V, refined landmark by landmark."""

    def __init__(self, g: CirculantGraph):
        self.g = g
        self.n = g.n
        self.labels: list[list[int]] = [[0] * g.n]

    @property
    def class_count(self) -> int:
        return max(self.labels[-1]) + 1

    def push(self, x: int) -> None:
        row, n = self.g.dist_row, self.n
        old = self.labels[-1]
        keys: dict[tuple[int, int], int] = {}
        new = [0] * n
        for v in range(n):
            key = (old[v], row[(v - x) % n])
            new[v] = keys.setdefault(key, len(keys))
        self.labels.append(new)

    def pop(self) -> None:
        self.labels.pop()


def _is_reflection_canonical(n: int, candidate: tuple[int, ...]) -> bool:
    reflected = tuple(sorted((-v) % n for v in candidate))
    return candidate <= reflected


class _HittingState:
    """Tracks which adjacent-pair resolver sets R_i are already hit."""

    def __init__(self, g: CirculantGraph):
        n = g.n
        resolver_sets = [pair_resolvers(g, i) for i in range(n)]
        self.hits_of: list[list[int]] = [[] for _ in range(n)]
        for i, R in enumerate(resolver_sets):
            for x in R:
                self.hits_of[x].append(i)
        self.max_member = [max(R) for R in resolver_sets]
        self.per_vertex = max(len(h) for h in self.hits_of)
        self.unhit = [True] * n
        self.unhit_count = n
        self._trail: list[list[int]] = []

    def push(self, x: int) -> None:
        newly = []
        for i in self.hits_of[x]:
            if self.unhit[i]:
                self.unhit[i] = False
                newly.append(i)
        self.unhit_count -= len(newly)
        self._trail.append(newly)

    def pop(self) -> None:
        newly = self._trail.pop()
        for i in newly:
            self.unhit[i] = True
        self.unhit_count += len(newly)

    def prune(self, last_vertex: int, remaining: int) -> bool:
        """True when no lexicographic extension can hit every unhit R_i."""
        if self.unhit_count > remaining * self.per_vertex:
            return True
        if self.unhit_count:
            for i, unhit in enumerate(self.unhit):
                if unhit and self.max_member[i] <= last_vertex:
                    return True
        return False


class _StripeSearch:
    """Depth-first search over candidate sets {0, w2, ...} for fixed size k."""

    def __init__(self, g: CirculantGraph, k: int, opts: SearchOptions):
        self.g = g
        self.k = k
        self.opts = opts
        self.nodes = 0
        self.hitting = None
        if opts.use_hitting_sets and g.is_consecutive:
            self.hitting = _HittingState(g)

    def run(self, second_elements: Iterable[int]) -> Optional[tuple[int, ...]]:
        g, k = self.g, self.k
        refiner = _Refiner(g)
        refiner.push(0)
        if self.hitting is not None:
            self.hitting.push(0)
        self.nodes += 1
        if k == 1:
            return (0,) if refiner.class_count == g.n else None
        for w2 in second_elements:
            found = self._extend(refiner, [0, w2], w2)
            if found is not None:
                return found
        return None

    def _extend(self, refiner: _Refiner, chosen: list[int], last: int
                ) -> Optional[tuple[int, ...]]:
        g, k, opts = self.g, self.k, self.opts
        self.nodes += 1
        refiner.push(last)
        if self.hitting is not None:
            self.hitting.push(last)
        try:
            remaining = k - len(chosen)
            classes = refiner.class_count
            if remaining == 0:
                if classes != g.n:
                    return None
                candidate = tuple(chosen)
                if opts.use_symmetry and not _is_reflection_canonical(g.n, candidate):
                    return None
                return candidate
            if opts.use_class_prune:
                if classes * (g.diameter + 1) ** remaining < g.n:
                    return None
            if self.hitting is not None and self.hitting.prune(last, remaining):
                return None
            # leave room for the remaining - 1 vertices above the next pick
            for v in range(last + 1, g.n - remaining + 1):
                found = self._extend(refiner, chosen + [v], v)
                if found is not None:
                    return found
            return None
        finally:
            refiner.pop()
            if self.hitting is not None:
                self.hitting.pop()


def _search_at_size(g: CirculantGraph, k: int, opts: SearchOptions
                    ) -> tuple[Optional[tuple[int, ...]], int]:
    """Lexicographically least resolving k-set containing 0, plus node count."""
    seconds = range(1, g.n)
    if opts.worker_count == 1 or k == 1:
        search = _StripeSearch(g, k, opts)
        return search.run(seconds), search.nodes

    stripes = [list(seconds)[w::opts.worker_count] for w in range(opts.worker_count)]

    def run_stripe(stripe: list[int]) -> tuple[Optional[tuple[int, ...]], int]:
        search = _StripeSearch(g, k, opts)
        return search.run(stripe), search.nodes

    with ThreadPoolExecutor(max_workers=opts.worker_count) as pool:
        results = list(pool.map(run_stripe, stripes))
    nodes = sum(n for _, n in results)
    successes = [basis for basis, _ in results if basis is not None]
    return (min(successes) if successes else None), nodes


def exact_dim(g: CirculantGraph, opts: SearchOptions = SearchOptions()) -> DimResult:
    """Exact metric dimension with a witness basis.

    Deepens k from the best available lower bound; within each k the
    enumeration is ascending lexicographic, so the returned basis is the
    least resolving set containing 0 and the result is independent of the
    worker count.
    """
    lb = _search_lower_bound(g)
    nodes = 0
    exhausted = []
    k = lb
    while True:
        if opts.max_k is not None and k > opts.max_k:
            raise BudgetExceededError(
                f"no resolving set of size <= {opts.max_k} found for {g}")
        if comb(g.n - 1, k - 1) > opts.budget:
            raise BudgetExceededError(
                f"C({g.n - 1}, {k - 1}) candidates exceed budget {opts.budget}")
        basis, level_nodes = _search_at_size(g, k, opts)
        nodes += level_nodes
        if basis is not None:
            return DimResult(dim=k, basis=basis, method="search",
                             nodes_explored=nodes, lower_bound_used=lb,
                             exhausted_sizes=tuple(exhausted))
        exhausted.append(k)
        k += 1


def find_basis_of_size(g: CirculantGraph, k: int,
                       opts: SearchOptions = SearchOptions()
                       ) -> Optional[tuple[int, ...]]:
    """Least resolving k-set containing 0, or None if none exists.

    Skips the iterative deepening of ``exact_dim``; useful when the
    dimension is already known and only a witness is wanted.
    """
    if k < 1:
        raise ValueError("basis size must be at least 1")
    if comb(g.n - 1, k - 1) > opts.budget:
        raise BudgetExceededError(
            f"C({g.n - 1}, {k - 1}) candidates exceed budget {opts.budget}")
    basis, _ = _search_at_size(g, k, opts)
    return basis


def brute_force_dim(g: CirculantGraph, budget: int = DEFAULT_BUDGET) -> DimResult:
    """Independent oracle: lexicographic sweep of all k-subsets containing 0.

    Fixing 0 is the only reduction used (valid by vertex-transitivity).
    Refuses instances where some level would enumerate more than ``budget``
    subsets.
    """
    nodes = 0
    exhausted = []
    for k in range(1, g.n + 1):
        if comb(g.n - 1, k - 1) > budget:
            raise BudgetExceededError(
                f"C({g.n - 1}, {k - 1}) subsets exceed budget {budget}")
        for rest in itertools.combinations(range(1, g.n), k - 1):
            nodes += 1
            if is_resolving(g, (0,) + rest) is None:
                return DimResult(dim=k, basis=(0,) + rest, method="oracle",
                                 nodes_explored=nodes, lower_bound_used=1,
                                 exhausted_sizes=tuple(exhausted))
        exhausted.append(k)
    raise AssertionError("the full vertex set always resolves the graph")


@dataclass(frozen=True)
class MinResolversResult:
    size: Optional[int]  # None when even the full allowed set fails
    witness: Optional[tuple[int, ...]]
    capped: bool = False  # True when the search stopped at max_size


def min_resolvers(g: CirculantGraph, cluster: Cluster, allowed: Iterable[int],
                  max_size: Optional[int] = None,
                  budget: int = DEFAULT_BUDGET) -> MinResolversResult:
    """Smallest X inside ``allowed`` that resolves every block internally.

    Searches ascending sizes, so the reported size is exact.  With
    ``max_size`` set the search stops early and reports ``capped=True``
    when no witness of at most that size exists (useful for verifying
    lower-bound claims without computing the true minimum).
    """
    pool = sorted(set(allowed))
    if not pool:
        raise ValueError("allowed set must be nonempty")
    if resolves_cluster(g, pool, cluster) is not None:
        return MinResolversResult(size=None, witness=None)
    limit = len(pool) if max_size is None else min(max_size, len(pool))
    for m in range(0, limit + 1):
        if comb(len(pool), m) > budget:
            raise BudgetExceededError(
                f"C({len(pool)}, {m}) subsets exceed budget {budget}")
        for X in itertools.combinations(pool, m):
            if resolves_cluster(g, X, cluster) is None:
                return MinResolversResult(size=m, witness=X)
    return MinResolversResult(size=None, witness=None, capped=True)
