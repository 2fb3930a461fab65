"""Circulant graphs on Z_n with precomputed distance rows.

A circulant graph C(n, +/-S) has vertices 0..n-1 and an edge between i and j
whenever (j - i) mod n or (i - j) mod n lies in the step set S.  Rotation
i -> i + c is an automorphism, so the full distance table is determined by
the single row of distances from vertex 0.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property


def canonical_steps(n: int, raw_steps) -> tuple[int, ...]:
    """Fold steps into [1, n//2], drop zeros, merge duplicates.

    A step s and n - s generate the same edges, and s = 0 mod n generates
    none, so every step set has a unique canonical form inside [1, n//2].
    """
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    folded = set()
    for s in raw_steps:
        s = s % n
        if s == 0:
            continue
        folded.add(min(s, n - s))
    if not folded:
        raise ValueError("step set is empty after canonicalization")
    return tuple(sorted(folded))


@dataclass(frozen=True)
class CirculantGraph:
    """Immutable circulant graph; safe for concurrent read access."""

    n: int
    steps: tuple[int, ...]

    def __post_init__(self):
        steps = canonical_steps(self.n, self.steps)
        object.__setattr__(self, "steps", steps)
        if math.gcd(self.n, *steps) != 1:
            raise ValueError(f"C({self.n}, {steps}) is disconnected")

    @property
    def is_consecutive(self) -> bool:
        """True when the step set is {1, 2, ..., t} for some t."""
        return self.steps[0] == 1 and self.steps == tuple(range(1, len(self.steps) + 1))

    @property
    def t(self) -> int:
        """Largest step; for consecutive step sets this is the usual t."""
        return self.steps[-1]

    @cached_property
    def dist_row(self) -> tuple[int, ...]:
        """Distances from vertex 0; entry d gives dist(0, d).

        Filled by the closed form for consecutive step sets, by BFS
        otherwise.  Rotation invariance extends it to all pairs.
        """
        if self.is_consecutive:
            return tuple(
                distance_closed_form(self.n, self.t, 0, j) for j in range(self.n)
            )
        return tuple(_bfs_row(self.n, self.steps, 0))

    def dist(self, i: int, j: int) -> int:
        return self.dist_row[(j - i) % self.n]

    def neighbors(self, v: int):
        for s in self.steps:
            yield (v + s) % self.n
            yield (v - s) % self.n

    @cached_property
    def diameter(self) -> int:
        return max(self.dist_row)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self):
        return f"CirculantGraph(n={self.n}, steps={self.steps})"


def make_consecutive(n: int, t: int) -> CirculantGraph:
    """Build C(n, +/-{1, ..., t}).

    Steps beyond n//2 fold back, so t >= n//2 yields the complete graph.
    """
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    if t < 1:
        raise ValueError(f"max step must be at least 1, got {t}")
    return CirculantGraph(n, tuple(range(1, t + 1)))


def distance_closed_form(n: int, t: int, i: int, j: int) -> int:
    """Hop count between i and j in C(n, +/-{1..t}).

    With delta the circular gap between i and j folded into [0, n//2],
    the distance is ceil(delta / t): each hop covers at most t positions
    along the shorter arc.
    """
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"vertices must lie in [0, {n}), got ({i}, {j})")
    if not 1 <= t <= n // 2:
        raise ValueError(f"closed form needs 1 <= t <= n//2, got t={t}, n={n}")
    delta = (j - i) % n
    if delta > n // 2:
        delta = n - delta
    return -(-delta // t)


def _bfs_row(n: int, steps, source: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for s in steps:
            for u in ((v + s) % n, (v - s) % n):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
    return dist


def distance_bfs(g: CirculantGraph, i: int, j: int) -> int:
    """Independent shortest-path oracle: plain BFS from i, no closed form."""
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError(f"vertices must lie in [0, {g.n}), got ({i}, {j})")
    return _bfs_row(g.n, g.steps, i)[j]


def diameter(g: CirculantGraph) -> int:
    return g.diameter


def split_8k_r(n: int) -> tuple[int, int]:
    """Write n = 8k + r with k >= 1 and r in {2..9}; requires n >= 10."""
    if n < 10:
        raise ValueError(f"decomposition n = 8k + r needs n >= 10, got {n}")
    k = (n - 2) // 8
    return k, n - 8 * k


def diameter_set(g: CirculantGraph, v: int) -> frozenset[int]:
    """Vertices at diameter distance from v, for t = 4 and n = 8k + r.

    For these graphs the diameter is k + 1 and the far set from v is the
    arc {v + 4k + 1, ..., v + 4k + r - 1} of size r - 1.
    """
    if not (g.is_consecutive and g.t == 4):
        raise ValueError("diameter_set requires step set {1,2,3,4}")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex must lie in [0, {g.n}), got {v}")
    k, r = split_8k_r(g.n)
    return frozenset((v + 4 * k + j) % g.n for j in range(1, r))
