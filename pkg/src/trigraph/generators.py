"""Example and random locally linear graphs.

Random families draw from :class:`random.Random` seeded with the given integer;
within one Python version the same seed gives the same edge set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import InvalidParam, RetryExhausted
from .graph import Graph, graph_from_edge_list

FAMILIES = ("paley9", "snake", "friendship", "random_cactus", "random_locally_linear")


def paley9() -> Graph:
    """Paley graph on GF(9) = GF(3)[i], i^2 = -1.

    Vertex ``3a + b`` stands for ``a + b i``; two vertices are adjacent when
    their difference is a nonzero square.
    """
    elements = [(a, b) for a in range(3) for b in range(3)]

    def mul(p, q):
        return ((p[0] * q[0] - p[1] * q[1]) % 3, (p[0] * q[1] + p[1] * q[0]) % 3)

    squares = {mul(e, e) for e in elements if e != (0, 0)}
    pairs = []
    for (u, p), (v, q) in combinations(enumerate(elements), 2):
        diff = ((p[0] - q[0]) % 3, (p[1] - q[1]) % 3)
        if diff in squares:
            pairs.append((u, v))
    return graph_from_edge_list(9, pairs)


def triangular_snake(t: int) -> Graph:
    """Path ``v_0..v_t`` with an apex ``a_i`` on every path edge.

    Path vertex ``v_i`` is vertex ``i``; apex ``a_i`` is vertex ``t + i``.
    """
    _require_positive(t)
    pairs = []
    for i in range(1, t + 1):
        apex = t + i
        pairs += [(i - 1, i), (i - 1, apex), (i, apex)]
    return graph_from_edge_list(2 * t + 1, pairs)


def friendship(t: int) -> Graph:
    """t triangles through the common vertex 0."""
    _require_positive(t)
    pairs = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        pairs += [(0, a), (0, b), (a, b)]
    return graph_from_edge_list(2 * t + 1, pairs)


def random_triangular_cactus(t: int, seed: int) -> Graph:
    """Connected cactus of t triangles; each new triangle hangs off a uniform existing vertex."""
    _require_positive(t)
    rng = random.Random(seed)
    pairs = [(0, 1), (0, 2), (1, 2)]
    n = 3
    for _ in range(t - 1):
        v = rng.randrange(n)
        pairs += [(v, n), (v, n + 1), (n, n + 1)]
        n += 2
    return graph_from_edge_list(n, pairs)


def random_locally_linear(
    t: int, merge_bias: float | Fraction, seed: int, max_tries: int = 200
) -> Graph:
    """t triangles, each corner reusing an existing vertex with probability ``merge_bias``.

    A candidate triangle is rejected if it repeats an edge or if one of its new
    edges would close a second triangle.  ``max_tries`` rejected candidates
    for a single triangle raise :class:`RetryExhausted`.
    """
    _require_positive(t)
    if not 0 <= merge_bias <= 1:
        raise InvalidParam(f"merge_bias must lie in [0, 1], got {merge_bias}")
    bias = float(merge_bias)
    rng = random.Random(seed)
    adj: list[set[int]] = []

    for _ in range(t):
        for _attempt in range(max_tries):
            reuse = sum(rng.random() < bias for _ in range(3)) if adj else 0
            reuse = min(reuse, len(adj))
            old = rng.sample(range(len(adj)), reuse)
            corners = old + list(range(len(adj), len(adj) + 3 - reuse))
            if _fits(adj, corners):
                break
        else:
            raise RetryExhausted(f"no admissible triangle after {max_tries} tries (seed {seed})")
        while len(adj) < max(corners) + 1:
            adj.append(set())
        for u, v in combinations(corners, 2):
            adj[u].add(v)
            adj[v].add(u)

    pairs = [(u, v) for u in range(len(adj)) for v in adj[u] if u < v]
    return graph_from_edge_list(len(adj), pairs)


def _fits(adj: list[set[int]], corners: list[int]) -> bool:
    n = len(adj)

    def nbrs(v):
        return adj[v] if v < n else set()

    for u, v in combinations(corners, 2):
        if v in nbrs(u):
            return False
    # a new edge uv closes an extra triangle iff u and v already share a neighbour
    for u, v in combinations(corners, 2):
        if nbrs(u) & nbrs(v):
            return False
    return True


def _require_positive(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise InvalidParam(f"triangle count must be a positive integer, got {t!r}")


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParam(f"unknown family {self.family!r}; choose from {FAMILIES}")

    def build(self) -> Graph:
        t = self.params.get("t", 1)
        if self.family == "paley9":
            return paley9()
        if self.family == "snake":
            return triangular_snake(t)
        if self.family == "friendship":
            return friendship(t)
        if self.family == "random_cactus":
            return random_triangular_cactus(t, self.seed)
        return random_locally_linear(t, self.params.get("merge_bias", 0.5), self.seed)

    def describe(self) -> str:
        bits = [f"family={self.family}"]
        bits += [f"{k}={v}" for k, v in sorted(self.params.items())]
        if self.family.startswith("random"):
            bits.append(f"seed={self.seed}")
        return " ".join(bits)
