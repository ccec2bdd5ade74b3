"""The triangle graph G* and the forbidden induced subgraphs that constrain it."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import TooSmall
from .graph import Graph, graph_from_edge_list
from .linear import Triangle, enumerate_triangles, require_locally_linear


@dataclass(frozen=True)
class StarResult:
    """``star`` has one vertex per triangle; vertex i is ``triangles[i]``."""

    star: Graph
    triangles: list[Triangle]
    source_n: int

    def shared_vertex(self, i: int, j: int) -> int:
        """The G-vertex common to adjacent star vertices i and j."""
        (v,) = set(self.triangles[i]) & set(self.triangles[j])
        return v


def star_graph(g: Graph) -> StarResult:
    require_locally_linear(g)
    triangles = enumerate_triangles(g)
    containing: list[list[int]] = [[] for _ in range(g.n)]
    for t, tri in enumerate(triangles):
        for v in tri:
            containing[v].append(t)
    pairs = set()
    for ts in containing:
        pairs.update(combinations(ts, 2))
    for i, j in pairs:
        shared = len(set(triangles[i]) & set(triangles[j]))
        assert shared == 1, f"triangles {triangles[i]} and {triangles[j]} share {shared} vertices"
    return StarResult(graph_from_edge_list(len(triangles), pairs), triangles, g.n)


def find_induced_diamond(h: Graph) -> tuple[int, int, int, int] | None:
    """Lexicographically first 4-set inducing K4 minus an edge, else ``None``.

    Every diamond is an edge (its spine) plus two non-adjacent common
    neighbours, so the scan runs over edges instead of all 4-subsets.
    """
    best = None
    for a, b in h.edges:
        common = sorted(h.neighbors(a) & h.neighbors(b))
        for c, d in combinations(common, 2):
            if not h.has_edge(c, d):
                quad = tuple(sorted((a, b, c, d)))
                if best is None or quad < best:
                    best = quad
    return best


def find_induced_k14(h: Graph) -> tuple[int, int, int, int, int] | None:
    """Lexicographically first 5-set inducing K_{1,4}, else ``None``."""
    best = None
    for c in h.vertices():
        nbrs = sorted(h.neighbors(c))
        if len(nbrs) < 4:
            continue
        for leaves in combinations(nbrs, 4):
            if not any(h.has_edge(x, y) for x, y in combinations(leaves, 2)):
                five = tuple(sorted((c,) + leaves))
                if best is None or five < best:
                    best = five
                break  # later leaf sets from this centre sort after this one
    return best


def max_common_neighbors_nonadjacent(h: Graph) -> tuple[int, tuple[int, int] | None]:
    """Largest ``|N(u) & N(v)|`` over non-adjacent pairs, with the first pair attaining it.

    Returns ``(0, None)`` for a complete graph.
    """
    if h.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {h.n}")
    best, witness = 0, None
    for u, v in combinations(h.vertices(), 2):
        if h.has_edge(u, v):
            continue
        common = len(h.neighbors(u) & h.neighbors(v))
        if witness is None or common > best:
            best, witness = common, (u, v)
    return best, witness


@dataclass(frozen=True)
class StarCheck:
    valid: bool
    kind: str | None = None  # "diamond" or "k14"
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.valid


def is_valid_star(h: Graph) -> StarCheck:
    """Necessary conditions for being a triangle graph: no induced diamond or K_{1,4}."""
    diamond = find_induced_diamond(h)
    if diamond is not None:
        return StarCheck(False, "diamond", diamond)
    claw = find_induced_k14(h)
    if claw is not None:
        return StarCheck(False, "k14", claw)
    return StarCheck(True)
