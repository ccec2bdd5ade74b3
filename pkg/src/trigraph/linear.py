"""Local linearity, triangle enumeration and the vertex-triangle incidence matrix."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotLocallyLinear
from .graph import Graph

Triangle = tuple[int, int, int]


@dataclass(frozen=True)
class Violation:
    """Why a graph fails to be locally linear.

    ``kind`` is ``"edge"`` (``edge`` lies in ``count`` triangles),
    ``"neighborhood"`` (``vertex`` has a neighbourhood that is not a perfect
    matching) or ``"isolated"``.
    """

    kind: str
    vertex: int | None = None
    edge: tuple[int, int] | None = None
    count: int | None = None

    def __str__(self):
        if self.kind == "edge":
            return f"edge {self.edge} in {self.count} triangles"
        if self.kind == "isolated":
            return f"isolated vertex {self.vertex}"
        return f"neighborhood of vertex {self.vertex} is not 1-regular"


@dataclass(frozen=True)
class LinearityVerdict:
    is_locally_linear: bool
    witness: Violation | None = None

    def __bool__(self):
        return self.is_locally_linear


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """All triangles as sorted triples, in lexicographic order.

    The position of a triangle in this list is its id in every downstream
    structure (incidence columns, vertices of the triangle graph).
    """
    found = set()
    for u, v in g.edges:
        for w in g.neighbors(u) & g.neighbors(v):
            found.add(tuple(sorted((u, v, w))))
    return sorted(found)


def _edge_triangle_counts(g: Graph) -> dict[tuple[int, int], int]:
    return {(u, v): len(g.neighbors(u) & g.neighbors(v)) for u, v in g.edges}


def _by_neighborhoods(g: Graph) -> Violation | None:
    for v in g.vertices():
        nbrs = g.neighbors(v)
        if not nbrs:
            return Violation("isolated", vertex=v)
        if any(len(g.neighbors(w) & nbrs) != 1 for w in nbrs):
            return Violation("neighborhood", vertex=v)
    return None


def _by_edges(g: Graph) -> Violation | None:
    for v in g.vertices():
        if not g.neighbors(v):
            return Violation("isolated", vertex=v)
    for edge, count in _edge_triangle_counts(g).items():
        if count != 1:
            return Violation("edge", edge=edge, count=count)
    return None


def check_locally_linear(g: Graph) -> LinearityVerdict:
    """Decide local linearity by both characterisations and insist they agree.

    (a) every neighbourhood induces a 1-regular graph; (b) there are no
    isolated vertices and every edge lies in exactly one triangle.  The
    reported witness comes from (b) when it exists since an edge is the more
    useful diagnostic; isolated vertices are reported first by both.
    """
    by_nbhd = _by_neighborhoods(g)
    by_edge = _by_edges(g)
    if (by_nbhd is None) != (by_edge is None):
        raise AssertionError(
            f"characterisations of local linearity disagree: {by_nbhd} vs {by_edge}"
        )
    if by_edge is None:
        return LinearityVerdict(True)
    return LinearityVerdict(False, by_edge)


def require_locally_linear(g: Graph) -> None:
    verdict = check_locally_linear(g)
    if not verdict:
        raise NotLocallyLinear(verdict)


def triangle_incidence(g: Graph) -> list[list[int]]:
    """The n x m 0/1 matrix B with ``B[i][j] == 1`` iff vertex i lies in triangle j."""
    require_locally_linear(g)
    triangles = enumerate_triangles(g)
    b = [[0] * len(triangles) for _ in range(g.n)]
    for j, tri in enumerate(triangles):
        for i in tri:
            b[i][j] = 1
    return b
