"""Rebuilding a locally linear graph from its triangle graph.

Every vertex x of H contributes three vertex sets, one per clique of its
neighbourhood (padded with ``{x}``).  Sets meeting in two or more H-vertices
are glued; the glued classes are the vertices of the base graph, and the
three classes of each x form its triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GluingContradiction, InvalidStar, NotClusterNeighborhood, TooManyParts
from .graph import Graph, are_isomorphic, graph_from_edge_list, validate_certificate
from .linear import check_locally_linear, enumerate_triangles, require_locally_linear
from .star import is_valid_star, star_graph


class DisjointSet:
    """Union-find with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


@dataclass(frozen=True)
class CliquePartition:
    """``parts[k]`` is ``{center}`` plus one clique of N(center); always three parts."""

    center: int
    parts: tuple[frozenset[int], frozenset[int], frozenset[int]]

    def part_of(self, v: int) -> int:
        """Index of the part holding neighbour v."""
        for k, part in enumerate(self.parts):
            if v in part:
                return k
        raise KeyError(v)


def neighborhood_partition(h: Graph, v: int) -> CliquePartition:
    """Split N(v) into its cliques.

    The components of ``H[N(v)]`` must each be complete (otherwise v is the
    tip of an induced diamond) and there must be at most three of them
    (otherwise v is the centre of an induced K_{1,4}).
    """
    nbrs = h.neighbors(v)
    unseen = set(nbrs)
    cliques = []
    while unseen:
        start = min(unseen)
        comp, stack = {start}, [start]
        unseen.discard(start)
        while stack:
            for w in h.neighbors(stack.pop()) & unseen:
                unseen.discard(w)
                comp.add(w)
                stack.append(w)
        for a in comp:
            if len(h.neighbors(a) & comp) != len(comp) - 1:
                raise NotClusterNeighborhood(
                    f"neighbourhood of {v} has a non-complete component {sorted(comp)}"
                )
        cliques.append(comp)
    if len(cliques) > 3:
        raise TooManyParts(f"neighbourhood of {v} splits into {len(cliques)} cliques")
    cliques.sort(key=min)
    parts = [frozenset(c | {v}) for c in cliques]
    parts += [frozenset({v})] * (3 - len(parts))
    return CliquePartition(v, tuple(parts))


@dataclass(frozen=True)
class ReconstructionResult:
    """The rebuilt graph and how its vertices and triangles arise from H.

    ``vertex_origin[b]`` is the set of H-vertices glued into base vertex b;
    ``triangle_of[x]`` is the sorted triangle of base vertices belonging to
    H-vertex x.
    """

    base: Graph
    vertex_origin: tuple[frozenset[int], ...]
    triangle_of: tuple[tuple[int, int, int], ...]


def reconstruct_base(h: Graph) -> ReconstructionResult:
    check = is_valid_star(h)
    if not check:
        raise InvalidStar(f"input contains an induced {check.kind} on {check.witness}", check)
    partitions = [neighborhood_partition(h, x) for x in h.vertices()]

    # V-set (x, k) has id 3x + k
    def vset(i: int) -> frozenset[int]:
        return partitions[i // 3].parts[i % 3]

    dsu = DisjointSet(3 * h.n)
    for x, y in h.edges:
        a = 3 * x + partitions[x].part_of(y)
        b = 3 * y + partitions[y].part_of(x)
        # both contain x and y, so they must be the same set
        if vset(a) != vset(b):
            raise GluingContradiction(
                f"sets {sorted(vset(a))} and {sorted(vset(b))} share {x}, {y} but differ"
            )
        dsu.union(a, b)

    classes: dict[int, list[int]] = {}
    for i in range(3 * h.n):
        classes.setdefault(dsu.find(i), []).append(i)

    origins = []
    for members in classes.values():
        sets = {vset(i) for i in members}
        if len(sets) != 1:
            raise GluingContradiction(f"class mixes different sets: {sorted(map(sorted, sets))}")
        (origin,) = sets
        centers = sorted(i // 3 for i in members)
        if centers != sorted(origin):
            raise GluingContradiction(
                f"class of {sorted(origin)} was glued from centres {centers}"
            )
        origins.append((tuple(sorted(origin)), members))
    origins.sort()

    label = {}
    for b, (_, members) in enumerate(origins):
        for i in members:
            label[i] = b

    triangles = []
    pairs = []
    for x in h.vertices():
        tri = tuple(sorted(label[3 * x + k] for k in range(3)))
        if len(set(tri)) != 3:
            raise GluingContradiction(f"two parts of centre {x} were glued together")
        triangles.append(tri)
        pairs += [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])]

    # each edge must come from exactly one centre
    if len(set(pairs)) != len(pairs):
        raise GluingContradiction("an edge is a side of two triangles of the construction")
    base = graph_from_edge_list(len(origins), pairs)
    if sorted(enumerate_triangles(base)) != sorted(triangles):
        raise GluingContradiction("gluing created triangles that no centre accounts for")
    verdict = check_locally_linear(base)
    if not verdict:
        raise GluingContradiction(f"rebuilt graph is not locally linear: {verdict.witness}")

    return ReconstructionResult(
        base,
        tuple(frozenset(o) for o, _ in origins),
        tuple(triangles),
    )


@dataclass(frozen=True)
class RoundTrip:
    ok: bool
    base_certificate: dict[int, int] | None
    star_certificate: dict[int, int] | None
    result: ReconstructionResult

    def __bool__(self):
        return self.ok


def roundtrip_check(g: Graph) -> RoundTrip:
    """Rebuild G from G* and certify both ``G' ~= G`` and ``(G')* ~= G*``."""
    require_locally_linear(g)
    h = star_graph(g).star
    res = reconstruct_base(h)
    base_cert = are_isomorphic(res.base, g)
    rebuilt_star = star_graph(res.base).star
    star_cert = are_isomorphic(rebuilt_star, h)
    ok = (
        base_cert is not None
        and star_cert is not None
        and validate_certificate(res.base, g, base_cert)
        and validate_certificate(rebuilt_star, h, star_cert)
    )
    return RoundTrip(ok, base_cert, star_cert, res)
