"""Induced 4-, 5- and 6-cycles and the correspondence between cycles of G and G*."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import BijectionFailure, SearchExhausted, UnsupportedLength
from .graph import Graph
from .star import StarResult, star_graph

Cycle = tuple[int, ...]

SUPPORTED_LENGTHS = (4, 5, 6)


@dataclass(frozen=True)
class CycleSet:
    """Induced k-cycles in canonical form.

    A canonical tuple starts at the smallest vertex and continues towards the
    smaller of its two cycle neighbours.
    """

    length: int
    cycles: tuple[Cycle, ...]

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __contains__(self, cycle):
        return canonical_cycle(cycle) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[Cycle]:
        return frozenset(self.cycles)


@dataclass(frozen=True)
class CycleBijection:
    """Pairs ``(cycle in G*, cycle in G)``; both sides are canonical tuples."""

    length: int
    pairs: tuple[tuple[Cycle, Cycle], ...]

    def __len__(self):
        return len(self.pairs)


def canonical_cycle(cycle) -> Cycle:
    cycle = list(cycle)
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def count_induced_cycles(h: Graph, k: int) -> CycleSet:
    """All induced cycles of length k (4, 5 or 6).

    Grows chordless paths from each start vertex through larger vertices only;
    a path closes when its last vertex is adjacent to the start, and the
    second vertex must be smaller than the last to skip the mirrored copy.
    """
    if k not in SUPPORTED_LENGTHS:
        raise UnsupportedLength(f"cycle length {k} not in {SUPPORTED_LENGTHS}")
    found: list[Cycle] = []

    def grow(path: list[int]) -> None:
        s, last = path[0], path[-1]
        for w in sorted(h.neighbors(last)):
            if w <= s or w in path:
                continue
            # w may touch only `last` among interior path vertices
            if any(h.has_edge(w, p) for p in path[1:-1]):
                continue
            closes = h.has_edge(w, s)
            if len(path) + 1 == k:
                if closes and path[1] < w:
                    found.append(tuple(path) + (w,))
            elif not closes:
                path.append(w)
                grow(path)
                path.pop()

    for s in h.vertices():
        for first in sorted(h.neighbors(s)):
            if first > s:
                grow([s, first])
    return CycleSet(k, tuple(sorted(found)))


def _cycle_bijection(g: Graph, k: int, star: StarResult | None = None) -> CycleBijection:
    if star is None:
        star = star_graph(g)
    on_star = count_induced_cycles(star.star, k)
    on_base = count_induced_cycles(g, k)
    pairs = []
    images = set()
    for cyc in on_star:
        tris = [set(star.triangles[x]) for x in cyc]
        for i in range(k):
            for j in range(i + 2, k):
                if (i, j) == (0, k - 1):
                    continue
                if tris[i] & tris[j]:
                    raise BijectionFailure(f"non-consecutive triangles of {cyc} intersect")
        corners = [star.shared_vertex(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
        if len(set(corners)) != k:
            raise BijectionFailure(f"intersection vertices of {cyc} are not distinct")
        image = canonical_cycle(corners)
        if image not in on_base:
            raise BijectionFailure(f"{cyc} maps to {image}, which is not an induced cycle of G")
        if image in images:
            raise BijectionFailure(f"{image} is hit twice")
        images.add(image)
        pairs.append((cyc, image))
    if len(images) != len(on_base):
        missed = sorted(set(on_base.cycles) - images)
        raise BijectionFailure(f"cycles of G with no preimage: {missed[:3]}")
    _check_onto_direction(g, star, on_base, {b: s for s, b in pairs})
    return CycleBijection(k, tuple(pairs))


def _check_onto_direction(g, star, on_base, preimage):
    # walk each cycle of G to the triangles on its sides and compare
    index = {tri: i for i, tri in enumerate(star.triangles)}
    k = on_base.length
    for cyc in on_base:
        sides = []
        for i in range(k):
            u, v = cyc[i], cyc[(i + 1) % k]
            (w,) = g.neighbors(u) & g.neighbors(v)
            sides.append(index[tuple(sorted((u, v, w)))])
        if len(set(sides)) != k:
            raise BijectionFailure(f"sides of {cyc} do not lie in {k} distinct triangles")
        if canonical_cycle(sides) != preimage[cyc]:
            raise BijectionFailure(f"{cyc} does not come back to {preimage[cyc]}")


def quadrilateral_bijection(g: Graph, star: StarResult | None = None) -> CycleBijection:
    """Match every induced C4 of G* with the C4 of G on its consecutive intersections."""
    return _cycle_bijection(g, 4, star)


def pentagon_bijection(g: Graph, star: StarResult | None = None) -> CycleBijection:
    """Same correspondence as :func:`quadrilateral_bijection`, for induced C5."""
    return _cycle_bijection(g, 5, star)


# --- hexagons ---------------------------------------------------------------


@dataclass(frozen=True)
class HexagonReport:
    """Census of induced 6-cycles on both sides and the ones that fail to translate.

    ``base_untranslated`` lists hexagons of G whose six side triangles do not
    induce a hexagon in G*; ``star_untranslated`` lists hexagons of G* whose
    consecutive intersection vertices do not induce a hexagon in G.
    """

    base_count: int
    star_count: int
    base_untranslated: tuple[Cycle, ...]
    star_untranslated: tuple[Cycle, ...]


def hexagon_report(g: Graph) -> HexagonReport:
    star = star_graph(g)
    on_base = count_induced_cycles(g, 6)
    on_star = count_induced_cycles(star.star, 6)
    index = {tri: i for i, tri in enumerate(star.triangles)}

    base_bad = []
    for cyc in on_base:
        sides = []
        for i in range(6):
            u, v = cyc[i], cyc[(i + 1) % 6]
            (w,) = g.neighbors(u) & g.neighbors(v)
            sides.append(index[tuple(sorted((u, v, w)))])
        if len(set(sides)) != 6 or canonical_cycle(sides) not in on_star:
            base_bad.append(cyc)

    star_bad = []
    for cyc in on_star:
        corners = [star.shared_vertex(cyc[i], cyc[(i + 1) % 6]) for i in range(6)]
        if len(set(corners)) != 6 or canonical_cycle(corners) not in on_base:
            star_bad.append(cyc)

    return HexagonReport(len(on_base), len(on_star), tuple(base_bad), tuple(star_bad))


@dataclass(frozen=True)
class HexagonCounterexample:
    direction: str  # "base-to-star" or "star-to-base"
    graph: Graph
    seed: int
    triangles: int
    merge_bias: float
    report: HexagonReport


def find_hexagon_counterexamples(
    max_triangles: int = 12, seeds: int = 2000
) -> tuple[HexagonCounterexample, HexagonCounterexample]:
    """Search small random triangle gluings for hexagons that fail to translate.

    Returns one graph with more induced hexagons in G than in G* (one of G's
    hexagons has side triangles that are not a hexagon of G*) and one with
    more in G* than in G.  Deterministic: seeds are scanned in order.
    """
    from .generators import random_locally_linear
    from .errors import RetryExhausted

    found: dict[str, HexagonCounterexample] = {}
    for seed in range(seeds):
        t = 6 + seed % (max_triangles - 5)
        bias = (0.4, 0.55, 0.7)[seed % 3]
        try:
            g = random_locally_linear(t, bias, seed)
        except RetryExhausted:
            continue
        rep = hexagon_report(g)
        if (
            "base-to-star" not in found
            and rep.base_count > rep.star_count
            and rep.base_untranslated
        ):
            found["base-to-star"] = HexagonCounterexample("base-to-star", g, seed, t, bias, rep)
        if (
            "star-to-base" not in found
            and rep.star_count > rep.base_count
            and rep.star_untranslated
        ):
            found["star-to-base"] = HexagonCounterexample("star-to-base", g, seed, t, bias, rep)
        if len(found) == 2:
            return found["base-to-star"], found["star-to-base"]
    raise SearchExhausted(f"no hexagon counterexample pair within {seeds} seeds")
