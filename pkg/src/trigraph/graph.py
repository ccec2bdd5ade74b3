"""Undirected simple graphs on dense vertex ids, plus small-graph isomorphism."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvalidGraph

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` is kept as a sorted tuple of ``(u, v)`` pairs with ``u < v``; use
    :func:`graph_from_edge_list` rather than the constructor for untrusted input.
    """

    n: int
    edges: tuple[Edge, ...]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def adjacency_matrix(self) -> list[list[int]]:
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            mat[u][v] = mat[v][u] = 1
        return mat

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical graph, collapsing duplicate and reversed pairs.

    Raises :class:`InvalidGraph` on self-loops and out-of-range endpoints.
    """
    if n < 0:
        raise InvalidGraph(f"negative vertex count {n}")
    edges = set()
    for pair in pairs:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidGraph(f"endpoint {x} out of range for n={n}")
        if u == v:
            raise InvalidGraph(f"self-loop at vertex {u}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(edges)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``g[S]`` relabelled to ``0..|S|-1`` and the label map.

    ``label_map[i]`` is the vertex of ``g`` that became vertex ``i``; labels
    follow ascending order of the original ids.
    """
    label_map = sorted(set(vertices))
    for v in label_map:
        if not 0 <= v < g.n:
            raise InvalidGraph(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(label_map)}
    pairs = [
        (index[u], index[w])
        for u in label_map
        for w in g.neighbors(u)
        if w in index and u < w
    ]
    return graph_from_edge_list(len(label_map), pairs), label_map


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex map ``v -> perm[v]``."""
    return graph_from_edge_list(g.n, ((perm[u], perm[v]) for u, v in g.edges))


def disjoint_union(*graphs: Graph) -> Graph:
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return graph_from_edge_list(offset, pairs)


# --- isomorphism ----------------------------------------------------------


def _refine_colors(graphs: Sequence[Graph]) -> list[list[int]]:
    """Colour refinement run jointly so colours are comparable across graphs."""
    colors = [[g.degree(v) for v in g.vertices()] for g in graphs]
    n_classes = len({c for cs in colors for c in cs})
    while True:
        sigs = [
            [(cs[v], tuple(sorted(cs[w] for w in g.neighbors(v)))) for v in g.vertices()]
            for g, cs in zip(graphs, colors)
        ]
        palette = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[palette[s] for s in ss] for ss in sigs]
        if len(palette) == n_classes:
            return colors
        n_classes = len(palette)


def are_isomorphic(g: Graph, h: Graph) -> dict[int, int] | None:
    """Find an isomorphism ``g -> h`` or return ``None``.

    Degree-sequence prefilter, joint colour refinement, then backtracking in
    BFS order with adjacency checks against every already-mapped vertex.
    Meant for graphs of a few dozen vertices.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    if g.n == 0:
        return {}
    cg, ch = _refine_colors([g, h])
    if sorted(cg) != sorted(ch):
        return None

    by_color: dict[int, list[int]] = {}
    for v in h.vertices():
        by_color.setdefault(ch[v], []).append(v)

    order = _search_order(g, cg)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        mapped_nbrs = [mapping[w] for w in g.neighbors(v) if w in mapping]
        mapped_non = [mapping[w] for w in order[:pos] if w not in g.neighbors(v)]
        if mapped_nbrs:
            candidates = [x for x in h.neighbors(mapped_nbrs[0]) if ch[x] == cg[v]]
            candidates.sort()
        else:
            candidates = by_color[cg[v]]
        for x in candidates:
            if x in used:
                continue
            if not all(h.has_edge(x, y) for y in mapped_nbrs):
                continue
            if any(h.has_edge(x, y) for y in mapped_non):
                continue
            mapping[v] = x
            used.add(x)
            if extend(pos + 1):
                return True
            del mapping[v]
            used.discard(x)
        return False

    return dict(mapping) if extend(0) else None


def _search_order(g: Graph, colors: Sequence[int]) -> list[int]:
    # rarest colour first, then BFS so each vertex has a mapped neighbour
    freq: dict[int, int] = {}
    for c in colors:
        freq[c] = freq.get(c, 0) + 1
    remaining = set(g.vertices())
    order: list[int] = []
    while remaining:
        root = min(remaining, key=lambda v: (freq[colors[v]], -g.degree(v), v))
        queue = [root]
        remaining.discard(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(g.neighbors(v), key=lambda w: (freq[colors[w]], w)):
                if w in remaining:
                    remaining.discard(w)
                    queue.append(w)
    return order


def validate_certificate(g: Graph, h: Graph, mapping: Mapping[int, int]) -> bool:
    """Check edge by edge that ``mapping`` is an isomorphism ``g -> h``."""
    if g.n != h.n or sorted(mapping) != list(g.vertices()):
        return False
    if sorted(mapping.values()) != list(h.vertices()):
        return False
    image = {tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges}
    return image == h.edge_set


# --- text formats ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``u v`` lines format; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(re.fullmatch(r"\d+", p) for p in parts):
            raise InvalidGraph(f"line {lineno}: expected two nonnegative integers, got {raw!r}")
        rows.append((int(parts[0]), int(parts[1])))
    if not rows:
        raise InvalidGraph("empty edge list: missing 'n m' header")
    (n, m), body = rows[0], rows[1:]
    if len(body) != m:
        raise InvalidGraph(f"header declares {m} edges but {len(body)} follow")
    return graph_from_edge_list(n, body)


def format_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G", labels: Sequence[str] | None = None) -> str:
    out = [f"graph {name} {{"]
    for v in g.vertices():
        if labels is None:
            out.append(f"    {v};")
        else:
            out.append(f'    {v} [label="{labels[v]}"];')
    out.extend(f"    {u} -- {v};" for u, v in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"


# --- small named graphs used throughout -----------------------------------


def complete_graph(n: int) -> Graph:
    return graph_from_edge_list(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return graph_from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return graph_from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edge_list(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())
