"""Edge-colored graphs and their basic color-degree statistics.

A graph is a set of vertices 0..n-1 together with undirected edges, each
carrying a positive integer color.  The canonical edge order is
lexicographic on (min endpoint, max endpoint); build_graph normalizes
color ids to 1..c by first appearance in that order.  Subgraph views
never renumber vertices and never renormalize colors, so a view's color
ids are a subset of the parent's.

Statistics per vertex:

    d(v)   degree
    dc(v)  color degree, the number of distinct colors on edges at v
    ds(v)  saturated color degree, c(G) - c(G - v), the number of
           colors that vanish from the graph when v is deleted
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    NonPositiveColor,
    Pc4Error,
    SelfLoop,
    UnknownColor,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Immutable edge-colored graph.

    edges is in canonical order with u < v per pair; colors is aligned
    with edges.  Instances built by build_graph have colors normalized
    to 1..c; views keep whatever ids the parent had.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]

    # -------------------------------------------------------- derived views

    @cached_property
    def _adj(self) -> list[dict[int, int]]:
        adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for (u, v), c in zip(self.edges, self.colors):
            adj[u][v] = c
            adj[v][u] = c
        return adj

    @cached_property
    def color_set(self) -> frozenset[int]:
        return frozenset(self.colors)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def color_count(self) -> int:
        return len(self.color_set)

    def color_of(self, u: int, v: int) -> int | None:
        """Color of edge uv, or None when uv is not an edge."""
        if not (0 <= u < self.n):
            return None
        return self._adj[u].get(v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.color_of(u, v) is not None

    def neighbors(self, v: int) -> dict[int, int]:
        """Mapping neighbor -> edge color for vertex v."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def support(self) -> tuple[int, ...]:
        """Vertices with at least one incident edge, ascending."""
        return tuple(v for v in range(self.n) if self._adj[v])

    def is_complete(self) -> bool:
        return 2 * len(self.edges) == self.n * (self.n - 1)

    @cached_property
    def adjacency_rows(self) -> tuple[int, ...]:
        """Bitmask adjacency rows; bit v of row u is set when uv is an edge."""
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    def __repr__(self) -> str:  # compact, deterministic
        body = " ".join(f"{u}-{v}:{c}" for (u, v), c in zip(self.edges, self.colors))
        return f"EdgeColoredGraph(n={self.n}, {body})"


@dataclass(frozen=True)
class GraphStats:
    edge_count: int
    color_count: int
    degree: tuple[int, ...]
    color_degree: tuple[int, ...]
    saturated_color_degree: tuple[int, ...]


@dataclass(frozen=True)
class ColorClassView:
    """One color class: its id, edge set, vertex support, and subgraph."""

    color: int
    edges: tuple[tuple[int, int], ...]
    support: tuple[int, ...]
    graph: EdgeColoredGraph


def _canonical(
    n: int, triples: Iterable[tuple[int, int, int]]
) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Sort (u, v, color) triples into canonical edge order."""
    items = sorted((min(u, v), max(u, v), c) for u, v, c in triples)
    return tuple((u, v) for u, v, _ in items), tuple(c for _, _, c in items)


def _view(n: int, triples: Iterable[tuple[int, int, int]]) -> EdgeColoredGraph:
    """Internal constructor: canonical order, no validation, no renormalizing."""
    edges, colors = _canonical(n, triples)
    return EdgeColoredGraph(n, edges, colors)


def build_graph(n: int, edge_list: Sequence[tuple[int, int, int]]) -> EdgeColoredGraph:
    """Validate an edge list and build a normalized graph.

    Color ids are renamed to 1..c by first appearance in canonical edge
    order, so structurally equal inputs with permuted color names build
    the same graph.  Raises SelfLoop, VertexOutOfRange, NonPositiveColor,
    or DuplicateEdge; each error names the offending triple.
    """
    if not isinstance(n, int) or n < 0:
        raise Pc4Error(f"vertex count must be a nonnegative int, got {n!r}")
    seen: set[tuple[int, int]] = set()
    for t in edge_list:
        u, v, c = t
        if not (isinstance(u, int) and isinstance(v, int)):
            raise VertexOutOfRange("endpoints must be ints", tuple(t))
        if u == v:
            raise SelfLoop("self loop", tuple(t))
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"endpoint outside 0..{n - 1}", tuple(t))
        if not isinstance(c, int) or c < 1:
            raise NonPositiveColor("color must be a positive int", tuple(t))
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge("duplicate edge", tuple(t))
        seen.add(key)
    edges, raw = _canonical(n, ((u, v, c) for u, v, c in edge_list))
    rename: dict[int, int] = {}
    normalized = []
    for c in raw:
        if c not in rename:
            rename[c] = len(rename) + 1
        normalized.append(rename[c])
    return EdgeColoredGraph(n, edges, tuple(normalized))


def graph_stats(g: EdgeColoredGraph) -> GraphStats:
    """Degrees, color degrees, and saturated color degrees of every vertex.

    ds(v) counts colors whose every edge meets v, which equals
    c(G) - c(G - v); it is computed per color class, one pass.
    """
    degree = [0] * g.n
    palettes: list[set[int]] = [set() for _ in range(g.n)]
    # For each color track the intersection of all its edges' endpoints.
    full = frozenset(range(g.n))
    meets: dict[int, frozenset[int]] = {}
    for (u, v), c in zip(g.edges, g.colors):
        degree[u] += 1
        degree[v] += 1
        palettes[u].add(c)
        palettes[v].add(c)
        meets[c] = meets.get(c, full) & frozenset((u, v))
    ds = [0] * g.n
    for c, common in meets.items():
        for v in common:
            ds[v] += 1
    return GraphStats(
        edge_count=len(g.edges),
        color_count=len(g.color_set),
        degree=tuple(degree),
        color_degree=tuple(len(p) for p in palettes),
        saturated_color_degree=tuple(ds),
    )


def subgraph_view(
    g: EdgeColoredGraph,
    *,
    induced: Iterable[int] | None = None,
    color_class: int | None = None,
    color_union: Iterable[int] | None = None,
    delete_vertex: int | None = None,
) -> EdgeColoredGraph:
    """Restriction of g selected by exactly one keyword.

    induced=S keeps edges inside S; color_class=i keeps edges of color i;
    color_union=C keeps edges whose color is in C; delete_vertex=v drops
    edges at v.  Vertex ids are preserved (vertices outside the selection
    become isolated) and colors are not renormalized.
    """
    selectors = [
        induced is not None,
        color_class is not None,
        color_union is not None,
        delete_vertex is not None,
    ]
    if sum(selectors) != 1:
        raise Pc4Error("subgraph_view takes exactly one selector")
    if induced is not None:
        keep = set(induced)
        for v in keep:
            if not (0 <= v < g.n):
                raise VertexOutOfRange("induced set outside range", (v, v, 0))
        triples = [
            (u, v, c)
            for (u, v), c in zip(g.edges, g.colors)
            if u in keep and v in keep
        ]
    elif color_class is not None:
        if color_class not in g.color_set:
            raise UnknownColor(f"color {color_class} not used in graph")
        triples = [
            (u, v, c) for (u, v), c in zip(g.edges, g.colors) if c == color_class
        ]
    elif color_union is not None:
        wanted = set(color_union)
        missing = wanted - set(g.color_set)
        if missing:
            raise UnknownColor(f"colors {sorted(missing)} not used in graph")
        triples = [
            (u, v, c) for (u, v), c in zip(g.edges, g.colors) if c in wanted
        ]
    else:
        assert delete_vertex is not None
        if not (0 <= delete_vertex < g.n):
            raise VertexOutOfRange(
                "delete_vertex outside range", (delete_vertex, delete_vertex, 0)
            )
        triples = [
            (u, v, c)
            for (u, v), c in zip(g.edges, g.colors)
            if u != delete_vertex and v != delete_vertex
        ]
    return _view(g.n, triples)


def color_class(g: EdgeColoredGraph, color: int) -> ColorClassView:
    sub = subgraph_view(g, color_class=color)
    return ColorClassView(
        color=color, edges=sub.edges, support=sub.support(), graph=sub
    )


def color_classes(g: EdgeColoredGraph) -> list[ColorClassView]:
    """All color classes, ascending by color id."""
    return [color_class(g, c) for c in sorted(g.color_set)]


def refine_color_components(g: EdgeColoredGraph) -> EdgeColoredGraph:
    """Give every connected component of every color class its own color.

    Within a class, the component containing the canonically first edge
    keeps the class color; the remaining components take fresh ids above
    max color, assigned in (class, component) canonical order.  Color
    degrees are unchanged because each vertex meets only one component
    of any class.
    """
    if not g.edges:
        return g
    fresh = max(g.color_set) + 1
    out: list[tuple[int, int, int]] = []
    for cls in color_classes(g):
        parent: dict[int, int] = {}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in cls.edges:
            parent.setdefault(u, u)
            parent.setdefault(v, v)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        roots_in_order: list[int] = []
        root_color: dict[int, int] = {}
        for u, v in cls.edges:  # canonical order fixes component order
            r = find(u)
            if r not in root_color:
                if not roots_in_order:
                    root_color[r] = cls.color
                else:
                    root_color[r] = fresh
                    fresh += 1
                roots_in_order.append(r)
        for u, v in cls.edges:
            out.append((u, v, root_color[find(u)]))
    return _view(g.n, out)
