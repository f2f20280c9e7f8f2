"""Counting bounds and the color-degree / saturation identities.

kst_bound evaluates the bipartite-Turan style bound
(1/2) (b-1)^(1/a) n^(2-1/a) + ((a-1)/2) n exactly as a rational when the
inner a-th root is an integer, and as a width-1/2 rational interval
otherwise; comparisons against integer edge counts only ever need the
interval.

matching_extremal gives the maximum edge count of a graph on n vertices
with no matching of size k, together with which of the two extremal
families attains it.

The saturation identity: summing over vertices the number of colors
that vanish with the vertex equals summing per color class a
contribution of 2 (single edge), 1 (star on >= 2 edges), or 0 (the
class contains two disjoint edges or a triangle).  This bounds the sum
by twice the color count, with equality exactly on rainbow colorings.

The star-forest identity: when every color class is a star forest,
orienting each star from its center makes e(G) + c(G) equal the sum of
color degrees.  color_degree_preserving_reduction deletes edges whose
color repeats at both endpoints until none remain; the result keeps
every color degree and its classes are star forests, turning the
identity into the general lower bound sum d^c >= e + c on the reduced
graph.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import EmptyClass, InvalidParameters, NotApplicable
from .graph import (
    ColorClassView,
    EdgeColoredGraph,
    _view,
    color_classes,
    graph_stats,
    refine_color_components,
)


def _iroot(t: int, a: int) -> int:
    """Floor of the a-th root of a non-negative integer."""
    if t < 0:
        raise InvalidParameters("root of a negative number")
    if t == 0 or a == 1:
        return t
    x = 1 << ((t.bit_length() + a - 1) // a)
    while True:
        y = ((a - 1) * x + t // x ** (a - 1)) // a
        if y >= x:
            break
        x = y
    return x


@dataclass(frozen=True)
class BoundValue:
    """Exact rational value, or a width-1/2 interval around an irrational one."""

    lower: Fraction
    upper: Fraction
    exact: bool


def kst_bound(n: int, a: int, b: int) -> BoundValue:
    """Edge bound for graphs without a complete bipartite K_{a,b}.

    Requires 1 <= a <= b and n >= 0.  The value is
    (1/2) ((b-1) n^(2a-1))^(1/a) + ((a-1)/2) n.
    """
    if n < 0 or a < 1 or b < a:
        raise InvalidParameters(f"need n >= 0 and 1 <= a <= b, got {(n, a, b)}")
    t = (b - 1) * n ** (2 * a - 1)
    r = _iroot(t, a)
    linear = Fraction((a - 1) * n, 2)
    if r**a == t:
        v = Fraction(r, 2) + linear
        return BoundValue(v, v, True)
    return BoundValue(Fraction(r, 2) + linear, Fraction(r + 1, 2) + linear, False)


@dataclass(frozen=True)
class MatchingBound:
    bound: int
    extremal: tuple[str, ...]


def matching_extremal(n: int, k: int) -> MatchingBound:
    """Max edges on n vertices with no matching of k disjoint edges.

    The two candidate extremal families: a clique on 2k - 1 vertices
    plus isolated vertices, and a clique on k - 1 vertices joined to an
    independent set.  Both names are reported on a tie.
    """
    if k < 1 or n < 2 * k:
        raise InvalidParameters(f"need 1 <= k and n >= 2k, got {(n, k)}")
    o1 = comb(2 * k - 1, 2)
    o2 = comb(k - 1, 2) + (k - 1) * (n - k + 1)
    bound = max(o1, o2)
    names = []
    if o1 == bound:
        names.append("clique-plus-isolated")
    if o2 == bound:
        names.append("clique-join-independent")
    return MatchingBound(bound, tuple(names))


@dataclass(frozen=True)
class Contribution:
    value: int
    reason: str
    witness: tuple | None


def color_contribution(cls) -> Contribution:
    """Saturation contribution of one color class.

    2 for a single edge, 1 for a star on at least two edges, 0 when the
    class contains two disjoint edges or a triangle (a pairwise
    intersecting family that is not a star is a triangle).
    """
    if isinstance(cls, ColorClassView):
        edges = cls.edges
    elif isinstance(cls, EdgeColoredGraph):
        edges = cls.edges
    else:
        edges = tuple(cls)
    if not edges:
        raise EmptyClass("a color class has at least one edge")
    if len(edges) == 1:
        return Contribution(2, "single-edge", edges[0])
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    if common:
        return Contribution(1, "star", (min(common),))
    for e, f in combinations(edges, 2):
        if not set(e) & set(f):
            return Contribution(0, "contains-2K2", (e, f))
    verts = tuple(sorted({v for e in edges for v in e}))
    return Contribution(0, "contains-triangle", verts)


@dataclass(frozen=True)
class SaturationReport:
    sum_saturated: int
    twice_colors: int
    bound_holds: bool
    equality: bool
    is_rainbow: bool
    equivalence_holds: bool
    contributions: dict[int, int]
    cross_check_holds: bool


def saturation_identity_check(g: EdgeColoredGraph) -> SaturationReport:
    """Evaluate the saturation bound and its rainbow equality case.

    Never raises on a violation; the report flags carry the outcome so
    exhaustive sweeps can collect counterexamples.
    """
    st = graph_stats(g)
    sum_ds = sum(st.saturated_color_degree)
    contributions = {
        view.color: color_contribution(view).value for view in color_classes(g)
    }
    twice = 2 * g.color_count
    equality = sum_ds == twice
    rainbow = g.edge_count == g.color_count
    return SaturationReport(
        sum_saturated=sum_ds,
        twice_colors=twice,
        bound_holds=sum_ds <= twice,
        equality=equality,
        is_rainbow=rainbow,
        equivalence_holds=equality == rainbow,
        contributions=contributions,
        cross_check_holds=sum(contributions.values()) == sum_ds,
    )


def _star_center(edges: tuple[tuple[int, int], ...]) -> int | None:
    """Common vertex of a star; smaller endpoint for a single edge."""
    if len(edges) == 1:
        return edges[0][0]
    common = set(edges[0])
    for e in edges[1:]:
        common &= set(e)
    if not common:
        return None
    return min(common)


@dataclass(frozen=True)
class StarForestReport:
    ec_original: int
    ec_refined: int
    dc_sum: int
    dc_sum_refined: int
    identity_holds: bool
    preservation_holds: bool
    lower_bound_holds: bool
    per_vertex_ok: bool
    centers: dict[int, int]


def starforest_identity_check(g: EdgeColoredGraph) -> StarForestReport:
    """Check e + c = sum d^c on a graph whose classes are star forests.

    Raises NotApplicable naming the offending class and component when
    some component of a color class is not a star.  Otherwise refines
    classes into their components, orients every star from its center,
    and reports the per-vertex identity d^c(v) = indegree(v) + distinct
    outgoing colors at v alongside the aggregate identities.
    """
    for view in color_classes(g):
        for comp in _class_components(view.edges):
            if _star_center(comp) is None:
                raise NotApplicable(
                    "class component is not a star",
                    color=view.color,
                    component=tuple(sorted({v for e in comp for v in e})),
                )
    g1 = refine_color_components(g)
    in_deg = [0] * g.n
    out_colors: list[set[int]] = [set() for _ in range(g.n)]
    centers: dict[int, int] = {}
    for view in color_classes(g1):
        center = _star_center(view.edges)
        if center is None:  # refinement yields exactly the validated components
            raise AssertionError("refined class lost its star shape")
        centers[view.color] = center
        for u, v in view.edges:
            leaf = v if u == center else u
            in_deg[leaf] += 1
            out_colors[center].add(view.color)
    st = graph_stats(g)
    st1 = graph_stats(g1)
    dc_sum = sum(st.color_degree)
    dc_sum1 = sum(st1.color_degree)
    ec0 = g.edge_count + g.color_count
    ec1 = g1.edge_count + g1.color_count
    per_vertex_ok = all(
        st1.color_degree[v] == in_deg[v] + len(out_colors[v]) for v in range(g.n)
    )
    return StarForestReport(
        ec_original=ec0,
        ec_refined=ec1,
        dc_sum=dc_sum,
        dc_sum_refined=dc_sum1,
        identity_holds=ec1 == dc_sum1,
        preservation_holds=dc_sum == dc_sum1,
        lower_bound_holds=dc_sum >= ec0,
        per_vertex_ok=per_vertex_ok,
        centers=centers,
    )


def _class_components(edges) -> list[tuple[tuple[int, int], ...]]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[tuple[int, int]]] = {}
    for u, v in edges:
        groups.setdefault(find(u), []).append((u, v))
    return [tuple(groups[r]) for r in sorted(groups)]


def color_degree_preserving_reduction(g: EdgeColoredGraph) -> EdgeColoredGraph:
    """Delete edges whose color repeats at both endpoints until none do.

    One pass in canonical edge order suffices: counts only decrease, so
    an edge kept now stays undeletable later.  Every color degree is
    preserved; in the result every edge has an endpoint of class degree
    one, so all classes are star forests, and a second pass deletes
    nothing.  Colors are not renumbered.
    """
    counts: list[Counter] = [Counter() for _ in range(g.n)]
    for (u, v), c in zip(g.edges, g.colors):
        counts[u][c] += 1
        counts[v][c] += 1
    kept: list[tuple[int, int, int]] = []
    for (u, v), c in zip(g.edges, g.colors):
        if counts[u][c] >= 2 and counts[v][c] >= 2:
            counts[u][c] -= 1
            counts[v][c] -= 1
        else:
            kept.append((u, v, c))
    return _view(g.n, kept)
