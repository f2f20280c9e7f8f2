"""Detectors for properly colored and rainbow cycles.

A cycle is properly colored when every two cyclically consecutive edges
have distinct colors, and rainbow when all its edge colors are pairwise
distinct.  Witnesses are reported in canonical form: the rotation and
reflection of the vertex sequence that starts at the smallest vertex and
then has the smaller second vertex.  Searches scan candidates in
lexicographic order of that canonical form, so the returned witness is
the smallest one and detection is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InvalidParameters, NotACycle
from .graph import EdgeColoredGraph


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk v[0] v[1] .. v[k-1] v[0] with its edge colors.

    colors[i] is the color of edge (v[i], v[i+1 mod k]).  kind is
    "properly-colored" or "rainbow".
    """

    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    kind: str


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate and reflect so the sequence starts at the minimum vertex
    and its second entry is smaller than its last."""
    vs = list(vertices)
    k = len(vs)
    i = vs.index(min(vs))
    vs = vs[i:] + vs[:i]
    if k >= 3 and vs[1] > vs[-1]:
        vs = [vs[0]] + vs[:0:-1]
    return tuple(vs)


def cycle_edge_colors(
    g: EdgeColoredGraph, vertices: Sequence[int]
) -> tuple[int, ...]:
    """Colors along the cycle; raises NotACycle on a repeat or missing edge."""
    k = len(vertices)
    if k < 3:
        raise NotACycle(f"cycle needs at least 3 vertices, got {k}")
    if len(set(vertices)) != k:
        raise NotACycle(f"repeated vertex in {tuple(vertices)}")
    out = []
    for i in range(k):
        u, v = vertices[i], vertices[(i + 1) % k]
        c = g.color_of(u, v)
        if c is None:
            raise NotACycle(f"missing edge ({u}, {v}) in {tuple(vertices)}")
        out.append(c)
    return tuple(out)


def is_properly_colored_cycle(g: EdgeColoredGraph, vertices: Sequence[int]) -> bool:
    cols = cycle_edge_colors(g, vertices)
    k = len(cols)
    return all(cols[i] != cols[(i + 1) % k] for i in range(k))


def verify_witness(g: EdgeColoredGraph, w: CycleWitness) -> bool:
    """Re-check a witness edge by edge against the graph."""
    try:
        cols = cycle_edge_colors(g, w.vertices)
    except NotACycle:
        return False
    if cols != w.colors:
        return False
    k = len(cols)
    if any(cols[i] == cols[(i + 1) % k] for i in range(k)):
        return False
    if w.kind == "rainbow" and len(set(cols)) != k:
        return False
    if w.kind not in ("properly-colored", "rainbow"):
        return False
    return True


def find_pc_c4(g: EdgeColoredGraph) -> CycleWitness | None:
    """Smallest properly colored 4-cycle, or None.

    Exhaustive over all 4-subsets in lexicographic order; each subset
    {a<b<c<d} carries three cyclic structures whose canonical forms are,
    in lex order, (a,b,c,d), (a,b,d,c), (a,c,b,d).
    """
    for a, b, c, d in combinations(range(g.n), 4):
        for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            w = _pc_cycle_at(g, cyc)
            if w is not None:
                return w
    return None


def _pc_cycle_at(
    g: EdgeColoredGraph, cyc: tuple[int, ...]
) -> CycleWitness | None:
    k = len(cyc)
    cols = []
    for i in range(k):
        col = g.color_of(cyc[i], cyc[(i + 1) % k])
        if col is None:
            return None
        cols.append(col)
    if any(cols[i] == cols[(i + 1) % k] for i in range(k)):
        return None
    return CycleWitness(tuple(cyc), tuple(cols), "properly-colored")


def find_rainbow_cycle(g: EdgeColoredGraph, k: int) -> CycleWitness | None:
    """Smallest rainbow cycle on exactly k vertices, or None.

    Backtracking over paths anchored at the cycle's minimum vertex,
    extending in ascending vertex order with a used-color check for
    pruning; reflection is normalized by requiring second < last.  The
    first cycle found is therefore the lex smallest canonical witness.
    """
    if k < 3:
        raise InvalidParameters(f"cycle length must be at least 3, got {k}")
    path = [0] * k
    used = [False] * g.n

    def extend(depth: int, colors_used: set[int]) -> tuple[int, ...] | None:
        if depth == k:
            start, last = path[0], path[k - 1]
            close = g.color_of(last, start)
            if close is None or close in colors_used:
                return None
            if path[1] > path[k - 1]:
                return None
            return tuple(path)
        prev = path[depth - 1]
        for nxt in sorted(g.neighbors(prev)):
            if nxt <= path[0] or used[nxt]:
                continue
            col = g.color_of(prev, nxt)
            if col in colors_used:
                continue
            path[depth] = nxt
            used[nxt] = True
            colors_used.add(col)
            found = extend(depth + 1, colors_used)
            colors_used.discard(col)
            used[nxt] = False
            if found is not None:
                return found
        return None

    for start in range(g.n):
        path[0] = start
        used[start] = True
        found = extend(1, set())
        used[start] = False
        if found is not None:
            return CycleWitness(found, cycle_edge_colors(g, found), "rainbow")
    return None
