"""Structure classification of complete graphs colored with n colors.

A complete graph on n >= 4 vertices colored with exactly n colors and
containing no properly colored C4 falls into one of three shapes:

  structure 1: some vertex sees a single color on all its edges;
  structure 2: a rainbow triangle (u, v, w) such that, walking the
      triangle, each corner repeats its outgoing triangle color on every
      edge to the rest of the graph;
  structure 3: some vertex sees pairwise distinct colors on its edges
      while the rest of the graph is monochromatic in one further color.

classify_structure returns the first matching witness in that order (or
the properly colored C4 / an Unclassified verdict).  layered_decompose
peels structures off repeatedly, checking at every layer that exactly
as many colors disappear as vertices; the result replays back into the
original coloring up to color renaming.

recognize_gallai_g0 identifies the complete graphs with n - 1 colors
and no rainbow triangle that arise from recursive bipartitions with
monochromatic cross edges in a fresh color.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .detect import CycleWitness, find_pc_c4
from .errors import (
    DecompositionFailed,
    InvalidParameters,
    LayerColorMismatch,
    NotComplete,
    ProperlyColoredC4Present,
    TooSmall,
    WrongColorCount,
)
from .graph import EdgeColoredGraph


@dataclass(frozen=True)
class Structure1Witness:
    """All edges at vertex share one color."""

    vertex: int
    color: int


@dataclass(frozen=True)
class Structure2Witness:
    """Rainbow triangle whose corners designate the triangle colors.

    colors = (c(v1 v2), c(v2 v3), c(v3 v1)); corner v_i repeats
    colors[i] on every edge leaving the triangle.
    """

    vertices: tuple[int, int, int]
    colors: tuple[int, int, int]


@dataclass(frozen=True)
class Structure3Witness:
    """Center with pairwise distinct edge colors over a monochromatic rest.

    palette lists the center's colors in ascending neighbor order;
    outer_color is the single color of all non-center edges.
    """

    center: int
    palette: tuple[int, ...]
    outer_color: int


@dataclass(frozen=True)
class MonochromaticBlock:
    """Terminal peel layer: a complete block in one color."""

    vertices: tuple[int, ...]
    color: int


@dataclass(frozen=True)
class PC4Found:
    witness: CycleWitness


@dataclass(frozen=True)
class Unclassified:
    reason: str


def _colors_in(g: EdgeColoredGraph, verts) -> set[int]:
    out = set()
    vs = list(verts)
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            c = g.color_of(vs[i], vs[j])
            if c is not None:
                out.add(c)
    return out


def _match_structure1(g: EdgeColoredGraph, verts) -> list[Structure1Witness]:
    out = []
    for v in verts:
        seen = {g.color_of(v, w) for w in verts if w != v}
        if len(seen) == 1:
            out.append(Structure1Witness(v, next(iter(seen))))
    return out


def _match_structure2(g: EdgeColoredGraph, verts) -> list[Structure2Witness]:
    out = []
    vs = sorted(verts)
    for a, b, c in combinations(vs, 3):
        cab = g.color_of(a, b)
        cbc = g.color_of(b, c)
        cac = g.color_of(a, c)
        if len({cab, cbc, cac}) != 3:
            continue
        rest = [x for x in vs if x not in (a, b, c)]
        # two walking directions designate the corners differently
        for order, cols in (
            ((a, b, c), (cab, cbc, cac)),
            ((a, c, b), (cac, cbc, cab)),
        ):
            ok = True
            for corner, want in zip(order, cols):
                for x in rest:
                    if g.color_of(corner, x) != want:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(Structure2Witness(order, cols))
    return out


def _match_structure3(g: EdgeColoredGraph, verts) -> list[Structure3Witness]:
    out = []
    vs = sorted(verts)
    for v in vs:
        rest = [w for w in vs if w != v]
        palette = tuple(g.color_of(v, w) for w in rest)
        if len(set(palette)) != len(rest) or len(rest) < 2:
            continue
        outer = {g.color_of(x, y) for x, y in combinations(rest, 2)}
        if len(outer) != 1:
            continue
        k = next(iter(outer))
        if k in palette:
            continue
        out.append(Structure3Witness(v, palette, k))
    return out


def _gate(g: EdgeColoredGraph, minimum: int) -> None:
    if not g.is_complete():
        raise NotComplete("classification is defined on complete graphs")
    if g.n < minimum:
        raise TooSmall(f"need at least {minimum} vertices, got {g.n}")
    if g.color_count != g.n:
        raise WrongColorCount(
            f"need exactly n = {g.n} colors, got {g.color_count}"
        )


def classify_structure(g: EdgeColoredGraph, all_matches: bool = False):
    """Classify a complete graph with exactly n colors, n >= 4.

    Returns PC4Found when a properly colored C4 exists; otherwise the
    first structure witness in the order structure 1, 2, 3 (vertex and
    triangle scans ascending, so the result is canonical).  all_matches
    returns the full list of witnesses instead.  Unclassified signals
    that nothing matched, which only happens on a counterexample to the
    trichotomy.
    """
    _gate(g, 4)
    pc4 = find_pc_c4(g)
    if pc4 is not None:
        return PC4Found(pc4)
    verts = range(g.n)
    matches: list = []
    for finder in (_match_structure1, _match_structure2, _match_structure3):
        got = finder(g, verts)
        if got and not all_matches:
            return got[0]
        matches.extend(got)
    if all_matches:
        return matches
    return Unclassified("no structure matched a properly-colored-C4-free input")


def verify_structure(g: EdgeColoredGraph, witness) -> bool:
    """Re-check a structure witness edge by edge."""
    if isinstance(witness, Structure1Witness):
        v = witness.vertex
        return all(
            g.color_of(v, w) == witness.color for w in range(g.n) if w != v
        )
    if isinstance(witness, Structure2Witness):
        v1, v2, v3 = witness.vertices
        c1, c2, c3 = witness.colors
        if len({c1, c2, c3}) != 3:
            return False
        if (g.color_of(v1, v2), g.color_of(v2, v3), g.color_of(v3, v1)) != (
            c1,
            c2,
            c3,
        ):
            return False
        rest = [x for x in range(g.n) if x not in witness.vertices]
        for corner, want in zip(witness.vertices, witness.colors):
            if any(g.color_of(corner, x) != want for x in rest):
                return False
        return True
    if isinstance(witness, Structure3Witness):
        v = witness.center
        rest = [w for w in range(g.n) if w != v]
        palette = tuple(g.color_of(v, w) for w in rest)
        if palette != witness.palette or len(set(palette)) != len(rest):
            return False
        if witness.outer_color in palette:
            return False
        return all(
            g.color_of(x, y) == witness.outer_color
            for x, y in combinations(rest, 2)
        )
    return False


# ----------------------------------------------------------------- peeling


@dataclass(frozen=True)
class PeelLayer:
    witness: object
    removed: tuple[int, ...]
    removed_colors: tuple[int, ...]


@dataclass(frozen=True)
class PeelTree:
    """Chain of peel layers; remaining holds at most one never-peeled vertex."""

    layer: PeelLayer | None
    child: "PeelTree | None"
    remaining: tuple[int, ...]

    def layers(self) -> list[PeelLayer]:
        node: PeelTree | None = self
        out = []
        while node is not None and node.layer is not None:
            out.append(node.layer)
            node = node.child
        return out


def peel_vertices(tree: PeelTree) -> tuple[int, ...]:
    """All vertices covered by the tree, in peel order then remaining."""
    out: list[int] = []
    node: PeelTree | None = tree
    while node is not None:
        if node.layer is not None:
            out.extend(node.layer.removed)
        if node.child is None:
            out.extend(node.remaining)
        node = node.child
    return tuple(out)


def _peel(g: EdgeColoredGraph, verts: list[int]) -> PeelTree:
    m = len(verts)
    if m <= 1:
        return PeelTree(None, None, tuple(verts))
    got1 = _match_structure1(g, verts)
    if got1:
        w = got1[0]
        rest = [v for v in verts if v != w.vertex]
        rest_colors = _colors_in(g, rest)
        if len(rest_colors) != m - 1 or w.color in rest_colors:
            raise LayerColorMismatch(
                f"peeling vertex {w.vertex} removed "
                f"{m - len(rest_colors)} colors instead of 1"
            )
        return PeelTree(PeelLayer(w, (w.vertex,), (w.color,)), _peel(g, rest), ())
    got2 = _match_structure2(g, verts)
    if got2:
        w = got2[0]
        rest = [v for v in verts if v not in w.vertices]
        rest_colors = _colors_in(g, rest)
        if len(rest_colors) != m - 3 or set(w.colors) & rest_colors:
            raise LayerColorMismatch(
                f"peeling triangle {w.vertices} did not remove exactly its 3 colors"
            )
        return PeelTree(PeelLayer(w, w.vertices, w.colors), _peel(g, rest), ())
    got3 = _match_structure3(g, verts)
    if got3:
        w = got3[0]
        rest = tuple(v for v in verts if v != w.center)
        block = MonochromaticBlock(rest, w.outer_color)
        terminal = PeelTree(PeelLayer(block, rest, (w.outer_color,)), None, ())
        return PeelTree(
            PeelLayer(w, (w.center,), tuple(sorted(set(w.palette)))),
            terminal,
            (),
        )
    raise DecompositionFailed(
        f"no structure matched the layer on vertices {tuple(verts)}"
    )


def layered_decompose(g: EdgeColoredGraph) -> PeelTree:
    """Peel structures off a complete graph with exactly n colors.

    Raises ProperlyColoredC4Present when one exists, LayerColorMismatch
    when a layer's color accounting fails, DecompositionFailed when a
    layer matches no structure (a genuine counterexample).  K0 and K1
    yield the empty tree.
    """
    if g.n <= 1:
        return PeelTree(None, None, tuple(range(g.n)))
    if not g.is_complete():
        raise NotComplete("layered decomposition is defined on complete graphs")
    if g.color_count != g.n:
        raise WrongColorCount(
            f"need exactly n = {g.n} colors, got {g.color_count}"
        )
    pc4 = find_pc_c4(g)
    if pc4 is not None:
        raise ProperlyColoredC4Present(pc4)
    return _peel(g, list(range(g.n)))


def replay_peel_tree(tree: PeelTree, n: int) -> EdgeColoredGraph:
    """Rebuild a coloring from a peel tree with layer-fresh colors.

    The output equals the original graph up to renaming colors, so its
    normalized form matches the original's normalized form exactly.
    """
    from .graph import build_graph

    triples: list[tuple[int, int, int]] = []
    next_color = 1

    def fresh() -> int:
        nonlocal next_color
        c = next_color
        next_color += 1
        return c

    node: PeelTree | None = tree
    below_stack: list[tuple[int, ...]] = []
    # vertices below each node = removed of descendants + remaining
    chain: list[PeelTree] = []
    while node is not None:
        chain.append(node)
        node = node.child
    below: tuple[int, ...] = ()
    for nd in reversed(chain):
        if nd.child is None:
            below = tuple(nd.remaining)
        if nd.layer is not None:
            below_stack.append(below)
            below = tuple(nd.layer.removed) + below
    below_stack.reverse()

    for nd, rest in zip([c for c in chain if c.layer is not None], below_stack):
        w = nd.layer.witness
        if isinstance(w, Structure1Witness):
            k = fresh()
            triples.extend((w.vertex, x, k) for x in rest)
        elif isinstance(w, Structure2Witness):
            v1, v2, v3 = w.vertices
            r, b, gcol = fresh(), fresh(), fresh()
            triples.extend([(v1, v2, r), (v2, v3, b), (v3, v1, gcol)])
            for corner, k in zip((v1, v2, v3), (r, b, gcol)):
                triples.extend((corner, x, k) for x in rest)
        elif isinstance(w, Structure3Witness):
            for x in sorted(rest):
                triples.append((w.center, x, fresh()))
        elif isinstance(w, MonochromaticBlock):
            k = fresh()
            triples.extend(
                (x, y, k) for x, y in combinations(sorted(w.vertices), 2)
            )
        else:
            raise DecompositionFailed(f"unknown layer witness {type(w).__name__}")
    return build_graph(n, triples)


def verify_peel_tree(g: EdgeColoredGraph, tree: PeelTree) -> bool:
    """Replay the tree and compare normalized colorings."""
    from .graph import build_graph

    if sorted(peel_vertices(tree)) != list(range(g.n)):
        return False
    ga = build_graph(g.n, [(u, v, c) for (u, v), c in zip(g.edges, g.colors)])
    gb = replay_peel_tree(tree, g.n)
    return ga.edges == gb.edges and ga.colors == gb.colors


def recognize_star_order(g: EdgeColoredGraph) -> tuple[int, ...] | None:
    """Relabeling under which color(v_i, v_j) depends only on min(i, j).

    Greedily extracts, at each step, a vertex whose edges to the rest
    all carry one color that appears nowhere among the rest; the order
    of extraction is the relabeling.  Greedy choice is safe: a valid
    candidate stays valid after any other valid candidate is removed.
    Returns None when g (which must be complete) is not of this form.
    """
    if not g.is_complete():
        raise NotComplete("star-order recognition is defined on complete graphs")
    alive = list(range(g.n))
    order: list[int] = []
    while len(alive) >= 2:
        pick = None
        for v in alive:
            cols = {g.color_of(v, w) for w in alive if w != v}
            if len(cols) != 1:
                continue
            k = next(iter(cols))
            rest = [w for w in alive if w != v]
            if all(
                g.color_of(x, y) != k for x, y in combinations(rest, 2)
            ):
                pick = v
                break
        if pick is None:
            return None
        order.append(pick)
        alive.remove(pick)
    order.extend(alive)
    return tuple(order)


# ------------------------------------------------------------------- gallai


@dataclass(frozen=True)
class GallaiTree:
    """Recursive bipartition with monochromatic fresh-colored cross edges."""

    vertices: tuple[int, ...]
    cross_color: int | None
    part1: "GallaiTree | None"
    part2: "GallaiTree | None"


def _has_rainbow_triangle(g: EdgeColoredGraph) -> bool:
    for a, b, c in combinations(range(g.n), 3):
        cab = g.color_of(a, b)
        cbc = g.color_of(b, c)
        cac = g.color_of(a, c)
        if None in (cab, cbc, cac):
            continue
        if len({cab, cbc, cac}) == 3:
            return True
    return False


def _gallai_split(g: EdgeColoredGraph, verts: tuple[int, ...], cache) -> GallaiTree | None:
    if verts in cache:
        return cache[verts]
    m = len(verts)
    if m == 1:
        t = GallaiTree(verts, None, None, None)
        cache[verts] = t
        return t
    if len(_colors_in(g, verts)) != m - 1:
        cache[verts] = None
        return None
    rest = verts[1:]
    for mask in range(1, 1 << (m - 1)):
        part2 = tuple(rest[i] for i in range(m - 1) if (mask >> i) & 1)
        part1 = (verts[0],) + tuple(
            rest[i] for i in range(m - 1) if not (mask >> i) & 1
        )
        cross = {g.color_of(x, y) for x in part1 for y in part2}
        if len(cross) != 1:
            continue
        t1 = _gallai_split(g, part1, cache)
        if t1 is None:
            continue
        t2 = _gallai_split(g, part2, cache)
        if t2 is None:
            continue
        t = GallaiTree(verts, next(iter(cross)), t1, t2)
        cache[verts] = t
        return t
    cache[verts] = None
    return None


def recognize_gallai_g0(g: EdgeColoredGraph) -> GallaiTree | None:
    """Recognize the tight rainbow-triangle-free complete colorings.

    Returns the bipartition tree, or None when the graph is not of this
    form (wrong color count, a rainbow triangle, or no valid recursive
    split).  Exhaustive over bipartitions; inputs are capped at n = 12.
    """
    if not g.is_complete():
        raise NotComplete("recognition is defined on complete graphs")
    if g.n > 12:
        raise InvalidParameters(
            f"bipartition search is exponential; capped at n = 12, got {g.n}"
        )
    if g.n <= 1:
        return GallaiTree(tuple(range(g.n)), None, None, None)
    if g.color_count != g.n - 1:
        return None
    if _has_rainbow_triangle(g):
        return None
    return _gallai_split(g, tuple(range(g.n)), {})


def verify_gallai_tree(g: EdgeColoredGraph, tree: GallaiTree) -> bool:
    """Re-check partition cover, color counts, and monochromatic crosses."""
    if tuple(sorted(tree.vertices)) != tuple(range(g.n)):
        return False

    def rec(t: GallaiTree) -> bool:
        m = len(t.vertices)
        if m <= 1:
            return t.part1 is None and t.part2 is None
        if t.part1 is None or t.part2 is None:
            return False
        p1, p2 = t.part1.vertices, t.part2.vertices
        if sorted(p1 + p2) != sorted(t.vertices) or not p1 or not p2:
            return False
        if len(_colors_in(g, t.vertices)) != m - 1:
            return False
        cross = {g.color_of(x, y) for x in p1 for y in p2}
        if cross != {t.cross_color}:
            return False
        return rec(t.part1) and rec(t.part2)

    return rec(tree)
