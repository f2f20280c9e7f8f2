"""Threshold graphs: recognition, drawings, and two-colored structure.

A graph is threshold exactly when it contains no induced 2K2, P4, or C4.
Recognition runs the elimination algorithm: repeatedly remove a vertex
dominating the current non-isolated support, else remove newly isolated
vertices; the graph is threshold iff this empties it.  On failure the
stuck induced subgraph has no dominating and no isolated vertex, so it
contains one of the three forbidden subgraphs, which is extracted as a
witness.

A drawing of a threshold graph is the bookkeeping of one elimination
run: the spine (removal order of dominating vertices), the ribs (order
in which the rest became isolated), and the tails (ribs adjacent to the
whole spine).  Structural facts used throughout: the spine is a clique,
every rib's neighborhood is a nonempty prefix of the spine, and rib
order is monotone in prefix length.

The two-colored operations compute, for complete graphs, the partition
V = S1 + S2 + {u} with S_i a spine of color class i and u a shared tail;
and for general two-colored threshold graphs the spine/rib structure
report with its two cases (all class spine vertices inside the spine X,
or one class forced to take a spine vertex inside the rib set Y).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import (
    ClassNotThreshold,
    DecompositionFailed,
    InvalidParameters,
    NotComplete,
    NotThreshold,
    WrongColorCount,
)
from .graph import EdgeColoredGraph, _view, subgraph_view

# ------------------------------------------------------------------ raw rows
#
# The hot paths work on adjacency bitmask rows (rows[v] has bit u set when
# uv is an edge) so exhaustive scans over millions of small graphs stay
# affordable.  Public operations accept EdgeColoredGraph and unwrap.


def eliminate_rows(n: int, rows) -> tuple[bool, int]:
    """Elimination decision on bitmask rows.

    Returns (True, 0) when threshold, else (False, stuck) where stuck is
    the vertex mask of the final support containing no dominating and no
    isolated vertex.  Whole rounds are removed at once; removing any
    dominating or isolated vertex preserves the decision, so bulk
    removal is equivalent to one-at-a-time elimination.
    """
    active = 0
    for v in range(n):
        if rows[v]:
            active |= 1 << v
    while active:
        size = active.bit_count()
        removed = 0
        a = active
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            d = (rows[v] & active).bit_count()
            if d == 0 or d == size - 1:
                removed |= low
        if not removed:
            return False, active
        active &= ~removed
    return True, 0


_FORBIDDEN_BITS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _forbidden_pattern_table() -> dict[int, tuple[str, tuple[int, int, int, int]]]:
    """6-bit edge pattern of a labeled 4-set -> (kind, ordered witness).

    Bit i of the pattern is edge _FORBIDDEN_BITS[i].  Patterns for 2K2,
    P4, and C4 have 2, 3, 4 edges respectively, so kinds never collide.
    """
    idx = {pair: i for i, pair in enumerate(_FORBIDDEN_BITS)}

    def pat(edges):
        p = 0
        for u, v in edges:
            p |= 1 << idx[(min(u, v), max(u, v))]
        return p

    table: dict[int, tuple[str, tuple[int, int, int, int]]] = {}
    for e1, e2 in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))):
        table[pat([e1, e2])] = ("2K2", (e1[0], e1[1], e2[0], e2[1]))
    for order in permutations(range(4)):
        if order[0] > order[3]:
            continue
        p = pat([(order[i], order[i + 1]) for i in range(3)])
        table.setdefault(p, ("P4", order))
    for cyc in ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3)):
        p = pat([(cyc[i], cyc[(i + 1) % 4]) for i in range(4)])
        table[p] = ("C4", cyc)
    return table


_FORBIDDEN_TABLE = _forbidden_pattern_table()


@dataclass(frozen=True)
class ForbiddenSubgraph:
    """Induced 2K2, P4, or C4.

    vertices are ordered by role: 2K2 -> (a, b, c, d) with edges ab, cd;
    P4 -> path order; C4 -> cycle order.
    """

    kind: str
    vertices: tuple[int, int, int, int]


def find_forbidden_induced(n: int, rows, within: int | None = None) -> ForbiddenSubgraph | None:
    """Smallest induced 2K2/P4/C4 among 4-subsets of `within` (a vertex mask)."""
    if within is None:
        within = (1 << n) - 1
    verts = [v for v in range(n) if (within >> v) & 1]
    for quad in combinations(verts, 4):
        p = 0
        for i, (x, y) in enumerate(_FORBIDDEN_BITS):
            if (rows[quad[x]] >> quad[y]) & 1:
                p |= 1 << i
        hit = _FORBIDDEN_TABLE.get(p)
        if hit is not None:
            kind, order = hit
            return ForbiddenSubgraph(kind, tuple(quad[i] for i in order))
    return None


@dataclass(frozen=True)
class ThresholdVerdict:
    is_threshold: bool
    witness: ForbiddenSubgraph | None


def threshold_check(g: EdgeColoredGraph) -> ThresholdVerdict:
    """Elimination-based recognition; colors are ignored.

    On failure the witness is an induced forbidden subgraph found inside
    the stuck support (an induced subgraph of an induced subgraph is
    induced in the input, so the witness is valid for g itself).
    """
    ok, stuck = eliminate_rows(g.n, g.adjacency_rows)
    if ok:
        return ThresholdVerdict(True, None)
    wit = find_forbidden_induced(g.n, g.adjacency_rows, stuck)
    if wit is None:  # cannot happen: a stuck support is not threshold
        raise AssertionError("stuck elimination without forbidden subgraph")
    return ThresholdVerdict(False, wit)


def dominating_vertex(g: EdgeColoredGraph) -> int | None:
    """Smallest vertex adjacent to every other non-isolated vertex."""
    rows = g.adjacency_rows
    support = 0
    for v in range(g.n):
        if rows[v]:
            support |= 1 << v
    if support == 0:
        return None
    size = support.bit_count()
    for v in range(g.n):
        if (support >> v) & 1 and (rows[v] & support).bit_count() == size - 1:
            return v
    return None


# ------------------------------------------------------------------ drawings


@dataclass(frozen=True)
class Drawing:
    """Spine, rib, and tail structure of one elimination run.

    spine and ribs are ordered (removal order and isolation order);
    tails is the set of ribs adjacent to the entire spine; isolated
    lists vertices with no edges at all.
    """

    spine: tuple[int, ...]
    ribs: tuple[int, ...]
    tails: frozenset[int]
    isolated: tuple[int, ...]


def _drawing_from_rows(n: int, rows) -> Drawing:
    active = 0
    isolated = []
    for v in range(n):
        if rows[v]:
            active |= 1 << v
        else:
            isolated.append(v)
    spine: list[int] = []
    ribs: list[int] = []
    rho: dict[int, int] = {}
    while active:
        size = active.bit_count()
        head = -1
        a = active
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            if (rows[v] & active).bit_count() == size - 1:
                head = v
                break
        if head < 0:
            wit = find_forbidden_induced(n, rows, active)
            raise NotThreshold(f"not a threshold graph, induced {wit.kind} at {wit.vertices}")
        spine.append(head)
        active &= ~(1 << head)
        a = active
        newly = []
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            if rows[v] & active == 0:
                newly.append(v)
        for v in newly:  # ascending ids within a simultaneous group
            ribs.append(v)
            rho[v] = len(spine)
            active &= ~(1 << v)
    t = len(spine)
    tails = frozenset(v for v in ribs if rho[v] == t)
    return Drawing(tuple(spine), tuple(ribs), tails, tuple(isolated))


def compute_drawing(g: EdgeColoredGraph) -> Drawing:
    """Drawing of a threshold graph; raises NotThreshold otherwise.

    Deterministic: each spine vertex is the smallest-id vertex of
    maximum degree in the current support; simultaneous ribs are
    appended in ascending id order.
    """
    return _drawing_from_rows(g.n, g.adjacency_rows)


def verify_drawing(g: EdgeColoredGraph, d: Drawing) -> bool:
    """Re-check all Drawing invariants against the graph."""
    rows = g.adjacency_rows
    all_vs = sorted(d.spine) + sorted(d.ribs) + sorted(d.isolated)
    if sorted(all_vs) != list(range(g.n)):
        return False
    if len(set(d.spine)) != len(d.spine) or len(set(d.ribs)) != len(d.ribs):
        return False
    for v in d.isolated:
        if rows[v]:
            return False
    for v in d.spine + d.ribs:
        if not rows[v]:
            return False
    spine_mask = 0
    for v in d.spine:
        spine_mask |= 1 << v
    # spine is a clique
    for x, y in combinations(d.spine, 2):
        if not (rows[x] >> y) & 1:
            return False
    # every rib sees a nonempty spine prefix and nothing else
    prefix_masks = [0]
    for v in d.spine:
        prefix_masks.append(prefix_masks[-1] | (1 << v))
    rho = []
    for v in d.ribs:
        nb = rows[v]
        if nb & ~spine_mask:
            return False
        r = next(
            (i for i in range(1, len(prefix_masks)) if nb == prefix_masks[i]), None
        )
        if r is None:
            return False
        rho.append(r)
    if any(rho[i] > rho[i + 1] for i in range(len(rho) - 1)):
        return False
    # tails are exactly declared and full-prefix
    t = len(d.spine)
    for v in d.tails:
        if v not in d.ribs:
            return False
        if rows[v] != prefix_masks[t]:
            return False
    return True


def _drawing_for_split(n: int, rows, x_set: frozenset) -> Drawing | None:
    """Drawing whose spine set is exactly x_set, or None if there is none.

    A vertex set carries a drawing iff it is a clique, its complement is
    independent, and no spine vertex is edgeless.  Neighborhoods of a
    threshold graph are nested, so ordering the spine by descending
    outside degree makes every rib neighborhood a prefix; the prefix
    check below still runs in case the rows are not threshold.
    """
    x_mask = 0
    for v in x_set:
        x_mask |= 1 << v
    for v in x_set:
        if not rows[v]:
            return None
        if rows[v] & x_mask != x_mask & ~(1 << v):
            return None
    others = [v for v in range(n) if v not in x_set]
    for v in others:
        if rows[v] & ~x_mask:
            return None
    spine = sorted(x_set, key=lambda v: (-(rows[v] & ~x_mask).bit_count(), v))
    prefix = [0]
    for v in spine:
        prefix.append(prefix[-1] | (1 << v))
    ribs_rho = []
    isolated = []
    for v in others:
        nb = rows[v]
        if nb == 0:
            isolated.append(v)
            continue
        k = nb.bit_count()
        if nb != prefix[k]:
            return None
        ribs_rho.append((k, v))
    ribs_rho.sort()
    tails = frozenset(v for k, v in ribs_rho if k == len(spine))
    return Drawing(tuple(spine), tuple(r for _, r in ribs_rho), tails, tuple(isolated))


def induced_subdrawing(
    g: EdgeColoredGraph,
    d: Drawing,
    spine_keep,
    ribs_keep,
) -> tuple[EdgeColoredGraph, Drawing]:
    """Restrict a drawing to kept spine and rib vertices, inherited orders.

    Returns the induced subgraph on the kept vertices together with its
    drawing.  Kept ribs whose prefix becomes empty move to isolated, as
    does a kept spine vertex that loses all neighbors.  The result is
    verified before it is returned.
    """
    sk = set(spine_keep)
    rk = set(ribs_keep)
    if not sk <= set(d.spine) or not rk <= set(d.ribs):
        raise InvalidParameters("kept sets must be subsets of spine and ribs")
    keep = sorted(sk | rk)
    sub = subgraph_view(g, induced=keep)
    rows = sub.adjacency_rows
    new_spine = tuple(v for v in d.spine if v in sk and rows[v])
    new_ribs = tuple(v for v in d.ribs if v in rk and rows[v])
    isolated = tuple(v for v in range(sub.n) if not rows[v])
    t = len(new_spine)
    full = 0
    for v in new_spine:
        full |= 1 << v
    tails = frozenset(v for v in new_ribs if rows[v] == full and t > 0)
    out = Drawing(new_spine, new_ribs, tails, isolated)
    if not verify_drawing(sub, out):
        raise DecompositionFailed("inherited sub-drawing failed verification")
    return sub, out


# ------------------------------------------------- pairwise class structure


@dataclass(frozen=True)
class FailureWitness:
    """A class set of size at most 2 whose union is not threshold."""

    classes: tuple[int, ...]
    forbidden: ForbiddenSubgraph


@dataclass(frozen=True)
class Certificate:
    """Drawings for every single color class and every pair union."""

    drawings: dict[tuple[int, ...], Drawing]


def _class_rows(g: EdgeColoredGraph) -> dict[int, list[int]]:
    by_color: dict[int, list[int]] = {c: [0] * g.n for c in g.color_set}
    for (u, v), c in zip(g.edges, g.colors):
        by_color[c][u] |= 1 << v
        by_color[c][v] |= 1 << u
    return by_color


def pairwise_threshold_certificate(
    g: EdgeColoredGraph,
) -> Certificate | FailureWitness:
    """Check every single class and pair union for thresholdness.

    The input must be complete.  Class sets are scanned singles first
    then pairs, each in ascending color order, so a failure reports the
    smallest failing class set.  On success the certificate carries a
    drawing per class set.
    """
    if not g.is_complete():
        raise NotComplete("pairwise threshold certificate needs a complete graph")
    rows_by_color = _class_rows(g)
    colors = sorted(rows_by_color)
    for c in colors:
        ok, stuck = eliminate_rows(g.n, rows_by_color[c])
        if not ok:
            wit = find_forbidden_induced(g.n, rows_by_color[c], stuck)
            return FailureWitness((c,), wit)
    for ci, cj in combinations(colors, 2):
        union = [a | b for a, b in zip(rows_by_color[ci], rows_by_color[cj])]
        ok, stuck = eliminate_rows(g.n, union)
        if not ok:
            wit = find_forbidden_induced(g.n, union, stuck)
            return FailureWitness((ci, cj), wit)
    drawings: dict[tuple[int, ...], Drawing] = {}
    for c in colors:
        drawings[(c,)] = _drawing_from_rows(g.n, rows_by_color[c])
    for ci, cj in combinations(colors, 2):
        union = [a | b for a, b in zip(rows_by_color[ci], rows_by_color[cj])]
        drawings[(ci, cj)] = _drawing_from_rows(g.n, union)
    return Certificate(drawings)


# ------------------------------------------------- two-colored complete case


@dataclass(frozen=True)
class SharedTailPartition:
    """V = s1 + s2 + {u}: ordered class spines plus a shared tail."""

    s1: tuple[int, ...]
    s2: tuple[int, ...]
    u: int


def _spine_sequence_valid(n: int, rows, seq, exact_set: set[int] | None = None) -> bool:
    """Replay seq as a spine: every entry dominates the current support,
    newly isolated vertices drop out, and nothing is left at the end.
    With exact_set, every member must actually serve as a spine vertex."""
    active = 0
    for v in range(n):
        if rows[v]:
            active |= 1 << v
    used = []
    for v in seq:
        if not (active >> v) & 1:
            return False
        size = active.bit_count()
        if (rows[v] & active).bit_count() != size - 1:
            return False
        used.append(v)
        active &= ~(1 << v)
        a = active
        while a:
            low = a & -a
            a ^= low
            w = low.bit_length() - 1
            if rows[w] & active == 0:
                active &= ~low
    if active:
        return False
    if exact_set is not None and set(used) != exact_set:
        return False
    return True


def spine_order_for_set(n: int, rows, vertex_set) -> tuple[int, ...] | None:
    """An ordering of vertex_set that forms a spine, or None.

    Greedy: at each step remove the smallest member that dominates the
    current support.  If any ordering of the set works, a greedy one
    does, because removing one dominating vertex keeps every other
    eventual spine vertex viable.
    """
    want = set(vertex_set)
    active = 0
    for v in range(n):
        if rows[v]:
            active |= 1 << v
    order: list[int] = []
    while active:
        size = active.bit_count()
        pick = -1
        for v in sorted(want):
            if (active >> v) & 1 and (rows[v] & active).bit_count() == size - 1:
                pick = v
                break
        if pick < 0:
            return None
        want.discard(pick)
        order.append(pick)
        active &= ~(1 << pick)
        a = active
        while a:
            low = a & -a
            a ^= low
            w = low.bit_length() - 1
            if rows[w] & active == 0:
                active &= ~low
    if want:
        return None
    return tuple(order)


def _two_class_rows(g: EdgeColoredGraph) -> tuple[int, int, list[int], list[int]]:
    if g.color_count != 2:
        raise WrongColorCount(f"need exactly 2 colors, got {g.color_count}")
    c1, c2 = sorted(g.color_set)
    rows = _class_rows(g)
    return c1, c2, rows[c1], rows[c2]


def two_colored_kn_drawing(g: EdgeColoredGraph) -> SharedTailPartition:
    """Partition a 2-colored complete graph as V = S1 + S2 + {u}.

    S_i is an ordered spine of color class i and u is a tail of both.
    Construction: draw class 1; u is the last rib (a tail of S1); S2 is
    the class-1 isolated vertices followed by the remaining ribs in rib
    order.  The output is verified before it is returned.
    """
    if not g.is_complete():
        raise NotComplete("shared-tail partition needs a complete graph")
    c1, c2, rows1, rows2 = _two_class_rows(g)
    for c, rows in ((c1, rows1), (c2, rows2)):
        ok, stuck = eliminate_rows(g.n, rows)
        if not ok:
            raise ClassNotThreshold(c, find_forbidden_induced(g.n, rows, stuck))
    d1 = _drawing_from_rows(g.n, rows1)
    if not d1.ribs:
        raise DecompositionFailed("class 1 drawing has no ribs")
    u = d1.ribs[-1]
    s1 = d1.spine
    s2 = tuple(sorted(d1.isolated)) + tuple(v for v in d1.ribs if v != u)
    # verify: u is a tail of both spines and each S_i is a spine of class i
    if u not in d1.tails:
        raise DecompositionFailed("u is not a tail of class 1")
    if not _spine_sequence_valid(g.n, rows1, s1, set(s1)):
        raise DecompositionFailed("S1 is not a spine of class 1")
    if not _spine_sequence_valid(g.n, rows2, s2, set(s2)):
        raise DecompositionFailed("S2 is not a spine of class 2")
    for v in s1:
        if not (rows1[u] >> v) & 1:
            raise DecompositionFailed("u is not adjacent to all of S1 in class 1")
    for v in s2:
        if not (rows2[u] >> v) & 1:
            raise DecompositionFailed("u is not adjacent to all of S2 in class 2")
    if set(s1) | set(s2) | {u} != set(range(g.n)) or len(s1) + len(s2) + 1 != g.n:
        raise DecompositionFailed("partition does not cover the vertex set")
    return SharedTailPartition(s1, s2, u)


# ------------------------------------------- two-colored threshold structure


@dataclass(frozen=True)
class SpineSplitReport:
    """Structure of a 2-colored threshold graph over a drawing (X, Y).

    case 1: X partitions as v1 + v2 + {u}; v_i (with u appended when
    uses_u[i-1]) is a spine of class i, and every member of v_i sends
    only color i into Y.  degenerate_star marks |X| <= 1.  case 2: some
    class is forced to take a spine vertex inside Y (w1 and/or w2); the
    report of the graph minus those vertices is attached as inner.

    spine/ribs/isolated record the drawing the cases refer to.  That
    drawing is not always the canonical one: when the canonical spine
    admits no partition the search moves to the other drawings of the
    same graph, so verification accepts any valid drawing.
    """

    case: int
    degenerate_star: bool
    spine: tuple[int, ...]
    ribs: tuple[int, ...]
    isolated: tuple[int, ...]
    v1: tuple[int, ...]
    v2: tuple[int, ...]
    u: int | None
    uses_u: tuple[bool, bool]
    # replay witnesses: the exact elimination orders for each class spine
    # (u may sit anywhere inside them, not necessarily last)
    order1: tuple[int, ...]
    order2: tuple[int, ...]
    w1: int | None
    w2: int | None
    inner: "SpineSplitReport | None"


def _forced_rib_spine_vertex(n: int, class_rows, y_set: set[int]) -> int | None:
    """The class's unique spine vertex inside Y, or None when a spine
    avoiding Y exists.  Greedy elimination preferring non-Y dominating
    vertices is complete: if an all-X spine exists, it finds one."""
    active = 0
    for v in range(n):
        if class_rows[v]:
            active |= 1 << v
    forced = None
    while active:
        size = active.bit_count()
        pick = -1
        fallback = -1
        a = active
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            if (class_rows[v] & active).bit_count() == size - 1:
                if v not in y_set:
                    pick = v
                    break
                if fallback < 0:
                    fallback = v
        if pick < 0:
            if fallback < 0:
                raise DecompositionFailed("class stopped being threshold mid-run")
            if forced is not None:
                raise DecompositionFailed(
                    "two spine vertices forced into the rib set of one class"
                )
            forced = fallback
            pick = fallback
        active &= ~(1 << pick)
        a = active
        while a:
            low = a & -a
            a ^= low
            w = low.bit_length() - 1
            if class_rows[w] & active == 0:
                active &= ~low
    return forced


def _case1_partition(
    g: EdgeColoredGraph,
    x: tuple[int, ...],
    y: tuple[int, ...],
    rows1,
    rows2,
    c1: int,
    c2: int,
):
    """Search X = v1 + v2 + {u} satisfying the case-1 conditions.

    Candidates derived from the shared-tail partition of g[X] are tried
    first; an exhaustive scan over (u, bipartition) follows.  Search
    order is deterministic, so the first hit is canonical.
    """
    n = g.n
    y_colors: dict[int, set[int]] = {v: set() for v in x}
    y_set = set(y)
    for v in x:
        for w, c in g.neighbors(v).items():
            if w in y_set:
                y_colors[v].add(c)

    def try_parts(u: int, part1, part2):
        for v in part1:
            if not y_colors[v] <= {c1}:
                return None
        for v in part2:
            if not y_colors[v] <= {c2}:
                return None
        got1 = spine_order_for_set(n, rows1, set(part1))
        use1 = False
        if got1 is None:
            got1 = spine_order_for_set(n, rows1, set(part1) | {u})
            use1 = True
        if got1 is None:
            return None
        got2 = spine_order_for_set(n, rows2, set(part2))
        use2 = False
        if got2 is None:
            got2 = spine_order_for_set(n, rows2, set(part2) | {u})
            use2 = True
        if got2 is None:
            return None
        v1 = tuple(v for v in got1 if v != u) if use1 else got1
        v2 = tuple(v for v in got2 if v != u) if use2 else got2
        return v1, v2, u, (use1, use2), got1, got2

    # derived candidate: the shared-tail partition of g restricted to X.
    # Views keep vertex ids (non-X vertices turn isolated), so the probe
    # relabels X onto 0..|X|-1 to obtain an honestly complete graph.
    candidates = []
    xs = sorted(x)
    back = dict(enumerate(xs))
    fwd = {v: i for i, v in back.items()}
    triples = [
        (fwd[u2], fwd[v2], c)
        for (u2, v2), c in zip(g.edges, g.colors)
        if u2 in fwd and v2 in fwd
    ]
    gx = _view(len(xs), triples)
    if len(xs) >= 2 and gx.color_count == 2 and gx.is_complete():
        try:
            shared = two_colored_kn_drawing(gx)
        except (ClassNotThreshold, DecompositionFailed):
            shared = None
        if shared is not None:
            lo = sorted(gx.color_set)[0]
            s1, s2 = (shared.s1, shared.s2) if lo == c1 else (shared.s2, shared.s1)
            candidates.append(
                (back[shared.u], {back[v] for v in s1}, {back[v] for v in s2})
            )
    for u, p1, p2 in candidates:
        got = try_parts(u, p1, p2)
        if got is not None:
            return got
    free_cap = 18
    if len(x) - 1 > free_cap:
        raise InvalidParameters(
            f"case-1 partition search capped at spine size {free_cap + 1}"
        )
    for u in x:
        rest = [v for v in x if v != u]
        for mask in range(1 << len(rest)):
            p1 = {rest[i] for i in range(len(rest)) if (mask >> i) & 1}
            p2 = set(rest) - p1
            got = try_parts(u, p1, p2)
            if got is not None:
                return got
    return None


def decompose_two_colored_threshold(g: EdgeColoredGraph) -> SpineSplitReport:
    """Structure report for a 2-colored threshold graph.

    Preconditions: exactly two colors, the underlying graph threshold,
    and both color classes threshold.  The report follows the drawing
    (X, Y) of the underlying graph; see SpineSplitReport.
    """
    c1, c2, rows1, rows2 = _two_class_rows(g)
    verdict = threshold_check(g)
    if not verdict.is_threshold:
        raise NotThreshold(
            f"underlying graph has induced {verdict.witness.kind}"
            f" at {verdict.witness.vertices}"
        )
    for c, rows in ((c1, rows1), (c2, rows2)):
        ok, stuck = eliminate_rows(g.n, rows)
        if not ok:
            raise ClassNotThreshold(c, find_forbidden_induced(g.n, rows, stuck))
    return _decompose_cases(g, c1, c2, rows1, rows2, allow_case2=True)


def _candidate_drawings(g: EdgeColoredGraph):
    """All drawings of g, canonical first.

    A drawing is a partition into a spine clique and an independent rest,
    and two such splits differ by at most one vertex each way (two
    vertices leaving a clique would stay adjacent inside the independent
    side).  Perturbing the canonical spine therefore enumerates every
    drawing, in deterministic order.
    """
    d0 = compute_drawing(g)
    yield d0
    rows = g.adjacency_rows
    x0 = frozenset(d0.spine)
    outside = [v for v in range(g.n) if v not in x0]
    seen = {x0}
    variants = [x0 | {v} for v in outside]
    variants += [x0 - {v} for v in sorted(x0)]
    variants += [x0 - {w} | {v} for v in outside for w in sorted(x0)]
    for xs in variants:
        if xs in seen:
            continue
        seen.add(xs)
        d = _drawing_for_split(g.n, rows, xs)
        if d is not None:
            yield d


def _case1_attempt(
    g: EdgeColoredGraph, d: Drawing, c1, c2, rows1, rows2
) -> SpineSplitReport | None:
    x, y = d.spine, d.ribs
    if len(x) <= 1:
        u = x[0] if x else None
        orders = []
        for rows in (rows1, rows2):
            if any(rows[v] for v in range(g.n)):
                if u is None or not _spine_sequence_valid(g.n, rows, (u,), {u}):
                    return None
                orders.append((u,))
            else:
                orders.append(())
        return SpineSplitReport(
            case=1,
            degenerate_star=True,
            spine=x,
            ribs=y,
            isolated=d.isolated,
            v1=(),
            v2=(),
            u=u,
            uses_u=(bool(orders[0]), bool(orders[1])),
            order1=orders[0],
            order2=orders[1],
            w1=None,
            w2=None,
            inner=None,
        )
    found = _case1_partition(g, x, y, rows1, rows2, c1, c2)
    if found is None:
        return None
    v1, v2, u, uses_u, order1, order2 = found
    return SpineSplitReport(
        case=1,
        degenerate_star=False,
        spine=x,
        ribs=y,
        isolated=d.isolated,
        v1=v1,
        v2=v2,
        u=u,
        uses_u=uses_u,
        order1=order1,
        order2=order2,
        w1=None,
        w2=None,
        inner=None,
    )


def _decompose_cases(
    g: EdgeColoredGraph, c1, c2, rows1, rows2, allow_case2: bool
) -> SpineSplitReport:
    if allow_case2:
        d = compute_drawing(g)
        y_set = set(d.ribs)
        w1 = _forced_rib_spine_vertex(g.n, rows1, y_set)
        w2 = _forced_rib_spine_vertex(g.n, rows2, y_set)
        if w1 is not None or w2 is not None:
            removed = {w for w in (w1, w2) if w is not None}
            keep = [v for v in range(g.n) if v not in removed]
            sub = subgraph_view(g, induced=keep)
            sub_rows = _class_rows(sub)
            inner = _decompose_cases(
                sub,
                c1,
                c2,
                sub_rows.get(c1, [0] * sub.n),
                sub_rows.get(c2, [0] * sub.n),
                allow_case2=False,
            )
            return SpineSplitReport(
                case=2,
                degenerate_star=False,
                spine=d.spine,
                ribs=d.ribs,
                isolated=d.isolated,
                v1=(),
                v2=(),
                u=None,
                uses_u=(False, False),
                order1=(),
                order2=(),
                w1=w1,
                w2=w2,
                inner=inner,
            )
    # the drawing is not unique and the partition may exist over only
    # some of them, so every candidate gets a try (canonical first)
    for d in _candidate_drawings(g):
        rep = _case1_attempt(g, d, c1, c2, rows1, rows2)
        if rep is not None:
            return rep
    raise DecompositionFailed("no drawing admits a case-1 partition of the spine")


def verify_spine_split(g: EdgeColoredGraph, rep: SpineSplitReport) -> bool:
    """Re-check a SpineSplitReport against its graph."""
    if g.color_count != 2:
        return False
    c1, c2 = sorted(g.color_set)
    return _verify_split(g, rep, c1, c2)


def _verify_split(g: EdgeColoredGraph, rep: SpineSplitReport, c1: int, c2: int) -> bool:
    # an inner graph may have lost one class entirely
    rows = _class_rows(g)
    rows1 = rows.get(c1, [0] * g.n)
    rows2 = rows.get(c2, [0] * g.n)
    # the reported drawing need not be the canonical one, only a valid one;
    # tails are not carried in the report, so they are rebuilt from the rows
    adj = g.adjacency_rows
    full = 0
    for v in rep.spine:
        full |= 1 << v
    tails = frozenset(
        v for v in rep.ribs if rep.spine and adj[v] == full
    )
    d = Drawing(rep.spine, rep.ribs, tails, tuple(rep.isolated))
    if not verify_drawing(g, d):
        return False
    if rep.case == 2:
        removed = {w for w in (rep.w1, rep.w2) if w is not None}
        if not removed or not removed <= set(rep.ribs):
            return False
        keep = [v for v in range(g.n) if v not in removed]
        sub = subgraph_view(g, induced=keep)
        return rep.inner is not None and _verify_split(sub, rep.inner, c1, c2)
    if rep.degenerate_star:
        if len(rep.spine) > 1 or rep.v1 or rep.v2:
            return False
        if rep.spine and rep.u != rep.spine[0]:
            return False
        u = rep.u
        for cls in (rows1, rows2):
            if any(cls):
                if u is None or not _spine_sequence_valid(g.n, cls, (u,), {u}):
                    return False
        return True
    if rep.u is None:
        return False
    parts = set(rep.v1) | set(rep.v2) | {rep.u}
    if parts != set(rep.spine) or len(rep.v1) + len(rep.v2) + 1 != len(rep.spine):
        return False
    y_set = set(rep.ribs)
    for members, want in ((rep.v1, c1), (rep.v2, c2)):
        for vv in members:
            for w, c in g.neighbors(vv).items():
                if w in y_set and c != want:
                    return False
    # the recorded orders must replay exactly over the declared sets;
    # an empty class with an empty order passes trivially
    want1 = set(rep.v1) | ({rep.u} if rep.uses_u[0] else set())
    want2 = set(rep.v2) | ({rep.u} if rep.uses_u[1] else set())
    if not _spine_sequence_valid(g.n, rows1, rep.order1, want1):
        return False
    if not _spine_sequence_valid(g.n, rows2, rep.order2, want2):
        return False
    return True
