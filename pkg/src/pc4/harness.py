"""Exhaustive and sampled verification of the package's statements.

Statement checks run over one of three hypothesis spaces:

  complete:      all surjective k-colorings of K_n's edges, with k
                 ranging per statement;
  all-graphs:    every edge subset of K_n crossed with its surjective
                 colorings, pruned per statement;
  random-sample: seeded generator draws for sizes beyond exhaustion.

Colorings are enumerated as restricted growth strings over the
canonical edge order, so each surjective coloring appears exactly once
and the arrays arrive already color-normalized.  Exact case counts come
from Stirling numbers; a run whose predicted count exceeds the budget
(PC4_BUDGET, default 2,000,000) raises Infeasible instead of starting.

Counterexamples found by the fast array predicates are re-verified
through the public object API before they are reported; a disagreement
is an internal error and raises.  Weakened modes lower a statement's
threshold by one step; their counterexamples are the expected extremal
colorings and the report's extra fields record whether all of them
match the known tight families.

Parallel runs shard the space by restricted-growth-string prefix.  The
shard list, its order, and the per-shard results are independent of the
job count, so reports are byte-identical for any --jobs value.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from multiprocessing import Pool
from time import perf_counter

from .bounds import saturation_identity_check, starforest_identity_check
from .classify import (
    PC4Found,
    Structure1Witness,
    Structure2Witness,
    Structure3Witness,
    Unclassified,
    classify_structure,
    layered_decompose,
    recognize_gallai_g0,
    recognize_star_order,
    verify_peel_tree,
    verify_structure,
    _has_rainbow_triangle,
)
from .detect import find_pc_c4
from .errors import Infeasible, InvalidParameters, InvalidTheoremId, NotApplicable
from .generate import GenSpec, generate
from .graph import build_graph, color_classes, graph_stats, subgraph_view
from .threshold import Certificate, dominating_vertex, eliminate_rows, pairwise_threshold_certificate
from .bounds import color_degree_preserving_reduction

THEOREM_IDS = (
    "t1",
    "t2",
    "t4",
    "t5",
    "t6",
    "t7",
    "t10",
    "t11",
    "cor1",
    "l1",
    "l3",
    "t13-equiv",
    "t8-identity",
)

_WEAKENABLE = {"t1", "t2", "t4", "t6", "t7", "t10", "cor1"}

DEFAULT_BUDGET = 2_000_000
_PREFIX_LEN = 3


# ------------------------------------------------------------- combinatorics


@lru_cache(maxsize=None)
def stirling2(m: int, k: int) -> int:
    """Surjective colorings of m labeled edges with k unlabeled colors."""
    if m == 0 and k == 0:
        return 1
    if m == 0 or k <= 0 or k > m:
        return 0
    return k * stirling2(m - 1, k) + stirling2(m - 1, k - 1)


def _rgs_prefixes(m: int, k: int, length: int) -> list[tuple[int, ...]]:
    """All restricted growth prefixes of the given length that can still
    reach exactly k classes over m positions."""
    if m == 0:
        return [()] if k == 0 else []
    length = min(length, m)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], mx: int) -> None:
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        i = len(prefix)
        for v in range(min(mx + 1, k - 1) + 1):
            nmx = max(mx, v)
            if k - 1 - nmx <= m - i - 1:
                prefix.append(v)
                rec(prefix, nmx)
                prefix.pop()

    rec([], -1)
    return out


def _rgs_complete(m: int, k: int, prefix: tuple[int, ...]):
    """Yield full restricted growth strings with exactly k classes that
    extend the prefix."""
    if m == 0:
        if k == 0:
            yield ()
        return
    arr = list(prefix) + [0] * (m - len(prefix))
    mx = max(prefix) if prefix else -1
    start = len(prefix)
    if start == m:
        if mx + 1 == k:
            yield tuple(arr)
        return

    def rec(i: int, mx: int):
        if i == m:
            if mx + 1 == k:
                yield tuple(arr)
            return
        for v in range(min(mx + 1, k - 1) + 1):
            nmx = max(mx, v)
            if k - 1 - nmx <= m - i - 1:
                arr[i] = v
                yield from rec(i + 1, nmx)

    yield from rec(start, mx)


# ------------------------------------------------------------- unit context


class _Ctx:
    """Per edge-subset tables for the fast array predicates."""

    __slots__ = (
        "n",
        "m",
        "pairs",
        "quads",
        "tris",
        "inc",
        "inc_pairs",
        "complete",
        "degrees",
    )

    def __init__(self, n: int, mask: int):
        allpairs = list(combinations(range(n), 2))
        pairs = [allpairs[i] for i in range(len(allpairs)) if (mask >> i) & 1]
        pidx = {p: i for i, p in enumerate(pairs)}
        self.n = n
        self.m = len(pairs)
        self.pairs = tuple(pairs)
        self.complete = len(pairs) == len(allpairs)
        quads = []
        for a, b, c, d in combinations(range(n), 4):
            for cyc in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
                idx = []
                ok = True
                for i in range(4):
                    x, y = cyc[i], cyc[(i + 1) % 4]
                    e = pidx.get((min(x, y), max(x, y)))
                    if e is None:
                        ok = False
                        break
                    idx.append(e)
                if ok:
                    quads.append(tuple(idx))
        self.quads = tuple(quads)
        tris = []
        for a, b, c in combinations(range(n), 3):
            i1 = pidx.get((a, b))
            i2 = pidx.get((b, c))
            i3 = pidx.get((a, c))
            if None not in (i1, i2, i3):
                tris.append((i1, i2, i3))
        self.tris = tuple(tris)
        inc: list[list[int]] = [[] for _ in range(n)]
        inc_pairs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            inc[u].append(i)
            inc[v].append(i)
            inc_pairs[u].append((i, v))
            inc_pairs[v].append((i, u))
        self.inc = tuple(tuple(x) for x in inc)
        self.inc_pairs = tuple(tuple(x) for x in inc_pairs)
        degs = [len(x) for x in inc]
        self.degrees = tuple(degs)


@lru_cache(maxsize=4096)
def _ctx(n: int, mask: int) -> _Ctx:
    return _Ctx(n, mask)


def _has_pc_c4_arr(arr, quads) -> bool:
    for e1, e2, e3, e4 in quads:
        c1, c2, c3, c4 = arr[e1], arr[e2], arr[e3], arr[e4]
        if c1 != c2 and c2 != c3 and c3 != c4 and c4 != c1:
            return True
    return False


def _has_rainbow_tri_arr(arr, tris) -> bool:
    for i, j, k in tris:
        if arr[i] != arr[j] and arr[j] != arr[k] and arr[i] != arr[k]:
            return True
    return False


def _sum_dc_arr(ctx: _Ctx, arr) -> int:
    return sum(len({arr[i] for i in ids}) for ids in ctx.inc)


def _min_dc_arr(ctx: _Ctx, arr) -> int:
    return min((len({arr[i] for i in ids}) for ids in ctx.inc), default=0)


def _class_rows_arr(ctx: _Ctx, arr) -> dict[int, list[int]]:
    rows: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(ctx.pairs):
        r = rows.setdefault(arr[i], [0] * ctx.n)
        r[u] |= 1 << v
        r[v] |= 1 << u
    return rows


def _class_has_dominating(n: int, row: list[int]) -> bool:
    support = 0
    for v in range(n):
        if row[v]:
            support |= 1 << v
    size = support.bit_count()
    for v in range(n):
        if (support >> v) & 1 and (row[v] & support).bit_count() == size - 1:
            return True
    return False


def _star_order_ok_arr(ctx: _Ctx, arr) -> bool:
    if not ctx.complete:
        return False
    alive = set(range(ctx.n))
    while len(alive) >= 2:
        pick = None
        for v in sorted(alive):
            cols = {arr[i] for i, o in ctx.inc_pairs[v] if o in alive}
            if len(cols) != 1:
                continue
            k = next(iter(cols))
            rest_ok = True
            for i, (x, y) in enumerate(ctx.pairs):
                if x in alive and y in alive and x != v and y != v and arr[i] == k:
                    rest_ok = False
                    break
            if rest_ok:
                pick = v
                break
        if pick is None:
            return False
        alive.discard(pick)
    return True


def _certificate_ok_arr(ctx: _Ctx, arr) -> bool:
    """Fast verdict of the pairwise thresholdness certificate."""
    rows = _class_rows_arr(ctx, arr)
    colors = sorted(rows)
    for c in colors:
        if not eliminate_rows(ctx.n, rows[c])[0]:
            return False
    for ci, cj in combinations(colors, 2):
        union = [a | b for a, b in zip(rows[ci], rows[cj])]
        if not eliminate_rows(ctx.n, union)[0]:
            return False
    return True


def _rgs_normalize(arr) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    out = []
    for v in arr:
        if v not in seen:
            seen[v] = len(seen)
        out.append(seen[v])
    return tuple(out)


@lru_cache(maxsize=64)
def _perm_maps(n: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, the induced permutation of pair indices."""
    allpairs = list(combinations(range(n), 2))
    pidx = {p: i for i, p in enumerate(allpairs)}
    maps = []
    for perm in permutations(range(n)):
        maps.append(
            tuple(
                pidx[(min(perm[u], perm[v]), max(perm[u], perm[v]))]
                for u, v in allpairs
            )
        )
    return tuple(maps)


def _is_vertex_canonical(n: int, arr) -> bool:
    """True when arr is the lexicographic minimum over vertex relabelings
    (complete graphs only)."""
    for pm in _perm_maps(n):
        permuted = _rgs_normalize(arr[pm[i]] for i in range(len(arr)))
        if permuted < tuple(arr):
            return False
    return True


# ----------------------------------------------------------- theorem tables


def _t_target(n: int) -> int:
    return n * (n + 1) // 2


def _cor1_floor(n: int) -> int:
    # smallest integer at least (n + 1) / 2
    return (n + 2) // 2


def _k_range(theorem: str, n: int, m: int, mode: str) -> list[int]:
    """Color counts enumerated for a unit with m edges."""
    t = _t_target(n)
    if theorem == "t1":
        lo, hi = (n, m) if mode == "default" else (n - 1, n - 1)
    elif theorem == "t4":
        lo, hi = (n + 1, m) if mode == "default" else (n, n)
    elif theorem == "t5":
        lo, hi = n, n
    elif theorem == "t2":
        lo, hi = (t - m, m) if mode == "default" else (t - 1 - m, t - 1 - m)
    elif theorem == "t6":
        lo, hi = (t + 1 - m, m) if mode == "default" else (t - m, t - m)
    elif theorem in ("t7", "t10", "cor1"):
        lo, hi = 1, m
    elif theorem == "t11":
        lo, hi = 1, m
    elif theorem in ("l1", "l3", "t13-equiv"):
        lo, hi = (0, m) if theorem == "l3" else (1, m)
    else:
        raise InvalidTheoremId(theorem)
    lo = max(lo, 1 if m > 0 else 0)
    hi = min(hi, m)
    if m == 0:
        return [0] if lo <= 0 <= hi else []
    return list(range(lo, hi + 1)) if lo <= hi else []


def _mask_ok(theorem: str, n: int, mode: str, degrees, m: int) -> bool:
    t = _t_target(n)
    if theorem in ("t7", "t10"):
        # sum of color degrees is at most the degree sum 2m
        if theorem == "t7":
            need = t + 1 if mode == "default" else t
        else:
            need = t if mode == "default" else t - 1
        return 2 * m >= need
    if theorem == "t11":
        return 2 * m >= t - 1
    if theorem == "cor1":
        q = _cor1_floor(n) if mode == "default" else _cor1_floor(n) - 1
        return all(d >= q for d in degrees) if n > 0 else True
    return True


def _spaces(theorem: str) -> str:
    if theorem in ("t1", "t4", "t5", "l1"):
        return "complete"
    if theorem in ("t2", "t6", "t7", "t10", "t11", "cor1", "l3"):
        return "all-graphs"
    return "random-sample"  # t13-equiv below n = 6 overrides to complete


# ------------------------------------------------------------- evaluators
#
# Each per-coloring evaluator returns None (statement satisfied) or a
# (reason, detail) pair; hypothesis filters return False to skip the
# coloring without counting it as a case.


def _hyp(theorem: str, ctx: _Ctx, n: int, mode: str, k: int, arr) -> bool:
    t = _t_target(n)
    if theorem == "t7":
        s = _sum_dc_arr(ctx, arr)
        return s >= t + 1 if mode == "default" else s == t
    if theorem == "t10":
        s = _sum_dc_arr(ctx, arr)
        return s >= t if mode == "default" else s == t - 1
    if theorem == "t11":
        return _sum_dc_arr(ctx, arr) == t - 1 and not _has_rainbow_tri_arr(
            arr, ctx.tris
        )
    if theorem == "cor1":
        q = _cor1_floor(n)
        md = _min_dc_arr(ctx, arr)
        return md >= q if mode == "default" else md == q - 1
    if theorem == "l1":
        return not _has_pc_c4_arr(arr, ctx.quads)
    return True


def _violation(theorem: str, ctx: _Ctx, n: int, mode: str, k: int, arr, counters):
    if theorem in ("t4", "t6", "t7", "cor1"):
        if not _has_pc_c4_arr(arr, ctx.quads):
            return ("no-properly-colored-c4", f"colors={k}")
        return None
    if theorem in ("t1", "t2", "t10"):
        if not _has_rainbow_tri_arr(arr, ctx.tris):
            return ("no-rainbow-triangle", f"colors={k}")
        return None
    if theorem == "t5":
        if _has_pc_c4_arr(arr, ctx.quads):
            return None
        counters["pc4_free"] = counters.get("pc4_free", 0) + 1
        g = build_graph(
            n, [(u, v, c + 1) for (u, v), c in zip(ctx.pairs, arr)]
        )
        r = classify_structure(g)
        if isinstance(
            r, (Structure1Witness, Structure2Witness, Structure3Witness)
        ) and verify_structure(g, r):
            key = type(r).__name__.removesuffix("Witness").lower()
            counters[key] = counters.get(key, 0) + 1
            return None
        return ("unclassified", type(r).__name__)
    if theorem == "t11":
        if _star_order_ok_arr(ctx, arr):
            counters["recognized"] = counters.get("recognized", 0) + 1
            return None
        return ("not-star-order", "complete" if ctx.complete else "incomplete")
    if theorem == "l1":
        rows = _class_rows_arr(ctx, arr)
        for c in sorted(rows):
            if not _class_has_dominating(ctx.n, rows[c]):
                return ("class-without-dominating", f"class={c + 1}")
        return None
    if theorem == "l3":
        g = build_graph(
            n, [(u, v, c + 1) for (u, v), c in zip(ctx.pairs, arr)]
        )
        rep = saturation_identity_check(g)
        if not rep.bound_holds:
            return ("saturation-bound", f"sum={rep.sum_saturated}>{rep.twice_colors}")
        if not rep.equivalence_holds:
            return ("equality-rainbow-mismatch", f"sum={rep.sum_saturated}")
        if not rep.cross_check_holds:
            return ("contribution-cross-check", "")
        return None
    if theorem == "t13-equiv":
        free = not _has_pc_c4_arr(arr, ctx.quads)
        cert = _certificate_ok_arr(ctx, arr)
        if free != cert:
            return (
                "equivalence-violated",
                f"pc4_free={free} certificate={cert}",
            )
        if free:
            counters["pc4_free"] = counters.get("pc4_free", 0) + 1
            rows = _class_rows_arr(ctx, arr)
            for c in sorted(rows):
                if not _class_has_dominating(ctx.n, rows[c]):
                    return ("class-without-dominating", f"class={c + 1}")
        return None
    raise InvalidTheoremId(theorem)


# --------------------------------------------------------------- unit runs


def _run_unit(task) -> dict:
    theorem, n, mode, mask, k, prefix, vertex_pruning = task
    ctx = _ctx(n, mask)
    enumerated = 0
    cases = 0
    counters: dict[str, int] = {}
    cex: list[tuple] = []
    for arr in _rgs_complete(ctx.m, k, prefix):
        enumerated += 1
        if vertex_pruning and ctx.complete and not _is_vertex_canonical(n, arr):
            continue
        if not _hyp(theorem, ctx, n, mode, k, arr):
            continue
        cases += 1
        v = _violation(theorem, ctx, n, mode, k, arr, counters)
        if v is not None:
            reason, detail = v
            colors = tuple(c + 1 for c in arr)
            cex.append((mask, colors, reason, detail))
    return {
        "enumerated": enumerated,
        "cases": cases,
        "counters": counters,
        "cex": cex,
    }


# ----------------------------------------------------------------- reports


@dataclass(frozen=True)
class Counterexample:
    n: int
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]
    reason: str
    detail: str


@dataclass
class TheoremReport:
    theorem: str
    n: int
    mode: str
    space: str
    cases: int
    enumerated: int
    holds: bool
    counterexamples: list[Counterexample]
    extra: dict[str, object] = field(default_factory=dict)
    wall_time: float = 0.0
    jobs: int = 1

    def stable_lines(self) -> list[str]:
        """Deterministic report body: independent of timing and job count."""
        lines = [
            f"report.theorem={self.theorem}",
            f"report.n={self.n}",
            f"report.mode={self.mode}",
            f"report.space={self.space}",
            f"report.cases={self.cases}",
            f"report.enumerated={self.enumerated}",
            f"report.holds={'true' if self.holds else 'false'}",
            f"report.counterexamples={len(self.counterexamples)}",
        ]
        for key in sorted(self.extra):
            val = self.extra[key]
            if isinstance(val, bool):
                val = "true" if val else "false"
            lines.append(f"report.extra.{key}={val}")
        for i, cx in enumerate(self.counterexamples):
            es = ",".join(
                f"{u}-{v}:{c}" for (u, v), c in zip(cx.edges, cx.colors)
            )
            lines.append(
                f"report.cex.{i}=n={cx.n};edges={es};reason={cx.reason};detail={cx.detail}"
            )
        return lines


# ------------------------------------------------------------ finalization


def _reverify(theorem: str, mode: str, cx: Counterexample) -> None:
    """Re-check a fast-path counterexample through the public API."""
    g = build_graph(cx.n, [(u, v, c) for (u, v), c in zip(cx.edges, cx.colors)])
    if cx.reason == "no-properly-colored-c4" and find_pc_c4(g) is not None:
        raise AssertionError("fast path and object detector disagree on a C4")
    if cx.reason == "no-rainbow-triangle" and _has_rainbow_triangle(g):
        raise AssertionError("fast path and object scan disagree on a triangle")
    if cx.reason == "class-without-dominating":
        cls = int(cx.detail.split("=")[1])
        sub = subgraph_view(g, color_class=cls)
        if dominating_vertex(sub) is not None:
            raise AssertionError("fast path missed a dominating vertex")
    if cx.reason == "equivalence-violated":
        free = find_pc_c4(g) is None
        cert = isinstance(pairwise_threshold_certificate(g), Certificate)
        if free == cert:
            raise AssertionError("fast path disagrees with the certificate")


def _tightness(theorem: str, report: TheoremReport) -> None:
    """Weakened runs: record whether every counterexample is in the known
    tight family."""
    cxs = report.counterexamples
    report.extra["extremal_count"] = len(cxs)
    if not cxs or theorem == "cor1":
        return
    ok = True
    for cx in cxs:
        g = build_graph(
            cx.n, [(u, v, c) for (u, v), c in zip(cx.edges, cx.colors)]
        )
        if theorem == "t4":
            r = classify_structure(g)
            ok = ok and not isinstance(r, (PC4Found, Unclassified))
            ok = ok and verify_structure(g, r)
        elif theorem in ("t1", "t2"):
            ok = ok and g.is_complete() and recognize_gallai_g0(g) is not None
        elif theorem in ("t6", "t7"):
            if not g.is_complete():
                ok = False
                continue
            tree = layered_decompose(g)
            ok = ok and verify_peel_tree(g, tree)
            if theorem == "t7":
                lys = tree.layers()
                ok = ok and bool(lys) and isinstance(
                    lys[-1].witness, Structure2Witness
                )
        elif theorem == "t10":
            ok = ok and g.is_complete() and recognize_star_order(g) is not None
    report.extra["tightness_ok"] = ok


# ------------------------------------------------------------- sampled runs


def _run_t13_sampled(n: int, samples: int) -> tuple[int, list[Counterexample], dict]:
    cex: list[Counterexample] = []
    pc4_free = 0
    for seed in range(samples):
        colors = 2 + (seed % (n + 1))
        g = generate(GenSpec("random", n, seed=seed, colors=colors))
        free = find_pc_c4(g) is None
        cert = isinstance(pairwise_threshold_certificate(g), Certificate)
        if free != cert:
            cex.append(
                Counterexample(
                    n,
                    g.edges,
                    g.colors,
                    "equivalence-violated",
                    f"seed={seed};pc4_free={free};certificate={cert}",
                )
            )
            continue
        if free:
            pc4_free += 1
            for view in color_classes(g):
                if dominating_vertex(view.graph) is None:
                    cex.append(
                        Counterexample(
                            n,
                            g.edges,
                            g.colors,
                            "class-without-dominating",
                            f"seed={seed};class={view.color}",
                        )
                    )
                    break
    return pc4_free, cex, {"pc4_free": pc4_free}


def _run_t8_sampled(n: int, samples: int) -> tuple[list[Counterexample], dict]:
    cex: list[Counterexample] = []
    reduced_edges = 0
    for seed in range(samples):
        colors = 1 + (seed % (n + 1)) if n > 0 else 1
        g = generate(GenSpec("random", n, seed=seed, colors=colors))
        r = color_degree_preserving_reduction(g)
        reduced_edges += g.edge_count - r.edge_count
        problem = None
        try:
            rep = starforest_identity_check(r)
        except NotApplicable as e:
            problem = ("reduced-class-not-star-forest", f"seed={seed};color={e.color}")
            rep = None
        if rep is not None:
            if not (rep.identity_holds and rep.per_vertex_ok):
                problem = ("identity-failed", f"seed={seed}")
            elif rep.dc_sum != sum(graph_stats(g).color_degree):
                problem = ("color-degree-not-preserved", f"seed={seed}")
            elif r.edges != color_degree_preserving_reduction(r).edges:
                problem = ("reduction-not-idempotent", f"seed={seed}")
            elif not rep.lower_bound_holds and (
                sum(graph_stats(r).color_degree)
                < r.edge_count + r.color_count
            ):
                problem = ("lower-bound-failed", f"seed={seed}")
        if problem is not None:
            cex.append(Counterexample(n, g.edges, g.colors, *problem))
    return cex, {"edges_deleted": reduced_edges}


# ------------------------------------------------------------- entry point


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("PC4_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidParameters(f"PC4_BUDGET is not an integer: {env!r}") from exc
    return DEFAULT_BUDGET


def _plan_units(theorem: str, n: int, mode: str):
    """Deterministic unit list and the exact predicted enumeration count."""
    m_full = n * (n - 1) // 2
    allpairs = list(combinations(range(n), 2))
    units: list[tuple] = []
    predicted = 0
    space = _spaces(theorem)
    masks: list[int]
    if space == "complete" or (theorem == "t13-equiv" and n <= 5):
        masks = [(1 << m_full) - 1] if m_full > 0 else [0]
    else:
        masks = list(range(1 << m_full))
    for mask in masks:
        m = mask.bit_count()
        degrees = [0] * n
        for i in range(m_full):
            if (mask >> i) & 1:
                u, v = allpairs[i]
                degrees[u] += 1
                degrees[v] += 1
        if not _mask_ok(theorem, n, mode, degrees, m):
            continue
        for k in _k_range(theorem, n, m, mode):
            count = stirling2(m, k)
            if count == 0:
                continue
            predicted += count
            for prefix in _rgs_prefixes(m, k, _PREFIX_LEN):
                units.append((mask, k, prefix))
    return units, predicted


def check_theorem(
    theorem: str,
    n: int,
    *,
    weakened: bool = False,
    jobs: int = 1,
    budget: int | None = None,
    samples: int | None = None,
    vertex_pruning: bool = False,
) -> TheoremReport:
    """Check one statement over its hypothesis space at size n.

    weakened lowers the statement's threshold by one step (only where a
    tight family exists) so the run reports the extremal colorings as
    counterexamples.  jobs > 1 shards the space across processes; the
    report's stable lines are byte-identical for any job count.  budget
    caps the predicted enumeration size (PC4_BUDGET applies when
    unset); samples sizes the random-sample spaces.
    """
    if theorem not in THEOREM_IDS:
        raise InvalidTheoremId(f"unknown theorem id {theorem!r}")
    if weakened and theorem not in _WEAKENABLE:
        raise InvalidParameters(f"{theorem} has no weakened mode")
    if n < 0:
        raise InvalidParameters("n must be non-negative")
    if theorem == "t5" and n < 4:
        raise InvalidParameters("t5 classification needs n >= 4")
    if jobs < 1:
        raise InvalidParameters("jobs must be positive")
    mode = "weakened" if weakened else "default"
    budget_v = _resolve_budget(budget)
    started = perf_counter()

    if theorem == "t8-identity" or (theorem == "t13-equiv" and n >= 6):
        if theorem == "t13-equiv" and n > 8:
            raise InvalidParameters(
                "t13-equiv sampling is supported for n in 6..8; use n <= 5 "
                "for the exhaustive space"
            )
        count = samples if samples is not None else (
            1000 if theorem == "t8-identity" else 10000
        )
        if count > budget_v:
            raise Infeasible(count, budget_v)
        if theorem == "t8-identity":
            cex, extra = _run_t8_sampled(n, count)
        else:
            _, cex, extra = _run_t13_sampled(n, count)
        report = TheoremReport(
            theorem=theorem,
            n=n,
            mode=mode,
            space="random-sample",
            cases=count,
            enumerated=count,
            holds=not cex,
            counterexamples=cex,
            extra=dict(extra),
            wall_time=perf_counter() - started,
            jobs=jobs,
        )
        report.extra["samples"] = count
        return report

    units, predicted = _plan_units(theorem, n, mode)
    if predicted > budget_v:
        raise Infeasible(predicted, budget_v)
    space = _spaces(theorem)
    if theorem == "t13-equiv":
        space = "complete"
    tasks = [
        (theorem, n, mode, mask, k, prefix, vertex_pruning)
        for mask, k, prefix in units
    ]
    results: list[dict]
    if jobs == 1 or len(tasks) <= 1:
        results = [_run_unit(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (jobs * 8))
        with Pool(jobs) as pool:
            results = list(pool.imap(_run_unit, tasks, chunksize=chunk))
    enumerated = sum(r["enumerated"] for r in results)
    cases = sum(r["cases"] for r in results)
    counters: dict[str, int] = {}
    raw_cex: list[tuple] = []
    for r in results:
        for key, val in r["counters"].items():
            counters[key] = counters.get(key, 0) + val
        raw_cex.extend(r["cex"])
    allpairs = list(combinations(range(n), 2))
    cex = []
    for mask, colors, reason, detail in raw_cex:
        edges = tuple(
            allpairs[i] for i in range(len(allpairs)) if (mask >> i) & 1
        )
        cex.append(Counterexample(n, edges, colors, reason, detail))
    report = TheoremReport(
        theorem=theorem,
        n=n,
        mode=mode,
        space=space,
        cases=cases,
        enumerated=enumerated,
        holds=not cex,
        counterexamples=cex,
        extra={k: v for k, v in sorted(counters.items())},
        wall_time=perf_counter() - started,
        jobs=jobs,
    )
    if vertex_pruning:
        report.extra["vertex_pruning"] = True
    for cx in cex:
        _reverify(theorem, mode, cx)
    if mode == "weakened":
        _tightness(theorem, report)
    return report
