"""Command-line front end.

Subcommands: detect, classify, decompose, generate, bounds, verify,
stats.  Graphs travel in the ecg text format:

    ecg 1
    n 5
    e 0 1 1
    # comment lines start with '#'

Exit codes: 0 found/holds, 1 not-found/counterexamples, 2 input error,
3 infeasible budget.  Reports are emitted as `report.key=value` lines
on stdout; timing and worker metadata go to stderr so stdout is
byte-identical across --jobs settings.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import kst_bound, matching_extremal
from .classify import (
    GallaiTree,
    PC4Found,
    Structure1Witness,
    Structure2Witness,
    Structure3Witness,
    Unclassified,
    classify_structure,
    layered_decompose,
    recognize_gallai_g0,
)
from .detect import CycleWitness, find_pc_c4, find_rainbow_cycle
from .errors import (
    ClassNotThreshold,
    DecompositionFailed,
    Infeasible,
    InvalidParameters,
    InvalidSpec,
    InvalidTheoremId,
    NotThreshold,
    Pc4Error,
    ProperlyColoredC4Present,
)
from .generate import KINDS, GenSpec, generate
from .graph import EdgeColoredGraph, build_graph, graph_stats, subgraph_view
from .harness import check_theorem
from .threshold import (
    Certificate,
    FailureWitness,
    compute_drawing,
    decompose_two_colored_threshold,
    pairwise_threshold_certificate,
)


# --------------------------------------------------------------- ecg format


def parse_ecg(text: str) -> EdgeColoredGraph:
    """Parse the ecg text format; raises InvalidSpec on malformed input."""
    n = None
    edges: list[tuple[int, int, int]] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not saw_header:
            if parts != ["ecg", "1"]:
                raise InvalidSpec(f"line {lineno}: expected header 'ecg 1'")
            saw_header = True
            continue
        if parts[0] == "n":
            if n is not None or len(parts) != 2:
                raise InvalidSpec(f"line {lineno}: malformed n line")
            try:
                n = int(parts[1])
            except ValueError:
                raise InvalidSpec(f"line {lineno}: n is not an integer")
            continue
        if parts[0] == "e":
            if n is None:
                raise InvalidSpec(f"line {lineno}: edge before n line")
            if len(parts) != 4:
                raise InvalidSpec(f"line {lineno}: edge needs u v color")
            try:
                u, v, c = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise InvalidSpec(f"line {lineno}: non-integer edge field")
            edges.append((u, v, c))
            continue
        raise InvalidSpec(f"line {lineno}: unknown record {parts[0]!r}")
    if not saw_header:
        raise InvalidSpec("missing 'ecg 1' header")
    if n is None:
        raise InvalidSpec("missing n line")
    return build_graph(n, edges)


def serialize_ecg(g: EdgeColoredGraph) -> str:
    lines = ["ecg 1", f"n {g.n}"]
    for (u, v), c in zip(g.edges, g.colors):
        lines.append(f"e {u} {v} {c}")
    return "\n".join(lines) + "\n"


def _load(path: str) -> EdgeColoredGraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_ecg(fh.read())


# ----------------------------------------------------------------- printing


def _witness_line(w: CycleWitness) -> str:
    vs = " ".join(str(v) for v in w.vertices)
    cs = " ".join(str(c) for c in w.colors)
    return f"C{len(w.vertices)}: {vs} colors: {cs}"


def _structure_line(w) -> str:
    if isinstance(w, Structure1Witness):
        return f"structure1: vertex {w.vertex} color {w.color}"
    if isinstance(w, Structure2Witness):
        vs = " ".join(str(v) for v in w.vertices)
        cs = " ".join(str(c) for c in w.colors)
        return f"structure2: triangle {vs} colors {cs}"
    if isinstance(w, Structure3Witness):
        pal = ",".join(str(c) for c in w.palette)
        return f"structure3: center {w.center} palette {pal} outer {w.outer_color}"
    raise AssertionError(f"unprintable witness {w!r}")


def _print_gallai(tree: GallaiTree, depth: int = 0) -> None:
    pad = "  " * depth
    vs = ",".join(str(v) for v in tree.vertices)
    if tree.part1 is None:
        print(f"{pad}leaf: {vs}")
        return
    print(f"{pad}split: {vs} cross-color {tree.cross_color}")
    _print_gallai(tree.part1, depth + 1)
    _print_gallai(tree.part2, depth + 1)


# -------------------------------------------------------------- subcommands


def _cmd_detect(args) -> int:
    g = _load(args.infile)
    if args.pattern == "pc-c4":
        w = find_pc_c4(g)
    elif args.pattern == "rainbow-c3":
        w = find_rainbow_cycle(g, 3)
    else:
        if args.k is None:
            raise InvalidParameters("--pattern rainbow-ck needs --k")
        w = find_rainbow_cycle(g, args.k)
    if w is None:
        print("none")
        return 1
    print(_witness_line(w))
    return 0


def _cmd_classify(args) -> int:
    g = _load(args.infile)
    result = classify_structure(g, all_matches=args.all)
    if isinstance(result, PC4Found):
        print("pc-c4 present: " + _witness_line(result.witness))
        return 1
    if args.all:
        if not result:
            print("unclassified: no structure matches")
            return 1
        for w in result:
            print(_structure_line(w))
        return 0
    if isinstance(result, Unclassified):
        print(f"unclassified: {result.reason}")
        return 1
    print(_structure_line(result))
    return 0


def _cmd_decompose(args) -> int:
    g = _load(args.infile)
    if args.layered:
        try:
            tree = layered_decompose(g)
        except ProperlyColoredC4Present as e:
            print("pc-c4 present: " + _witness_line(e.witness))
            return 1
        for i, layer in enumerate(tree.layers()):
            rm = ",".join(str(v) for v in layer.removed)
            print(f"layer {i}: {_structure_line_or_block(layer.witness)} removes {rm}")
        return 0
    if args.gallai:
        tree = recognize_gallai_g0(g)
        if tree is None:
            print("none")
            return 1
        _print_gallai(tree)
        return 0
    if args.two_colored:
        try:
            rep = decompose_two_colored_threshold(g)
        except (ClassNotThreshold, DecompositionFailed) as e:
            print(f"none: {e}")
            return 1
        _print_split(rep)
        return 0
    # per-class drawing with --drawing --color, full certificate otherwise
    if args.drawing and args.color is None:
        raise InvalidParameters("--drawing needs --color")
    if args.color is not None:
        try:
            d = compute_drawing(subgraph_view(g, color_class=args.color))
        except NotThreshold as e:
            print(f"not-threshold: {e}")
            return 1
        _print_drawing(args.color, d)
        return 0
    cert = pairwise_threshold_certificate(g)
    if isinstance(cert, FailureWitness):
        cls = ",".join(str(c) for c in cert.classes)
        vs = ",".join(str(v) for v in cert.forbidden.vertices)
        print(f"not-threshold: classes {cls} induced {cert.forbidden.kind} on {vs}")
        return 1
    for key in sorted(cert.drawings):
        label = "+".join(str(c) for c in key)
        _print_drawing_label(label, cert.drawings[key])
    return 0


def _print_split(rep, depth: int = 0) -> None:
    pad = "  " * depth
    print(
        pad
        + f"case {rep.case}"
        + (" degenerate-star" if rep.degenerate_star else "")
    )
    print(pad + "spine: " + ",".join(str(v) for v in rep.spine))
    print(pad + "ribs: " + ",".join(str(v) for v in rep.ribs))
    if rep.case == 2:
        removed = [w for w in (rep.w1, rep.w2) if w is not None]
        print(pad + "removed: " + ",".join(str(v) for v in removed))
        _print_split(rep.inner, depth + 1)
        return
    print(pad + "v1: " + ",".join(str(v) for v in rep.v1))
    print(pad + "v2: " + ",".join(str(v) for v in rep.v2))
    if rep.u is not None:
        print(pad + f"u: {rep.u}")


def _structure_line_or_block(w) -> str:
    from .classify import MonochromaticBlock

    if isinstance(w, MonochromaticBlock):
        vs = ",".join(str(v) for v in w.vertices)
        return f"monochromatic-block: vertices {vs} color {w.color}"
    return _structure_line(w)


def _print_drawing(color: int, d) -> None:
    _print_drawing_label(str(color), d)


def _print_drawing_label(label: str, d) -> None:
    print(
        f"class {label}: spine "
        + ",".join(str(v) for v in d.spine)
        + " ribs "
        + ",".join(str(v) for v in d.ribs)
        + " tails "
        + ",".join(str(v) for v in sorted(d.tails))
        + " isolated "
        + ",".join(str(v) for v in sorted(d.isolated))
    )


def _cmd_generate(args) -> int:
    descriptor = None
    if args.descriptor:
        parts = args.descriptor.split(",")
        if args.kind == "gallai_g0":
            descriptor = tuple(int(p) for p in parts)
        else:
            descriptor = tuple(parts)
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        descriptor=descriptor,
        colors=args.colors,
    )
    g = generate(spec)
    text = serialize_ecg(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bounds(args) -> int:
    vals = args.args
    if args.formula == "kst":
        if len(vals) != 3:
            raise InvalidParameters("kst needs --args n a b")
        n, a, b = (int(x) for x in vals)
        bv = kst_bound(n, a, b)
        print(f"kst.lower={bv.lower}")
        print(f"kst.upper={bv.upper}")
        print(f"kst.exact={'true' if bv.exact else 'false'}")
        return 0
    if len(vals) != 2:
        raise InvalidParameters("matching needs --args n k")
    n, k = (int(x) for x in vals)
    mb = matching_extremal(n, k)
    print(f"matching.bound={mb.bound}")
    print(f"matching.extremal={','.join(mb.extremal)}")
    return 0


def _cmd_verify(args) -> int:
    report = check_theorem(
        args.theorem,
        args.n,
        weakened=args.weakened,
        jobs=args.jobs,
        budget=args.budget,
        samples=args.samples,
        vertex_pruning=args.vertex_pruning,
    )
    if report.holds:
        print(f"holds ({report.cases} cases)")
    else:
        print(f"counterexamples: {len(report.counterexamples)} ({report.cases} cases)")
    for line in report.stable_lines():
        print(line)
    print(
        f"# wall_time={report.wall_time:.3f}s jobs={report.jobs}",
        file=sys.stderr,
    )
    return 0 if report.holds else 1


def _cmd_stats(args) -> int:
    g = _load(args.infile)
    st = graph_stats(g)
    print(f"stats.n={g.n}")
    print(f"stats.edges={st.edge_count}")
    print(f"stats.colors={st.color_count}")
    print("stats.color_degree=" + ",".join(str(d) for d in st.color_degree))
    print(
        "stats.saturated_color_degree="
        + ",".join(str(d) for d in st.saturated_color_degree)
    )
    return 0


# ------------------------------------------------------------------- parser


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="pc4",
        description="properly colored C4 structure toolkit",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="search for a colored cycle pattern")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument(
        "--pattern",
        required=True,
        choices=("pc-c4", "rainbow-c3", "rainbow-ck"),
    )
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("classify", help="match the extremal structures")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("decompose", help="structural decompositions")
    p.add_argument("--in", dest="infile", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--layered", action="store_true")
    mode.add_argument("--gallai", action="store_true")
    mode.add_argument("--drawing", action="store_true")
    mode.add_argument("--two-colored", dest="two_colored", action="store_true")
    p.add_argument("--color", type=int, default=None)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("generate", help="construct a named coloring")
    p.add_argument("--kind", required=True, choices=sorted(KINDS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--colors", type=int, default=None)
    p.add_argument("--descriptor", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bounds", help="closed-form extremal bounds")
    p.add_argument("--formula", required=True, choices=("kst", "matching"))
    p.add_argument("--args", nargs="+", required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="run a statement check")
    p.add_argument("--theorem", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weakened", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--vertex-pruning", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("stats", help="per-vertex color statistics")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_stats)

    return top


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already; keep that contract
        return int(e.code or 0)
    try:
        return args.func(args)
    except Infeasible as e:
        print(f"infeasible: predicted {e.predicted} cases over budget {e.budget}", file=sys.stderr)
        return 3
    except FileNotFoundError as e:
        print(f"error: no such file: {e.filename}", file=sys.stderr)
        return 2
    except (InvalidSpec, InvalidParameters, InvalidTheoremId) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Pc4Error as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run_cli())
