"""Deterministic families of edge-colored complete graphs.

Every kind is reproducible from (kind, n, seed, descriptor, colors) and
returns a normalized graph (colors renumbered by first appearance in
canonical edge order).

  structure1 / structure2 / structure3: extremal colorings with exactly
      n colors and no properly colored C4, classifying as the named
      structure.
  layered: a chain of structure layers given by descriptor, each layer
      consuming its vertices and fresh colors; the default descriptor is
      a structure-1 chain finished by a rainbow triangle.
  gallai_g0: recursive bipartitions with monochromatic fresh-colored
      cross edges; n - 1 colors, no rainbow triangle.  descriptor lists
      first-part sizes consumed in preorder; splits default to the
      ceiling half.
  star_order: color(v_i, v_j) = min(i, j) + 1; n - 1 colors, the tight
      family for the color-degree sum threshold.
  rainbow: every edge its own color.
  random: uniform color per edge from 1..colors (default n) via the
      seeded splitmix stream.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidSpec
from .graph import EdgeColoredGraph, build_graph
from .rng import stream_mod

KINDS = (
    "structure1",
    "structure2",
    "structure3",
    "layered",
    "gallai_g0",
    "star_order",
    "rainbow",
    "random",
)

_LAYER_KINDS = ("structure1", "structure2", "structure3")


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    seed: int = 0
    descriptor: tuple | None = None
    colors: int | None = None


def _default_descriptor(n: int) -> tuple[str, ...]:
    if n <= 1:
        return ()
    if n == 2:
        raise InvalidSpec("no complete coloring with 2 colors on 2 vertices")
    if n == 3:
        return ("structure2",)
    return ("structure1",) * (n - 3) + ("structure2",)


def _validate_layer_descriptor(n: int, descriptor: tuple) -> None:
    for kind in descriptor:
        if kind not in _LAYER_KINDS:
            raise InvalidSpec(f"unknown layer kind {kind!r}")
    rem = n
    for i, kind in enumerate(descriptor):
        terminal = False
        if kind == "structure1":
            if rem < 4:
                raise InvalidSpec(
                    f"structure1 layer needs 4 remaining vertices, has {rem}"
                )
            rem -= 1
        elif kind == "structure2":
            if rem == 3:
                rem = 0
                terminal = True
            elif rem >= 6:
                rem -= 3
            else:
                raise InvalidSpec(
                    f"structure2 layer needs 3 or >= 6 remaining vertices, has {rem}"
                )
        else:
            if rem < 4:
                raise InvalidSpec(
                    f"structure3 layer needs 4 remaining vertices, has {rem}"
                )
            rem = 0
            terminal = True
        if terminal and i != len(descriptor) - 1:
            raise InvalidSpec("terminal layer must come last")
    # a single leftover vertex is fine (K1 carries no edges); more is a gap
    if rem > 1:
        raise InvalidSpec(f"descriptor leaves {rem} vertices uncolored")


def _build_layered(n: int, descriptor: tuple) -> EdgeColoredGraph:
    _validate_layer_descriptor(n, descriptor)
    triples: list[tuple[int, int, int]] = []
    pos = 0
    color = 1
    for kind in descriptor:
        if kind == "structure1":
            v = pos
            triples.extend((v, x, color) for x in range(pos + 1, n))
            pos += 1
            color += 1
        elif kind == "structure2":
            u, v, w = pos, pos + 1, pos + 2
            r, b, g = color, color + 1, color + 2
            triples.extend([(u, v, r), (v, w, b), (u, w, g)])
            for corner, k in ((u, r), (v, b), (w, g)):
                triples.extend((corner, x, k) for x in range(pos + 3, n))
            pos += 3
            color += 3
        else:  # structure3, terminal
            center = pos
            for x in range(pos + 1, n):
                triples.append((center, x, color))
                color += 1
            outer = color
            triples.extend(
                (x, y, outer) for x, y in combinations(range(pos + 1, n), 2)
            )
            pos = n
            color += 1
    return build_graph(n, triples)


def _build_gallai(n: int, descriptor: tuple | None) -> EdgeColoredGraph:
    sizes = list(descriptor) if descriptor is not None else []
    for s in sizes:
        if not isinstance(s, int):
            raise InvalidSpec("gallai descriptor entries must be integers")
    cursor = 0
    triples: list[tuple[int, int, int]] = []
    color = 1

    def rec(vs: list[int]) -> None:
        nonlocal cursor, color
        if len(vs) <= 1:
            return
        if cursor < len(sizes):
            s = sizes[cursor]
            cursor += 1
        else:
            s = (len(vs) + 1) // 2
        if not 1 <= s < len(vs):
            raise InvalidSpec(
                f"split size {s} invalid for a part of {len(vs)} vertices"
            )
        p1, p2 = vs[:s], vs[s:]
        k = color
        color += 1
        triples.extend((x, y, k) for x in p1 for y in p2)
        rec(p1)
        rec(p2)

    if n >= 1:
        rec(list(range(n)))
    if cursor != len(sizes):
        raise InvalidSpec(
            f"gallai descriptor has {len(sizes) - cursor} unused entries"
        )
    return build_graph(n, triples)


def generate(spec: GenSpec) -> EdgeColoredGraph:
    """Build the family member described by spec; see the module docstring."""
    if spec.kind not in KINDS:
        raise InvalidSpec(f"unknown kind {spec.kind!r}")
    if spec.n < 0:
        raise InvalidSpec("n must be non-negative")
    if spec.colors is not None and spec.kind != "random":
        raise InvalidSpec("colors applies only to kind 'random'")
    if spec.descriptor is not None and spec.kind not in ("layered", "gallai_g0"):
        raise InvalidSpec(f"kind {spec.kind!r} takes no descriptor")
    n = spec.n

    if spec.kind == "structure1":
        if n < 4:
            raise InvalidSpec("structure1 needs n >= 4")
        return _build_layered(n, _default_descriptor(n))
    if spec.kind == "structure2":
        if n != 3 and n < 6:
            raise InvalidSpec("structure2 needs n = 3 or n >= 6")
        tail = _default_descriptor(n - 3) if n > 3 else ()
        return _build_layered(n, ("structure2",) + tail)
    if spec.kind == "structure3":
        if n < 4:
            raise InvalidSpec("structure3 needs n >= 4")
        return _build_layered(n, ("structure3",))
    if spec.kind == "layered":
        desc = (
            tuple(spec.descriptor)
            if spec.descriptor is not None
            else _default_descriptor(n)
        )
        return _build_layered(n, desc)
    if spec.kind == "gallai_g0":
        return _build_gallai(n, spec.descriptor)
    if spec.kind == "star_order":
        triples = [
            (i, j, i + 1) for i in range(n) for j in range(i + 1, n)
        ]
        return build_graph(n, triples)
    if spec.kind == "rainbow":
        pairs = list(combinations(range(n), 2))
        return build_graph(n, [(u, v, k + 1) for k, (u, v) in enumerate(pairs)])
    # random
    colors = spec.colors if spec.colors is not None else max(n, 1)
    if colors < 1:
        raise InvalidSpec("colors must be at least 1")
    pairs = list(combinations(range(n), 2))
    triples = [
        (u, v, 1 + stream_mod(spec.seed, k, colors))
        for k, (u, v) in enumerate(pairs)
    ]
    return build_graph(n, triples)
