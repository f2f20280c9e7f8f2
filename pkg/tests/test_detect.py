import pytest
from hypothesis import given, settings

from pc4.detect import (
    CycleWitness,
    canonical_cycle,
    cycle_edge_colors,
    find_pc_c4,
    find_rainbow_cycle,
    is_properly_colored_cycle,
    verify_witness,
)
from pc4.errors import InvalidParameters, NotACycle
from pc4.graph import build_graph

from .oracles import brute_cycles
from .strategies import complete_colorings, edge_colored_graphs


def k4(colors):
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return build_graph(4, [(u, v, c) for (u, v), c in zip(pairs, colors)])


def test_canonical_cycle_rotation_and_reflection():
    assert canonical_cycle((2, 3, 0, 1)) == (0, 1, 2, 3)
    assert canonical_cycle((0, 3, 2, 1)) == (0, 1, 2, 3)
    assert canonical_cycle((1, 0, 2)) == (0, 1, 2)
    # starts at the minimum, second entry smaller than the last
    assert canonical_cycle((4, 2, 7, 5)) == (2, 4, 5, 7)


def test_cycle_edge_colors_errors():
    g = k4([1, 2, 3, 4, 5, 6])
    with pytest.raises(NotACycle):
        cycle_edge_colors(g, (0, 1))
    with pytest.raises(NotACycle):
        cycle_edge_colors(g, (0, 1, 1, 2))
    h = build_graph(4, [(0, 1, 1), (1, 2, 2)])
    with pytest.raises(NotACycle):
        cycle_edge_colors(h, (0, 1, 2))


def test_rainbow_k4_has_pc_c4():
    g = k4([1, 2, 3, 4, 5, 6])
    w = find_pc_c4(g)
    assert w == CycleWitness((0, 1, 2, 3), (1, 4, 6, 3), "properly-colored")
    assert verify_witness(g, w)


def test_monochromatic_k4_has_none():
    assert find_pc_c4(k4([1, 1, 1, 1, 1, 1])) is None


def test_structure_coloring_has_none():
    # vertex 0 monochromatic to the rest, rest rainbow: no properly colored C4
    g = k4([1, 1, 1, 2, 3, 4])
    assert find_pc_c4(g) is None


def test_witness_is_lex_smallest():
    # two disjoint properly colored C4s; the 0-based one must win
    g = build_graph(
        8,
        [
            (0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2),
            (4, 5, 1), (5, 6, 2), (6, 7, 1), (4, 7, 2),
        ],
    )
    assert find_pc_c4(g).vertices == (0, 1, 2, 3)


@given(edge_colored_graphs(max_n=6, max_colors=5))
@settings(max_examples=150)
def test_pc_c4_agrees_with_brute_force(g):
    w = find_pc_c4(g)
    brute = brute_cycles(g, 4, rainbow=False)
    if w is None:
        assert not brute
    else:
        assert w.vertices in brute
        assert verify_witness(g, w)
        # search order is 4-subset lex, then the fixed structure order,
        # which within a subset coincides with lex on the canonical form
        assert w.vertices == min(brute, key=lambda vs: (tuple(sorted(vs)), vs))


@given(edge_colored_graphs(max_n=6, max_colors=8))
@settings(max_examples=100)
def test_rainbow_c3_and_c4_agree_with_brute_force(g):
    for k in (3, 4):
        w = find_rainbow_cycle(g, k)
        brute = brute_cycles(g, k, rainbow=True)
        if w is None:
            assert not brute
        else:
            assert w.vertices == min(brute)
            assert verify_witness(g, w)


def test_rainbow_cycle_on_rainbow_k5():
    g = build_graph(
        5,
        [(u, v, 1 + i) for i, (u, v) in enumerate(
            (a, b) for a in range(5) for b in range(a + 1, 5)
        )],
    )
    for k in (3, 4, 5):
        w = find_rainbow_cycle(g, k)
        assert w is not None and len(w.vertices) == k
    with pytest.raises(InvalidParameters):
        find_rainbow_cycle(g, 2)


def test_verify_witness_rejects_corrupted():
    g = k4([1, 2, 3, 4, 5, 6])
    w = find_pc_c4(g)
    assert not verify_witness(g, CycleWitness(w.vertices, (9, 9, 9, 9), w.kind))
    assert not verify_witness(g, CycleWitness((0, 1, 2, 2), w.colors, w.kind))
    assert not verify_witness(g, CycleWitness(w.vertices, w.colors, "bogus"))
    # properly colored but not rainbow witness may not claim rainbow kind
    h = k4([1, 2, 2, 2, 2, 1])
    pc = find_pc_c4(h)
    assert pc is not None and verify_witness(h, pc)
    assert not verify_witness(h, CycleWitness(pc.vertices, pc.colors, "rainbow"))


@given(complete_colorings(min_n=3, max_n=6))
@settings(max_examples=100)
def test_is_properly_colored_cycle_matches_colors(g):
    vs = tuple(range(3))
    cols = cycle_edge_colors(g, vs)
    assert is_properly_colored_cycle(g, vs) == all(
        cols[i] != cols[(i + 1) % 3] for i in range(3)
    )
