"""Structure classification, peeling, and family recognition."""

from dataclasses import replace
from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pc4.classify import (
    GallaiTree,
    MonochromaticBlock,
    PC4Found,
    PeelTree,
    Structure1Witness,
    Structure2Witness,
    Structure3Witness,
    Unclassified,
    classify_structure,
    layered_decompose,
    peel_vertices,
    recognize_gallai_g0,
    recognize_star_order,
    replay_peel_tree,
    verify_gallai_tree,
    verify_peel_tree,
    verify_structure,
)
from pc4.detect import find_pc_c4, verify_witness
from pc4.errors import (
    InvalidParameters,
    NotComplete,
    ProperlyColoredC4Present,
    TooSmall,
    WrongColorCount,
)
from pc4.generate import GenSpec, generate
from pc4.graph import build_graph

from .oracles import all_surjective_colorings

K4_PAIRS = list(combinations(range(4), 2))

# K4 with four colors containing the properly colored cycle 0-1-2-3
PC4_K4 = build_graph(
    4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2), (0, 2, 3), (1, 3, 4)]
)


# ------------------------------------------------------------ classification


def test_classify_structure1_frozen():
    g = generate(GenSpec("structure1", 5))
    w = classify_structure(g)
    assert w == Structure1Witness(vertex=0, color=1)
    assert verify_structure(g, w)


def test_classify_structure2_frozen():
    g = generate(GenSpec("structure2", 6))
    w = classify_structure(g)
    # normalization renumbers by first appearance in lex edge order, so
    # the triangle colors come out as c(0,1)=1, c(0,2)=2, c(1,2)=3
    assert w == Structure2Witness(vertices=(0, 1, 2), colors=(1, 3, 2))
    assert verify_structure(g, w)


def test_classify_structure3_frozen():
    g = generate(GenSpec("structure3", 5))
    w = classify_structure(g)
    assert w == Structure3Witness(center=0, palette=(1, 2, 3, 4), outer_color=5)
    assert verify_structure(g, w)


def test_classify_reports_pc_c4_first():
    got = classify_structure(PC4_K4)
    assert isinstance(got, PC4Found)
    assert got.witness.vertices == (0, 1, 2, 3)
    assert got.witness.colors == (1, 3, 1, 3)
    assert verify_witness(PC4_K4, got.witness)
    # all_matches does not bypass the cycle check
    assert isinstance(classify_structure(PC4_K4, all_matches=True), PC4Found)


def test_classify_gates():
    with pytest.raises(NotComplete):
        classify_structure(build_graph(4, [(0, 1, 1), (2, 3, 2)]))
    rainbow_k3 = build_graph(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)])
    with pytest.raises(TooSmall):
        classify_structure(rainbow_k3)
    three_colored_k4 = build_graph(
        4, [(u, v, 1 + (u + v) % 3) for u, v in K4_PAIRS]
    )
    with pytest.raises(WrongColorCount):
        classify_structure(three_colored_k4)


def test_classify_all_matches_single_structure3():
    g = generate(GenSpec("structure3", 4))
    got = classify_structure(g, all_matches=True)
    assert got == [Structure3Witness(center=0, palette=(1, 2, 3), outer_color=4)]


def test_classify_exhaustive_k4():
    """All 65 surjective 4-colorings of K4: the trichotomy is total."""
    counts = {"pc4": 0, "s1": 0, "s2": 0, "s3": 0}
    for colors in all_surjective_colorings(6, 4):
        g = build_graph(4, [(u, v, c + 1) for (u, v), c in zip(K4_PAIRS, colors)])
        got = classify_structure(g)
        assert not isinstance(got, Unclassified)
        if isinstance(got, PC4Found):
            counts["pc4"] += 1
            assert verify_witness(g, got.witness)
        else:
            assert find_pc_c4(g) is None
            assert verify_structure(g, got)
            key = {
                Structure1Witness: "s1",
                Structure2Witness: "s2",
                Structure3Witness: "s3",
            }[type(got)]
            counts[key] += 1
    assert counts == {"pc4": 57, "s1": 4, "s2": 0, "s3": 4}


@given(
    n=st.integers(min_value=4, max_value=5),
    data=st.data(),
)
@settings(max_examples=150, deadline=None)
def test_classify_trichotomy_property(n, data):
    pairs = list(combinations(range(n), 2))
    cols = data.draw(
        st.tuples(*[st.integers(min_value=1, max_value=n) for _ in pairs])
    )
    g = build_graph(n, [(u, v, c) for (u, v), c in zip(pairs, cols)])
    assume(g.color_count == n)
    got = classify_structure(g)
    assert not isinstance(got, Unclassified)
    if isinstance(got, PC4Found):
        assert verify_witness(g, got.witness)
    else:
        assert verify_structure(g, got)


def test_verify_structure_rejects_corruption():
    g1 = generate(GenSpec("structure1", 5))
    assert not verify_structure(g1, Structure1Witness(vertex=0, color=2))
    assert not verify_structure(g1, Structure1Witness(vertex=1, color=1))
    g2 = generate(GenSpec("structure2", 6))
    w2 = classify_structure(g2)
    assert not verify_structure(g2, replace(w2, colors=(2, 1, 3)))
    assert not verify_structure(g2, replace(w2, vertices=(0, 1, 3)))
    g3 = generate(GenSpec("structure3", 5))
    w3 = classify_structure(g3)
    assert not verify_structure(g3, replace(w3, outer_color=1))
    assert not verify_structure(g3, replace(w3, palette=(2, 1, 3, 4)))
    # witnesses verify only against their own graph
    assert not verify_structure(g1, w3)
    assert not verify_structure(g3, "not a witness")


# ------------------------------------------------------------------- peeling


def test_peel_structure1_chain():
    g = generate(GenSpec("layered", 10))
    tree = layered_decompose(g)
    kinds = [type(layer.witness) for layer in tree.layers()]
    assert kinds == [Structure1Witness] * 7 + [Structure2Witness]
    assert peel_vertices(tree) == tuple(range(10))
    assert verify_peel_tree(g, tree)


def test_peel_structure3_terminal():
    g = generate(GenSpec("structure3", 6))
    tree = layered_decompose(g)
    layers = tree.layers()
    assert [type(l.witness) for l in layers] == [
        Structure3Witness,
        MonochromaticBlock,
    ]
    assert layers[0].removed == (0,)
    assert layers[0].removed_colors == (1, 2, 3, 4, 5)
    assert layers[1].removed == (1, 2, 3, 4, 5)
    assert layers[1].removed_colors == (6,)
    assert verify_peel_tree(g, tree)


def test_peel_mixed_descriptor():
    g = generate(
        GenSpec("layered", 7, descriptor=("structure2", "structure1", "structure2"))
    )
    tree = layered_decompose(g)
    kinds = [type(l.witness) for l in tree.layers()]
    assert kinds == [Structure2Witness, Structure1Witness, Structure2Witness]
    assert verify_peel_tree(g, tree)


def test_peel_small_and_empty():
    assert layered_decompose(build_graph(0, [])).layers() == []
    t1 = layered_decompose(build_graph(1, []))
    assert t1.layers() == [] and t1.remaining == (0,)
    k3 = generate(GenSpec("layered", 3))
    tree = layered_decompose(k3)
    assert [type(l.witness) for l in tree.layers()] == [Structure2Witness]
    assert verify_peel_tree(k3, tree)


def test_peel_raises_on_pc_c4():
    with pytest.raises(ProperlyColoredC4Present):
        layered_decompose(PC4_K4)


def test_peel_gates():
    with pytest.raises(NotComplete):
        layered_decompose(build_graph(3, [(0, 1, 1), (1, 2, 2)]))
    with pytest.raises(WrongColorCount):
        layered_decompose(build_graph(2, [(0, 1, 1)]))


def test_replay_uses_fresh_colors_per_layer():
    g = generate(GenSpec("layered", 5))
    tree = layered_decompose(g)
    gb = replay_peel_tree(tree, 5)
    # replay renumbers by layer, normalization makes the graphs equal
    assert gb.edges == g.edges and gb.colors == g.colors


def test_verify_peel_tree_rejects_corruption():
    g = generate(GenSpec("layered", 6))
    tree = layered_decompose(g)
    assert verify_peel_tree(g, tree)
    # dropping the first layer leaves vertices uncovered
    assert not verify_peel_tree(g, tree.child)
    # a wrong removed set breaks the cover exactness
    bad_layer = replace(tree.layer, removed=(1,))
    assert not verify_peel_tree(g, replace(tree, layer=bad_layer))
    other = generate(GenSpec("structure3", 6))
    assert not verify_peel_tree(other, tree)


@st.composite
def layer_descriptors(draw, min_n=4, max_n=9):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    desc = []
    rem = n
    while True:
        allowed = []
        if rem == 3:
            allowed = ["structure2"]
        else:
            if rem >= 4:
                allowed.append("structure1")
                allowed.append("structure3")
            if rem >= 6:
                allowed.append("structure2")
        kind = draw(st.sampled_from(allowed))
        desc.append(kind)
        if kind == "structure1":
            rem -= 1
        elif kind == "structure2":
            if rem == 3:
                break
            rem -= 3
        else:
            break
        if rem == 0:
            break
    return n, tuple(desc)


@given(layer_descriptors())
@settings(max_examples=120, deadline=None)
def test_peel_round_trips_on_layered_family(nd):
    n, desc = nd
    g = generate(GenSpec("layered", n, descriptor=desc))
    assert find_pc_c4(g) is None
    tree = layered_decompose(g)
    assert verify_peel_tree(g, tree)
    # the classifier's first witness agrees with the outermost layer
    first = tree.layers()[0].witness
    got = classify_structure(g)
    assert type(got) is type(first)


# ---------------------------------------------------------------- star order


def test_star_order_identity_labeling():
    g = generate(GenSpec("star_order", 6))
    assert recognize_star_order(g) == (0, 1, 2, 3, 4, 5)


def test_star_order_permuted():
    perm = (2, 0, 3, 1)
    triples = [
        (perm[i], perm[j], min(i, j) + 1)
        for i in range(4)
        for j in range(i + 1, 4)
    ]
    g = build_graph(4, triples)
    # the last two positions are interchangeable and the greedy scan
    # prefers the smaller id, so 1 comes before 3
    assert recognize_star_order(g) == (2, 0, 1, 3)


def test_star_order_negatives():
    assert recognize_star_order(generate(GenSpec("rainbow", 4))) is None
    assert recognize_star_order(generate(GenSpec("structure3", 5))) is None
    with pytest.raises(NotComplete):
        recognize_star_order(build_graph(3, [(0, 1, 1)]))


def test_star_order_tiny():
    assert recognize_star_order(build_graph(0, [])) == ()
    assert recognize_star_order(build_graph(1, [])) == (0,)
    assert recognize_star_order(build_graph(2, [(0, 1, 1)])) == (0, 1)


@given(st.permutations(list(range(5))))
@settings(max_examples=60, deadline=None)
def test_star_order_recovers_any_relabeling(perm):
    triples = [
        (perm[i], perm[j], min(i, j) + 1)
        for i in range(5)
        for j in range(i + 1, 5)
    ]
    g = build_graph(5, triples)
    order = recognize_star_order(g)
    assert order is not None
    # any valid order must make colors depend only on the min position
    pos = {v: i for i, v in enumerate(order)}
    for (u, v), c in zip(g.edges, g.colors):
        for (x, y), d in zip(g.edges, g.colors):
            if min(pos[u], pos[v]) == min(pos[x], pos[y]):
                assert c == d


# -------------------------------------------------------------------- gallai


def test_gallai_recognizes_generated_family():
    for n in (2, 3, 5, 8):
        g = generate(GenSpec("gallai_g0", n))
        tree = recognize_gallai_g0(g)
        assert tree is not None
        assert verify_gallai_tree(g, tree)


def test_gallai_all_singleton_splits_equal_star_order():
    a = generate(GenSpec("gallai_g0", 5, descriptor=(1, 1, 1, 1)))
    b = generate(GenSpec("star_order", 5))
    assert a.edges == b.edges and a.colors == b.colors
    tree = recognize_gallai_g0(b)
    assert tree is not None and verify_gallai_tree(b, tree)


def test_gallai_negatives():
    # rainbow triangle present
    proper_k4 = build_graph(
        4,
        [(0, 1, 1), (2, 3, 1), (0, 2, 2), (1, 3, 2), (0, 3, 3), (1, 2, 3)],
    )
    assert recognize_gallai_g0(proper_k4) is None
    # wrong color count
    assert recognize_gallai_g0(generate(GenSpec("rainbow", 4))) is None
    with pytest.raises(NotComplete):
        recognize_gallai_g0(build_graph(3, [(0, 1, 1)]))
    with pytest.raises(InvalidParameters):
        recognize_gallai_g0(generate(GenSpec("star_order", 13)))


def test_gallai_tiny():
    t0 = recognize_gallai_g0(build_graph(0, []))
    assert t0 is not None and verify_gallai_tree(build_graph(0, []), t0)
    t1 = recognize_gallai_g0(build_graph(1, []))
    assert t1 == GallaiTree((0,), None, None, None)
    assert verify_gallai_tree(build_graph(1, []), t1)


def test_verify_gallai_tree_rejects_corruption():
    g = generate(GenSpec("star_order", 4))
    tree = recognize_gallai_g0(g)
    assert verify_gallai_tree(g, tree)
    assert not verify_gallai_tree(g, replace(tree, cross_color=99))
    assert not verify_gallai_tree(g, replace(tree, part2=None))
    shuffled = replace(tree, vertices=(1, 0, 2, 3))
    assert verify_gallai_tree(g, shuffled)  # vertex order is irrelevant
    assert not verify_gallai_tree(g, replace(tree, vertices=(0, 1, 2)))


@given(st.integers(min_value=2, max_value=9), st.data())
@settings(max_examples=80, deadline=None)
def test_gallai_round_trip_random_descriptors(n, data):
    sizes = []
    # preorder walk mirroring the generator's split consumption
    stack = [n]
    while stack:
        m = stack.pop()
        if m <= 1:
            continue
        s = data.draw(st.integers(min_value=1, max_value=m - 1))
        sizes.append(s)
        stack.append(m - s)  # part2 after part1: generator recurses p1 first
        stack.append(s)
    # drawing recursed depth-first on part1, matching the stack order
    g = generate(GenSpec("gallai_g0", n, descriptor=tuple(sizes)))
    assert g.color_count == n - 1
    tree = recognize_gallai_g0(g)
    assert tree is not None
    assert verify_gallai_tree(g, tree)
