import random

import pytest

import oracles
from kix import corpus
from kix.coloring import (PartialColoring, color_cycle_in_order, describe_violation,
                          extend_pendant, find_violation, is_good, is_proper, used_colors)
from kix.errors import (EdgeAlreadyColored, MultiplicityAboveK, NotACycle, ParseError,
                        PreconditionViolated)
from kix.graph import PlaneMultigraph
from kix.textio import format_coloring, parse_coloring

K4_GOOD = {0: 1, 5: 1, 1: 2, 4: 3, 2: 4, 3: 5}
K4_THREE = {0: 1, 5: 1, 1: 2, 4: 2, 2: 3, 3: 3}


def test_k4_five_coloring():
    g = corpus.k4()
    phi = PartialColoring(5, K4_GOOD)
    assert used_colors(g, phi, 0) == {1, 2, 4}
    assert is_good(g, phi, 2, 5)
    assert not is_good(g, phi, 2, 4)


def test_k4_proper_three_coloring():
    g = corpus.k4()
    phi = PartialColoring(3, K4_THREE)
    assert is_proper(g, phi)
    assert not is_good(g, phi, 2, 3)
    assert is_good(g, phi, 3, 3)
    v = find_violation(g, phi, 2, 3)
    assert v[0] == "intersection" and len(v[3]) == 3
    assert "share 3 colors {1, 2, 3}" in describe_violation(v)


def test_c5_coloring():
    g = corpus.cycle(5)
    phi = PartialColoring(3, dict(enumerate([1, 2, 1, 2, 3])))
    assert is_good(g, phi, 2, 3)
    assert is_good(g, phi, 1, 3) == oracles.good(5, oracles.edge_list(g)[1], [1, 2, 1, 2, 3], 1, 3)


def test_digon_needs_k_two():
    g = corpus.digon()
    with pytest.raises(MultiplicityAboveK):
        is_good(g, PartialColoring(2, {0: 1, 1: 2}), 1, 2)
    assert is_good(g, PartialColoring(2, {0: 1, 1: 2}), 2, 2)


def test_violations_in_order():
    g = corpus.path(3)
    assert find_violation(g, PartialColoring(5, {7: 1}), 2, 5) == ("unknown-edge", 7)
    assert find_violation(g, PartialColoring(5, {0: 5}), 2, 4) == ("palette", 0, 5)
    assert find_violation(g, PartialColoring(5, {0: 2, 1: 2}), 2, 5) == ("proper", 1, 2)
    with pytest.raises(ValueError):
        PartialColoring(3, {0: 4})


def _pendant_setup():
    # v=0 with neighbours a=1 (U={1,2,3}), b=2 (U={1,2,4}) and an uncolored pendant to 3
    edges = [(0, 0, 1), (1, 0, 2), (2, 0, 3), (3, 1, 4), (4, 1, 5), (5, 2, 6), (6, 2, 7)]
    rot = [[0, 1, 2], [0, 3, 4], [1, 5, 6], [2], [3], [4], [5], [6]]
    g = PlaneMultigraph.build(8, edges, rot)
    phi = PartialColoring(5, {0: 1, 3: 2, 4: 3, 1: 2, 5: 1, 6: 4})
    return g, phi


def test_extend_pendant_picks_five():
    g, phi = _pendant_setup()
    assert used_colors(g, phi, 1) == {1, 2, 3} and used_colors(g, phi, 2) == {1, 2, 4}
    out = extend_pendant(g, phi, 2)
    assert out[2] == 5
    assert is_good(g, out, 2, 5)


def test_extend_pendant_preconditions():
    g, phi = _pendant_setup()
    with pytest.raises(PreconditionViolated):
        extend_pendant(g, phi, 0)
    with pytest.raises(PreconditionViolated):
        extend_pendant(g, phi.without([0]), 0)


def test_color_cycle_in_order():
    g = corpus.cycle(8)
    colors = [3, 2, 5, 4, 5, 3, 5, 4]
    phi = color_cycle_in_order(g, PartialColoring(5), list(range(8)), colors)
    for i in range(8):
        (e,) = g.edges_between(i, (i + 1) % 8)
        assert phi[e] == colors[i]
    assert is_good(g, phi, 2, 5)
    assert not is_good(g, phi, 1, 5)


def test_color_cycle_errors():
    g = corpus.cycle(4)
    with pytest.raises(NotACycle):
        color_cycle_in_order(g, PartialColoring(5), [0, 1, 2], [1, 2, 3])
    with pytest.raises(NotACycle):
        color_cycle_in_order(g, PartialColoring(5), [0, 1, 1, 2], [1, 2, 3, 4])
    (e,) = g.edges_between(0, 1)
    with pytest.raises(EdgeAlreadyColored):
        color_cycle_in_order(g, PartialColoring(5, {e: 1}), [0, 1, 2, 3], [1, 2, 3, 4])


def test_digon_cycle_uses_both_parallel_edges():
    g = corpus.digon()
    phi = color_cycle_in_order(g, PartialColoring(2), [0, 1], [1, 2])
    assert phi == PartialColoring(2, {0: 1, 1: 2})


def _induced_matchings(edges, colors):
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if colors[i] != colors[j]:
                continue
            a, b = set(edges[i]), set(edges[j])
            if a & b:
                return False
            if any({x, y} <= a | b and ({x, y} & a) and ({x, y} & b) for x, y in edges):
                return False
    return True


def test_k_one_is_strong_coloring(random1000):
    rng = random.Random(7)
    graphs = [g for g in random1000 if g.is_simple() and g.edge_count <= 12][:60]
    assert graphs
    for g in graphs:
        n, edges = oracles.edge_list(g)
        for _ in range(30):
            colors = [rng.randint(1, 6) for _ in edges]
            phi = PartialColoring(6, dict(zip(g.edge_ids, colors)))
            assert is_good(g, phi, 1, 6) == _induced_matchings(edges, colors)


def test_large_k_is_properness(random1000):
    rng = random.Random(8)
    for g in [g for g in random1000 if g.edge_count <= 20][:60]:
        for _ in range(20):
            phi = PartialColoring(4, {e: rng.randint(1, 4) for e in g.edge_ids})
            assert is_good(g, phi, 3, 4) == is_proper(g, phi)


def test_coloring_text_errors():
    assert parse_coloring("palette 3\ncolor 0 2\n") == PartialColoring(3, {0: 2})
    assert format_coloring(PartialColoring(2, {1: 1})) == "palette 2\ncolor 1 1\n"
    for bad in ["color 0 1\n", "palette 3\npalette 3\n", "palette 3\ncolor 0 4\n",
                "palette 3\ncolor 0 1\ncolor 0 2\n", "palette x\n"]:
        with pytest.raises(ParseError):
            parse_coloring(bad)
