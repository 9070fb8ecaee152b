import pytest

import oracles
from kix import corpus
from kix.coloring import PartialColoring, is_good
from kix.errors import MultiplicityAboveK, SizeLimit
from kix.solver import (chromatic_index_k_intersection, exists_good_coloring, extend_exhaustive,
                        search_good_coloring, solver_edge_order)


@pytest.mark.parametrize("name, k, expected", [
    ("k4", 2, 5), ("k4", 3, 3), ("k4", 1, 6), ("star3", 1, 3), ("p3", 1, 2), ("c6", 2, 2),
    ("c5", 2, 3), ("digon", 2, 2), ("cube", 2, 4), ("cube", 3, 3),
])
def test_known_values(name, k, expected):
    g = {"k4": corpus.k4(), "star3": corpus.star(3), "p3": corpus.path(3), "c6": corpus.cycle(6),
         "c5": corpus.cycle(5), "digon": corpus.digon(), "cube": corpus.cube()}[name]
    res = chromatic_index_k_intersection(g, k)
    assert res.optimum == expected
    assert is_good(g, res.witness, k, expected)
    assert len(res.witness) == g.edge_count
    if expected > 1:
        assert exists_good_coloring(g, k, expected - 1) is None


def test_empty_graph():
    g = corpus.path(1)
    res = chromatic_index_k_intersection(g, 2)
    assert res.optimum == 0 and len(res.witness) == 0


def test_size_limit_and_multiplicity():
    with pytest.raises(SizeLimit):
        search_good_coloring(corpus.truncated_icosahedron(), 2, 5)
    with pytest.raises(MultiplicityAboveK):
        chromatic_index_k_intersection(corpus.digon(), 1)


def test_forced_large_search():
    g = corpus.prism(14)
    assert g.edge_count == 42
    with pytest.raises(SizeLimit):
        search_good_coloring(g, 2, 5)
    w, _ = search_good_coloring(g, 2, 5, force=True)
    assert w is not None and is_good(g, w, 2, 5)


def test_symmetry_breaking_does_not_change_answers(exhaustive10):
    for g in [g for g in exhaustive10 if g.edge_count <= 9][:150]:
        for t in (3, 4):
            a = exists_good_coloring(g, 2, t) is None
            b = exists_good_coloring(g, 2, t, symmetry=False) is None
            assert a == b


def test_agrees_with_naive_enumeration(exhaustive10, random1000):
    graphs = [g for g in list(exhaustive10) + list(random1000) if g.edge_count <= 6]
    assert len(graphs) > 20
    for g in graphs:
        n, edges = oracles.edge_list(g)
        for k in (1, 2):
            if g.max_multiplicity > k:
                continue
            for t in range(0, 6):
                found = exists_good_coloring(g, k, t)
                assert (found is not None) == oracles.naive_exists(n, edges, k, t)


def test_monotone_in_k_and_sandwiched(exhaustive10):
    for g in [g for g in exhaustive10 if g.edge_count <= 12][::5]:
        n, edges = oracles.edge_list(g)
        opts = [chromatic_index_k_intersection(g, k).optimum for k in (1, 2, 3)]
        assert opts[0] >= opts[1] >= opts[2]
        assert opts[2] == oracles.proper_index(edges)
        assert g.max_degree <= opts[2]
        assert opts[0] == oracles.strong_index(edges)


def test_edge_order_puts_heavy_edges_first():
    g = corpus.star(3)
    assert solver_edge_order(g) == sorted(g.edge_ids)
    g = corpus.path(4)
    assert solver_edge_order(g)[0] == g.edges_between(1, 2)[0]


def test_extend_exhaustive_blocked_and_free():
    g = corpus.star(3)
    e0, e1, e2 = g.edge_ids
    phi = PartialColoring(3, {e0: 1, e1: 2})
    assert extend_exhaustive(g, phi, [e2], 2, 2) is None
    out = extend_exhaustive(g, phi, [e2], 2, 3)
    assert out[e2] == 3


def test_extend_exhaustive_is_lexicographic():
    g = corpus.path(4)
    order = [g.edges_between(i, i + 1)[0] for i in range(3)]
    out = extend_exhaustive(g, PartialColoring(5), order, 2, 5)
    assert [out[e] for e in order] == [1, 2, 1]
    out = extend_exhaustive(g, PartialColoring(5), order, 1, 5)
    assert [out[e] for e in order] == [1, 2, 3]


def test_extend_exhaustive_rejects_bad_start():
    g = corpus.path(3)
    e0, e1 = g.edge_ids
    assert extend_exhaustive(g, PartialColoring(5, {e0: 1, e1: 1}), [], 2, 5) is None
    with pytest.raises(ValueError):
        extend_exhaustive(g, PartialColoring(5, {e0: 1}), [e0], 2, 5)
