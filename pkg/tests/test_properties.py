"""Invariants checked on generated inputs (fixed-seed hypothesis profile in conftest)."""

import random

from hypothesis import given, strategies as st

import oracles
from kix import corpus, lab
from kix.coloring import PartialColoring, is_good, used_colors
from kix.discharging import final_charges
from kix.graph import distance
from kix.reduction import (BASE_THRESHOLD, color5, find_configuration, lift_candidates,
                           reduce)
from kix.solver import extend_exhaustive
from kix.textio import format_coloring, format_graph, parse_coloring, parse_graph


@st.composite
def plane_graphs(draw, max_vertices=30):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    rng = random.Random(seed)
    if draw(st.booleans()):
        target = draw(st.integers(1, max_vertices))
        return corpus.random_grown(rng, target, parallel_rate=draw(st.sampled_from([0.0, 0.1, 0.5])))
    g = corpus.random_cubic_dual(rng, draw(st.integers(4, max_vertices // 2 + 2)), balance=True)
    return corpus.perturb(rng, g, draw(st.integers(0, 3)), max_vertices + 4)


@given(plane_graphs())
def test_round_trip_graph(g):
    assert parse_graph(format_graph(g)) == g
    assert format_graph(parse_graph(format_graph(g))) == format_graph(g)


@given(plane_graphs(), st.integers(0, 2 ** 31))
def test_round_trip_coloring(g, seed):
    rng = random.Random(seed)
    phi = PartialColoring(5, {e: rng.randint(1, 5) for e in g.edge_ids if rng.random() < 0.7})
    assert parse_coloring(format_coloring(phi)) == phi


@given(plane_graphs())
def test_faces_partition_darts(g):
    assert sum(len(f) for f in g.faces) == 2 * g.edge_count
    darts = [d for f in g.faces for d in f.darts]
    assert len(darts) == len(set(darts))
    assert g.vertex_count - g.edge_count + len(g.faces) == 2 * len(g.components())


@given(plane_graphs(max_vertices=16), st.integers(0, 2 ** 31))
def test_distance_matches_bfs(g, seed):
    rng = random.Random(seed)
    n, edges = oracles.edge_list(g)
    for _ in range(5):
        u, v, w = (rng.randrange(n) for _ in range(3))
        ref = oracles.bfs_distance(n, edges, u, v)
        d = distance(g, u, v)
        assert (d == float("inf")) if ref is None else d == ref
        assert d == distance(g, v, u)
        assert d <= distance(g, u, w) + distance(g, w, v)


@given(plane_graphs(), st.integers(0, 2 ** 31))
def test_is_good_is_monotone(g, seed):
    phi = color5(g)
    assert is_good(g, phi, 2, 5)
    rng = random.Random(seed)
    keep = [e for e in g.edge_ids if rng.random() < 0.5]
    sub = phi.restricted(keep)
    assert is_good(g, sub, 2, 5)
    for v in g.vertices():
        assert used_colors(g, sub, v) <= used_colors(g, phi, v)


@given(plane_graphs(max_vertices=40))
def test_lift_safety_and_termination(g):
    for comp in g.components():
        sub, _ = g.induced_component(comp)
        if sub.vertex_count <= BASE_THRESHOLD:
            continue
        config = find_configuration(sub)
        step = reduce(sub, config)
        red = step.reduced
        size = (sub.vertex_count, sub.edge_count)
        if step.merge_edges:
            for part in red.components():
                piece, _ = red.induced_component(part)
                assert (piece.vertex_count, piece.edge_count) < size
        else:
            assert (red.vertex_count, red.edge_count) < size
        cands = list(lift_candidates(color5(red), step))
        assert cands
        for cand in cands[:3]:
            assert is_good(sub, cand, 2, 5)
            assert all(e not in cand for e in step.uncolored)
        assert any(extend_exhaustive(sub, c, step.uncolored) is not None for c in cands)


@given(plane_graphs())
def test_charge_conservation(g):
    for comp in g.components():
        sub, _ = g.induced_component(comp)
        led = final_charges(sub)
        assert led.total_initial() == -12
        assert led.total_final() == -12
        # one unit per corner, and a 2-vertex has two corners
        assert sum(t.amount for t in led.transfers if t.rule == "R1") == \
            2 * sum(1 for v in sub.vertices() if sub.degree(v) == 2)


@given(st.sampled_from(["3.2", "3.6", "3.7", "3.9", "4.1"]), st.sampled_from([4, 5]),
       st.integers(0, 2 ** 31))
def test_permutation_soundness(lemma_id, t, seed):
    rng = random.Random(seed)
    for tpl in lab.lemma(lemma_id).parts:
        envs = list(lab.enumerate_environments(tpl, 2, t))
        for env in rng.sample(envs, min(5, len(envs))):
            perm = [0] + rng.sample(range(1, t + 1), t)
            img = lab.Environment(tuple((n, perm[c]) for n, c in env.classes),
                                  tuple((n, tuple(sorted(perm[c] for c in u))) for n, u in env.usets))
            a = lab.transcript(tpl, env, 2, t)["extension"] is not None
            b = lab.transcript(tpl, img, 2, t)["extension"] is not None
            assert a == b
            assert lab.is_admissible(tpl, img, 2, t) == lab.is_admissible(tpl, env, 2, t)
