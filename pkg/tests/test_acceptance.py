"""End-to-end acceptance checks, each at its stated tolerance.

A pass/fail line per check is printed in the terminal summary (see conftest).
"""

import io
import json
import time
from contextlib import redirect_stdout
from fractions import Fraction
from pathlib import Path

import oracles
from conftest import DATA

from kix import cli, corpus, lab
from kix.coloring import is_good
from kix.discharging import apply_rules, audit, face_bound, final_charges, initial_charges
from kix.reduction import color5, find_configuration
from kix.solver import chromatic_index_k_intersection, search_good_coloring
from kix.textio import format_graph, parse_graph

ARTIFACTS = Path(__file__).parent.parent / "artifacts"


def _all(exhaustive10, random1000, named_graphs):
    return list(exhaustive10) + list(random1000) + list(named_graphs.values())


def test_sharpness_k4(tmp_path):
    start = time.monotonic()
    path = tmp_path / "k4.graph"
    path.write_text(format_graph(corpus.k4()))
    out = io.StringIO()
    with redirect_stdout(out):
        code = cli.main(["solve", "--k", "2", str(path)])
    assert code == 0
    assert out.getvalue().splitlines()[0] == "optimum 5"
    witness, nodes = search_good_coloring(corpus.k4(), 2, 4, symmetry=False)
    assert witness is None
    assert nodes <= 4 ** 6
    n, edges = oracles.edge_list(corpus.k4())
    assert not oracles.naive_exists(n, edges, 2, 4)
    assert time.monotonic() - start < 1.0


def test_theorem_desk_scale(exhaustive10, random1000):
    start = time.monotonic()
    assert len(exhaustive10) == 2463
    assert len(random1000) == 1000
    failures = []
    for g in list(exhaustive10) + list(random1000):
        assert g.max_degree <= 3 and g.max_multiplicity <= 2 and g.vertex_count <= 60
        phi = color5(g)
        if len(phi) != g.edge_count or not is_good(g, phi, 2, 5):
            failures.append(format_graph(g))
    assert failures == []
    assert any(g.max_multiplicity == 2 for g in random1000)
    assert time.monotonic() - start < 600


def test_oracle_consistency(exhaustive10, random1000, named_graphs):
    start = time.monotonic()
    graphs = [g for g in _all(exhaustive10, random1000, named_graphs) if g.edge_count <= 14]
    checked = 0
    for g in graphs:
        n, edges = oracles.edge_list(g)
        for k in (1, 2, 3):
            if g.max_multiplicity > k:
                continue
            opt = chromatic_index_k_intersection(g, k).optimum
            ref = oracles.dfs_optimum(n, edges, k, 5)
            if opt <= 5:
                assert ref == opt, (format_graph(g), k)
            else:
                assert ref is None, (format_graph(g), k)
            if k == 2:
                assert opt <= 5
            checked += 1
        if len(edges) <= 6:
            for k in (1, 2, 3):
                if g.max_multiplicity <= k:
                    for t in range(0, 6):
                        assert oracles.naive_exists(n, edges, k, t) == \
                            oracles.dfs_exists(n, edges, k, t)
    assert checked > 7000
    assert time.monotonic() - start < 300


def test_degeneration(exhaustive10, random1000, named_graphs):
    graphs = [g for g in _all(exhaustive10, random1000, named_graphs)
              if g.is_simple() and g.edge_count <= 12]
    assert len(graphs) > 1500
    for g in graphs:
        _, edges = oracles.edge_list(g)
        proper = oracles.proper_index(edges)
        for k in sorted({max(g.max_degree, 1), 3}):
            assert chromatic_index_k_intersection(g, k).optimum == proper
        assert proper <= 4
        assert chromatic_index_k_intersection(g, 1).optimum == oracles.strong_index(edges)


def test_discharging_identities(exhaustive10, random1000, named_graphs):
    for g in _all(exhaustive10, random1000, named_graphs):
        if not g.is_connected():
            continue
        led = initial_charges(g)
        assert led.total_initial() == Fraction(-12)
        assert apply_rules(g, led).total_final() == Fraction(-12)
    c6 = corpus.cycle(6)
    led = final_charges(c6)
    for v in c6.vertices():
        assert led.initial[("v", v)] == -2
        gifts = [x.amount for x in led.transfers if x.target == ("v", v)]
        assert gifts == [1, 1]
        assert led.final[("v", v)] == 0
    g = parse_graph((DATA / "seven-face.graph").read_text())
    led = final_charges(g)
    assert len(g.faces[0]) == 7
    assert led.initial[("f", 0)] == 1
    assert sum(x.amount for x in led.transfers if x.source == ("f", 0)) == Fraction(3, 5)
    assert led.final[("f", 0)] == Fraction(2, 5)
    for k in range(8, 41):
        assert face_bound(k) > 0
        assert face_bound(k) == Fraction(k - 6) - k // 5 - Fraction(k // 2, 5)


def test_reducibility_certification():
    start = time.monotonic()
    desk = lab.verify_all(["3.2", "3.6", "3.7", "3.9", "3.10", "3.11", "4.1"], 2, 5, budget=600)
    for r in desk:
        assert r.certified and r.failing_count == 0 and r.total > 0, r.lemma
    assert time.monotonic() - start < 600
    extended = lab.verify_all(["4.2", "4.3", "5.1", "5.2"], 2, 5, budget=3600)
    recorded = {}
    for line in (ARTIFACTS / "lemma-reports.jsonl").read_text().splitlines():
        rec = json.loads(line)
        recorded[rec["lemma"]] = rec
    for r in extended:
        assert r.certified, r.lemma
        assert recorded[r.lemma]["total"] == r.total
        assert recorded[r.lemma]["certified"]
    control = lab.verify_all(["3.9"], 2, 4)[0]
    assert not control.certified
    assert control.failing_count >= 1


def test_coupling(exhaustive10, random1000, named_graphs):
    for g in _all(exhaustive10, random1000, named_graphs):
        for comp in g.components():
            sub, _ = g.induced_component(comp)
            rep = audit(sub, cross_check=False)
            assert rep.negative, format_graph(sub)
            config = find_configuration(sub)
            assert config.kind.startswith("C")


def test_property_suites():
    import test_properties
    ran = 0
    for name in sorted(dir(test_properties)):
        if name.startswith("test_"):
            getattr(test_properties, name)()
            ran += 1
    assert ran >= 5
