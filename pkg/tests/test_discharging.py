from fractions import Fraction

import pytest

from conftest import DATA
from kix import corpus
from kix.discharging import (audit, explain, face_bound, final_charges, format_fraction,
                             initial_charges)
from kix.errors import Disconnected
from kix.graph import PlaneMultigraph
from kix.textio import parse_graph


def test_dodecahedron_faces_end_at_minus_one():
    g = corpus.dodecahedron()
    led = final_charges(g)
    for i in range(12):
        assert led.initial[("f", i)] == -1
        assert led.final[("f", i)] == -1
    assert all(led.final[("v", v)] == 0 for v in g.vertices())
    # every face gives and receives 1/5 across each of its five edges
    assert len([t for t in led.transfers if t.rule == "R2"]) == 60
    rep = audit(g)
    assert len(rep.negative) == 12
    assert {why for _, _, why in rep.negative} == {"C14"}
    assert rep.configuration.kind == "C14"


@pytest.mark.parametrize("name, kind, count, charge", [
    ("k4", "C5", 4, Fraction(-3)), ("cube", "C8", 6, Fraction(-2)),
])
def test_negative_faces_point_at_configurations(named_graphs, name, kind, count, charge):
    rep = audit(named_graphs[name])
    assert len(rep.negative) == count
    assert all(c == charge and why == kind for _, c, why in rep.negative)
    assert rep.configuration.kind == kind
    assert not rep.all_nonnegative


def test_cycle_two_vertices():
    g = corpus.cycle(6)
    led = final_charges(g)
    assert [led.final[("f", i)] for i in range(2)] == [-6, -6]
    assert explain(g, ("v", 0)) == "C2"


def test_seven_face_fixture():
    g = parse_graph((DATA / "seven-face.graph").read_text())
    led = final_charges(g)
    gifts = sorted(t.amount for t in led.transfers if t.source == ("f", 0))
    assert gifts == [Fraction(1, 5)] * 3
    assert led.final[("f", 0)] == Fraction(2, 5)


def test_face_bound_values():
    assert face_bound(8) == Fraction(1, 5)
    assert face_bound(9) == Fraction(6, 5)
    assert face_bound(10) == Fraction(1)


def test_disconnected_rejected():
    two = PlaneMultigraph.build(2, [], [[], []])
    with pytest.raises(Disconnected):
        initial_charges(two)
    with pytest.raises(Disconnected):
        audit(PlaneMultigraph.build(0, [], []))


def test_format_fraction():
    assert format_fraction(Fraction(2, 5)) == "2/5"
    assert format_fraction(Fraction(-1)) == "-1/1"
    assert format_fraction(Fraction(6, 4)) == "3/2"
