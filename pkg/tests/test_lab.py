import json

import pytest

import oracles
from kix import lab
from kix.errors import UnknownLemmaId
from kix.templates import FILTER_NAMES, LEMMA_IDS, MergeTemplate

# (lemma, part, t) -> (environment orbits, extendable orbits), computed by
# oracles.template_orbits (brute force over every class coloring and color set)
FROZEN = {
    ("3.1", "common-neighbour", 4): (2, 2), ("3.1", "common-neighbour", 5): (2, 2),
    ("3.1", "contract", 4): (29, 20), ("3.1", "contract", 5): (34, 34),
    ("3.2", "empty-endpoint", 4): (29, 28), ("3.2", "empty-endpoint", 5): (34, 34),
    ("3.3", "1-vertex", 4): (29, 28), ("3.3", "1-vertex", 5): (34, 34),
    ("3.6", "two-vertex", 4): (78, 75), ("3.6", "two-vertex", 5): (107, 107),
    ("3.6", "cubic", 4): (239, 212), ("3.6", "cubic", 5): (358, 358),
    ("3.7", "adjacent", 4): (42, 42), ("3.7", "adjacent", 5): (48, 48),
    ("3.7", "apex-three", 4): (969, 969), ("3.7", "apex-three", 5): (1682, 1682),
    ("3.7", "apex", 4): (969, 940), ("3.7", "apex", 5): (1682, 1682),
    ("3.9", "4-cycle", 4): (1475, 0), ("3.9", "4-cycle", 5): (3169, 3169),
    ("4.1", "5-cycle", 4): (1475, 1420), ("4.1", "5-cycle", 5): (3169, 3169),
}

# totals at k=2, t=5 for the larger templates (fast route, cross-checked by the
# direct route where it finishes)
FROZEN_TOTALS = {"3.4": 9, "3.5": 1156, "3.8": 532, "3.10": 15818, "3.11": 289708}


def _part(lemma_id, part):
    return next(p for p in lab.lemma(lemma_id).parts if p.part == part)


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_counts_match_frozen_oracle(key):
    lemma_id, part, t = key
    for route in ("fast", "direct"):
        r = lab.verify_reducible(_part(lemma_id, part), 2, t, route=route)
        assert (r.total, r.extendable) == FROZEN[key], route
        assert r.failing_count == r.total - r.extendable
        assert r.complete


@pytest.mark.parametrize("key", [("3.2", "empty-endpoint", 4), ("3.6", "two-vertex", 4),
                                 ("3.7", "apex", 4), ("3.1", "contract", 4)])
def test_oracle_recomputes_frozen_values(key):
    lemma_id, part, t = key
    assert oracles.template_orbits(_part(lemma_id, part), 2, t) == FROZEN[key]


@pytest.mark.parametrize("lemma_id", sorted(FROZEN_TOTALS))
def test_larger_totals(lemma_id):
    reports = lab.verify_lemma(lemma_id, 2, 5)
    assert reports.total == FROZEN_TOTALS[lemma_id]
    assert reports.certified


def test_enumeration_matches_counts():
    tpl = _part("3.6", "cubic")
    envs = list(lab.enumerate_environments(tpl, 2, 5))
    assert len(envs) == 358
    assert len(set(e.key() for e in envs)) == 358
    assert all(lab.canonical(e, 5) == lab.canonical(lab.canonical(e, 5), 5) for e in envs[:50])
    assert len({lab.canonical(e, 5).key() for e in envs}) == 358


def test_orbit_sizes_sum_to_raw_count():
    tpl = _part("3.2", "empty-endpoint")
    envs = list(lab.enumerate_environments(tpl, 2, 4))
    raw = sum(lab.orbit_size(e, 4) for e in envs)
    # a, b distinct; each U-set holds its class color plus up to two of the other three
    per_set = 1 + 3 + 3
    assert raw == 4 * 3 * per_set * per_set


def test_negative_control_lists_failures():
    r = lab.verify_lemma("3.9", 2, 4)
    assert not r.certified
    assert r.failing_count == 1475
    part = r.parts[0]
    assert len(part.failing) == lab.FAILURE_CAP
    env = part.failing[0]
    tpl = _part("3.9", "4-cycle")
    tr = lab.transcript(tpl, env, 2, 4)
    assert tr["extension"] is None
    assert tr["uncolored"] == ["x0x1", "x1x2", "x2x3", "x3x0"]
    assert all(tr["filters"].values())
    assert lab.is_admissible(tpl, env, 2, 4)
    json.dumps(tr)


def test_transcript_of_extendable_environment():
    tpl = _part("3.9", "4-cycle")
    env = next(iter(lab.enumerate_environments(tpl, 2, 5)))
    tr = lab.transcript(tpl, env, 2, 5)
    assert tr["extension"] is not None and len(tr["extension"]) == 4


def test_filters_are_conservative():
    # dropping filters can only add environments
    for lemma_id in ("3.6", "3.9", "4.1", "3.1"):
        on = lab.verify_lemma(lemma_id, 2, 5)
        off = lab.verify_lemma(lemma_id, 2, 5, disabled=FILTER_NAMES)
        assert off.total >= on.total
        assert off.extendable >= on.extendable
    on = lab.verify_lemma("3.9", 2, 5)
    off = lab.verify_lemma("3.9", 2, 5, disabled=FILTER_NAMES)
    assert (on.total, off.total) == (3169, 3540)


def test_added_edge_filter_is_needed_for_contraction():
    assert lab.required_filters("3.1") == {"common-neighbour": [], "contract": ["added-edge-proper"]}
    r = lab.verify_lemma("3.1", 2, 5, disabled=["added-edge-proper"])
    assert not r.certified


def test_inadmissible_environment():
    tpl = _part("3.9", "4-cycle")
    env = lab.Environment((("a", 1), ("b", 2)),
                          (("y0", (1, 3, 4)), ("y1", (1, 3, 4)), ("y2", (2,)), ("y3", (2,))))
    assert not lab.is_admissible(tpl, env, 2, 5)
    assert lab.is_admissible(tpl, env, 2, 5, disabled=["distinct-usets-across-added-edge"])


def test_merge_templates():
    for lemma_id, part in (("3.4", "cut-edge"), ("3.5", "2-edge-cut")):
        tpl = _part(lemma_id, part)
        assert isinstance(tpl, MergeTemplate)
        r = lab.verify_reducible(tpl, 2, 5)
        assert r.certified and r.total == FROZEN_TOTALS[lemma_id]


def test_registry_and_errors():
    assert set(LEMMA_IDS) >= {"3.1", "3.9", "5.1", "5.2"}
    assert lab.verify_all([]) == []
    with pytest.raises(UnknownLemmaId) as info:
        lab.lemma("9.9")
    assert str(info.value) == "no template registered for '9.9'"
    with pytest.raises(UnknownLemmaId):
        lab.verify_all(["3.2", "nope"])
    with pytest.raises(ValueError):
        lab.verify_reducible(_part("3.2", "empty-endpoint"), route="sideways")


def test_budget_marks_incomplete():
    r = lab.verify_reducible(_part("3.11", "boundary-distance-4"), 2, 5, budget=0.0)
    assert not r.complete and not r.certified


def test_parallel_jobs_agree():
    a = lab.verify_all(["3.2", "3.6", "3.7"], 2, 5)
    b = lab.verify_all(["3.2", "3.6", "3.7"], 2, 5, jobs=2)
    assert [(r.lemma, r.total, r.extendable) for r in a] == \
        [(r.lemma, r.total, r.extendable) for r in b]
