"""Exact k-intersection chromatic index and local extension search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from kix.coloring import PartialColoring, check_multiplicity, find_violation
from kix.errors import SizeLimit
from kix.graph import PlaneMultigraph
from kix.search import run_search

EDGE_LIMIT = 40


@dataclass(frozen=True)
class SolveResult:
    """Minimum palette size (None when infeasible), a witness, and search effort."""

    optimum: int | None
    witness: PartialColoring | None
    nodes: int


def solver_edge_order(g: PlaneMultigraph) -> list[int]:
    """Edges by descending endpoint degree sum, ties by id."""
    def key(e):
        u, v = g.ends(e)
        return (-(g.degree(u) + g.degree(v)), e)
    return sorted(g.edge_ids, key=key)


def _masks(g: PlaneMultigraph, phi) -> list[int]:
    masks = [0] * g.vertex_count
    for e, c in phi.items():
        u, v = g.ends(e)
        masks[u] |= 1 << c
        masks[v] |= 1 << c
    return masks


def search_good_coloring(g: PlaneMultigraph, k: int, t: int, symmetry: bool = True,
                         force: bool = False) -> tuple[PartialColoring | None, int]:
    """Complete search for a good total coloring; returns (witness, nodes)."""
    check_multiplicity(g, k)
    if g.edge_count > EDGE_LIMIT and not force:
        raise SizeLimit(f"{g.edge_count} edges exceeds the solver limit of {EDGE_LIMIT}")
    order = solver_edge_order(g)
    ends = [g.ends(e) for e in order]
    nbrs = [g.neighbors(v) for v in g.vertices()]
    colors, nodes = run_search(ends, [0] * g.vertex_count, nbrs, k, t, symmetry=symmetry)
    if colors is None:
        return None, nodes
    return PartialColoring(t, dict(zip(order, colors))), nodes


def exists_good_coloring(g: PlaneMultigraph, k: int, t: int, symmetry: bool = True,
                         force: bool = False) -> PartialColoring | None:
    return search_good_coloring(g, k, t, symmetry=symmetry, force=force)[0]


def chromatic_index_k_intersection(g: PlaneMultigraph, k: int, symmetry: bool = True,
                                   force: bool = False) -> SolveResult:
    """Smallest t admitting a good coloring, searched upward from the maximum degree."""
    check_multiplicity(g, k)
    if g.edge_count == 0:
        return SolveResult(0, PartialColoring(0), 0)
    total = 0
    t = g.max_degree
    while True:
        witness, nodes = search_good_coloring(g, k, t, symmetry=symmetry, force=force)
        total += nodes
        if witness is not None:
            return SolveResult(t, witness, total)
        t += 1


def extend_exhaustive(g: PlaneMultigraph, phi: PartialColoring, uncolored: Sequence[int],
                      k: int = 2, t: int = 5) -> PartialColoring | None:
    """Color the listed edges so the result stays good, or return None.

    The first extension in lexicographic order of the given edge sequence is
    returned.
    """
    uncolored = list(uncolored)
    if len(set(uncolored)) != len(uncolored) or any(e in phi for e in uncolored):
        raise ValueError("edges to extend must be distinct and uncolored")
    if find_violation(g, phi, k, t) is not None:
        return None
    ends = [g.ends(e) for e in uncolored]
    nbrs = [g.neighbors(v) for v in g.vertices()]
    colors, _ = run_search(ends, _masks(g, phi), nbrs, k, t)
    if colors is None:
        return None
    return PartialColoring(max(t, phi.t), {**phi, **dict(zip(uncolored, colors))})
