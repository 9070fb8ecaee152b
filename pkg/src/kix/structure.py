"""Structural queries on plane multigraphs: cuts, short cycles, parallel pairs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from kix.graph import PlaneMultigraph


@dataclass(frozen=True, order=True)
class Cycle:
    """A cycle; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]`` (cyclically)."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


def two_vertices(g: PlaneMultigraph) -> list[int]:
    return [v for v in g.vertices() if g.degree(v) == 2]


def parallel_pairs(g: PlaneMultigraph) -> list[tuple[int, int]]:
    out = []
    for u, v in g.adjacent_pairs():
        es = g.edges_between(u, v)
        if len(es) == 2:
            out.append(tuple(sorted(es)))
    return sorted(out)


def cut_edges(g: PlaneMultigraph) -> list[int]:
    """Edges whose removal disconnects their component.

    In a plane graph an edge is a bridge exactly when both of its sides lie
    on the same face.
    """
    return [e for e in g.edge_ids if len(set(g.faces_of_edge(e))) == 1]


def matching_2_edge_cuts(g: PlaneMultigraph) -> list[tuple[int, int]]:
    """Pairs of non-bridge edges with no common endpoint whose removal disconnects.

    Two non-bridge edges of a plane graph form a minimal cut exactly when they
    separate the same two faces.
    """
    groups: dict[frozenset, list[int]] = {}
    for e in g.edge_ids:
        fs = frozenset(g.faces_of_edge(e))
        if len(fs) == 2:
            groups.setdefault(fs, []).append(e)
    out = []
    for es in groups.values():
        for a, b in combinations(sorted(es), 2):
            if not set(g.ends(a)) & set(g.ends(b)):
                out.append((a, b))
    return sorted(out)


def _canonical(vertices: list[int], edges: list[int]) -> Cycle:
    n = len(vertices)
    i = vertices.index(min(vertices))
    fwd = Cycle(tuple(vertices[i:] + vertices[:i]), tuple(edges[i:] + edges[:i]))
    rv = [vertices[i]] + [vertices[(i - j) % n] for j in range(1, n)]
    re = [edges[(i - 1 - j) % n] for j in range(n)]
    return min(fwd, Cycle(tuple(rv), tuple(re)))


def cycles_of_length(g: PlaneMultigraph, n: int) -> list[Cycle]:
    """All cycles with exactly n edges (n >= 2), parallel edges told apart by id."""
    if n < 2:
        return []
    found: dict[frozenset, Cycle] = {}
    for s in g.vertices():
        path_v = [s]
        path_e: list[int] = []

        def extend(x: int) -> None:
            if len(path_v) == n:
                for e in g.incident(x):
                    if g.other_end(e, x) == s and e != path_e[0]:
                        key = frozenset(path_e + [e])
                        if key not in found:
                            found[key] = _canonical(list(path_v), path_e + [e])
                return
            for e in g.incident(x):
                y = g.other_end(e, x)
                if y > s and y not in path_v:
                    path_v.append(y)
                    path_e.append(e)
                    extend(y)
                    path_v.pop()
                    path_e.pop()

        extend(s)
    return sorted(found.values())


def face_cycle_edge_sets(g: PlaneMultigraph) -> set[frozenset]:
    return {frozenset(f.edges) for f in g.faces if f.is_simple_cycle()}


def separating_cycles(g: PlaneMultigraph, n: int) -> list[Cycle]:
    """Cycles of length n that do not bound a face."""
    faces = face_cycle_edge_sets(g)
    return [c for c in cycles_of_length(g, n) if frozenset(c.edges) not in faces]


def third_neighbor(g: PlaneMultigraph, v: int, exclude: tuple[int, ...]) -> tuple[int, int] | None:
    """The unique (edge, neighbour) at v whose edge is not in ``exclude``."""
    rest = [e for e in g.incident(v) if e not in exclude]
    if len(rest) != 1:
        return None
    return rest[0], g.other_end(rest[0], v)
