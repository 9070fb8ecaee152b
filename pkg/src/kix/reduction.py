"""Reducible configurations, graph reductions with lift maps, and the 5-coloring driver.

Configurations are tried in the fixed order C1..C15:

    C1  parallel pair                 C9   2-vertices at distance 3
    C2  vertex of degree <= 1         C10  2-vertices 4 apart on a face
    C3  cut edge                      C11  2-vertex on a 5-cycle
    C4  matching 2-edge cut           C12  2-vertex on a 6-cycle
    C5  triangle                      C13  2-vertex on a 7-face
    C6  2-vertices at distance <= 2   C14  two 5-faces sharing an edge
    C7  4-cycle with a 2-vertex       C15  a 5-face sharing an edge with a 6-face
        (or a separating 4/5-cycle)
    C8  4-cycle

Each reduction deletes the configuration, possibly adds edges and hub
vertices routed through it, and records how colors of the reduced graph are
copied back.  The remaining edges are colored by exhaustive local search.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterator, Sequence

from kix.coloring import PartialColoring, check_multiplicity, find_violation
from kix.errors import BindingInvalid, ExtensionFailed, LiftNotGood, NoConfigurationFound
from kix.graph import PlaneMultigraph, bfs_distances
from kix.solver import exists_good_coloring, extend_exhaustive
from kix.structure import (
    cut_edges,
    cycles_of_length,
    matching_2_edge_cuts,
    parallel_pairs,
    separating_cycles,
    third_neighbor,
)
from kix.surgery import at, hub, operate

KINDS = tuple(f"C{i}" for i in range(1, 16))
BASE_THRESHOLD = 8
K, T = 2, 5


@dataclass(frozen=True, order=True)
class Configuration:
    """A bound configuration: the role-ordered vertices and edges of one pattern."""

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    variant: str = ""

    def sort_key(self):
        return (self.vertices, self.edges)


@dataclass(frozen=True)
class ReductionStep:
    original: PlaneMultigraph
    config: Configuration
    reduced: PlaneMultigraph
    vertex_map: dict
    lift_map: tuple[tuple[int, tuple[int, ...]], ...]
    uncolored: tuple[int, ...]
    merge_edges: frozenset = frozenset()
    hub_vertices: tuple[int, ...] = ()


@dataclass
class TraceStep:
    kind: str
    variant: str
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    vertex_count: int
    edge_count: int
    depth: int

    def format(self) -> str:
        vs = ",".join(map(str, self.vertices))
        es = ",".join(map(str, self.edges))
        return (f"trace depth={self.depth} kind={self.kind} variant={self.variant or '-'} "
                f"vertices={vs} edges={es} V={self.vertex_count} E={self.edge_count}")


# -- helpers ----------------------------------------------------------------

def _cycle_labelings(vs: Sequence[int], es: Sequence[int]):
    """All (vertices, edges) relabelings of a cycle; es[i] joins vs[i] and vs[i+1]."""
    n = len(vs)
    for s in range(n):
        yield (tuple(vs[(s + j) % n] for j in range(n)),
               tuple(es[(s + j) % n] for j in range(n)))
        yield (tuple(vs[(s - j) % n] for j in range(n)),
               tuple(es[(s - 1 - j) % n] for j in range(n)))


def _face_path(g: PlaneMultigraph, face_index: int, start: int, end: int, steps: int):
    """Walk along a simple face from start to end in the given number of steps."""
    f = g.faces[face_index]
    vs, es = f.vertices, f.edges
    n = len(vs)
    if start not in vs:
        return None
    i = vs.index(start)
    if vs[(i + steps) % n] == end:
        return [vs[(i + j) % n] for j in range(steps + 1)], [es[(i + j) % n] for j in range(steps)]
    if vs[(i - steps) % n] == end:
        return [vs[(i - j) % n] for j in range(steps + 1)], [es[(i - 1 - j) % n] for j in range(steps)]
    return None


def _third(g: PlaneMultigraph, v: int, exclude: Sequence[int]) -> tuple[int, int]:
    found = third_neighbor(g, v, tuple(exclude))
    if found is None:
        raise BindingInvalid(f"vertex {v} does not have exactly one edge off the configuration")
    return found


def _cycle_thirds(g, xs, es, skip=()):
    """Third (edge, neighbour) at each cycle vertex, None at indices in skip."""
    n = len(xs)
    out = []
    for i in range(n):
        if i in skip:
            out.append(None)
            continue
        if g.degree(xs[i]) != 3:
            raise BindingInvalid(f"vertex {xs[i]} is not a 3-vertex")
        out.append(_third(g, xs[i], (es[i - 1], es[i % n])))
    return out


def _simple_faces(g: PlaneMultigraph, length: int):
    return [i for i, f in enumerate(g.faces) if len(f) == length and f.is_simple_cycle()]


def _side(g: PlaneMultigraph, start: int, removed: set) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for e in g.incident(x):
            if e in removed:
                continue
            y = g.other_end(e, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


# -- finders ----------------------------------------------------------------

def _find_c1(g):
    out = []
    for e1, e2 in parallel_pairs(g):
        u, v = sorted(g.ends(e1))
        common = (set(g.neighbors(u)) & set(g.neighbors(v))) - {u, v}
        out.append(Configuration("C1", (u, v), (e1, e2), "common-neighbour" if common else "contract"))
    return out


def _find_c2(g):
    return [Configuration("C2", (v,), tuple(g.incident(v)), "pendant" if g.degree(v) else "isolated")
            for v in g.vertices() if g.degree(v) <= 1]


def _find_c3(g):
    out = []
    for e in cut_edges(g):
        u, v = sorted(g.ends(e))
        if g.degree(u) >= 2 and g.degree(v) >= 2:
            out.append(Configuration("C3", (u, v), (e,)))
    return out


def _find_c4(g):
    out = []
    for a, b in matching_2_edge_cuts(g):
        lo = min(g.ends(a) + g.ends(b))
        side = _side(g, lo, {a, b})
        a1 = next(x for x in g.ends(a) if x in side)
        a2 = next(x for x in g.ends(b) if x in side)
        b1 = g.other_end(a, a1)
        b2 = g.other_end(b, a2)
        if b1 in side or b2 in side:
            continue
        out.append(Configuration("C4", (a1, a2, b1, b2), (a, b)))
    return out


def _find_c5(g):
    out = []
    for cyc in cycles_of_length(g, 3):
        vs = cyc.vertices
        edge_of = {frozenset((vs[i], vs[(i + 1) % 3])): cyc.edges[i] for i in range(3)}

        def edges_for(x, y, z):
            return (edge_of[frozenset((x, y))], edge_of[frozenset((x, z))], edge_of[frozenset((y, z))])

        twos = [v for v in vs if g.degree(v) == 2]
        if twos:
            x = min(twos)
            y, z = sorted(v for v in vs if v != x)
            out.append(Configuration("C5", (x, y, z), edges_for(x, y, z), "two-vertex"))
            continue
        best = None
        for x in vs:
            for y, z in permutations([v for v in vs if v != x]):
                try:
                    _, y1 = _third(g, y, (edge_of[frozenset((x, y))], edge_of[frozenset((y, z))]))
                    _, z1 = _third(g, z, (edge_of[frozenset((x, z))], edge_of[frozenset((y, z))]))
                except BindingInvalid:
                    continue
                if y1 != z1 and (best is None or (x, y, z) < best):
                    best = (x, y, z)
        if best is None:
            x, y, z = sorted(vs)
            out.append(Configuration("C5", (x, y, z), edges_for(x, y, z), "degenerate"))
        else:
            out.append(Configuration("C5", best, edges_for(*best), "cubic"))
    return out


def _find_c6(g):
    out = []
    for u, v in g.adjacent_pairs():
        if g.degree(u) == 2 and g.degree(v) == 2:
            out.append(Configuration("C6", (u, v), g.edges_between(u, v), "adjacent"))
    for v in g.vertices():
        simple_nbrs = [w for w in g.neighbors(v) if g.multiplicity(v, w) == 1]
        twos = [w for w in simple_nbrs if g.degree(w) == 2]
        if len(twos) < 2:
            continue
        if g.degree(v) == 3 and len(twos) == 3:
            out.append(Configuration("C6", (v,) + tuple(twos),
                                     tuple(g.edges_between(v, w)[0] for w in twos), "apex-three"))
            continue
        for x, y in combinations(twos, 2):
            out.append(Configuration("C6", (v, x, y),
                                     (g.edges_between(v, x)[0], g.edges_between(v, y)[0]), "apex"))
    return out


def _find_c7(g):
    out = []
    for cyc in cycles_of_length(g, 4):
        labs = [(vs, es) for vs, es in _cycle_labelings(cyc.vertices, cyc.edges) if g.degree(vs[0]) == 2]
        if labs:
            vs, es = min(labs)
            out.append(Configuration("C7", vs, es, "two-vertex-4-cycle"))
    if out:
        return out
    for n in (4, 5):
        for cyc in separating_cycles(g, n):
            out.append(Configuration("C7", cyc.vertices, cyc.edges, "separating"))
    return out


def _find_c8(g):
    return [Configuration("C8", *min(_cycle_labelings(c.vertices, c.edges)))
            for c in cycles_of_length(g, 4)]


def _find_c9(g):
    out = set()
    twos = [v for v in g.vertices() if g.degree(v) == 2]
    two_set = set(twos)
    for a in twos:
        dist = bfs_distances(g, a, limit=3)
        for e1 in g.incident(a):
            p = g.other_end(e1, a)
            for e2 in g.incident(p):
                q = g.other_end(e2, p)
                if q in (a, p) or e2 == e1:
                    continue
                for e3 in g.incident(q):
                    b = g.other_end(e3, q)
                    if b in (a, p, q) or b not in two_set or dist.get(b) != 3:
                        continue
                    fwd = ((a, p, q, b), (e1, e2, e3))
                    rev = ((b, q, p, a), (e3, e2, e1))
                    out.add(min(fwd, rev))
    return [Configuration("C9", vs, es) for vs, es in out]


def _find_c10(g):
    out = set()
    for fi, f in enumerate(g.faces):
        n = len(f)
        if n < 8 or not f.is_simple_cycle():
            continue
        vs, es = f.vertices, f.edges
        for i in range(n):
            if g.degree(vs[i]) != 2 or g.degree(vs[(i + 4) % n]) != 2:
                continue
            xs = tuple(vs[(i - 1 + j) % n] for j in range(7))
            ex = tuple(es[(i - 1 + j) % n] for j in range(6))
            rev = (xs[::-1], ex[::-1])
            out.add(min((xs, ex), rev))
    return [Configuration("C10", vs, es) for vs, es in out]


def _two_vertex_cycles(g, kind, cycles):
    out = []
    for vs0, es0 in cycles:
        labs = [(vs, es) for vs, es in _cycle_labelings(vs0, es0) if g.degree(vs[0]) == 2]
        if labs:
            out.append(Configuration(kind, *min(labs)))
    return out


def _find_c11(g):
    return _two_vertex_cycles(g, "C11", [(c.vertices, c.edges) for c in cycles_of_length(g, 5)])


def _find_c12(g):
    return _two_vertex_cycles(g, "C12", [(c.vertices, c.edges) for c in cycles_of_length(g, 6)])


def _find_c13(g):
    faces = [g.faces[i] for i in _simple_faces(g, 7)]
    return _two_vertex_cycles(g, "C13", [(f.vertices, f.edges) for f in faces])


def _adjacent_face_bindings(g, kind, len_a, len_b):
    out = []
    for e in g.edge_ids:
        f0, f1 = g.faces_of_edge(e)
        if f0 == f1:
            continue
        la, lb = len(g.faces[f0]), len(g.faces[f1])
        if not (g.faces[f0].is_simple_cycle() and g.faces[f1].is_simple_cycle()):
            continue
        best = None
        for fa, fb in ((f0, f1), (f1, f0)):
            if len(g.faces[fa]) != len_a or len(g.faces[fb]) != len_b:
                continue
            for x0 in g.ends(e):
                xm = g.other_end(e, x0)
                pa = _face_path(g, fa, x0, xm, len_a - 1)
                pb = _face_path(g, fb, xm, x0, len_b - 1)
                if pa is None or pb is None:
                    continue
                xs = tuple(pa[0] + pb[0][1:-1])
                es = tuple(pa[1] + pb[1]) + (e,)
                if len(set(xs)) != len(xs):
                    continue
                if best is None or (xs, es) < best:
                    best = (xs, es)
        if best is not None and (la, lb) in ((len_a, len_b), (len_b, len_a)):
            out.append(Configuration(kind, *best))
    return out


def _find_c14(g):
    return _adjacent_face_bindings(g, "C14", 5, 5)


def _find_c15(g):
    return _adjacent_face_bindings(g, "C15", 6, 5)


FINDERS: dict[str, Callable[[PlaneMultigraph], list[Configuration]]] = {
    "C1": _find_c1, "C2": _find_c2, "C3": _find_c3, "C4": _find_c4, "C5": _find_c5,
    "C6": _find_c6, "C7": _find_c7, "C8": _find_c8, "C9": _find_c9, "C10": _find_c10,
    "C11": _find_c11, "C12": _find_c12, "C13": _find_c13, "C14": _find_c14, "C15": _find_c15,
}


def find_all(g: PlaneMultigraph, kind: str) -> list[Configuration]:
    """Every binding of one kind, sorted."""
    return sorted(set(FINDERS[kind](g)), key=Configuration.sort_key)


def find_configuration(g: PlaneMultigraph) -> Configuration:
    """First configuration in priority order; least binding within the kind."""
    for kind in KINDS:
        found = FINDERS[kind](g)
        if found:
            return min(found, key=Configuration.sort_key)
    from kix.discharging import audit
    report = audit(g, cross_check=False) if g.is_connected() and g.vertex_count else None
    raise NoConfigurationFound("no reducible configuration found", report=report)


def validate(g: PlaneMultigraph, config: Configuration) -> None:
    if config.kind not in FINDERS or config not in set(FINDERS[config.kind](g)):
        raise BindingInvalid(f"{config} does not match a {config.kind} pattern in the graph")


# -- reductions -------------------------------------------------------------

def _step(g, config, *, delete_vertices=(), delete_edges=(), hubs=(), new_edges=(),
          lifts=(), uncolored=(), merge_root=None) -> ReductionStep:
    res = operate(g, delete_vertices, delete_edges, hubs, new_edges)
    reduced = res.graph
    kept = set(reduced.edge_ids)
    lift_map = [(e, (e,)) for e in g.edge_ids if e in kept]
    lift_map += [(ne, tuple(lifts[i]) if i < len(lifts) else ()) for i, ne in enumerate(res.new_edges)]
    merge = frozenset()
    if merge_root is not None:
        comp = reduced.component_of(res.vertex_map[merge_root])
        merge = frozenset(e for e in reduced.edge_ids if reduced.component_of(reduced.ends(e)[0]) == comp)
    return ReductionStep(g, config, reduced, res.vertex_map, tuple(lift_map), tuple(uncolored),
                         merge, res.hub_vertices)


def _reduce_c1(g, c):
    u, v = c.vertices
    e1, e2 = c.edges
    if c.variant == "common-neighbour":
        return _step(g, c, delete_edges=(e1, e2), uncolored=(e1, e2))
    for a, b in ((u, v), (v, u)):
        if g.degree(a) == 3:
            ea, a1 = _third(g, a, (e1, e2))
            return _step(g, c, delete_vertices=(a,), new_edges=[(at(a1, ea), at(b, e1))],
                         lifts=[(ea,)], uncolored=(e1, e2))
    raise BindingInvalid("parallel pair with no third neighbour is a whole component")


def _reduce_c2(g, c):
    (v,) = c.vertices
    return _step(g, c, delete_vertices=(v,), uncolored=tuple(g.incident(v)))


def _reduce_c3(g, c):
    (e,) = c.edges
    v1, v2 = g.ends(e)
    if g.degree(v1) < 2 or g.degree(v2) < 2:
        raise BindingInvalid("cut edge at a vertex of degree 1")
    return _step(g, c, delete_edges=(e,), hubs=[None, None],
                 new_edges=[(at(v1, e), hub(0)), (at(v2, e), hub(1))],
                 uncolored=(e,), merge_root=v2)


def _reduce_c4(g, c):
    a1, a2, b1, b2 = c.vertices
    ea, eb = c.edges
    return _step(g, c, delete_edges=(ea, eb), hubs=[None, None],
                 new_edges=[(at(a1, ea), hub(0)), (at(a2, eb), hub(0)),
                            (at(b1, ea), hub(1)), (at(b2, eb), hub(1))],
                 uncolored=(ea, eb), merge_root=b1)


def _reduce_c5(g, c):
    x, y, z = c.vertices
    exy, exz, eyz = c.edges
    if c.variant == "two-vertex":
        return _step(g, c, delete_vertices=(x,), uncolored=(exy, exz))
    if c.variant != "cubic":
        raise BindingInvalid("triangle whose outside neighbours coincide")
    ex, _ = _third(g, x, (exy, exz))
    ey, y1 = _third(g, y, (exy, eyz))
    ez, z1 = _third(g, z, (exz, eyz))
    if y1 == z1:
        raise BindingInvalid("triangle labelled with coinciding outside neighbours")
    return _step(g, c, delete_vertices=(x, y, z), new_edges=[(at(y1, ey), at(z1, ez))],
                 lifts=[(ey, ez)], uncolored=(ex, exy, exz, eyz))


def _reduce_c6(g, c):
    if c.variant == "adjacent":
        e = c.edges[0]
        return _step(g, c, delete_edges=(e,), uncolored=(e,))
    if c.variant == "apex-three":
        v = c.vertices[0]
        return _step(g, c, delete_vertices=(v,), uncolored=c.edges)
    return _step(g, c, delete_edges=c.edges, uncolored=c.edges)


def _reduce_c7(g, c):
    if c.variant != "two-vertex-4-cycle":
        raise BindingInvalid("a separating cycle alone is not directly reducible")
    xs, es = c.vertices, c.edges
    thirds = _cycle_thirds(g, xs, es, skip=(0,))
    (e1, y1), (e2, y2), (e3, y3) = thirds[1], thirds[2], thirds[3]
    x2 = xs[2]
    return _step(g, c, delete_vertices=xs, hubs=[x2],
                 new_edges=[(hub(0, es[1]), at(y1, e1)), (hub(0, e2), at(y2, e2)),
                            (hub(0, es[2]), at(y3, e3))],
                 lifts=[(e1,), (e2,), (e3,)], uncolored=es)


def _reduce_c8(g, c):
    xs, es = c.vertices, c.edges
    th = _cycle_thirds(g, xs, es)
    return _step(g, c, delete_vertices=xs,
                 new_edges=[(at(th[0][1], th[0][0]), at(th[1][1], th[1][0])),
                            (at(th[2][1], th[2][0]), at(th[3][1], th[3][0]))],
                 lifts=[(th[0][0], th[1][0]), (th[2][0], th[3][0])], uncolored=es)


def _reduce_c9(g, c):
    a, p, q, b = c.vertices
    e1, e2, e3 = c.edges
    for v in (p, q):
        if g.degree(v) != 3:
            raise BindingInvalid(f"vertex {v} is not a 3-vertex")
    ep, yp = _third(g, p, (e1, e2))
    eq, yq = _third(g, q, (e2, e3))
    return _step(g, c, delete_vertices=(p, q), new_edges=[(at(yp, ep), at(yq, eq))],
                 lifts=[(ep, eq)], uncolored=(e1, e2, e3))


def _reduce_c10(g, c):
    xs, es = c.vertices, c.edges
    if len(set(xs)) != 7:
        raise BindingInvalid("path vertices are not distinct")
    th = {}
    for i in (2, 3, 4):
        if g.degree(xs[i]) != 3:
            raise BindingInvalid(f"vertex {xs[i]} is not a 3-vertex")
        th[i] = _third(g, xs[i], (es[i - 1], es[i]))
    x3 = xs[3]
    return _step(g, c, delete_vertices=xs[1:6], hubs=[x3],
                 new_edges=[(hub(0, es[2]), at(th[2][1], th[2][0])),
                            (hub(0, th[3][0]), at(th[3][1], th[3][0])),
                            (hub(0, es[3]), at(th[4][1], th[4][0])),
                            (at(xs[0], es[0]), at(xs[6], es[5]))],
                 lifts=[(th[2][0],), (th[3][0],), (th[4][0],), (es[0], es[5])],
                 uncolored=es[1:5])


def _pairs_reduction(g, c, pairs, extra_uncolored=()):
    """Delete the cycle and join y_i y_j for each index pair."""
    xs, es = c.vertices, c.edges
    th = _cycle_thirds(g, xs, es, skip=(0,))
    new_edges, lifts = [], []
    for i, j in pairs:
        new_edges.append((at(th[i][1], th[i][0]), at(th[j][1], th[j][0])))
        lifts.append((th[i][0], th[j][0]))
    extra = tuple(th[i][0] for i in extra_uncolored)
    return _step(g, c, delete_vertices=xs, new_edges=new_edges, lifts=lifts,
                 uncolored=tuple(es) + extra)


def _reduce_c11(g, c):
    return _pairs_reduction(g, c, [(1, 2), (3, 4)])


def _reduce_c12(g, c):
    return _pairs_reduction(g, c, [(1, 2), (4, 5)], extra_uncolored=(3,))


def _reduce_c13(g, c):
    return _pairs_reduction(g, c, [(1, 2), (3, 4), (5, 6)])


def _hub_edges(index, xs, es, th, i):
    """Hub edges from a hub hosted at xs[i] to the third neighbours of xs[i-1], xs[i], xs[i+1]."""
    return ([(hub(index, es[i - 1]), at(th[i - 1][1], th[i - 1][0])),
             (hub(index, th[i][0]), at(th[i][1], th[i][0])),
             (hub(index, es[i]), at(th[i + 1][1], th[i + 1][0]))],
            [(th[i - 1][0],), (th[i][0],), (th[i + 1][0],)])


def _reduce_c14(g, c):
    xs, es = c.vertices, c.edges
    cyc = es[:8]
    th = _cycle_thirds(g, xs, cyc, skip=(0, 4))
    for i in (0, 4):
        if g.degree(xs[i]) != 3:
            raise BindingInvalid(f"vertex {xs[i]} is not a 3-vertex")
    ne_u, lu = _hub_edges(0, xs, cyc, th, 2)
    ne_v, lv = _hub_edges(1, xs, cyc, th, 6)
    return _step(g, c, delete_vertices=xs, hubs=[xs[2], xs[6]], new_edges=ne_u + ne_v,
                 lifts=lu + lv, uncolored=es)


def _reduce_c15(g, c):
    xs, es = c.vertices, c.edges
    cyc = es[:9]
    th = _cycle_thirds(g, xs, cyc, skip=(0, 5))
    for i in (0, 5):
        if g.degree(xs[i]) != 3:
            raise BindingInvalid(f"vertex {xs[i]} is not a 3-vertex")
    new_edges = [(at(th[1][1], th[1][0]), at(th[2][1], th[2][0])),
                 (at(th[3][1], th[3][0]), at(th[4][1], th[4][0]))]
    lifts = [(th[1][0], th[2][0]), (th[3][0], th[4][0])]
    ne_x, lx = _hub_edges(0, xs, cyc, th, 7)
    return _step(g, c, delete_vertices=xs, hubs=[xs[7]], new_edges=new_edges + ne_x,
                 lifts=lifts + lx, uncolored=es)


REDUCERS = {
    "C1": _reduce_c1, "C2": _reduce_c2, "C3": _reduce_c3, "C4": _reduce_c4, "C5": _reduce_c5,
    "C6": _reduce_c6, "C7": _reduce_c7, "C8": _reduce_c8, "C9": _reduce_c9, "C10": _reduce_c10,
    "C11": _reduce_c11, "C12": _reduce_c12, "C13": _reduce_c13, "C14": _reduce_c14,
    "C15": _reduce_c15,
}


def reduce(g: PlaneMultigraph, config: Configuration) -> ReductionStep:
    validate(g, config)
    return REDUCERS[config.kind](g, config)


# -- lifting ----------------------------------------------------------------

def _lift_colors(step: ReductionStep, phi_reduced, perm=None) -> dict[int, int]:
    colors = {}
    for e_red, targets in step.lift_map:
        if e_red in phi_reduced:
            c = phi_reduced[e_red]
            if perm is not None and e_red in step.merge_edges:
                c = perm[c]
            for e in targets:
                colors[e] = c
    return colors


def lift_candidates(phi_reduced, step: ReductionStep, t: int = T) -> Iterator[PartialColoring]:
    """Good partial colorings of the original graph obtained from phi_reduced.

    Split reductions (cut edge, 2-edge cut) yield one candidate per color
    permutation of the second side, identity first.
    """
    perms = [None]
    if step.merge_edges:
        perms = [dict(zip(range(1, t + 1), p)) for p in permutations(range(1, t + 1))]
    for perm in perms:
        colors = _lift_colors(step, phi_reduced, perm)
        if find_violation(step.original, colors, K, t) is None:
            yield PartialColoring(t, colors)


def lift(phi_reduced, step: ReductionStep, t: int = T) -> PartialColoring:
    for cand in lift_candidates(phi_reduced, step, t):
        return cand
    bad = find_violation(step.original, _lift_colors(step, phi_reduced), K, t)
    pair = bad[1:3] if bad and bad[0] == "intersection" else bad
    raise LiftNotGood(f"lifted coloring is not good: {bad}", pair=pair)


# -- driver -----------------------------------------------------------------

@dataclass
class ColorRun:
    coloring: PartialColoring
    trace: list[TraceStep] = field(default_factory=list)


def color5(g: PlaneMultigraph, trace: list | None = None,
           observer: Callable[[ReductionStep, PartialColoring], None] | None = None) -> PartialColoring:
    """A good coloring with at most 5 colors (k = 2) of any valid input graph."""
    check_multiplicity(g, K)
    if trace is None:
        trace = []
    needed = 50 + 6 * (g.vertex_count + g.edge_count)
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    return PartialColoring(T, _color_any(g, trace, observer, 0))


def _color_any(g, trace, observer, depth) -> dict[int, int]:
    colors: dict[int, int] = {}
    comps = g.components()
    if len(comps) == 1:
        return _color_connected(g, trace, observer, depth)
    for comp in comps:
        sub, _ = g.induced_component(comp)
        colors.update(_color_connected(sub, trace, observer, depth))
    return colors


def _color_connected(g, trace, observer, depth) -> dict[int, int]:
    if g.vertex_count <= BASE_THRESHOLD:
        w = exists_good_coloring(g, K, T)
        if w is None:
            raise ExtensionFailed(f"base graph {g} has no good 5-coloring", trace)
        return dict(w)
    config = find_configuration(g)
    step = REDUCERS[config.kind](g, config)
    trace.append(TraceStep(config.kind, config.variant, config.vertices, config.edges,
                           g.vertex_count, g.edge_count, depth))
    sub = _color_any(step.reduced, trace, observer, depth + 1)
    any_lift = False
    for cand in lift_candidates(sub, step):
        any_lift = True
        if observer is not None:
            observer(step, cand)
        ext = extend_exhaustive(g, cand, step.uncolored, K, T)
        if ext is not None:
            return dict(ext)
    if not any_lift:
        lift(sub, step)
    raise ExtensionFailed(f"no extension after {config.kind} reduction at depth {depth}", trace)
