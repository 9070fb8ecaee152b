"""Local rotation-system surgery used to build reduced graphs.

Vertices and edges are deleted, optional new vertices ("hubs") are added, and
new edges are routed along deleted paths: each end of a new edge occupies the
rotation slot of a deleted edge end at a surviving vertex, or at the host
vertex a hub replaces.  Because every new edge follows an old curve, the
result is again plane; it is re-validated anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from kix.errors import BindingInvalid, GraphError
from kix.graph import PlaneMultigraph


@dataclass(frozen=True)
class End:
    """One end of a new edge.

    ``hub`` is None for a surviving vertex ``vertex``; otherwise it is the
    index of a hub and ``vertex`` is ignored.  ``slot`` is the deleted edge
    whose rotation position is reused (at ``vertex``, or at the hub's host);
    it may be None only at a hub without host.
    """

    vertex: int | None
    slot: int | None
    hub: int | None = None


def at(vertex: int, slot: int) -> End:
    return End(vertex, slot)


def hub(index: int, slot: int | None = None) -> End:
    return End(None, slot, index)


@dataclass(frozen=True)
class SurgeryResult:
    graph: PlaneMultigraph
    vertex_map: dict[int, int]
    hub_vertices: tuple[int, ...]
    new_edges: tuple[int, ...]


def operate(g: PlaneMultigraph, delete_vertices: Sequence[int] = (),
            delete_edges: Sequence[int] = (), hubs: Sequence[int | None] = (),
            new_edges: Sequence[tuple[End, End]] = ()) -> SurgeryResult:
    """Apply the surgery and return the validated result.

    ``hubs`` lists, per hub, the deleted vertex whose rotation it inherits (or
    None for a hub placed freely, whose edges are ordered as listed).
    """
    dead_v = set(delete_vertices)
    dead_e = set(delete_edges)
    for v in dead_v:
        dead_e.update(g.incident(v))
    for h in hubs:
        if h is not None and h not in dead_v:
            raise BindingInvalid(f"hub host {h} is not deleted")
    base = max(g.edge_ids, default=-1) + 1
    slots: dict[tuple, int] = {}
    free_hub_edges: dict[int, list[int]] = {}
    new_ends: list[tuple[End, End]] = list(new_edges)
    for i, pair in enumerate(new_ends):
        eid = base + i
        for end in pair:
            if end.hub is None:
                if end.vertex in dead_v:
                    raise BindingInvalid(f"new edge ends at deleted vertex {end.vertex}")
                key = ("v", end.vertex, end.slot)
                owner = end.vertex
            else:
                if hubs[end.hub] is None:
                    free_hub_edges.setdefault(end.hub, []).append(eid)
                    continue
                key = ("h", end.hub, end.slot)
                owner = hubs[end.hub]
            if end.slot not in dead_e or end.slot not in g.incident(owner):
                raise BindingInvalid(f"slot {end.slot} is not a deleted edge at vertex {owner}")
            if key in slots:
                raise BindingInvalid(f"slot {end.slot} at vertex {owner} used twice")
            slots[key] = eid
    kept = [v for v in g.vertices() if v not in dead_v]
    vmap = {v: i for i, v in enumerate(kept)}
    hub_ids = tuple(len(kept) + i for i in range(len(hubs)))
    rot: list[list[int]] = []
    for v in kept:
        r = []
        for e in g.rotation(v):
            if e in dead_e:
                if ("v", v, e) in slots:
                    r.append(slots[("v", v, e)])
            else:
                r.append(e)
        rot.append(r)
    for i, host in enumerate(hubs):
        if host is None:
            rot.append(list(free_hub_edges.get(i, [])))
        else:
            rot.append([slots[("h", i, e)] for e in g.rotation(host) if ("h", i, e) in slots])
    ends = {e: (vmap[g.ends(e)[0]], vmap[g.ends(e)[1]]) for e in g.edge_ids if e not in dead_e}

    def place(end: End) -> int:
        return vmap[end.vertex] if end.hub is None else hub_ids[end.hub]

    for i, (a, b) in enumerate(new_ends):
        ends[base + i] = (place(a), place(b))
    try:
        graph = PlaneMultigraph(len(rot), ends, rot)
    except GraphError as exc:
        raise BindingInvalid(f"reduced graph is invalid: {exc}") from exc
    return SurgeryResult(graph, vmap, hub_ids, tuple(base + i for i in range(len(new_ends))))
