"""Plane multigraphs given by a rotation system.

A graph has vertices 0..n-1 and edges with arbitrary distinct non-negative
integer ids.  Each vertex carries the cyclic order of its incident edge ids.
Faces are traced with the rule: after arriving at a vertex along edge e,
leave along the edge preceding e in that vertex's rotation.

A dart is a pair (edge id, direction); direction 0 runs from the first
listed endpoint to the second, direction 1 the other way.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from kix.errors import (
    BadRotation,
    DegreeExceeded,
    GraphError,
    LoopEdge,
    MultiplicityExceeded,
    NonPlanarEmbedding,
    NotOnFace,
)

MAX_DEGREE = 3
MAX_MULTIPLICITY = 2

Dart = tuple[int, int]


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of one face.

    ``darts`` lists the traversed edge sides in order; ``vertices[i]`` is the
    tail of ``darts[i]``.  An isolated vertex owns a single empty walk whose
    ``anchor`` is that vertex.
    """

    darts: tuple[Dart, ...]
    vertices: tuple[int, ...]
    anchor: int

    def __len__(self) -> int:
        return len(self.darts)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.darts)

    def is_simple_cycle(self) -> bool:
        return len(self.darts) >= 2 and len(set(self.vertices)) == len(self.vertices)


class PlaneMultigraph:
    """Immutable, validated plane multigraph (subcubic, multiplicity <= 2)."""

    __slots__ = (
        "_n", "_ends", "_rot", "_edge_ids", "_faces", "_dart_face",
        "_nbrs", "_between", "_comp", "_hash",
    )

    def __init__(self, vertex_count: int, edges: Mapping[int, tuple[int, int]],
                 rotation: Sequence[Sequence[int]]):
        self._n = vertex_count
        self._ends = dict(edges)
        self._rot = tuple(tuple(r) for r in rotation)
        self._edge_ids = tuple(sorted(self._ends))
        self._validate_local()
        self._faces, self._dart_face = self._trace()
        self._nbrs = tuple(
            tuple(sorted({self.other_end(e, v) for e in self._rot[v]}))
            for v in range(self._n))
        between: dict[tuple[int, int], list[int]] = {}
        for e in self._edge_ids:
            u, v = self._ends[e]
            between.setdefault((min(u, v), max(u, v)), []).append(e)
        self._between = {p: tuple(es) for p, es in between.items()}
        self._comp = self._components()
        self._check_euler()
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def build(cls, vertex_count: int, edge_list: Iterable[Sequence[int]],
              rotation: Sequence[Sequence[int]] | Mapping[int, Sequence[int]]) -> "PlaneMultigraph":
        """Build from ``(id, u, v)`` triples and per-vertex rotations."""
        if vertex_count < 0:
            raise GraphError("negative vertex count")
        ends: dict[int, tuple[int, int]] = {}
        for item in edge_list:
            eid, u, v = (int(x) for x in item)
            if eid < 0:
                raise GraphError(f"negative edge id {eid}")
            if eid in ends:
                raise GraphError(f"duplicate edge id {eid}")
            for x in (u, v):
                if not 0 <= x < vertex_count:
                    raise GraphError(f"edge {eid} endpoint {x} out of range")
            ends[eid] = (u, v)
        if isinstance(rotation, Mapping):
            extra = set(rotation) - set(range(vertex_count))
            if extra:
                raise BadRotation(f"rotation given for unknown vertices {sorted(extra)}")
            rot = [list(rotation.get(v, ())) for v in range(vertex_count)]
        else:
            rot = [list(r) for r in rotation]
            if len(rot) != vertex_count:
                raise BadRotation("rotation list length differs from vertex count")
        return cls(vertex_count, ends, rot)

    def _validate_local(self) -> None:
        incident: list[list[int]] = [[] for _ in range(self._n)]
        pairs: dict[tuple[int, int], int] = {}
        for e in self._edge_ids:
            u, v = self._ends[e]
            if u == v:
                raise LoopEdge(f"edge {e} is a loop at vertex {u}")
            key = (min(u, v), max(u, v))
            pairs[key] = pairs.get(key, 0) + 1
            if pairs[key] > MAX_MULTIPLICITY:
                raise MultiplicityExceeded(f"vertices {key[0]} and {key[1]} joined by {pairs[key]} edges")
            incident[u].append(e)
            incident[v].append(e)
        for v in range(self._n):
            if len(incident[v]) > MAX_DEGREE:
                raise DegreeExceeded(f"vertex {v} has degree {len(incident[v])}")
            if sorted(self._rot[v]) != sorted(incident[v]):
                raise BadRotation(f"rotation at vertex {v} is {list(self._rot[v])}, "
                                  f"incident edges are {sorted(incident[v])}")

    def _trace(self):
        pos = [{e: i for i, e in enumerate(r)} for r in self._rot]
        dart_face: dict[Dart, int] = {}
        faces: list[FaceWalk] = []
        for e in self._edge_ids:
            for d in (0, 1):
                if (e, d) in dart_face:
                    continue
                idx = len(faces)
                darts, verts = [], []
                cur = (e, d)
                while cur not in dart_face:
                    dart_face[cur] = idx
                    darts.append(cur)
                    ce, cd = cur
                    u, v = self._ends[ce]
                    tail, head = (u, v) if cd == 0 else (v, u)
                    verts.append(tail)
                    r = self._rot[head]
                    nxt = r[pos[head][ce] - 1]
                    cur = (nxt, 0 if self._ends[nxt][0] == head else 1)
                if cur != (e, d):
                    raise BadRotation("face tracing did not close up")
                faces.append(FaceWalk(tuple(darts), tuple(verts), verts[0]))
        for v in range(self._n):
            if not self._rot[v]:
                faces.append(FaceWalk((), (), v))
        return tuple(faces), dart_face

    def _components(self) -> tuple[int, ...]:
        comp = [-1] * self._n
        c = 0
        for s in range(self._n):
            if comp[s] >= 0:
                continue
            comp[s] = c
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._nbrs[x]:
                    if comp[y] < 0:
                        comp[y] = c
                        queue.append(y)
            c += 1
        return tuple(comp)

    def _check_euler(self) -> None:
        ncomp = max(self._comp, default=-1) + 1
        vc = [0] * ncomp
        ec = [0] * ncomp
        fc = [0] * ncomp
        for v in range(self._n):
            vc[self._comp[v]] += 1
        for e in self._edge_ids:
            ec[self._comp[self._ends[e][0]]] += 1
        for f in self._faces:
            fc[self._comp[f.anchor]] += 1
        for c in range(ncomp):
            if vc[c] - ec[c] + fc[c] != 2:
                raise NonPlanarEmbedding(
                    f"component {c}: V - E + F = {vc[c]} - {ec[c]} + {fc[c]} != 2")

    # -- basic queries ------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edge_ids)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return self._edge_ids

    def vertices(self) -> range:
        return range(self._n)

    def ends(self, e: int) -> tuple[int, int]:
        return self._ends[e]

    def other_end(self, e: int, v: int) -> int:
        a, b = self._ends[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def rotation(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    def incident(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Distinct neighbours, sorted."""
        return self._nbrs[v]

    def edges_between(self, u: int, v: int) -> tuple[int, ...]:
        return self._between.get((min(u, v), max(u, v)), ())

    def multiplicity(self, u: int, v: int) -> int:
        return len(self.edges_between(u, v))

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        return sorted(self._between)

    @property
    def max_multiplicity(self) -> int:
        return max((len(es) for es in self._between.values()), default=0)

    @property
    def max_degree(self) -> int:
        return max((len(r) for r in self._rot), default=0)

    def is_simple(self) -> bool:
        return self.max_multiplicity <= 1

    # -- faces and components -----------------------------------------

    @property
    def faces(self) -> tuple[FaceWalk, ...]:
        return self._faces

    def face_of(self, dart: Dart) -> int:
        return self._dart_face[dart]

    def faces_of_edge(self, e: int) -> tuple[int, int]:
        return self._dart_face[(e, 0)], self._dart_face[(e, 1)]

    def component_of(self, v: int) -> int:
        return self._comp[v]

    def components(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v in range(self._n):
            out.setdefault(self._comp[v], []).append(v)
        return [out[c] for c in sorted(out)]

    def is_connected(self) -> bool:
        return self._n == 0 or max(self._comp) == 0

    def induced_component(self, vertices: Sequence[int]) -> tuple["PlaneMultigraph", list[int]]:
        """Return the subgraph on a union of components, renumbered densely.

        Edge ids are kept.  The second value maps new vertex ids to old ones.
        """
        old = sorted(vertices)
        new_of = {v: i for i, v in enumerate(old)}
        ends = {}
        for v in old:
            for e in self._rot[v]:
                a, b = self._ends[e]
                if a not in new_of or b not in new_of:
                    raise GraphError("vertex set is not closed under adjacency")
                ends[e] = (new_of[a], new_of[b])
        rot = [self._rot[v] for v in old]
        return PlaneMultigraph(len(old), ends, rot), old

    # -- identity -----------------------------------------------------

    def _key(self):
        rots = []
        for r in self._rot:
            if r:
                i = r.index(min(r))
                r = r[i:] + r[:i]
            rots.append(r)
        return self._n, tuple(sorted(self._ends.items())), tuple(rots)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlaneMultigraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"PlaneMultigraph(V={self._n}, E={self.edge_count}, F={len(self._faces)})"


def build(vertex_count, edge_list, rotation) -> PlaneMultigraph:
    return PlaneMultigraph.build(vertex_count, edge_list, rotation)


def trace_faces(g: PlaneMultigraph) -> list[FaceWalk]:
    return list(g.faces)


def distance(g: PlaneMultigraph, u: int, v: int) -> float:
    """Number of edges on a shortest u-v path; ``math.inf`` if none."""
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen:
                seen[y] = seen[x] + 1
                if y == v:
                    return seen[y]
                queue.append(y)
    return math.inf


def bfs_distances(g: PlaneMultigraph, source: int, limit: int | None = None) -> dict[int, int]:
    seen = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if limit is not None and seen[x] >= limit:
            continue
        for y in g.neighbors(x):
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return seen


def boundary_distance(face: FaceWalk, u: int, v: int) -> int:
    """Shortest distance between u and v walking along the face boundary."""
    pu = [i for i, x in enumerate(face.vertices) if x == u]
    pv = [i for i, x in enumerate(face.vertices) if x == v]
    if not pu or not pv:
        missing = u if not pu else v
        raise NotOnFace(f"vertex {missing} does not occur on the face")
    n = len(face.vertices)
    return min(min(abs(i - j), n - abs(i - j)) for i in pu for j in pv)
