"""Named plane graphs and corpus generators.

Exhaustive mode lists every connected simple subcubic planar graph up to a
vertex count (isomorphism classes via nauty certificates, one embedding each
from networkx).  Random mode grows plane multigraphs by local operations on a
rotation system, so every step keeps the embedding planar.
"""

from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx
import pynauty

from kix.errors import GraphError, NonPlanarEmbedding, SizeLimit
from kix.graph import PlaneMultigraph
from kix.textio import format_graph

EXHAUSTIVE_LIMIT = 14


# -- embeddings -----------------------------------------------------------

def embed_simple(n: int, pairs: Sequence[tuple[int, int]]) -> PlaneMultigraph:
    """Plane embedding of a simple planar graph; edge ids follow ``pairs`` order."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    eid = {}
    for i, (u, v) in enumerate(pairs):
        if u == v or g.has_edge(u, v):
            raise GraphError(f"pair {(u, v)} is a loop or repeated")
        g.add_edge(u, v)
        eid[(u, v)] = eid[(v, u)] = i
    planar, emb = nx.check_planarity(g)
    if not planar:
        raise NonPlanarEmbedding("graph is not planar")
    rot = [[eid[(v, w)] for w in emb.neighbors_cw_order(v)] if g.degree(v) else []
           for v in range(n)]
    return PlaneMultigraph.build(n, [(i, u, v) for i, (u, v) in enumerate(pairs)], rot)


def from_networkx(g: nx.Graph) -> PlaneMultigraph:
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    pairs = sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in g.edges())
    return embed_simple(len(nodes), pairs)


def _raw_rotation_from_networkx(g: nx.Graph):
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    pairs = sorted((min(index[u], index[v]), max(index[u], index[v])) for u, v in g.edges())
    eid = {}
    for i, (u, v) in enumerate(pairs):
        eid[(u, v)] = eid[(v, u)] = i
    planar, emb = nx.check_planarity(g)
    if not planar:
        raise NonPlanarEmbedding("graph is not planar")
    rot = [[eid[(index[v], index[w])] for w in emb.neighbors_cw_order(v)] for v in nodes]
    return len(nodes), dict(enumerate(pairs)), rot


def _build_either_orientation(n, ends, rot) -> PlaneMultigraph:
    try:
        return PlaneMultigraph(n, ends, rot)
    except NonPlanarEmbedding:
        return PlaneMultigraph(n, ends, [list(reversed(r)) for r in rot])


def truncate(n: int, ends: dict, rot: Sequence[Sequence[int]]) -> PlaneMultigraph:
    """Truncation of a plane graph given as a raw rotation system (any degrees)."""
    corner = {}
    for v in range(n):
        for e in rot[v]:
            corner[(v, e)] = len(corner)
    new_ends = {}
    new_rot: list[list[int]] = [[] for _ in corner]
    for e, (u, v) in sorted(ends.items()):
        new_ends[e] = (corner[(u, e)], corner[(v, e)])
    next_id = max(ends, default=-1) + 1
    cyc_after = {}
    for v in range(n):
        r = rot[v]
        for i, e in enumerate(r):
            f = r[(i + 1) % len(r)]
            new_ends[next_id] = (corner[(v, e)], corner[(v, f)])
            cyc_after[(v, e)] = next_id
            next_id += 1
    for v in range(n):
        r = rot[v]
        for i, e in enumerate(r):
            prev = r[i - 1]
            new_rot[corner[(v, e)]] = [e, cyc_after[(v, e)], cyc_after[(v, prev)]]
    return _build_either_orientation(len(corner), new_ends, new_rot)


# -- named graphs ---------------------------------------------------------

def k4() -> PlaneMultigraph:
    return from_networkx(nx.complete_graph(4))


def cube() -> PlaneMultigraph:
    return from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)))


def dodecahedron() -> PlaneMultigraph:
    return from_networkx(nx.dodecahedral_graph())


def truncated_icosahedron() -> PlaneMultigraph:
    return truncate(*_raw_rotation_from_networkx(nx.icosahedral_graph()))


def cycle(n: int) -> PlaneMultigraph:
    if n == 2:
        return digon()
    return embed_simple(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> PlaneMultigraph:
    return embed_simple(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> PlaneMultigraph:
    return embed_simple(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def digon() -> PlaneMultigraph:
    return PlaneMultigraph.build(2, [(0, 0, 1), (1, 0, 1)], [[0, 1], [0, 1]])


def prism(n: int) -> PlaneMultigraph:
    pairs = [(i, (i + 1) % n) for i in range(n)]
    pairs += [(n + i, n + (i + 1) % n) for i in range(n)]
    pairs += [(i, n + i) for i in range(n)]
    return embed_simple(2 * n, pairs)


# -- exhaustive corpus ----------------------------------------------------

def _certificate(n: int, adj: Sequence[Sequence[int]]) -> bytes:
    g = pynauty.Graph(n, directed=False, adjacency_dict={v: list(adj[v]) for v in range(n)})
    return pynauty.certificate(g)


def _is_planar(n: int, pairs) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(pairs)
    return nx.check_planarity(g)[0]


def exhaustive_edge_lists(max_vertices: int) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    """All connected simple subcubic planar graphs with 1..max_vertices vertices.

    Graphs with n vertices come from those with n - 1 vertices by adding a
    vertex joined to one, two or three vertices of degree below three; every
    connected graph arises this way by deleting a non-cut vertex.
    """
    if max_vertices > EXHAUSTIVE_LIMIT:
        raise SizeLimit(f"exhaustive mode is limited to {EXHAUSTIVE_LIMIT} vertices")
    out = []
    level = [(1, ())]
    if max_vertices >= 1:
        out.extend(level)
    for n in range(2, max_vertices + 1):
        seen = {}
        for m, pairs in level:
            deg = [0] * m
            for u, v in pairs:
                deg[u] += 1
                deg[v] += 1
            free = [v for v in range(m) if deg[v] < 3]
            for r in (1, 2, 3):
                for nb in combinations(free, r):
                    new_pairs = pairs + tuple((x, m) for x in nb)
                    adj = [[] for _ in range(n)]
                    for u, v in new_pairs:
                        adj[u].append(v)
                        adj[v].append(u)
                    cert = _certificate(n, adj)
                    if cert in seen:
                        continue
                    if not _is_planar(n, new_pairs):
                        seen[cert] = None
                        continue
                    seen[cert] = (n, new_pairs)
        level = sorted((x for x in seen.values() if x is not None), key=lambda x: (len(x[1]), x[1]))
        out.extend(level)
    return out


def exhaustive_corpus(max_vertices: int) -> list[PlaneMultigraph]:
    return [embed_simple(n, pairs) for n, pairs in exhaustive_edge_lists(max_vertices)]


# -- random corpus --------------------------------------------------------

class _Growth:
    """Mutable rotation system grown by planarity-preserving moves."""

    def __init__(self):
        self.ends: dict[int, tuple[int, int]] = {}
        self.rot: list[list[int]] = [[]]
        self.next_id = 0

    @property
    def n(self) -> int:
        return len(self.rot)

    def mult(self, u, v) -> int:
        return sum(1 for e in self.rot[u] if v in self.ends[e] and u != v)

    def faces(self) -> list[list[tuple[int, int]]]:
        """Each face as a list of corners (vertex, insertion index)."""
        seen = set()
        out = []
        for e in sorted(self.ends):
            for d in (0, 1):
                if (e, d) in seen:
                    continue
                corners = []
                cur = (e, d)
                while cur not in seen:
                    seen.add(cur)
                    ce, cd = cur
                    u, v = self.ends[ce]
                    head = v if cd == 0 else u
                    i = self.rot[head].index(ce)
                    corners.append((head, i))
                    nxt = self.rot[head][i - 1]
                    cur = (nxt, 0 if self.ends[nxt][0] == head else 1)
                out.append(corners)
        for v in range(self.n):
            if not self.rot[v]:
                out.append([(v, 0)])
        return out

    def _new_edge(self, u, v) -> int:
        e = self.next_id
        self.next_id += 1
        self.ends[e] = (u, v)
        return e

    def pendant(self, corner) -> None:
        v, i = corner
        w = self.n
        self.rot.append([])
        e = self._new_edge(v, w)
        self.rot[v].insert(i, e)
        self.rot[w].append(e)

    def chord(self, a, b) -> None:
        (u, i), (v, j) = a, b
        e = self._new_edge(u, v)
        self.rot[u].insert(i, e)
        self.rot[v].insert(j, e)

    def subdivide(self, e) -> None:
        u, v = self.ends[e]
        w = self.n
        self.rot.append([])
        f = self._new_edge(w, v)
        self.ends[e] = (u, w)
        self.rot[v][self.rot[v].index(e)] = f
        self.rot[w] = [e, f]

    def delete(self, e) -> None:
        u, v = self.ends.pop(e)
        self.rot[u].remove(e)
        self.rot[v].remove(e)

    def freeze(self) -> PlaneMultigraph:
        ids = sorted(self.ends)
        remap = {e: i for i, e in enumerate(ids)}
        ends = {remap[e]: self.ends[e] for e in ids}
        rot = [[remap[e] for e in r] for r in self.rot]
        return PlaneMultigraph(self.n, ends, rot)


def _chord_candidates(gr: _Growth, face, allow_parallel: bool):
    out = []
    for a, b in combinations(range(len(face)), 2):
        (u, i), (v, j) = face[a], face[b]
        if u == v or len(gr.rot[u]) >= 3 or len(gr.rot[v]) >= 3:
            continue
        m = gr.mult(u, v)
        if m >= 2 or (m == 1 and not allow_parallel):
            continue
        gap = min(b - a, len(face) - (b - a))
        out.append((gap, face[a], face[b]))
    return out


def random_grown(rng: random.Random, target: int, parallel_rate: float = 0.1) -> PlaneMultigraph:
    """Grow a connected plane multigraph with ``target`` vertices."""
    gr = _Growth()
    while gr.n < target:
        r = rng.random()
        if r < 0.25 or not gr.ends:
            corners = [c for f in gr.faces() for c in f if len(gr.rot[c[0]]) < 3]
            if not corners:
                gr.subdivide(rng.choice(sorted(gr.ends)))
                continue
            gr.pendant(rng.choice(corners))
        elif r < 0.5:
            gr.subdivide(rng.choice(sorted(gr.ends)))
        else:
            _random_chord(gr, rng, parallel_rate)
    for _ in range(rng.randrange(0, target + 1)):
        if not _random_chord(gr, rng, parallel_rate):
            break
    return gr.freeze()


def _random_chord(gr: _Growth, rng: random.Random, parallel_rate: float) -> bool:
    faces = gr.faces()
    rng.shuffle(faces)
    allow_parallel = rng.random() < parallel_rate
    for face in faces:
        cands = _chord_candidates(gr, face, allow_parallel)
        if cands:
            # favour long chords so that faces stay large
            cands.sort(key=lambda x: -x[0])
            top = cands[: max(1, len(cands) // 3)]
            _, a, b = rng.choice(top)
            gr.chord(a, b)
            return True
    return False


def _face_with(gr: _Growth, *vertices):
    for face in gr.faces():
        vs = [v for v, _ in face]
        if all(v in vs for v in vertices):
            return face
    return None


def _corner(face, v):
    return next(c for c in face if c[0] == v)


def random_triangulation(rng: random.Random, n: int, balance: bool) -> _Growth:
    """Random simple plane triangulation on n >= 3 vertices (stacking plus flips)."""
    gr = _Growth()
    gr.pendant((0, 0))
    gr.pendant((1, 0))
    face = gr.faces()[0]
    gr.chord(_corner(face, 2), _corner(face, 0))
    while gr.n < n:
        a, b, c = [v for v, _ in rng.choice(gr.faces())]
        gr.pendant(_corner(_face_with(gr, a, b, c), a))
        w = gr.n - 1
        for x in (b, c):
            face = _face_with(gr, w, x)
            gr.chord(_corner(face, w), _corner(face, x))
    flips = 40 * n if balance else rng.randrange(0, 2 * n + 1)
    for _ in range(flips):
        _flip_random(rng, gr, balance)
    if balance:
        _lift_low_degrees(rng, gr, rounds=20 * n)
    return gr


def _lift_low_degrees(rng: random.Random, gr: _Growth, rounds: int) -> None:
    """Flip edges opposite vertices of degree below 5 when neighbours can spare an edge."""
    for _ in range(rounds):
        low = [v for v in range(gr.n) if len(gr.rot[v]) < 5]
        if not low:
            return
        c = rng.choice(low)
        options = []
        for ec in gr.rot[c]:
            face = _face_corners(gr, ec, 0 if gr.ends[ec][0] == c else 1, limit=3)
            if face is not None and len(face) == 3:
                a, b = (v for v, _ in face if v != c)
                e = next(x for x in gr.rot[a] if set(gr.ends[x]) == {a, b})
                options.append(e)
        rng.shuffle(options)
        for e in options:
            a, b = gr.ends[e]
            if len(gr.rot[a]) < 5 or len(gr.rot[b]) < 5:
                continue
            apex = _triangle_apexes(gr, e)
            if len(apex) != 2 or apex[0] == apex[1]:
                continue
            d = apex[0] if apex[1] == c else apex[1]
            if gr.mult(c, d) or len(gr.rot[d]) >= 7:
                continue
            gr.delete(e)
            face = _local_face_with(gr, c, a, b, d)
            gr.chord(_corner(face, c), _corner(face, d))
            break


def _face_corners(gr: _Growth, e: int, d: int, limit: int = 64):
    """Corners of the face left of dart (e, d), or None if longer than ``limit``."""
    corners = []
    cur = (e, d)
    while True:
        ce, cd = cur
        u, v = gr.ends[ce]
        head = v if cd == 0 else u
        i = gr.rot[head].index(ce)
        corners.append((head, i))
        nxt = gr.rot[head][i - 1]
        cur = (nxt, 0 if gr.ends[nxt][0] == head else 1)
        if cur == (e, d):
            return corners
        if len(corners) > limit:
            return None


def _local_face_with(gr: _Growth, v: int, *vertices):
    """A face through a corner at v that contains all ``vertices``."""
    for e in gr.rot[v]:
        for d in (0, 1):
            face = _face_corners(gr, e, d)
            if face is None:
                continue
            vs = [x for x, _ in face]
            if v in vs and all(x in vs for x in vertices):
                return face
    return None


def _triangle_apexes(gr: _Growth, e: int):
    a, b = gr.ends[e]
    apex = []
    for d in (0, 1):
        face = _face_corners(gr, e, d, limit=3)
        if face is not None and len(face) == 3:
            apex.extend(v for v, _ in face if v not in (a, b))
    return apex


def _flip_random(rng: random.Random, gr: _Growth, balance: bool) -> None:
    """Flip a random edge; with ``balance`` only flips pulling degrees towards 5-6 are kept."""
    e = rng.choice(sorted(gr.ends))
    a, b = gr.ends[e]
    if len(gr.rot[a]) <= 3 or len(gr.rot[b]) <= 3:
        return
    apex = _triangle_apexes(gr, e)
    if len(apex) != 2 or apex[0] == apex[1]:
        return
    c, d = apex
    if gr.mult(c, d):
        return
    if balance:
        def energy(deg):
            return (deg - 5.5) ** 2
        da, db, dc, dd = (len(gr.rot[x]) for x in (a, b, c, d))
        before = energy(da) + energy(db) + energy(dc) + energy(dd)
        after = energy(da - 1) + energy(db - 1) + energy(dc + 1) + energy(dd + 1)
        if after >= before:
            return
    gr.delete(e)
    face = _local_face_with(gr, c, a, b, d)
    gr.chord(_corner(face, c), _corner(face, d))


def _raw_faces(ends, rot):
    seen = set()
    out = []
    for e in sorted(ends):
        for d in (0, 1):
            if (e, d) in seen:
                continue
            walk = []
            cur = (e, d)
            while cur not in seen:
                seen.add(cur)
                walk.append(cur)
                ce, cd = cur
                u, v = ends[ce]
                head = v if cd == 0 else u
                nxt = rot[head][rot[head].index(ce) - 1]
                cur = (nxt, 0 if ends[nxt][0] == head else 1)
            out.append(walk)
    return out


def dual(n: int, ends: dict, rot) -> PlaneMultigraph:
    """Plane dual of a raw rotation system (vertices are faces)."""
    faces = _raw_faces(ends, rot)
    face_of = {}
    for i, walk in enumerate(faces):
        for dart in walk:
            face_of[dart] = i
    dual_ends = {e: (face_of[(e, 0)], face_of[(e, 1)]) for e in sorted(ends)}
    dual_rot = [[e for e, _ in walk] for walk in faces]
    return _build_either_orientation(len(faces), dual_ends, dual_rot)


def random_cubic_dual(rng: random.Random, faces: int, balance: bool) -> PlaneMultigraph:
    gr = random_triangulation(rng, faces, balance)
    return dual(gr.n, gr.ends, gr.rot)


def perturb(rng: random.Random, g: PlaneMultigraph, moves: int,
            max_vertices: int = 60) -> PlaneMultigraph:
    """Apply random edge deletions and subdivisions, keeping the vertex count bounded."""
    gr = _Growth()
    gr.rot = [list(g.rotation(v)) for v in g.vertices()]
    gr.ends = {e: g.ends(e) for e in g.edge_ids}
    gr.next_id = max(g.edge_ids, default=-1) + 1
    for _ in range(moves):
        if not gr.ends:
            break
        e = rng.choice(sorted(gr.ends))
        if rng.random() < 0.5 and gr.n < max_vertices:
            gr.subdivide(e)
        else:
            gr.delete(e)
    return gr.freeze()


def random_corpus(count: int, seed: int, max_vertices: int = 60) -> list[PlaneMultigraph]:
    """Seeded mix of grown multigraphs and perturbed duals of random triangulations.

    Balanced triangulations (degrees pulled towards 5 and 6) give cubic duals
    whose faces are mostly 5-, 6- and 7-gons; a few edge deletions and
    subdivisions then plant 2-vertices on long faces.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = rng.random()
        if kind < 0.35 or max_vertices < 8:
            target = rng.randint(1, max_vertices)
            out.append(random_grown(rng, target, parallel_rate=rng.choice([0.0, 0.1, 0.5])))
            continue
        balance = kind >= 0.5
        nf = rng.randint(4 if not balance else 12, max(12, max_vertices // 2 + 2))
        g = random_cubic_dual(rng, nf, balance=balance)
        if rng.random() < 0.6:
            g = perturb(rng, g, rng.randint(1, 3), max_vertices)
        if g.vertex_count <= max_vertices:
            out.append(g)
    return out


# -- files ----------------------------------------------------------------

def write_corpus(graphs: Iterable[PlaneMultigraph], out_dir: str | Path, prefix: str) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, g in enumerate(graphs):
        p = out_dir / f"{prefix}-{i:05d}.graph"
        p.write_text(format_graph(g))
        paths.append(p)
    return paths
