"""Text formats for graphs and colorings.

Graph::

    kix-graph 1
    V E
    edge <id> <u> <v>        (E lines)
    rot <v> <e1> <e2> ...    (V lines, cyclic order)

Coloring::

    palette <t>
    color <edge-id> <c>

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from kix.coloring import PartialColoring
from kix.errors import ParseError
from kix.graph import PlaneMultigraph

GRAPH_HEADER = "kix-graph 1"


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> PlaneMultigraph:
    lines = list(_lines(text))
    if not lines or " ".join(lines[0][1]) != GRAPH_HEADER:
        raise ParseError(f"missing '{GRAPH_HEADER}' header")
    if len(lines) < 2 or len(lines[1][1]) != 2:
        raise ParseError("second line must be 'V E'")
    nv, ne = _ints(lines[1][1], lines[1][0])
    edges = []
    rot: dict[int, list[int]] = {}
    for lineno, tok in lines[2:]:
        if tok[0] == "edge":
            if len(tok) != 4:
                raise ParseError(f"line {lineno}: 'edge' takes three integers")
            edges.append(_ints(tok[1:], lineno))
        elif tok[0] == "rot":
            if len(tok) < 2:
                raise ParseError(f"line {lineno}: 'rot' needs a vertex")
            v, *es = _ints(tok[1:], lineno)
            if v in rot:
                raise ParseError(f"line {lineno}: second rotation for vertex {v}")
            rot[v] = es
        else:
            raise ParseError(f"line {lineno}: unknown record {tok[0]!r}")
    if len(edges) != ne:
        raise ParseError(f"header announces {ne} edges, found {len(edges)}")
    if len(rot) != nv:
        raise ParseError(f"header announces {nv} vertices, found {len(rot)} rotations")
    return PlaneMultigraph.build(nv, edges, rot)


def format_graph(g: PlaneMultigraph) -> str:
    out = [GRAPH_HEADER, f"{g.vertex_count} {g.edge_count}"]
    for e in g.edge_ids:
        u, v = g.ends(e)
        out.append(f"edge {e} {u} {v}")
    for v in g.vertices():
        out.append(" ".join(["rot", str(v)] + [str(e) for e in g.rotation(v)]))
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> PartialColoring:
    t = None
    colors: dict[int, int] = {}
    for lineno, tok in _lines(text):
        if tok[0] == "palette" and len(tok) == 2:
            if t is not None:
                raise ParseError(f"line {lineno}: palette declared twice")
            (t,) = _ints(tok[1:], lineno)
        elif tok[0] == "color" and len(tok) == 3:
            e, c = _ints(tok[1:], lineno)
            if e in colors:
                raise ParseError(f"line {lineno}: edge {e} colored twice")
            colors[e] = c
        else:
            raise ParseError(f"line {lineno}: unknown record {' '.join(tok)!r}")
    if t is None:
        raise ParseError("missing 'palette <t>' line")
    try:
        return PartialColoring(t, colors)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_coloring(phi: PartialColoring) -> str:
    out = [f"palette {phi.t}"]
    out += [f"color {e} {c}" for e, c in sorted(phi.items())]
    return "\n".join(out) + "\n"
