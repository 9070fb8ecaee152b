"""Local templates for the reducibility lab.

A template is the neighbourhood of a configuration after a reduced graph's
coloring has been copied back.  Interior vertices have all their edges in
the template; boundary vertices are abstracted to the set of colors at them
(which contains the colors of their template edges).  Template edges are
either uncolored (both ends interior) or fixed, carrying a color class; edges
sharing a class got the color of one edge of the reduced graph.

Filters remove environments that no coloring of the reduced graph can
produce, e.g. the two ends of an added edge cannot share three colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Filter:
    """A named admissibility condition.

    kinds:
      ``usets``     boundary vertices ``args[0]``, ``args[1]`` share at most k colors
      ``distinct``  the classes in ``args`` get pairwise different colors
      ``hub``       each boundary vertex in ``args[1]`` shares at most k colors
                    with the colors of the classes in ``args[0]``
    """

    name: str
    kind: str
    args: tuple


@dataclass(frozen=True)
class ExtendTemplate:
    lemma: str
    part: str
    interior: tuple[str, ...]
    boundary: tuple[tuple[str, int], ...]
    uncolored: tuple[tuple[str, str], ...]
    fixed: tuple[tuple[str, str, str], ...]
    filters: tuple[Filter, ...] = ()

    @property
    def classes(self) -> tuple[str, ...]:
        out: list[str] = []
        for _, _, c in self.fixed:
            if c not in out:
                out.append(c)
        return tuple(out)

    def check(self) -> None:
        names = set(self.interior) | {b for b, _ in self.boundary}
        if len(names) != len(self.interior) + len(self.boundary):
            raise ValueError(f"{self.lemma}/{self.part}: repeated vertex name")
        deg = {v: 0 for v in names}
        for u, v in self.uncolored:
            if u not in self.interior or v not in self.interior:
                raise ValueError(f"{self.lemma}/{self.part}: uncolored edge {u}{v} leaves the interior")
            deg[u] += 1
            deg[v] += 1
        for u, v, _ in self.fixed:
            if u not in names or v not in names:
                raise ValueError(f"{self.lemma}/{self.part}: unknown vertex on fixed edge")
            deg[u] += 1
            deg[v] += 1
        declared = dict(self.boundary)
        for v, d in deg.items():
            if d > declared.get(v, 3):
                raise ValueError(f"{self.lemma}/{self.part}: vertex {v} has degree {d}")


@dataclass(frozen=True)
class MergeTemplate:
    """Two colored sides joined by ``cuts`` edges (1 or 2).

    Each side is a good coloring of its part plus a stand-in for the other
    side, so the cut edges carry colors on both sides.  Certification asks
    for a color permutation of side two that agrees on the cut edges and
    keeps every cut pair within k common colors.
    """

    lemma: str
    part: str
    cuts: int


@dataclass(frozen=True)
class Lemma:
    id: str
    title: str
    parts: tuple = field(default=())


def _cycle(names):
    n = len(names)
    return tuple((names[i], names[(i + 1) % n]) for i in range(n))


def _usets(a, b):
    return Filter("distinct-usets-across-added-edge", "usets", (a, b))


def _hub(classes, ys):
    return (Filter("hub-proper", "distinct", tuple(classes)),
            Filter("hub-usets", "hub", (tuple(classes), tuple(ys))))


def _x(n):
    return tuple(f"x{i}" for i in range(n))


def _build() -> dict[str, Lemma]:
    L: dict[str, Lemma] = {}

    L["3.1"] = Lemma("3.1", "parallel edges", (
        ExtendTemplate("3.1", "common-neighbour", ("u", "v"), (("w", 3),),
                       (("u", "v"), ("u", "v")), (("u", "w", "a"), ("v", "w", "b"))),
        ExtendTemplate("3.1", "contract", ("u", "v"), (("u1", 3), ("v1", 3)),
                       (("u", "v"), ("u", "v")), (("u", "u1", "a"), ("v", "v1", "b")),
                       (Filter("added-edge-proper", "distinct", ("a", "b")),)),
    ))
    pendant = ExtendTemplate("3.2", "empty-endpoint", ("u", "v"), (("v1", 3), ("v2", 3)),
                             (("u", "v"),), (("v", "v1", "a"), ("v", "v2", "b")))
    L["3.2"] = Lemma("3.2", "edge with an uncolored endpoint", (pendant,))
    L["3.3"] = Lemma("3.3", "1-vertex", (
        ExtendTemplate("3.3", "1-vertex", ("v", "u"), (("u1", 3), ("u2", 3)),
                       (("v", "u"),), (("u", "u1", "a"), ("u", "u2", "b"))),))
    L["3.4"] = Lemma("3.4", "cut edge", (MergeTemplate("3.4", "cut-edge", 1),))
    L["3.5"] = Lemma("3.5", "matching 2-edge cut", (MergeTemplate("3.5", "2-edge-cut", 2),))
    L["3.6"] = Lemma("3.6", "triangle", (
        ExtendTemplate("3.6", "two-vertex", ("x", "y", "z"), (("y1", 3), ("z1", 3)),
                       (("x", "y"), ("x", "z")),
                       (("y", "z", "a"), ("y", "y1", "b"), ("z", "z1", "c"))),
        ExtendTemplate("3.6", "cubic", ("x", "y", "z"), (("x1", 3), ("y1", 3), ("z1", 3)),
                       (("x", "y"), ("x", "z"), ("y", "z")),
                       (("y", "y1", "a"), ("z", "z1", "a"), ("x", "x1", "b")),
                       (_usets("y1", "z1"),)),
    ))
    L["3.7"] = Lemma("3.7", "2-vertices at distance at most 2", (
        ExtendTemplate("3.7", "adjacent", ("u", "v"), (("u1", 3), ("v1", 3)),
                       (("u", "v"),), (("u", "u1", "a"), ("v", "v1", "b"))),
        ExtendTemplate("3.7", "apex-three", ("v", "x", "y", "z"),
                       (("x1", 3), ("y1", 3), ("z1", 3)),
                       (("v", "x"), ("v", "y"), ("v", "z")),
                       (("x", "x1", "a"), ("y", "y1", "b"), ("z", "z1", "c"))),
        ExtendTemplate("3.7", "apex", ("v", "x", "y"), (("z", 3), ("x1", 3), ("y1", 3)),
                       (("x", "v"), ("y", "v")),
                       (("v", "z", "d"), ("x", "x1", "a"), ("y", "y1", "b"))),
    ))
    xs = _x(4)
    L["3.8"] = Lemma("3.8", "4-cycle with a 2-vertex", (
        ExtendTemplate("3.8", "two-vertex-4-cycle", xs, (("y1", 3), ("y2", 3), ("y3", 3)),
                       _cycle(xs),
                       (("x1", "y1", "c1"), ("x2", "y2", "c2"), ("x3", "y3", "c3")),
                       _hub(("c1", "c2", "c3"), ("y1", "y2", "y3"))),))
    L["3.9"] = Lemma("3.9", "4-cycle", (
        ExtendTemplate("3.9", "4-cycle", xs, tuple((f"y{i}", 3) for i in range(4)),
                       _cycle(xs),
                       (("x0", "y0", "a"), ("x1", "y1", "a"), ("x2", "y2", "b"), ("x3", "y3", "b")),
                       (_usets("y0", "y1"), _usets("y2", "y3"))),))
    L["3.10"] = Lemma("3.10", "2-vertices at distance 3", (
        ExtendTemplate("3.10", "distance-3", ("x1", "x2", "x3", "x4"),
                       (("x0", 3), ("x5", 3), ("y2", 3), ("y3", 3)),
                       (("x1", "x2"), ("x2", "x3"), ("x3", "x4")),
                       (("x0", "x1", "alpha"), ("x4", "x5", "beta"),
                        ("x2", "y2", "a"), ("x3", "y3", "a")),
                       (_usets("y2", "y3"),)),))
    L["3.11"] = Lemma("3.11", "2-vertices 4 apart on a face", (
        ExtendTemplate("3.11", "boundary-distance-4", ("x1", "x2", "x3", "x4", "x5"),
                       (("x0", 3), ("x6", 3), ("y2", 3), ("y3", 3), ("y4", 3)),
                       (("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5")),
                       (("x0", "x1", "alpha"), ("x5", "x6", "alpha"),
                        ("x2", "y2", "c2"), ("x3", "y3", "c3"), ("x4", "y4", "c4")),
                       (_usets("x0", "x6"),) + _hub(("c2", "c3", "c4"), ("y2", "y3", "y4"))),))
    xs = _x(5)
    L["4.1"] = Lemma("4.1", "2-vertex on a 5-cycle", (
        ExtendTemplate("4.1", "5-cycle", xs, tuple((f"y{i}", 3) for i in range(1, 5)),
                       _cycle(xs),
                       (("x1", "y1", "a"), ("x2", "y2", "a"), ("x3", "y3", "b"), ("x4", "y4", "b")),
                       (_usets("y1", "y2"), _usets("y3", "y4"))),))
    xs = _x(6)
    L["4.2"] = Lemma("4.2", "2-vertex on a 6-cycle", (
        ExtendTemplate("4.2", "6-cycle", xs, tuple((f"y{i}", 3) for i in range(1, 6)),
                       _cycle(xs),
                       (("x1", "y1", "a"), ("x2", "y2", "a"), ("x4", "y4", "b"), ("x5", "y5", "b"),
                        ("x3", "y3", "c")),
                       (_usets("y1", "y2"), _usets("y4", "y5"))),))
    xs = _x(7)
    L["4.3"] = Lemma("4.3", "2-vertex on a 7-face", (
        ExtendTemplate("4.3", "7-face", xs, tuple((f"y{i}", 3) for i in range(1, 7)),
                       _cycle(xs),
                       (("x1", "y1", "a"), ("x2", "y2", "a"), ("x3", "y3", "b"), ("x4", "y4", "b"),
                        ("x5", "y5", "c"), ("x6", "y6", "c")),
                       (_usets("y1", "y2"), _usets("y3", "y4"), _usets("y5", "y6"))),))
    xs = _x(8)
    L["5.1"] = Lemma("5.1", "two adjacent 5-faces", (
        ExtendTemplate("5.1", "5-5-faces", xs,
                       tuple((f"y{i}", 3) for i in (1, 2, 3, 5, 6, 7)),
                       _cycle(xs) + (("x4", "x0"),),
                       tuple((f"x{i}", f"y{i}", f"c{i}") for i in (1, 2, 3, 5, 6, 7)),
                       _hub(("c1", "c2", "c3"), ("y1", "y2", "y3"))
                       + _hub(("c5", "c6", "c7"), ("y5", "y6", "y7"))),))
    xs = _x(9)
    L["5.2"] = Lemma("5.2", "adjacent 5-face and 6-face", (
        ExtendTemplate("5.2", "5-6-faces", xs,
                       tuple((f"y{i}", 3) for i in (1, 2, 3, 4, 6, 7, 8)),
                       _cycle(xs) + (("x5", "x0"),),
                       (("x1", "y1", "a"), ("x2", "y2", "a"), ("x3", "y3", "b"), ("x4", "y4", "b"),
                        ("x6", "y6", "c6"), ("x7", "y7", "c7"), ("x8", "y8", "c8")),
                       (_usets("y1", "y2"), _usets("y3", "y4"))
                       + _hub(("c6", "c7", "c8"), ("y6", "y7", "y8"))),))
    for lemma in L.values():
        for part in lemma.parts:
            if isinstance(part, ExtendTemplate):
                part.check()
    return L


LEMMAS = _build()
LEMMA_IDS = tuple(LEMMAS)
FILTER_NAMES = ("distinct-usets-across-added-edge", "hub-proper", "hub-usets", "added-edge-proper")
