"""Partial edge colorings and the k-intersection goodness test.

Colors are the integers 1..t.  ``U(v)`` is the set of colors on the colored
edges at v.  A partial coloring is good for (k, t) when it is proper, uses
colors from 1..t, and |U(u) & U(v)| <= k for every adjacent pair u, v.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Iterable, Iterator, Sequence

from kix.errors import EdgeAlreadyColored, MultiplicityAboveK, NotACycle, PreconditionViolated
from kix.graph import PlaneMultigraph


class PartialColoring(Mapping):
    """Immutable map from edge id to color in 1..t."""

    __slots__ = ("_t", "_colors")

    def __init__(self, t: int, colors: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if t < 0:
            raise ValueError("palette size must be non-negative")
        data = dict(colors)
        for e, c in data.items():
            if not 1 <= c <= t:
                raise ValueError(f"color {c} on edge {e} is outside 1..{t}")
        self._t = t
        self._colors = data

    @property
    def t(self) -> int:
        return self._t

    def __getitem__(self, e: int) -> int:
        return self._colors[e]

    def __iter__(self) -> Iterator[int]:
        return iter(self._colors)

    def __len__(self) -> int:
        return len(self._colors)

    def __eq__(self, other) -> bool:
        if isinstance(other, PartialColoring):
            return self._t == other._t and self._colors == other._colors
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._t, frozenset(self._colors.items())))

    def __repr__(self) -> str:
        return f"PartialColoring(t={self._t}, {dict(sorted(self._colors.items()))})"

    def with_colors(self, updates: Mapping[int, int]) -> "PartialColoring":
        data = dict(self._colors)
        data.update(updates)
        return PartialColoring(self._t, data)

    def without(self, edges: Iterable[int]) -> "PartialColoring":
        drop = set(edges)
        return PartialColoring(self._t, {e: c for e, c in self._colors.items() if e not in drop})

    def restricted(self, edges: Iterable[int]) -> "PartialColoring":
        keep = set(edges)
        return PartialColoring(self._t, {e: c for e, c in self._colors.items() if e in keep})

    def with_palette(self, t: int) -> "PartialColoring":
        return PartialColoring(t, self._colors)

    def colors_used(self) -> set[int]:
        return set(self._colors.values())


def used_colors(g: PlaneMultigraph, phi: Mapping[int, int], v: int) -> frozenset[int]:
    return frozenset(phi[e] for e in g.incident(v) if e in phi)


def is_proper(g: PlaneMultigraph, phi: Mapping[int, int]) -> bool:
    for v in g.vertices():
        seen = [phi[e] for e in g.incident(v) if e in phi]
        if len(seen) != len(set(seen)):
            return False
    return True


def find_violation(g: PlaneMultigraph, phi: Mapping[int, int], k: int, t: int):
    """First reason phi is not good, or None.

    Returns a tuple whose first item names the problem: ``("unknown-edge", e)``,
    ``("palette", e, c)``, ``("proper", v, c)`` or ``("intersection", u, v, common)``.
    """
    edge_set = set(g.edge_ids)
    for e in sorted(phi):
        if e not in edge_set:
            return ("unknown-edge", e)
        if not 1 <= phi[e] <= t:
            return ("palette", e, phi[e])
    for v in g.vertices():
        seen: set[int] = set()
        for e in g.incident(v):
            if e in phi:
                if phi[e] in seen:
                    return ("proper", v, phi[e])
                seen.add(phi[e])
    usets = [used_colors(g, phi, v) for v in g.vertices()]
    for u, v in g.adjacent_pairs():
        common = usets[u] & usets[v]
        if len(common) > k:
            return ("intersection", u, v, frozenset(common))
    return None


def check_multiplicity(g: PlaneMultigraph, k: int) -> None:
    if g.max_multiplicity > k:
        raise MultiplicityAboveK(
            f"graph has multiplicity {g.max_multiplicity} > k = {k}; "
            "k-intersection colorings are undefined")


def is_good(g: PlaneMultigraph, phi: Mapping[int, int], k: int, t: int) -> bool:
    check_multiplicity(g, k)
    return find_violation(g, phi, k, t) is None


def describe_violation(violation) -> str:
    kind = violation[0]
    if kind == "unknown-edge":
        return f"edge {violation[1]} is not in the graph"
    if kind == "palette":
        return f"edge {violation[1]} has color {violation[2]} outside the palette"
    if kind == "proper":
        return f"vertex {violation[1]} sees color {violation[2]} twice"
    u, v, common = violation[1:]
    return (f"vertices {u} and {v} share {len(common)} colors "
            f"{{{', '.join(map(str, sorted(common)))}}}")


def extend_pendant(g: PlaneMultigraph, phi: PartialColoring, e: int,
                   k: int = 2, t: int = 5) -> PartialColoring:
    """Color an uncolored edge having an endpoint with no colored edges."""
    if e in phi:
        raise PreconditionViolated(f"edge {e} is already colored")
    u, v = g.ends(e)
    if used_colors(g, phi, u) and used_colors(g, phi, v):
        raise PreconditionViolated(f"both endpoints of edge {e} already have colored edges")
    for c in range(1, t + 1):
        cand = phi.with_colors({e: c}).with_palette(max(phi.t, t))
        if is_good(g, cand, k, t):
            return cand
    raise PreconditionViolated(f"no color extends phi on edge {e}; phi was not good")


def color_cycle_in_order(g: PlaneMultigraph, phi: PartialColoring,
                         cycle_vertices: Sequence[int], colors: Sequence[int]) -> PartialColoring:
    """Color x_i x_{i+1} with colors[i], indices taken around the cycle.

    Between parallel edges the uncolored one with the least id is used.
    No goodness check is made.
    """
    n = len(cycle_vertices)
    if n < 2 or len(set(cycle_vertices)) != n:
        raise NotACycle("cycle vertices must be at least two distinct vertices")
    if len(colors) != n:
        raise NotACycle(f"{n} cycle edges but {len(colors)} colors")
    updates: dict[int, int] = {}
    for i in range(n):
        a, b = cycle_vertices[i], cycle_vertices[(i + 1) % n]
        between = g.edges_between(a, b)
        if not between:
            raise NotACycle(f"vertices {a} and {b} are not adjacent")
        free = [e for e in between if e not in phi and e not in updates]
        if not free:
            raise EdgeAlreadyColored(f"no uncolored edge left between {a} and {b}")
        updates[free[0]] = colors[i]
    return PartialColoring(max(phi.t, max(colors)), {**phi, **updates})
