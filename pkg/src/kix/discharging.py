"""Charges 2d(v) - 6 and d(f) - 6 and their redistribution.

Rules:
  R1  every 2-vertex receives 1 from each incident face (per corner);
  R2  every 5-face receives 1/5 from each adjacent face (per shared edge).

All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from kix.errors import Disconnected, NoConfigurationFound
from kix.graph import PlaneMultigraph, boundary_distance

Element = tuple[str, int]  # ("v", vertex) or ("f", face index)


@dataclass(frozen=True)
class Transfer:
    source: Element
    target: Element
    amount: Fraction
    rule: str


@dataclass
class ChargeLedger:
    initial: dict[Element, Fraction]
    final: dict[Element, Fraction]
    transfers: list[Transfer] = field(default_factory=list)

    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final.values(), Fraction(0))

    def negative(self) -> list[Element]:
        return sorted(x for x, c in self.final.items() if c < 0)


@dataclass
class AuditReport:
    ledger: ChargeLedger
    negative: list[tuple[Element, Fraction, str]]
    configuration: object | None

    @property
    def all_nonnegative(self) -> bool:
        return not self.negative


def _require_connected(g: PlaneMultigraph) -> None:
    if g.vertex_count == 0 or not g.is_connected():
        raise Disconnected("charges are defined for a non-empty connected plane graph")


def initial_charges(g: PlaneMultigraph) -> ChargeLedger:
    _require_connected(g)
    init: dict[Element, Fraction] = {}
    for v in g.vertices():
        init[("v", v)] = Fraction(2 * g.degree(v) - 6)
    for i, f in enumerate(g.faces):
        init[("f", i)] = Fraction(len(f) - 6)
    return ChargeLedger(init, dict(init))


def apply_rules(g: PlaneMultigraph, ledger: ChargeLedger) -> ChargeLedger:
    final = dict(ledger.initial)
    transfers: list[Transfer] = []

    def move(src, dst, amount, rule):
        final[src] -= amount
        final[dst] += amount
        transfers.append(Transfer(src, dst, amount, rule))

    for i, f in enumerate(g.faces):
        for v in f.vertices:
            if g.degree(v) == 2:
                move(("f", i), ("v", v), Fraction(1), "R1")
    fifth = Fraction(1, 5)
    for e in g.edge_ids:
        f0, f1 = g.faces_of_edge(e)
        if f0 == f1:
            continue
        if len(g.faces[f1]) == 5:
            move(("f", f0), ("f", f1), fifth, "R2")
        if len(g.faces[f0]) == 5:
            move(("f", f1), ("f", f0), fifth, "R2")
    return ChargeLedger(dict(ledger.initial), final, transfers)


def final_charges(g: PlaneMultigraph) -> ChargeLedger:
    return apply_rules(g, initial_charges(g))


def face_bound(k: int) -> Fraction:
    """Worst final charge of a k-face with floor(k/5) 2-vertices and floor(k/2) adjacent 5-faces."""
    return Fraction(k - 6) - (k // 5) - Fraction(k // 2, 5)


def explain(g: PlaneMultigraph, element: Element) -> str:
    """Name the configuration kind that a negative element points to."""
    kind, idx = element
    if kind == "v":
        return "C2"
    f = g.faces[idx]
    if len(f) == 0:
        return "C2"
    if len(set(f.edges)) < len(f.edges):
        return "C2" if any(g.degree(v) <= 1 for v in f.vertices) else "C3"
    if not f.is_simple_cycle():
        return "C3"
    n = len(f)
    twos = [v for v in f.vertices if g.degree(v) == 2]
    five_adjacent = [g.faces_of_edge(e) for e in f.edges]
    five_adjacent = [a if b == idx else b for a, b in five_adjacent]
    has_five_nbr = any(len(g.faces[j]) == 5 and j != idx for j in five_adjacent)
    if n == 2:
        return "C1"
    if n == 3:
        return "C5"
    if n == 4:
        return "C7" if twos else "C8"
    if n == 5:
        return "C11" if twos else ("C14" if has_five_nbr else "C15")
    if n == 6:
        return "C12" if twos else "C15"
    if n == 7:
        return "C13" if twos else "C14"
    for a in twos:
        for b in twos:
            if a < b and boundary_distance(f, a, b) <= 4:
                return "C10"
    return "C14"


def audit(g: PlaneMultigraph, cross_check: bool = True) -> AuditReport:
    """Final charges, an explanation per negative element, and the engine's configuration."""
    ledger = final_charges(g)
    negative = [(x, ledger.final[x], explain(g, x)) for x in ledger.negative()]
    config = None
    if cross_check:
        from kix.reduction import find_configuration
        try:
            config = find_configuration(g)
        except NoConfigurationFound:
            config = None
    return AuditReport(ledger, negative, config)


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
