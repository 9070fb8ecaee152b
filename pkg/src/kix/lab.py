"""Machine verification of local extension claims.

An environment fixes the colors of the fixed-edge classes and a color set
(U-set) at every boundary vertex.  A template is certified when every
admissible environment extends to a good coloring of its uncolored edges.

Two routes compute the same report:

* ``direct`` walks the canonical environments one by one and runs the
  extension search on each;
* ``fast`` (default) enumerates, per class coloring, every coloring of the
  interior once, records the color sets it leaves at interior vertices next
  to the boundary, and then decides all U-set combinations at once by
  grouping U-sets with the same compatible interior colorings.  Counts modulo
  color permutations come from Burnside's lemma over the stabilizer of the
  class coloring.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Sequence

from kix.errors import UnknownLemmaId
from kix.search import run_search
from kix.templates import LEMMAS, ExtendTemplate, Filter, MergeTemplate

FAILURE_CAP = 50


@dataclass(frozen=True)
class Environment:
    classes: tuple[tuple[str, int], ...]
    usets: tuple[tuple[str, tuple[int, ...]], ...]

    def key(self):
        return tuple(c for _, c in self.classes), tuple(u for _, u in self.usets)

    def to_json(self) -> dict:
        return {"classes": {n: c for n, c in self.classes},
                "usets": {n: list(u) for n, u in self.usets}}

    def __str__(self) -> str:
        cs = " ".join(f"{n}={c}" for n, c in self.classes)
        us = " ".join(f"U({n})={{{','.join(map(str, u))}}}" for n, u in self.usets)
        return f"{cs} | {us}"


@dataclass
class PartReport:
    lemma: str
    part: str
    k: int
    t: int
    total: int = 0
    extendable: int = 0
    failing_count: int = 0
    failing: list[Environment] = field(default_factory=list)
    filters: tuple[str, ...] = ()
    seconds: float = 0.0
    complete: bool = True
    route: str = "fast"

    @property
    def certified(self) -> bool:
        return self.complete and self.failing_count == 0

    def record(self) -> dict:
        return {"lemma": self.lemma, "part": self.part, "k": self.k, "t": self.t,
                "total": self.total, "extendable": self.extendable,
                "failing": self.failing_count, "certified": self.certified,
                "complete": self.complete, "filters": list(self.filters),
                "route": self.route, "seconds": round(self.seconds, 3),
                "failing_examples": [e.to_json() for e in self.failing]}


@dataclass
class ReducibilityReport:
    lemma: str
    k: int
    t: int
    parts: list[PartReport]

    @property
    def total(self) -> int:
        return sum(p.total for p in self.parts)

    @property
    def extendable(self) -> int:
        return sum(p.extendable for p in self.parts)

    @property
    def failing_count(self) -> int:
        return sum(p.failing_count for p in self.parts)

    @property
    def failing(self) -> list[tuple[str, Environment]]:
        return [(p.part, e) for p in self.parts for e in p.failing]

    @property
    def seconds(self) -> float:
        return sum(p.seconds for p in self.parts)

    @property
    def complete(self) -> bool:
        return all(p.complete for p in self.parts)

    @property
    def certified(self) -> bool:
        return self.complete and self.failing_count == 0

    def record(self) -> dict:
        return {"lemma": self.lemma, "k": self.k, "t": self.t, "total": self.total,
                "extendable": self.extendable, "failing": self.failing_count,
                "certified": self.certified, "complete": self.complete,
                "seconds": round(self.seconds, 3),
                "parts": [p.record() for p in self.parts]}


class _Deadline:
    def __init__(self, budget: float | None):
        self.end = None if budget is None else time.monotonic() + budget

    def passed(self) -> bool:
        return self.end is not None and time.monotonic() > self.end


def _bits(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


def _colors(mask: int) -> tuple[int, ...]:
    return tuple(c for c in range(mask.bit_length()) if mask >> c & 1)


def _permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for c in _colors(mask):
        out |= 1 << perm[c]
    return out


def _subsets_containing(base: int, t: int, size: int) -> list[int]:
    free = [c for c in range(1, t + 1) if not base >> c & 1]
    need = base.bit_count()
    out = []
    for r in range(0, max(-1, size - need) + 1):
        for extra in itertools.combinations(free, r):
            out.append(base | _bits(extra))
    return out


# ---------------------------------------------------------------------------
# extension templates


class _Compiled:
    """Index-based view of an extension template under one set of filters."""

    def __init__(self, tpl: ExtendTemplate, k: int, t: int, disabled: Iterable[str]):
        self.tpl, self.k, self.t = tpl, k, t
        off = set(disabled)
        self.filters = tuple(f for f in tpl.filters if f.name not in off)
        names = list(tpl.interior) + [b for b, _ in tpl.boundary]
        self.names = names
        self.idx = {n: i for i, n in enumerate(names)}
        self.n_int = len(tpl.interior)
        self.boundary = list(range(self.n_int, len(names)))
        self.degree = {self.idx[b]: d for b, d in tpl.boundary}
        self.ends = [(self.idx[u], self.idx[v]) for u, v in tpl.uncolored]
        self.class_names = tpl.classes
        cidx = {c: i for i, c in enumerate(self.class_names)}
        self.fixed = [(self.idx[u], self.idx[v], cidx[c]) for u, v, c in tpl.fixed]
        nb: list[set[int]] = [set() for _ in names]
        for u, v in self.ends + [(a, b) for a, b, _ in self.fixed]:
            nb[u].add(v)
            nb[v].add(u)
        self.nbrs = [sorted(s) for s in nb]
        self.nbrs_int = [[w for w in s if w < self.n_int] for s in self.nbrs]
        # classes that meet at a vertex must differ (properness)
        at: dict[int, list[int]] = {}
        for u, v, c in self.fixed:
            at.setdefault(u, []).append(c)
            at.setdefault(v, []).append(c)
        conflicts = set()
        for cs in at.values():
            for a, b in itertools.combinations(cs, 2):
                if a == b:
                    raise ValueError(f"{tpl.lemma}/{tpl.part}: class repeated at a vertex")
                conflicts.add((min(a, b), max(a, b)))
        for f in self.filters:
            if f.kind == "distinct":
                for a, b in itertools.combinations([cidx[c] for c in f.args], 2):
                    conflicts.add((min(a, b), max(a, b)))
        self.conflicts = sorted(conflicts)
        self.hubs = [([cidx[c] for c in f.args[0]], [self.idx[y] for y in f.args[1]])
                     for f in self.filters if f.kind == "hub"]
        self.pairs = [(self.idx[f.args[0]], self.idx[f.args[1]])
                      for f in self.filters if f.kind == "usets"]
        self.exposed = sorted({x for y in self.boundary for x in self.nbrs_int[y]})
        self.edges_at = {x: [i for i, (u, v) in enumerate(self.ends) if x in (u, v)]
                         for x in range(self.n_int)}

    # class colorings -------------------------------------------------------

    def class_colorings(self) -> Iterator[tuple[int, ...]]:
        """Restricted-growth class colorings: one per orbit under color permutations."""
        n = len(self.class_names)
        bad = {i: [a for a, b in self.conflicts if b == i] for i in range(n)}
        cur: list[int] = []

        def rec(i: int, top: int):
            if i == n:
                yield tuple(cur)
                return
            for c in range(1, min(top + 1, self.t) + 1):
                if any(cur[a] == c for a in bad[i]):
                    continue
                cur.append(c)
                yield from rec(i + 1, max(top, c))
                cur.pop()

        yield from rec(0, 0)

    def initial_masks(self, cc: Sequence[int]) -> list[int]:
        masks = [0] * len(self.names)
        for u, v, c in self.fixed:
            masks[u] |= 1 << cc[c]
            masks[v] |= 1 << cc[c]
        return masks

    def allowed_values(self, cc: Sequence[int], masks: Sequence[int]) -> dict[int, list[int]]:
        """Admissible U-sets per boundary vertex (single-vertex conditions only)."""
        k = self.k
        hub_limits: dict[int, list[int]] = {}
        for classes, ys in self.hubs:
            hm = _bits(cc[c] for c in classes)
            for y in ys:
                hub_limits.setdefault(y, []).append(hm)
        out = {}
        for y in self.boundary:
            vals = []
            for m in _subsets_containing(masks[y], self.t, self.degree[y]):
                if any((masks[x] & m).bit_count() > k for x in self.nbrs_int[y]):
                    continue
                if any((hm & m).bit_count() > k for hm in hub_limits.get(y, ())):
                    continue
                vals.append(m)
            out[y] = vals
        return out

    def pair_ok(self, assign: dict[int, int]) -> bool:
        k = self.k
        for a, b in self.pairs:
            if a in assign and b in assign and (assign[a] & assign[b]).bit_count() > k:
                return False
        return True

    def environment(self, cc: Sequence[int], assign: dict[int, int]) -> Environment:
        return Environment(tuple(zip(self.class_names, cc)),
                           tuple((self.names[y], _colors(assign[y])) for y in self.boundary))

    def extends(self, cc: Sequence[int], assign: dict[int, int]):
        masks = self.initial_masks(cc)
        for y, m in assign.items():
            masks[y] = m
        return run_search(self.ends, masks, self.nbrs, self.k, self.t)


def _stabilizer(used: set[int], t: int) -> list[tuple[int, ...]]:
    free = [c for c in range(1, t + 1) if c not in used]
    perms = []
    for image in itertools.permutations(free):
        p = list(range(t + 1))
        for a, b in zip(free, image):
            p[a] = b
        perms.append(tuple(p))
    return perms


def _all_perms(t: int) -> list[tuple[int, ...]]:
    return [(0,) + p for p in itertools.permutations(range(1, t + 1))]


def _uset_key(mask: int) -> tuple[int, ...]:
    return _colors(mask)


def canonical(env: Environment, t: int) -> Environment:
    """Lexicographically least image of ``env`` under all color permutations."""
    best = None
    for p in _all_perms(t):
        img = Environment(tuple((n, p[c]) for n, c in env.classes),
                          tuple((n, tuple(sorted(p[c] for c in u))) for n, u in env.usets))
        if best is None or img.key() < best.key():
            best = img
    return best


def enumerate_environments(tpl, k: int = 2, t: int = 5,
                           disabled: Iterable[str] = ()) -> Iterator[Environment]:
    """Admissible environments of ``tpl``, one per color-permutation orbit."""
    if isinstance(tpl, MergeTemplate):
        for a, b in _merge_pairs(tpl, k, t):
            yield _merge_environment(tpl, a, b)
        return
    comp = _Compiled(tpl, k, t, disabled)
    for cc in comp.class_colorings():
        masks = comp.initial_masks(cc)
        allowed = comp.allowed_values(cc, masks)
        stab = _stabilizer(set(cc), t)
        ys = comp.boundary
        for combo in itertools.product(*(allowed[y] for y in ys)):
            assign = dict(zip(ys, combo))
            if not comp.pair_ok(assign):
                continue
            key = tuple(_uset_key(m) for m in combo)
            if all(key <= tuple(_uset_key(_permute_mask(m, p)) for m in combo) for p in stab):
                yield comp.environment(cc, assign)


def _component_count(comp: _Compiled, values: dict[int, list[int]]) -> int:
    """Number of boundary assignments from ``values`` passing the pair filters."""
    adj: dict[int, set[int]] = {y: set() for y in comp.boundary}
    for a, b in comp.pairs:
        adj[a].add(b)
        adj[b].add(a)
    seen: set[int] = set()
    total = 1
    for y in comp.boundary:
        if y in seen:
            continue
        stack, part = [y], []
        seen.add(y)
        while stack:
            z = stack.pop()
            part.append(z)
            for w in adj[z]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(part) == 1:
            total *= len(values[y])
        else:
            n = 0
            for combo in itertools.product(*(values[z] for z in part)):
                if comp.pair_ok(dict(zip(part, combo))):
                    n += 1
            total *= n
        if total == 0:
            return 0
    return total


def _fixed_point_sum(comp: _Compiled, values: dict[int, list[int]], stab) -> int:
    s = 0
    for p in stab:
        fixed = {y: [m for m in vals if _permute_mask(m, p) == m] for y, vals in values.items()}
        s += _component_count(comp, fixed)
    return s


def _orbit_count(comp: _Compiled, values: dict[int, list[int]], stab) -> int:
    """Burnside count; ``values`` must describe a set closed under ``stab``."""
    s = _fixed_point_sum(comp, values, stab)
    assert s % len(stab) == 0
    return s // len(stab)


def _signatures(comp: _Compiled, masks: list[int]) -> list[tuple[int, ...]]:
    sigs: set[tuple[int, ...]] = set()
    exposed = comp.exposed
    at = [comp.edges_at[x] for x in exposed]
    base = [masks[x] for x in exposed]

    def collect(colors):
        sig = []
        for b, es in zip(base, at):
            for i in es:
                b |= 1 << colors[i]
            sig.append(b)
        sigs.add(tuple(sig))
        return False

    int_masks = masks[:comp.n_int] + [0] * (len(masks) - comp.n_int)
    run_search(comp.ends, int_masks, comp.nbrs_int, comp.k, comp.t, on_solution=collect)
    return sorted(sigs)


def _verify_fast(comp: _Compiled, report: PartReport, deadline: _Deadline, cap: int) -> None:
    k, t = comp.k, comp.t
    pos = {x: i for i, x in enumerate(comp.exposed)}
    failures: set[Environment] = set()
    for cc in comp.class_colorings():
        if deadline.passed():
            report.complete = False
            return
        masks = comp.initial_masks(cc)
        allowed = comp.allowed_values(cc, masks)
        stab = _stabilizer(set(cc), t)
        total = _orbit_count(comp, allowed, stab)
        report.total += total
        if total == 0:
            continue
        sigs = _signatures(comp, masks)
        ys = comp.boundary
        groups: list[list[tuple[int, list[int]]]] = []
        for y in ys:
            near = [pos[x] for x in comp.nbrs_int[y]]
            by_mask: dict[int, list[int]] = {}
            for m in allowed[y]:
                ok = 0
                for s, sig in enumerate(sigs):
                    if all((sig[i] & m).bit_count() <= k for i in near):
                        ok |= 1 << s
                by_mask.setdefault(ok, []).append(m)
            groups.append(sorted(by_mask.items(), key=lambda kv: kv[1]))
        boxes: list[tuple[int, ...]] = []
        full = (1 << len(sigs)) - 1
        prefix: list[int] = []
        ticks = 0

        def dfs(i: int, acc: int) -> bool:
            nonlocal ticks
            if acc == 0:
                boxes.append(tuple(prefix))
                return True
            if i == len(ys):
                return True
            ticks += 1
            if ticks & 0xFFF == 0 and deadline.passed():
                return False
            for g, (ok, _) in enumerate(groups[i]):
                prefix.append(g)
                alive = dfs(i + 1, acc & ok)
                prefix.pop()
                if not alive:
                    return False
            return True

        if not dfs(0, full):
            report.complete = False
            return
        # single boxes need not be closed under the stabilizer, their union is
        failing = 0
        for box in boxes:
            vals = dict(allowed)
            for i, g in enumerate(box):
                vals[ys[i]] = groups[i][g][1]
            failing += _fixed_point_sum(comp, vals, stab)
            if len(failures) < cap:
                for combo in itertools.islice(itertools.product(*(vals[y] for y in ys)), 20000):
                    assign = dict(zip(ys, combo))
                    if comp.pair_ok(assign):
                        failures.add(canonical(comp.environment(cc, assign), t))
                        if len(failures) >= cap:
                            break
        assert failing % len(stab) == 0
        failing //= len(stab)
        report.failing_count += failing
        report.extendable += total - failing
    report.failing = sorted(failures, key=Environment.key)


def _verify_direct(comp: _Compiled, report: PartReport, deadline: _Deadline, cap: int) -> None:
    failures = []
    for env in enumerate_environments(comp.tpl, comp.k, comp.t,
                                      disabled=[f.name for f in comp.tpl.filters
                                                if f not in comp.filters]):
        if deadline.passed():
            report.complete = False
            break
        cc = [c for _, c in env.classes]
        assign = {comp.idx[n]: _bits(u) for n, u in env.usets}
        report.total += 1
        if comp.extends(cc, assign)[0] is not None:
            report.extendable += 1
        else:
            report.failing_count += 1
            failures.append(canonical(env, comp.t))
    report.failing = sorted(set(failures), key=Environment.key)[:cap]


def transcript(tpl: ExtendTemplate, env: Environment, k: int = 2, t: int = 5) -> dict:
    """Replay of one environment: filter verdicts, starting color sets and the search outcome."""
    comp = _Compiled(tpl, k, t, ())
    cc = [dict(env.classes)[c] for c in comp.class_names]
    assign = {comp.idx[n]: _bits(u) for n, u in env.usets}
    masks = comp.initial_masks(cc)
    verdicts = {}
    for f in tpl.filters:
        verdicts[f"{f.name}:{','.join(map(str, _flat(f.args)))}"] = _filter_holds(comp, f, cc, assign)
    coloring, nodes = comp.extends(cc, assign)
    start = {n: list(_colors(assign.get(i, masks[i]))) for i, n in enumerate(comp.names)}
    return {"lemma": tpl.lemma, "part": tpl.part, "k": k, "t": t,
            "environment": env.to_json(), "filters": verdicts, "start": start,
            "uncolored": ["".join(e) for e in tpl.uncolored],
            "extension": None if coloring is None else coloring, "nodes": nodes}


def _flat(args):
    for a in args:
        if isinstance(a, tuple):
            yield from _flat(a)
        else:
            yield a


def _filter_holds(comp: _Compiled, f: Filter, cc, assign) -> bool:
    cidx = {c: i for i, c in enumerate(comp.class_names)}
    if f.kind == "distinct":
        cols = [cc[cidx[c]] for c in f.args]
        return len(set(cols)) == len(cols)
    if f.kind == "usets":
        return (assign[comp.idx[f.args[0]]] & assign[comp.idx[f.args[1]]]).bit_count() <= comp.k
    if f.kind == "hub":
        hm = _bits(cc[cidx[c]] for c in f.args[0])
        return all((hm & assign[comp.idx[y]]).bit_count() <= comp.k for y in f.args[1])
    raise ValueError(f"unknown filter kind {f.kind}")


def is_admissible(tpl: ExtendTemplate, env: Environment, k: int = 2, t: int = 5,
                  disabled: Iterable[str] = ()) -> bool:
    """Whether ``env`` (any labelling) passes the mandatory checks and the active filters."""
    comp = _Compiled(tpl, k, t, disabled)
    classes = dict(env.classes)
    cc = [classes[c] for c in comp.class_names]
    if any(cc[a] == cc[b] for a, b in comp.conflicts):
        return False
    if any(not 1 <= c <= t for c in cc):
        return False
    masks = comp.initial_masks(cc)
    allowed = comp.allowed_values(cc, masks)
    assign = {comp.idx[n]: _bits(u) for n, u in env.usets}
    return all(assign[y] in allowed[y] for y in comp.boundary) and comp.pair_ok(assign)


# ---------------------------------------------------------------------------
# merge templates


def _side_environments(cuts: int, t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    cols = tuple(range(1, cuts + 1))
    stab = _stabilizer(set(cols), t)
    vals = [_subsets_containing(1 << c, t, 3) for c in cols]
    out = []
    for combo in itertools.product(*vals):
        key = tuple(_uset_key(m) for m in combo)
        if all(key <= tuple(_uset_key(_permute_mask(m, p)) for m in combo) for p in stab):
            out.append((cols, combo))
    return out


def _merge_pairs(tpl: MergeTemplate, k: int, t: int):
    sides = _side_environments(tpl.cuts, t)
    return itertools.product(sides, sides)


def _merge_environment(tpl: MergeTemplate, a, b) -> Environment:
    n = tpl.cuts
    classes = tuple((f"a{i + 1}", a[0][i]) for i in range(n)) + \
        tuple((f"b{i + 1}", b[0][i]) for i in range(n))
    usets = tuple((f"v{i + 1}", _colors(a[1][i])) for i in range(n)) + \
        tuple((f"u{i + 1}", _colors(b[1][i])) for i in range(n))
    return Environment(classes, usets)


def _merge_ok(a, b, k: int, t: int) -> bool:
    for p in _all_perms(t):
        if any(p[bc] != ac for ac, bc in zip(a[0], b[0])):
            continue
        if all((ua & _permute_mask(ub, p)).bit_count() <= k for ua, ub in zip(a[1], b[1])):
            return True
    return False


def _verify_merge(tpl: MergeTemplate, report: PartReport, deadline: _Deadline, cap: int) -> None:
    for a, b in _merge_pairs(tpl, report.k, report.t):
        if deadline.passed():
            report.complete = False
            return
        report.total += 1
        if _merge_ok(a, b, report.k, report.t):
            report.extendable += 1
        else:
            report.failing_count += 1
            if len(report.failing) < cap:
                report.failing.append(_merge_environment(tpl, a, b))


# ---------------------------------------------------------------------------
# entry points


def verify_reducible(tpl, k: int = 2, t: int = 5, disabled: Iterable[str] = (),
                     budget: float | None = None, route: str = "fast",
                     cap: int = FAILURE_CAP) -> PartReport:
    """Check every admissible environment of one template."""
    start = time.monotonic()
    deadline = _Deadline(budget)
    disabled = tuple(disabled)
    if isinstance(tpl, MergeTemplate):
        report = PartReport(tpl.lemma, tpl.part, k, t, route="direct")
        _verify_merge(tpl, report, deadline, cap)
    else:
        comp = _Compiled(tpl, k, t, disabled)
        report = PartReport(tpl.lemma, tpl.part, k, t,
                            filters=tuple(dict.fromkeys(f.name for f in comp.filters)),
                            route=route)
        if route == "fast":
            _verify_fast(comp, report, deadline, cap)
        elif route == "direct":
            _verify_direct(comp, report, deadline, cap)
        else:
            raise ValueError(f"unknown route {route!r}")
    report.seconds = time.monotonic() - start
    return report


def lemma(lemma_id: str):
    try:
        return LEMMAS[str(lemma_id)]
    except KeyError:
        raise UnknownLemmaId(f"no template registered for {lemma_id!r}") from None


def verify_lemma(lemma_id: str, k: int = 2, t: int = 5, disabled: Iterable[str] = (),
                 budget: float | None = None, route: str = "fast") -> ReducibilityReport:
    lem = lemma(lemma_id)
    deadline = None if budget is None else time.monotonic() + budget
    parts = []
    for tpl in lem.parts:
        left = None if deadline is None else max(0.0, deadline - time.monotonic())
        parts.append(verify_reducible(tpl, k, t, disabled, left, route))
    return ReducibilityReport(lem.id, k, t, parts)


def _verify_job(args):
    return verify_lemma(*args)


def verify_all(lemma_ids: Sequence[str], k: int = 2, t: int = 5,
               disabled: Iterable[str] = (), budget: float | None = None,
               route: str = "fast", jobs: int = 1) -> list[ReducibilityReport]:
    """One report per lemma id, in the given order."""
    ids = [str(i) for i in lemma_ids]
    for i in ids:
        lemma(i)
    disabled = tuple(disabled)
    if jobs > 1 and len(ids) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_job, [(i, k, t, disabled, budget, route) for i in ids]))
    deadline = None if budget is None else time.monotonic() + budget
    out = []
    for i in ids:
        left = None if deadline is None else max(0.0, deadline - time.monotonic())
        out.append(verify_lemma(i, k, t, disabled, left, route))
    return out


def required_filters(lemma_id: str, k: int = 2, t: int = 5,
                     budget: float | None = None) -> dict[str, list[str]]:
    """Per part, the filters whose removal alone breaks certification."""
    out = {}
    for tpl in lemma(lemma_id).parts:
        if isinstance(tpl, MergeTemplate):
            out[tpl.part] = []
            continue
        names = list(dict.fromkeys(f.name for f in tpl.filters))
        need = []
        for name in names:
            if not verify_reducible(tpl, k, t, (name,), budget, cap=1).certified:
                need.append(name)
        out[tpl.part] = need
    return out


def orbit_size(env: Environment, t: int) -> int:
    """Number of distinct images of ``env`` under color permutations."""
    stab = 0
    for p in _all_perms(t):
        img = Environment(tuple((n, p[c]) for n, c in env.classes),
                          tuple((n, tuple(sorted(p[c] for c in u))) for n, u in env.usets))
        if img == env:
            stab += 1
    return factorial(t) // stab
