"""Backtracking core shared by the exact solver, local extension and the lemma lab.

The search works on an abstract instance: vertices carry a bitmask of colors
already present (bit c set for color c), edges to be colored are endpoint
pairs, and ``nbrs[v]`` lists the vertices whose color sets must meet v's in at
most k colors.  Colors are tried in ascending order, so solutions come out in
lexicographic order of the edge sequence.
"""

from __future__ import annotations

from typing import Callable, Sequence


def run_search(ends: Sequence[tuple[int, int]], masks: Sequence[int],
               nbrs: Sequence[Sequence[int]], k: int, t: int,
               symmetry: bool = False,
               on_solution: Callable[[list[int]], bool] | None = None):
    """Depth-first search for colorings of ``ends`` (in order).

    Without ``on_solution`` the first solution is returned.  With it, every
    solution is passed to the callback (the list is reused, copy it if kept);
    a truthy return value stops the search.  With ``symmetry`` each edge may
    only use colors up to one more than the largest color used so far.

    Returns ``(colors or None, nodes)``.
    """
    m = len(ends)
    masks = list(masks)
    colors = [0] * m
    nodes = 0
    found: list[int] | None = None

    def rec(i: int, top: int) -> bool:
        nonlocal nodes, found
        if i == m:
            if on_solution is None:
                found = colors[:]
                return True
            return bool(on_solution(colors))
        u, v = ends[i]
        mu, mv = masks[u], masks[v]
        busy = mu | mv
        limit = min(top + 1, t) if symmetry else t
        nu_list, nv_list = nbrs[u], nbrs[v]
        for c in range(1, limit + 1):
            bit = 1 << c
            if busy & bit:
                continue
            nodes += 1
            nu = mu | bit
            nv = mv | bit
            if (nu & nv).bit_count() > k:
                continue
            bad = False
            for w in nu_list:
                if w != v and (nu & masks[w]).bit_count() > k:
                    bad = True
                    break
            if bad:
                continue
            for w in nv_list:
                if w != u and (nv & masks[w]).bit_count() > k:
                    bad = True
                    break
            if bad:
                continue
            masks[u] = nu
            masks[v] = nv
            colors[i] = c
            if rec(i + 1, c if c > top else top):
                return True
            masks[u] = mu
            masks[v] = mv
        colors[i] = 0
        return False

    rec(0, 0)
    return found, nodes
