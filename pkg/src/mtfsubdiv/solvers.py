"""Budgeted exact solvers: chromatic number, clique number, independent sets.

All three NP-hard solvers are complete branch-and-bound searches with
deterministic branching orders, so repeated runs on the same input produce
identical answers (and identical witness sets where a witness is returned).
"""

from __future__ import annotations

from math import isqrt

from .budget import SearchBudget, _Meter, meter_for
from .errors import NotTriangleFree
from .graphs import Graph, find_triangle

__all__ = [
    "chromatic_number",
    "clique_number",
    "max_independent_set",
    "sqrt_stable_set_triangle_free",
]


# -- chromatic number ---------------------------------------------------


def _greedy_clique_size(g: Graph) -> int:
    """Size of a greedily grown clique; a quick lower bound for χ and ω."""
    best = 0
    order = sorted(range(g.n), key=lambda v: (-len(g._adj[v]), v))
    for start in order[: min(g.n, 16)]:
        clique_mask = 1 << start
        size = 1
        cand = g._bits[start]
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique_mask |= 1 << v
            size += 1
            cand &= g._bits[v]
        best = max(best, size)
    return best


def _dsatur_upper_bound(g: Graph, order: list[int]) -> int:
    """Colors used by one DSATUR greedy pass (no backtracking)."""
    color = [-1] * g.n
    used = 0
    for _ in range(g.n):
        pick, pick_key = -1, None
        for v in order:
            if color[v] >= 0:
                continue
            sat = len({color[w] for w in g._adj[v] if color[w] >= 0})
            key = (-sat, -len(g._adj[v]), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        forbidden = {color[w] for w in g._adj[pick]}
        c = 0
        while c in forbidden:
            c += 1
        color[pick] = c
        used = max(used, c + 1)
    return used


def chromatic_number(g: Graph, budget: SearchBudget | None = None) -> int:
    """Exact chromatic number by DSATUR-style branch-and-bound.

    Branching always picks the uncolored vertex with the largest saturation
    (distinct neighbor colors), breaking ties by descending degree then by
    id; at each vertex only colors 0..used are tried, so color classes are
    symmetry-broken.  Raises BudgetExceeded when the search budget runs out.
    """
    n = g.n
    if n == 0:
        return 0
    meter = meter_for(budget)
    order = sorted(range(n), key=lambda v: (-len(g._adj[v]), v))
    lower = max(1, _greedy_clique_size(g))
    best = _dsatur_upper_bound(g, order)
    if best <= lower:
        return best

    color = [-1] * n
    best_holder = [best]

    def extend(colored: int, used: int) -> None:
        meter.tick("chromatic_number")
        if used >= best_holder[0]:
            return
        if colored == n:
            best_holder[0] = used
            return
        pick, pick_key = -1, None
        for v in order:
            if color[v] >= 0:
                continue
            sat = len({color[w] for w in g._adj[v] if color[w] >= 0})
            key = (-sat, -len(g._adj[v]), v)
            if pick_key is None or key < pick_key:
                pick, pick_key = v, key
        forbidden = {color[w] for w in g._adj[pick] if color[w] >= 0}
        # trying one fresh color (c == used) breaks color-class symmetry
        for c in range(min(used + 1, best_holder[0] - 1)):
            if c in forbidden:
                continue
            color[pick] = c
            extend(colored + 1, max(used, c + 1))
            color[pick] = -1
            if best_holder[0] <= lower:
                return

    extend(0, 0)
    return best_holder[0]


# -- clique number ------------------------------------------------------


def clique_number(g: Graph, budget: SearchBudget | None = None) -> int:
    """Exact maximum clique size via branch-and-bound with coloring bound."""
    n = g.n
    if n == 0:
        return 0
    meter = meter_for(budget)
    best_holder = [max(1, _greedy_clique_size(g))]

    def color_bound(cand: int) -> int:
        # greedy coloring of the candidate set; class count bounds the clique
        classes: list[int] = []
        rest = cand
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            placed = False
            for i, cls in enumerate(classes):
                if not (cls & g._bits[v]):
                    classes[i] = cls | (1 << v)
                    placed = True
                    break
            if not placed:
                classes.append(1 << v)
        return len(classes)

    def expand(size: int, cand: int) -> None:
        meter.tick("clique_number")
        if not cand:
            if size > best_holder[0]:
                best_holder[0] = size
            return
        if size + cand.bit_count() <= best_holder[0]:
            return
        if size + color_bound(cand) <= best_holder[0]:
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            if size + cand.bit_count() <= best_holder[0]:
                return
            expand(size + 1, cand & g._bits[v])
            cand &= cand - 1

    expand(0, (1 << n) - 1)
    return best_holder[0]


# -- maximum independent set -------------------------------------------


def _mis_search(
    g: Graph, cand0: int, need: int, meter: _Meter, label: str = "max_independent_set"
) -> list[int] | None:
    """Depth-first maximum independent set search inside candidate mask cand0.

    Branches on the lowest-id candidate, include before exclude, and only
    replaces the incumbent on strictly larger size.  Under that discipline
    the first maximum-size set reached is the lexicographically least one.
    When ``need`` > 0 the search stops as soon as a set of that size is
    found (decision mode); pass need=0 for full optimization.
    """
    best: list[int] = []
    found = [False]

    def rec(chosen: list[int], cand: int) -> None:
        if found[0]:
            return
        meter.tick(label)
        if len(chosen) + cand.bit_count() <= len(best):
            return
        if not cand:
            if len(chosen) > len(best):
                best[:] = chosen
                if need and len(best) >= need:
                    found[0] = True
            return
        v = (cand & -cand).bit_length() - 1
        chosen.append(v)
        rec(chosen, cand & ~((1 << v) | g._bits[v]))
        chosen.pop()
        if found[0]:
            return
        rec(chosen, cand & (cand - 1))

    rec([], cand0)
    if need and len(best) < need:
        return None
    return best


def max_independent_set(g: Graph, budget: SearchBudget | None = None) -> frozenset[int]:
    """Exact maximum independent set.

    Among all maximum-cardinality independent sets, returns the
    lexicographically least (comparing sorted member lists), which pins the
    pipeline's stable-set stages to a unique deterministic answer.
    """
    if g.n == 0:
        return frozenset()
    meter = meter_for(budget)
    best = _mis_search(g, (1 << g.n) - 1, 0, meter)
    assert best is not None
    return frozenset(best)


# -- polynomial stable set for triangle-free graphs ---------------------


def sqrt_stable_set_triangle_free(g: Graph) -> frozenset[int]:
    """Independent set of size ≥ ⌊√n⌋ in a triangle-free graph, in poly time.

    Either some vertex has degree ≥ ⌊√n⌋ and its neighborhood (independent,
    since g has no triangle) truncated to that size is returned, or the
    maximum degree is below ⌊√n⌋ and minimum-degree greedy yields at least
    n/(Δ+1) ≥ ⌊√n⌋ vertices.
    """
    tri = find_triangle(g)
    if tri is not None:
        raise NotTriangleFree(f"graph contains triangle {tri}")
    n = g.n
    if n == 0:
        return frozenset()
    k = isqrt(n)
    v_max = min(range(n), key=lambda v: (-len(g._adj[v]), v))
    if len(g._adj[v_max]) >= k:
        return frozenset(sorted(g._adj[v_max])[:k])
    # max degree < ⌊√n⌋: each greedy pick deletes at most Δ+1 ≤ ⌊√n⌋ vertices
    chosen: list[int] = []
    alive = set(range(n))
    deg = {v: len(g._adj[v] & alive) for v in alive}
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        chosen.append(v)
        removed = ({v} | g._adj[v]) & alive
        alive -= removed
        for u in removed:
            for w in g._adj[u]:
                if w in alive:
                    deg[w] -= 1
    assert len(chosen) >= k
    return frozenset(chosen)
