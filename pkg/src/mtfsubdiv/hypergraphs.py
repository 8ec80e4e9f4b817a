"""Neighborhood hypergraphs, packing, transversality, and private-witness
structures.

A private-witness structure over a hypergraph is a choice of d hyperedges
e_1..e_d together with, for every pair (i, j), a witness vertex lying in
e_i ∩ e_j and in no other chosen edge.  ``find_dsw_structure`` searches for
one exhaustively; ``max_dsw_size`` maximizes d.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .budget import SearchBudget, _Meter, meter_for
from .errors import BadParameter, EmptyGraph, OutOfRange
from .graphs import Graph
from .solvers import _mis_search

__all__ = [
    "Hypergraph",
    "DswStructure",
    "neighborhood_hypergraph",
    "packing_number",
    "transversality",
    "dsw_threshold",
    "find_dsw_structure",
    "max_dsw_size",
    "dsw_structure_violations",
]


class Hypergraph:
    """Hypergraph over ground set {0..n-1} with an ordered edge list.

    Edge order is significant (it defines the e_i indexing) and duplicate
    edges are allowed.  ``origins`` optionally tags edge i with the vertex
    of a source graph it came from; neighborhood hypergraphs set it to the
    identity.
    """

    __slots__ = ("n", "edges", "origins")

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]],
        origins: Sequence[int] | None = None,
    ):
        if not isinstance(n, int) or n < 0:
            raise BadParameter(f"ground-set size must be a non-negative integer, got {n!r}")
        es = []
        for e in edges:
            fs = frozenset(e)
            if not fs:
                raise BadParameter("empty hyperedges are not allowed")
            for v in fs:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise OutOfRange(f"hyperedge vertex {v!r} outside [0, {n})")
            es.append(fs)
        self.n = n
        self.edges: tuple[frozenset[int], ...] = tuple(es)
        if origins is not None:
            origins = tuple(origins)
            if len(origins) != len(self.edges):
                raise BadParameter("origins must tag every edge")
        self.origins = origins

    def edge_masks(self) -> list[int]:
        return [sum(1 << v for v in e) for e in self.edges]

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, edges={len(self.edges)})"


def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """Hypergraph whose edge i is the closed neighborhood N[v_i] of vertex i."""
    if g.n == 0:
        raise EmptyGraph("neighborhood hypergraph needs at least one vertex")
    edges = [set(g.neighbors(v)) | {v} for v in range(g.n)]
    return Hypergraph(g.n, edges, origins=range(g.n))


def packing_number(h: Hypergraph, budget: SearchBudget | None = None) -> int:
    """Maximum number of pairwise-disjoint hyperedges (exact).

    Computed as a maximum independent set in the edge-intersection graph.
    """
    m = len(h.edges)
    if m == 0:
        raise BadParameter("packing number needs at least one hyperedge")
    inter = [
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if h.edges[i] & h.edges[j]
    ]
    gi = Graph(m, inter)
    meter = meter_for(budget)
    best = _mis_search(gi, (1 << m) - 1, 0, meter, label="packing_number")
    assert best is not None
    return len(best)


# -- transversality -----------------------------------------------------


def _cover_greedy_ub(masks: list[int], incidence: dict[int, int], uncovered: int) -> int:
    count = 0
    while uncovered:
        pick = None
        pick_gain = -1
        for v, inc in incidence.items():
            gain = (inc & uncovered).bit_count()
            if gain > pick_gain or (gain == pick_gain and (pick is None or v < pick)):
                pick, pick_gain = v, gain
        uncovered &= ~incidence[pick]
        count += 1
    return count


def _cover_lb(masks: list[int], uncovered: int) -> int:
    # pairwise disjoint uncovered edges need one vertex each
    taken = 0
    count = 0
    rest = uncovered
    while rest:
        i = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        em = masks[i]
        if not (em & taken):
            taken |= em
            count += 1
    return count


def _vertex_masks(h: Hypergraph) -> tuple[list[int], dict[int, int]]:
    """Per-edge vertex masks and per-vertex edge-incidence masks."""
    vmasks = [sum(1 << v for v in e) for e in h.edges]
    incidence: dict[int, int] = {}
    for i, e in enumerate(h.edges):
        for v in e:
            incidence[v] = incidence.get(v, 0) | (1 << i)
    return vmasks, incidence


def _cover_branch(
    h: Hypergraph,
    uncovered0: int,
    allowed: set[int],
    limit: int,
    meter: _Meter,
) -> int | None:
    """Smallest cover size ≤ limit using only allowed vertices, else None."""
    vmasks, incidence = _vertex_masks(h)
    # edge list masks indexed by edge id for the lower bound
    best: list[int | None] = [None]
    cap = [limit]

    def rec(uncovered: int, used: int) -> None:
        meter.tick("transversality")
        if not uncovered:
            if best[0] is None or used < best[0]:
                best[0] = used
                cap[0] = used - 1
            return
        if used + _cover_lb(vmasks, uncovered) > cap[0]:
            return
        # branch on the uncovered edge with fewest allowed vertices
        pick = -1
        pick_opts: list[int] | None = None
        rest = uncovered
        while rest:
            i = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            opts = [v for v in sorted(h.edges[i]) if v in allowed]
            if pick_opts is None or len(opts) < len(pick_opts):
                pick, pick_opts = i, opts
                if len(opts) <= 1:
                    break
        if not pick_opts:
            return
        for v in pick_opts:
            rec(uncovered & ~incidence.get(v, 0), used + 1)

    rec(uncovered0, 0)
    return best[0]


def transversality(
    h: Hypergraph, budget: SearchBudget | None = None
) -> tuple[int, frozenset[int]]:
    """Exact minimum transversal size with one witness set.

    The witness is the lexicographically least among all minimum
    transversals, fixed by computing the optimum size first and then
    growing the witness vertex by vertex, keeping v exactly when some
    minimum transversal extends {kept, v} using only larger vertices.
    """
    m = len(h.edges)
    if m == 0:
        raise BadParameter("transversality needs at least one hyperedge")
    meter = meter_for(budget)
    all_edges = (1 << m) - 1
    vmasks, incidence = _vertex_masks(h)
    tau = _cover_branch(h, all_edges, set(range(h.n)), h.n, meter)
    assert tau is not None
    chosen: list[int] = []
    uncovered = all_edges
    for v in range(h.n):
        if not uncovered:
            break
        if not (incidence.get(v, 0) & uncovered):
            # v hits nothing new; no minimum transversal keeps it
            continue
        need = tau - len(chosen) - 1
        rest_uncovered = uncovered & ~incidence[v]
        if not rest_uncovered:
            fits = need >= 0
        else:
            allowed = set(range(v + 1, h.n))
            span = _cover_branch(h, rest_uncovered, allowed, need, meter)
            fits = span is not None and span <= need
        if fits:
            chosen.append(v)
            uncovered = rest_uncovered
    assert len(chosen) == tau and not uncovered
    return tau, frozenset(chosen)


# -- the threshold formula ----------------------------------------------


def dsw_threshold(d: int) -> int:
    """The packing-one transversality threshold 11·d²·(d+4)·(d+1)²."""
    if not isinstance(d, int) or d < 1:
        raise OutOfRange(f"threshold needs d >= 1, got {d!r}")
    return 11 * d * d * (d + 4) * (d + 1) * (d + 1)


# -- private-witness structures -----------------------------------------


@dataclass(frozen=True)
class DswStructure:
    """d chosen hyperedge indices plus a private witness per position pair.

    ``witnesses`` is keyed by position pairs (i, j) with i < j referring to
    positions within ``edge_indices``; the witness lies in both chosen
    edges and in no other chosen edge.  Distinct pairs may share a witness
    vertex; exact two-neighbor adjacency is a later pipeline concern.
    """

    edge_indices: tuple[int, ...]
    witnesses: dict[tuple[int, int], int]

    @property
    def d(self) -> int:
        return len(self.edge_indices)


def dsw_structure_violations(h: Hypergraph, s: DswStructure) -> list[str]:
    """Independent re-check of the three structure invariants.

    Returns a list of violation descriptions; empty means valid.  Kept
    free of any search-state reuse so it can audit search output.
    """
    problems: list[str] = []
    d = len(s.edge_indices)
    m = len(h.edges)
    if len(set(s.edge_indices)) != d:
        problems.append("edge indices are not distinct")
    for idx in s.edge_indices:
        if not (isinstance(idx, int) and 0 <= idx < m):
            problems.append(f"edge index {idx!r} outside [0, {m})")
            return problems
    expected_pairs = {(i, j) for i in range(d) for j in range(i + 1, d)}
    if set(s.witnesses.keys()) != expected_pairs:
        problems.append("witness map does not cover exactly the position pairs")
        return problems
    for (i, j), y in sorted(s.witnesses.items()):
        ei = h.edges[s.edge_indices[i]]
        ej = h.edges[s.edge_indices[j]]
        if y not in ei or y not in ej:
            problems.append(f"witness {y} for pair ({i},{j}) not in both edges")
        for k in range(d):
            if k in (i, j):
                continue
            if y in h.edges[s.edge_indices[k]]:
                problems.append(
                    f"witness {y} for pair ({i},{j}) lies in chosen edge position {k}"
                )
    return problems


def _find_dsw(h: Hypergraph, d: int, meter: _Meter) -> DswStructure | None:
    m = len(h.edges)
    if d > m:
        return None
    masks = h.edge_masks()

    def extend(
        chosen: list[int], pools: dict[tuple[int, int], int]
    ) -> DswStructure | None:
        if len(chosen) == d:
            witnesses = {
                pair: (pool & -pool).bit_length() - 1 for pair, pool in pools.items()
            }
            return DswStructure(tuple(chosen), witnesses)
        start = chosen[-1] + 1 if chosen else 0
        depth = len(chosen)
        for nxt in range(start, m):
            if m - nxt < d - depth:
                break
            meter.tick("find_dsw_structure")
            new_pools: dict[tuple[int, int], int] = {}
            ok = True
            # adding e_nxt shrinks every existing pair's eligible pool
            for pair, pool in pools.items():
                p2 = pool & ~masks[nxt]
                if not p2:
                    ok = False
                    break
                new_pools[pair] = p2
            if ok:
                for ai, a_idx in enumerate(chosen):
                    pool = masks[a_idx] & masks[nxt]
                    for other in chosen:
                        if other != a_idx:
                            pool &= ~masks[other]
                    if not pool:
                        ok = False
                        break
                    new_pools[(ai, depth)] = pool
            if ok:
                found = extend(chosen + [nxt], new_pools)
                if found is not None:
                    return found
        return None

    return extend([], {})


def find_dsw_structure(
    h: Hypergraph, d: int, budget: SearchBudget | None = None
) -> DswStructure | None:
    """Exhaustive search for a d-edge private-witness structure.

    Enumerates d-subsets of hyperedge indices in lexicographic tuple order,
    pruning a partial choice as soon as some pair's eligible pool
    (e_i ∩ e_j) \\ ∪_{k≠i,j} e_k over the chosen edges becomes empty; the
    per-pair witness is the smallest eligible vertex id.  Returns the first
    structure in that order, or None; the result is re-checked by
    :func:`dsw_structure_violations` before being returned.
    """
    if not isinstance(d, int) or d < 2:
        raise OutOfRange(f"structure search needs d >= 2, got {d!r}")
    meter = meter_for(budget)
    found = _find_dsw(h, d, meter)
    if found is not None:
        problems = dsw_structure_violations(h, found)
        assert not problems, problems
    return found


def max_dsw_size(h: Hypergraph, budget: SearchBudget | None = None) -> int:
    """Largest d admitting a private-witness structure.

    The structure property is hereditary (dropping an edge only loosens the
    privacy constraints), so the answer is searched by decreasing d from
    the edge count; a single-edge choice is vacuously valid, so any
    nonempty hypergraph scores at least 1.
    """
    m = len(h.edges)
    if m == 0:
        return 0
    meter = meter_for(budget)
    for d in range(m, 1, -1):
        found = _find_dsw(h, d, meter)
        if found is not None:
            problems = dsw_structure_violations(h, found)
            assert not problems, problems
            return d
    return 1
