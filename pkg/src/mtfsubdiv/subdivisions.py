"""Subdivision witnesses: verification, exact search, and the lifting step
from a derived graph back into its maximal triangle-free host.

A subdivision witness maps pattern vertices to branch vertices of the host
and realizes every pattern edge as a host path (length ≥ 1, so unsubdivided
edges are allowed); the paths are internally disjoint.  In the induced
variant the host subgraph induced on all used vertices must equal the
subdivided pattern exactly, with no chords.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .budget import SearchBudget, _Meter, meter_for
from .errors import BadParameter, InconsistentWitnesses, OutOfRange, PreconditionViolated
from .graphs import Graph

__all__ = [
    "SubdivisionWitness",
    "WitnessCheck",
    "verify_witness",
    "find_subdivision",
    "derived_graph",
    "lift_to_induced_subdivision",
]


@dataclass(frozen=True)
class SubdivisionWitness:
    """A (possibly induced) subdivision of ``pattern`` inside ``host``.

    ``branch_map`` sends each pattern vertex to its branch vertex;
    ``paths`` sends each pattern edge (u, v) with u < v to the host path
    realizing it, listed from branch_map[u] to branch_map[v].  ``induced``
    records the mode the witness was found or built under; verification is
    always re-run independently of this flag.
    """

    pattern: Graph
    host: Graph
    branch_map: dict[int, int]
    paths: dict[tuple[int, int], tuple[int, ...]]
    induced: bool = False

    def used_vertices(self) -> set[int]:
        used = set(self.branch_map.values())
        for path in self.paths.values():
            used.update(path)
        return used

    def path_edges(self) -> set[tuple[int, int]]:
        edges: set[tuple[int, int]] = set()
        for path in self.paths.values():
            for a, b in zip(path, path[1:]):
                edges.add((min(a, b), max(a, b)))
        return edges


@dataclass(frozen=True)
class WitnessCheck:
    """Boolean verification outcome plus a reason code when it fails."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(w: SubdivisionWitness, require_induced: bool) -> WitnessCheck:
    """Re-check every witness invariant from scratch.

    Works purely from the witness fields, independent of how the witness
    was produced.  Returns a falsy check with a machine-readable
    ``reason`` on the first violated invariant.
    """
    p, h = w.pattern, w.host
    if set(w.branch_map.keys()) != set(range(p.n)):
        return WitnessCheck(False, "branch-map-domain")
    images = list(w.branch_map.values())
    for v in images:
        if not (isinstance(v, int) and 0 <= v < h.n):
            return WitnessCheck(False, "branch-out-of-range")
    if len(set(images)) != len(images):
        return WitnessCheck(False, "branch-not-injective")
    if set(w.paths.keys()) != set(p.edges()):
        return WitnessCheck(False, "paths-domain")
    branch_set = set(images)
    interiors_seen: set[int] = set()
    path_edges: set[tuple[int, int]] = set()
    for (a, b) in sorted(w.paths.keys()):
        path = w.paths[(a, b)]
        if len(path) < 2:
            return WitnessCheck(False, "path-too-short")
        for v in path:
            if not (isinstance(v, int) and 0 <= v < h.n):
                return WitnessCheck(False, "path-out-of-range")
        if path[0] != w.branch_map[a] or path[-1] != w.branch_map[b]:
            return WitnessCheck(False, "path-endpoints")
        if len(set(path)) != len(path):
            return WitnessCheck(False, "path-repeats-vertex")
        for u, v in zip(path, path[1:]):
            if not h.has_edge(u, v):
                return WitnessCheck(False, "path-not-adjacent")
            path_edges.add((min(u, v), max(u, v)))
        interior = set(path[1:-1])
        if interior & branch_set:
            return WitnessCheck(False, "interior-hits-branch-vertex")
        if interior & interiors_seen:
            return WitnessCheck(False, "paths-share-interior")
        interiors_seen |= interior
    if require_induced:
        used = sorted(branch_set | interiors_seen)
        for i, u in enumerate(used):
            for v in used[i + 1 :]:
                if h.has_edge(u, v) and (u, v) not in path_edges:
                    return WitnessCheck(False, "chord")
    return WitnessCheck(True, None)


# -- exact search -------------------------------------------------------


def _bfs_dist(host: Graph, target: int, allowed: set[int]) -> dict[int, int]:
    """BFS distances to target inside the allowed vertex set."""
    dist = {target: 0}
    queue = deque([target])
    while queue:
        x = queue.popleft()
        for y in host.neighbors(x):
            if y in allowed and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


class _SubdivSearch:
    """Backtracking state for one find_subdivision call."""

    def __init__(self, pattern: Graph, host: Graph, induced: bool, meter: _Meter):
        self.p = pattern
        self.h = host
        self.induced = induced
        self.meter = meter
        self.branch: dict[int, int] = {}
        self.branch_used: set[int] = set()
        self.interiors: set[int] = set()
        self.paths: dict[tuple[int, int], tuple[int, ...]] = {}
        # pattern vertices in branching order: descending degree, ties by id
        self.porder = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
        self.pdeg = pattern.degrees()
        self.hdeg = host.degrees()
        self.adj = [sorted(host.neighbors(v)) for v in range(host.n)]

    def run(self) -> SubdivisionWitness | None:
        return self._assign(0)

    # branch-vertex assignment ------------------------------------------

    def _assign(self, i: int) -> SubdivisionWitness | None:
        if i == len(self.porder):
            edge_order = self._edge_order()
            if edge_order is None:
                return None
            return self._route(edge_order, 0)
        pv = self.porder[i]
        for hv in range(self.h.n):
            if hv in self.branch_used or self.hdeg[hv] < self.pdeg[pv]:
                continue
            self.meter.tick("find_subdivision")
            if self.induced and not self._branch_compatible(pv, hv):
                continue
            self.branch[pv] = hv
            self.branch_used.add(hv)
            found = self._assign(i + 1)
            if found is not None:
                return found
            del self.branch[pv]
            self.branch_used.remove(hv)
        return None

    def _branch_compatible(self, pv: int, hv: int) -> bool:
        # two branch images may be host-adjacent only along a pattern edge,
        # which is then forced to route as exactly that host edge
        for qv, qim in self.branch.items():
            if self.h.has_edge(hv, qim) and not self.p.has_edge(pv, qv):
                return False
        return True

    # path routing ------------------------------------------------------

    def _edge_order(self) -> list[tuple[int, int]] | None:
        """Pattern edges sorted by host BFS distance of their images."""
        order = []
        for (a, b) in self.p.edges():
            s, t = self.branch[a], self.branch[b]
            allowed = set(range(self.h.n)) - (self.branch_used - {s, t})
            dist = _bfs_dist(self.h, t, allowed)
            if s not in dist:
                return None
            order.append((dist[s], (a, b)))
        order.sort()
        return [e for _, e in order]

    def _route(self, edge_order: list[tuple[int, int]], k: int) -> SubdivisionWitness | None:
        if k == len(edge_order):
            witness = SubdivisionWitness(
                self.p, self.h, dict(self.branch), dict(self.paths), self.induced
            )
            check = verify_witness(witness, self.induced)
            assert check.ok, check.reason
            return witness
        a, b = edge_order[k]
        s, t = self.branch[a], self.branch[b]
        for path in self._candidate_paths(s, t):
            self.paths[(a, b)] = path
            interior = set(path[1:-1])
            self.interiors |= interior
            found = self._route(edge_order, k + 1)
            if found is not None:
                return found
            self.interiors -= interior
            del self.paths[(a, b)]
        return None

    def _candidate_paths(self, s: int, t: int):
        """Yield candidate host paths from s to t, shortest first, then lex.

        Interiors avoid all branch images and previously placed interiors.
        In induced mode, host-adjacent endpoints force the direct edge, and
        an interior may touch no used vertex besides its path neighbors.
        """
        if self.induced and self.h.has_edge(s, t):
            yield (s, t)
            return
        blocked = (self.branch_used - {s, t}) | self.interiors
        allowed = set(range(self.h.n)) - blocked
        dist = _bfs_dist(self.h, t, allowed)
        if s not in dist:
            return
        max_len = len(allowed) - 1
        for length in range(max(1, dist[s]), max_len + 1):
            yield from self._paths_of_length(s, t, length, allowed, dist)

    def _paths_of_length(
        self,
        s: int,
        t: int,
        length: int,
        allowed: set[int],
        dist: dict[int, int],
    ):
        induced = self.induced
        h = self.h
        path = [s]
        on_path = {s}

        def step(x: int, remaining: int):
            self.meter.tick("find_subdivision")
            if remaining == 0:
                if x == t:
                    yield tuple(path)
                return
            candidates = self.adj[x]
            if induced and x != s and h.has_edge(x, t):
                # an interior adjacent to the target must close the path
                # now, else the edge x-t would survive as a chord
                candidates = [t] if remaining == 1 else []
            for y in candidates:
                if y == t:
                    if remaining != 1:
                        continue
                elif y not in allowed or y in on_path or dist.get(y, 1 << 30) > remaining:
                    continue
                elif induced and not self._interior_ok(y, x, t, on_path):
                    continue
                path.append(y)
                on_path.add(y)
                yield from step(y, remaining - 1)
                on_path.remove(y)
                path.pop()

        yield from step(s, length)

    def _interior_ok(self, y: int, pred: int, t: int, on_path: set[int]) -> bool:
        """Induced-mode filter for a prospective interior vertex y.

        Among everything placed so far (branch images, interiors of routed
        paths, the current partial path) y may be adjacent only to its
        predecessor.  Adjacency to the target t is tolerated here because
        the step above then forces immediate closure at t.
        """
        for z in self.h.neighbors(y):
            if z == pred or z == t:
                continue
            if z in on_path or z in self.branch_used or z in self.interiors:
                return False
        return True


def find_subdivision(
    pattern: Graph,
    host: Graph,
    require_induced: bool = False,
    budget: SearchBudget | None = None,
) -> SubdivisionWitness | None:
    """Exact search for a (possibly induced) subdivision of pattern in host.

    Branch images are chosen in a deterministic order respecting degree
    feasibility; pattern edges are then routed as internally disjoint
    paths, tried shortest first, with full backtracking.  In induced mode
    chord-creating choices are pruned as soon as they arise.  Returns the
    first witness in search order (always verified before returning), or
    None once the search space is exhausted.
    """
    if pattern.n > host.n:
        return None
    meter = meter_for(budget)
    search = _SubdivSearch(pattern, host, require_induced, meter)
    return search.run()


# -- derived graph and lifting ------------------------------------------


def _normalize_pair(pair: Iterable[int]) -> tuple[int, int]:
    u, v = sorted(pair)
    if u == v:
        raise BadParameter(f"degenerate pair {(u, v)!r}")
    return (u, v)


def _normalized_witnesses(
    witnesses: Mapping[tuple[int, int], int]
) -> dict[tuple[int, int], int]:
    """Sort pair keys; reject a pair recorded twice with different values."""
    norm: dict[tuple[int, int], int] = {}
    for pair, y in witnesses.items():
        key = _normalize_pair(pair)
        if key in norm and norm[key] != y:
            raise InconsistentWitnesses(
                f"pair {key} recorded with witnesses {norm[key]} and {y}"
            )
        norm[key] = y
    return norm


def derived_graph(
    x: Iterable[int],
    witnesses: Mapping[tuple[int, int], int],
    y_prime: Iterable[int],
) -> tuple[Graph, tuple[int, ...]]:
    """Graph on X (re-indexed 0..|X|-1) with an edge {i, j} exactly when
    the witness recorded for the pair lies in y_prime.

    Returns the graph plus the ascending mapping position → original
    vertex.  Witness vertices must be unique per pair at this stage; a
    vertex witnessing two different pairs raises InconsistentWitnesses.
    """
    xs = sorted(set(x))
    index = {v: i for i, v in enumerate(xs)}
    norm = _normalized_witnesses(witnesses)
    claimed: dict[int, tuple[int, int]] = {}
    for (u, v), y in sorted(norm.items()):
        if u not in index or v not in index:
            raise OutOfRange(f"witness pair {(u, v)!r} not within X")
        if y in claimed:
            raise InconsistentWitnesses(
                f"witness vertex {y} claimed by pairs {claimed[y]} and {(u, v)}"
            )
        claimed[y] = (u, v)
    yset = set(y_prime)
    if not yset <= set(norm.values()):
        raise BadParameter("y_prime contains vertices that are not witnesses")
    edges = [
        (index[u], index[v]) for (u, v), y in sorted(norm.items()) if y in yset
    ]
    return Graph(len(xs), edges), tuple(xs)


def lift_to_induced_subdivision(
    g: Graph,
    x_sub: Iterable[int],
    witnesses: Mapping[tuple[int, int], int],
    g_double_prime: Graph,
    mapping: Mapping[int, int],
) -> SubdivisionWitness:
    """Lift a subgraph of the derived graph to an induced subdivision in g.

    ``mapping`` sends each vertex of ``g_double_prime`` to a position in
    sorted(x_sub).  Each pattern edge (a, b) becomes the 2-edge path
    x_a - y - x_b through the pair's recorded witness.  Three structural
    preconditions are checked explicitly before assembly:

    (a) x_sub is a stable set in g;
    (b) the used witnesses form a stable set in g;
    (c) inside x_sub plus the used witnesses, each used witness is
        adjacent to exactly its own two x-vertices.

    The finished witness is re-verified in induced mode before being
    returned, so a successful return is a machine-checked certificate.
    """
    xs = sorted(set(x_sub))
    keys_ok = set(mapping.keys()) == set(range(g_double_prime.n))
    values_ok = all(
        isinstance(pos, int) and 0 <= pos < len(xs) for pos in mapping.values()
    )
    if not keys_ok or not values_ok:
        raise BadParameter("mapping must send every pattern vertex to a valid x-position")
    if len(set(mapping.values())) != len(mapping):
        raise BadParameter("mapping must be injective")
    for v in xs:
        if not (0 <= v < g.n):
            raise OutOfRange(f"x vertex {v!r} outside host range")
    norm = _normalized_witnesses(witnesses)

    # (a) stability of the chosen x set
    for i, u in enumerate(xs):
        for v in xs[i + 1 :]:
            if g.has_edge(u, v):
                raise PreconditionViolated("a", f"x vertices {u} and {v} are adjacent")

    used: dict[tuple[int, int], int] = {}
    for (a, b) in g_double_prime.edges():
        key = _normalize_pair((xs[mapping[a]], xs[mapping[b]]))
        if key not in norm:
            raise BadParameter(f"no witness recorded for pair {key!r}")
        used[(a, b)] = norm[key]

    # (b) stability of the used witness vertices
    y_used = sorted(set(used.values()))
    for i, u in enumerate(y_used):
        for v in y_used[i + 1 :]:
            if g.has_edge(u, v):
                raise PreconditionViolated("b", f"witnesses {u} and {v} are adjacent")

    # (c) exact adjacency inside x_sub ∪ Y''; a vertex witnessing two
    # pattern edges necessarily fails this check for at least one of them
    inside = set(xs) | set(y_used)
    for (a, b), y in sorted(used.items()):
        expect = {xs[mapping[a]], xs[mapping[b]]}
        actual = set(g.neighbors(y)) & inside
        if actual != expect:
            raise PreconditionViolated(
                "c",
                f"witness {y} for pattern edge {(a, b)} sees {sorted(actual)} "
                f"instead of exactly {sorted(expect)}",
            )

    branch = {a: xs[mapping[a]] for a in range(g_double_prime.n)}
    paths = {
        (a, b): (branch[a], used[(a, b)], branch[b])
        for (a, b) in g_double_prime.edges()
    }
    witness = SubdivisionWitness(g_double_prime, g, branch, paths, induced=True)
    check = verify_witness(witness, require_induced=True)
    assert check.ok, f"lifting produced an invalid witness: {check.reason}"
    return witness
