"""Corpus generators: classical graphs, triangle-free towers, random maximal
triangle-free graphs, and synthetic private-witness configurations.

Every generator is a pure deterministic function of its parameters, so
serialized outputs are byte-identical across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import BadParameter
from .graphs import Graph, is_maximal_triangle_free

__all__ = [
    "SyntheticDswSpec",
    "gen_cycle",
    "gen_petersen",
    "gen_kneser",
    "gen_mycielski",
    "gen_random_mtf",
    "gen_synthetic_dsw",
]


def gen_cycle(n: int) -> Graph:
    """Cycle C_n for n ≥ 3."""
    if not isinstance(n, int) or n < 3:
        raise BadParameter(f"cycle needs n >= 3, got {n!r}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_petersen() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((i, i + 5))                # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner 5-cycle at step 2
    return Graph(10, edges)


def gen_kneser(n: int, k: int) -> Graph:
    """Kneser graph: vertices are the k-subsets of [n], edges join disjoint sets.

    Vertices are indexed by the lexicographic order of the subsets; each
    vertex is labeled with its subset for report readability.
    """
    if not (isinstance(n, int) and isinstance(k, int)) or k < 1 or n < 2 * k:
        raise BadParameter(f"kneser needs 1 <= k and n >= 2k, got n={n!r}, k={k!r}")
    subsets = list(combinations(range(n), k))
    if len(subsets) > 100_000:
        raise BadParameter(f"kneser({n},{k}) would have {len(subsets)} vertices")
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not set(subsets[i]) & set(subsets[j])
    ]
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    return Graph(len(subsets), edges, labels)


def gen_mycielski(g: Graph) -> Graph:
    """Mycielski construction on g.

    Output vertices are V = 0..n-1 (original), V' = n..2n-1 (shadows), and
    z = 2n; shadow u' = n+u is adjacent to the original neighbors of u, and
    z is adjacent to every shadow.  Preserves triangle-freeness and raises
    the chromatic number by exactly one.
    """
    n = g.n
    edges = list(g.edges())
    for u in range(n):
        for w in g.neighbors(u):
            edges.append((n + u, w))
    z = 2 * n
    for u in range(n):
        edges.append((z, n + u))
    return Graph(2 * n + 1, edges)


def gen_random_mtf(n: int, seed: int) -> Graph:
    """Random maximal triangle-free graph on n vertices, deterministic in seed.

    Saturation process: start edgeless, visit the current non-edges in
    seeded shuffled order, add an edge whenever its endpoints have no common
    neighbor (so the graph stays triangle-free), and repeat passes until a
    full pass adds nothing.  At the fixed point every remaining non-edge
    has a common neighbor, which is exactly maximality.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameter(f"gen_random_mtf needs n >= 1, got {n!r}")
    rng = random.Random(seed)
    bits = [0] * n
    edges: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        nonedges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if not (bits[u] >> v) & 1
        ]
        rng.shuffle(nonedges)
        for u, v in nonedges:
            if not bits[u] & bits[v]:
                bits[u] |= 1 << v
                bits[v] |= 1 << u
                edges.append((u, v))
                changed = True
    return Graph(n, edges)


@dataclass(frozen=True)
class SyntheticDswSpec:
    """Parameters for a synthetic private-witness configuration.

    ``d`` is the number of x-vertices; ``pattern_edges`` selects which pairs
    {i, j} get a witness y_{i,j} (None means all pairs); ``padding`` asks for
    extra vertices embedding the configuration in a larger maximal
    triangle-free host while keeping the X/Y adjacency pattern intact.
    """

    d: int
    pattern_edges: frozenset[tuple[int, int]] | None = None
    padding: bool = False

    def normalized_pairs(self) -> list[tuple[int, int]]:
        if not isinstance(self.d, int) or self.d < 2:
            raise BadParameter(f"synthetic spec needs d >= 2, got {self.d!r}")
        if self.pattern_edges is None:
            return list(combinations(range(self.d), 2))
        pairs = set()
        for p in self.pattern_edges:
            i, j = p
            if i == j:
                raise BadParameter(f"pattern pair {p!r} is degenerate")
            if not (0 <= i < self.d and 0 <= j < self.d):
                raise BadParameter(f"pattern pair {p!r} outside [0, {self.d})")
            pairs.add((min(i, j), max(i, j)))
        return sorted(pairs)


def gen_synthetic_dsw(
    spec: SyntheticDswSpec,
) -> tuple[Graph, frozenset[int], dict[tuple[int, int], int]]:
    """Build the X/Y configuration of a private-witness structure.

    Returns ``(graph, x, witnesses)`` where X = {0..d-1} is stable, the
    witness vertices follow in sorted pair order, each y_{i,j} is adjacent
    to exactly x_i and x_j within X ∪ Y, and ``witnesses`` maps the vertex
    pair (x_i, x_j) to its y.  Without padding the output is exactly the
    1-subdivision of the pattern-edge graph (and need not be maximal
    triangle-free); with padding it is embedded in a maximal triangle-free
    host that leaves the X/Y adjacency pattern untouched.
    """
    pairs = spec.normalized_pairs()
    d = spec.d
    edges: list[tuple[int, int]] = []
    labels = [f"x{i}" for i in range(d)]
    witnesses: dict[tuple[int, int], int] = {}
    for idx, (i, j) in enumerate(pairs):
        y = d + idx
        witnesses[(i, j)] = y
        edges.append((i, y))
        edges.append((j, y))
        labels.append(f"y{i}-{j}")
    x_set = frozenset(range(d))
    if not spec.padding:
        return Graph(d + len(pairs), edges, labels), x_set, dict(witnesses)

    # padding to a maximal triangle-free host, complete patterns only
    if len(pairs) != d * (d - 1) // 2:
        raise BadParameter(
            "padding is only supported for the complete pattern; "
            "a missing pair {i,j} leaves x_i, x_j without a common neighbor"
        )
    bare = Graph(d + len(pairs), edges, labels)
    if is_maximal_triangle_free(bare):
        # d=2 gives P_3, which is already maximal
        return bare, x_set, dict(witnesses)

    n_y = len(pairs)
    w_base = d + n_y
    # w_i repairs the pairs (x_i, y_{j,k}) with i outside {j,k}
    for i in range(d):
        labels.append(f"w{i}")
        edges.append((i, w_base + i))
        for (j, k) in pairs:
            if i != j and i != k:
                edges.append((w_base + i, witnesses[(j, k)]))
    n_total = w_base + d
    if d == 4:
        # hub q joins all witnesses: repairs disjoint witness pairs
        q = n_total
        labels.append("q")
        for idx in range(n_y):
            edges.append((q, d + idx))
        n_total += 1
    if d == 3:
        # hub r joins all w_i: repairs the w pairs, which share no witness here
        r = n_total
        labels.append("r")
        for i in range(d):
            edges.append((r, w_base + i))
        n_total += 1
    padded = Graph(n_total, edges, labels)
    if not is_maximal_triangle_free(padded):
        raise BadParameter(f"padding failed for d={d}: host is not maximal triangle-free")
    return padded, x_set, dict(witnesses)
