"""Session-scoped corpora.

Every corpus is deterministic (fixed seeds, fixed construction order) so
repeated runs exercise identical inputs.
"""

from __future__ import annotations

import pytest

from families import (
    complete_bipartite,
    path_graph,
    random_bipartite,
    random_graph,
    random_tree,
    star_graph,
)
from mtfsubdiv import (
    Graph,
    gen_cycle,
    gen_mycielski,
    gen_petersen,
    gen_random_mtf,
    is_maximal_triangle_free,
    is_triangle_free,
)


@pytest.fixture(scope="session")
def mtf_corpus() -> list[Graph]:
    """500 maximal triangle-free graphs, 1 ≤ n ≤ 30, mixed families."""
    named = [
        Graph(1, []),
        Graph(2, [(0, 1)]),
        gen_cycle(4),
        gen_cycle(5),
        gen_petersen(),
        gen_mycielski(gen_cycle(5)),
        complete_bipartite(1, 5),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        complete_bipartite(4, 6),
        complete_bipartite(7, 7),
        star_graph(12),
    ]
    graphs = [g for g in named if is_maximal_triangle_free(g)]
    assert len(graphs) == len(named), "every named family member is maximal"
    seed = 0
    while len(graphs) < 500:
        n = 1 + seed % 30
        graphs.append(gen_random_mtf(n, seed))
        seed += 1
    graphs = graphs[:500]
    assert all(1 <= g.n <= 30 for g in graphs)
    return graphs


@pytest.fixture(scope="session")
def tf_corpus() -> list[Graph]:
    """500 triangle-free graphs with n ≤ 200."""
    graphs: list[Graph] = []
    tower = Graph(2, [(0, 1)])
    graphs.append(tower)
    for _ in range(6):
        tower = gen_mycielski(tower)
        graphs.append(tower)  # 5, 11, 23, 47, 95, 191 vertices
    graphs += [gen_cycle(n) for n in range(4, 64)]
    graphs += [path_graph(n) for n in (1, 2, 3, 17, 60, 128, 200)]
    graphs += [star_graph(n) for n in (2, 6, 30, 111, 200)]
    graphs += [complete_bipartite(a, b) for a, b in ((1, 1), (3, 7), (9, 9), (20, 40))]
    seed = 0
    while len(graphs) < 500:
        kind = seed % 4
        if kind == 0:
            graphs.append(random_tree(10 + seed % 191, seed))
        elif kind == 1:
            a = 2 + seed % 60
            b = 2 + (3 * seed) % 60
            graphs.append(random_bipartite(a, b, 0.3, seed))
        elif kind == 2:
            graphs.append(gen_random_mtf(5 + seed % 46, seed))
        else:
            graphs.append(gen_cycle(4 + seed % 150))
        seed += 1
    graphs = graphs[:500]
    assert all(g.n <= 200 for g in graphs)
    assert all(is_triangle_free(g) for g in graphs)
    return graphs


@pytest.fixture(scope="session")
def small_host_corpus() -> list[Graph]:
    """200 hosts with at most 10 vertices for oracle comparisons."""
    hosts: list[Graph] = [
        Graph(0, []),
        Graph(1, []),
        Graph(2, [(0, 1)]),
        gen_cycle(3),
        gen_cycle(4),
        gen_cycle(5),
        gen_cycle(6),
        gen_cycle(7),
        gen_cycle(8),
        gen_cycle(9),
        gen_cycle(10),
        gen_petersen(),
        star_graph(7),
        path_graph(9),
        complete_bipartite(2, 3),
        complete_bipartite(3, 3),
        complete_bipartite(4, 4),
    ]
    seed = 0
    densities = (0.15, 0.25, 0.35)
    while len(hosts) < 200:
        kind = seed % 5
        if kind == 4:
            hosts.append(random_tree(4 + seed % 7, seed))
        else:
            n = 4 + seed % 7
            hosts.append(random_graph(n, densities[seed % 3], seed))
        seed += 1
    hosts = hosts[:200]
    assert all(g.n <= 10 for g in hosts)
    return hosts
