"""Generator contracts: named isomorphisms, maximality, determinism,
synthetic disjointly-witnessed hosts."""

from __future__ import annotations

import pytest

from oracles import bfs_girth, is_isomorphic_small
from mtfsubdiv import (
    BadParameter,
    Graph,
    SyntheticDswSpec,
    chromatic_number,
    find_dsw_structure,
    gen_cycle,
    gen_kneser,
    gen_mycielski,
    gen_petersen,
    gen_random_mtf,
    gen_synthetic_dsw,
    is_maximal_triangle_free,
    is_triangle_free,
    neighborhood_hypergraph,
)


def test_cycle():
    g = gen_cycle(5)
    assert g.n == 5 and g.m == 5
    assert g.degrees() == [2] * 5
    with pytest.raises(BadParameter):
        gen_cycle(2)


def test_petersen_shape():
    g = gen_petersen()
    assert g.n == 10 and g.m == 15
    assert g.degrees() == [3] * 10
    assert bfs_girth(g) == 5


def test_kneser_is_petersen():
    g = gen_kneser(5, 2)
    assert is_isomorphic_small(g, gen_petersen())
    assert g.labels is not None and g.labels[0] == "{0,1}"


def test_kneser_matching():
    # K(4,2): three disjoint pairs, a perfect matching on 6 vertices
    g = gen_kneser(4, 2)
    assert g.n == 6 and g.m == 3
    assert g.degrees() == [1] * 6
    with pytest.raises(BadParameter):
        gen_kneser(3, 2)  # needs n >= 2k


def test_mycielski_of_k2_is_c5():
    assert is_isomorphic_small(gen_mycielski(Graph(2, [(0, 1)])), gen_cycle(5))


def test_mycielski_raises_chromatic_and_keeps_triangle_free():
    g = Graph(2, [(0, 1)])
    for expected_chi in (3, 4):
        g = gen_mycielski(g)
        assert is_triangle_free(g)
        assert chromatic_number(g) == expected_chi
    assert g.n == 11  # the 4-chromatic Mycielski graph


def test_random_mtf_is_maximal_and_deterministic():
    for seed in (0, 1, 7):
        g = gen_random_mtf(18, seed)
        assert is_maximal_triangle_free(g)
        assert g == gen_random_mtf(18, seed)
    assert gen_random_mtf(18, 0) != gen_random_mtf(18, 1)


def test_random_mtf_tiny():
    assert gen_random_mtf(1, 0).n == 1
    g = gen_random_mtf(2, 0)
    assert g.m == 1  # the only maximal triangle-free graph on two vertices


def test_synthetic_dsw_bare_structure():
    spec = SyntheticDswSpec(d=3)
    g, x, wit = gen_synthetic_dsw(spec)
    assert x == frozenset({0, 1, 2})
    assert set(wit.keys()) == {(0, 1), (0, 2), (1, 2)}
    assert g.n == 6
    for (i, j), y in wit.items():
        assert g.has_edge(i, y) and g.has_edge(j, y)
        # y sees exactly its own pair among x-origins plus witnesses
        inside = x | set(wit.values())
        assert set(g.neighbors(y)) & inside == {i, j}
    for u in x:
        for v in x:
            if u < v:
                assert not g.has_edge(u, v)


def test_synthetic_dsw_partial_pattern():
    spec = SyntheticDswSpec(d=4, pattern_edges=frozenset({(0, 1), (2, 3)}))
    g, x, wit = gen_synthetic_dsw(spec)
    assert set(wit.keys()) == {(0, 1), (2, 3)}
    assert g.n == 6


def test_synthetic_dsw_validation():
    with pytest.raises(BadParameter):
        SyntheticDswSpec(d=1).normalized_pairs()
    with pytest.raises(BadParameter):
        SyntheticDswSpec(d=3, pattern_edges=frozenset({(0, 0)})).normalized_pairs()
    with pytest.raises(BadParameter):
        SyntheticDswSpec(d=3, pattern_edges=frozenset({(0, 5)})).normalized_pairs()
    with pytest.raises(BadParameter):
        gen_synthetic_dsw(
            SyntheticDswSpec(d=3, pattern_edges=frozenset({(0, 1)}), padding=True)
        )


def test_synthetic_dsw_padded_is_maximal():
    for d in range(2, 8):
        g, x, wit = gen_synthetic_dsw(SyntheticDswSpec(d=d, padding=True))
        assert is_maximal_triangle_free(g), f"d={d}"
        # the planted structure is still recoverable at size d
        h = neighborhood_hypergraph(g)
        s = find_dsw_structure(h, d)
        assert s is not None and s.d == d


def test_synthetic_dsw_labels():
    g, _, _ = gen_synthetic_dsw(SyntheticDswSpec(d=3))
    assert g.labels is not None
    assert g.labels[0] == "x0"
    assert "y0-1" in g.labels
