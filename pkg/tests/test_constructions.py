"""Generators: counts, regularity, design properties, determinism."""

from collections import Counter
from itertools import combinations

import pytest

from hyperconn import (
    Hypergraph,
    HypergraphError,
    SplitMix64,
    affine_doubled_family,
    affine_hypergraph,
    affine_plane_classes,
    base_differences_distinct,
    builtin_corpus,
    circulant_graph,
    complete_uniform,
    cyclic_difference_hypergraph,
    degree,
    glued_complete_family,
    is_connected,
    is_linear,
    is_uniform,
    linear_uniform_corpus,
    random_uniform_hypergraph,
    transitive_graph_corpus,
)


def test_splitmix64_reference_sequence():
    """First outputs for seed 0 from the published reference implementation."""
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4
    assert rng.next_u64() == 0x06C45D188009454F


def test_splitmix64_below_and_subset():
    rng = SplitMix64(1234567)
    for bound in (1, 2, 7, 100, 10**9):
        for _ in range(50):
            assert 0 <= rng.below(bound) < bound
    with pytest.raises(ValueError):
        rng.below(0)
    sub = SplitMix64(7).subset(10, 4)
    assert sub == SplitMix64(7).subset(10, 4)
    assert len(set(sub)) == 4
    assert sub == tuple(sorted(sub))
    assert all(0 <= v < 10 for v in sub)
    assert SplitMix64(3).subset(5, 5) == (0, 1, 2, 3, 4)


def test_complete_uniform():
    H = complete_uniform(5, 3)
    assert H.n == 5
    assert H.m == 10
    assert H.edges == tuple(combinations(range(5), 3))
    assert is_uniform(H) == 3
    assert complete_uniform(4, 2).m == 6
    with pytest.raises(HypergraphError):
        complete_uniform(3, 1)
    with pytest.raises(HypergraphError):
        complete_uniform(3, 4)


def test_glued_complete_family():
    H = glued_complete_family(5, 3)
    assert (H.n, H.m) == (15, 35)
    assert all(degree(H, v) == 7 for v in range(15))
    assert is_uniform(H) == 3
    assert not is_linear(H)
    assert is_connected(H)
    joining = [e for e in H.edges if {v // 5 for v in e} == {0, 1, 2}]
    assert len(joining) == 5
    for v in range(5):
        assert (v, 5 + v, 10 + v) in joining


def test_glued_complete_parameter_guard():
    with pytest.raises(HypergraphError) as err:
        glued_complete_family(4, 3)
    assert "n >= 5" in str(err.value)
    relaxed = glued_complete_family(4, 3, permissive=True)
    assert (relaxed.n, relaxed.m) == (12, 16)
    with pytest.raises(HypergraphError):
        glued_complete_family(10, 2)
    with pytest.raises(HypergraphError):
        glued_complete_family(3, 3, permissive=True)


@pytest.mark.parametrize("k", [3, 5, 7])
def test_affine_plane_classes_invariants(k):
    classes = affine_plane_classes(k).classes
    points = set(range(k * k))
    assert len(classes) == k + 1
    for group in classes:
        assert len(group) == k
        covered = [v for line in group for v in line]
        assert len(covered) == k * k
        assert set(covered) == points
        assert all(len(line) == k for line in group)
    pair_seen = Counter()
    for group in classes:
        for line in group:
            for a, b in combinations(line, 2):
                pair_seen[(a, b)] += 1
    assert all(c == 1 for c in pair_seen.values())
    assert len(pair_seen) == k * k * (k * k - 1) // 2


def test_affine_plane_classes_frozen_lines():
    classes = affine_plane_classes(3).classes
    assert classes[0] == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    assert classes[1][0] == (0, 3, 6)
    assert classes[2][0] == (0, 4, 8)


def test_affine_plane_rejects_non_primes():
    for bad in (2, 4, 6, 9, 15, 1, 0):
        with pytest.raises(HypergraphError) as err:
            affine_plane_classes(bad)
        assert "odd prime" in str(err.value)


def test_affine_hypergraph():
    H = affine_hypergraph(3)
    assert (H.n, H.m) == (9, 9)
    assert is_uniform(H) == 3
    assert bool(is_linear(H))
    assert all(degree(H, v) == 3 for v in range(9))
    rows = {(0, 1, 2), (3, 4, 5), (6, 7, 8)}
    assert rows.isdisjoint(set(H.edges))
    big = affine_hypergraph(5)
    assert (big.n, big.m) == (25, 25)
    assert all(degree(big, v) == 5 for v in range(25))


def test_affine_doubled_family():
    H = affine_doubled_family(3)
    assert (H.n, H.m) == (18, 21)
    assert sorted(set(len(e) for e in H.edges)) == [3, 6]
    assert all(degree(H, v) == 4 for v in range(18))
    assert is_uniform(H) is None
    assert bool(is_linear(H))
    assert is_connected(H)
    assert (0, 1, 2, 9, 10, 11) in H.edges
    big = affine_doubled_family(5)
    assert (big.n, big.m) == (50, 55)
    assert all(degree(big, v) == 6 for v in range(50))


def test_cyclic_difference_examples():
    H = cyclic_difference_hypergraph(13, (0, 1, 4))
    assert (H.n, H.m) == (13, 13)
    assert is_uniform(H) == 3
    assert bool(is_linear(H))
    assert is_connected(H)
    nonlinear = cyclic_difference_hypergraph(6, (0, 1, 2))
    assert not is_linear(nonlinear)
    cycle = cyclic_difference_hypergraph(5, (0, 1))
    assert cycle == circulant_graph(5, (1,))


def test_cyclic_difference_periodic_base_dedups():
    H = cyclic_difference_hypergraph(4, (0, 2))
    assert H.m == 2
    assert H.edges == ((0, 2), (1, 3))
    assert not is_connected(H)


def test_cyclic_difference_validation():
    with pytest.raises(HypergraphError):
        cyclic_difference_hypergraph(7, (2,))
    with pytest.raises(HypergraphError):
        cyclic_difference_hypergraph(7, (0, 9))


def test_base_differences_distinct():
    assert base_differences_distinct(13, (0, 1, 4))
    assert base_differences_distinct(7, (0, 1, 3))
    assert not base_differences_distinct(6, (0, 1, 2))
    assert not base_differences_distinct(7, (0, 1, 2))


def test_distinct_differences_imply_linear():
    rng = SplitMix64(29)
    checked = 0
    for _ in range(200):
        n = 5 + rng.below(16)
        size = 2 + rng.below(3)
        base = SplitMix64(rng.next_u64()).subset(n, size)
        H = cyclic_difference_hypergraph(n, base)
        if H.m < n:
            continue
        assert base_differences_distinct(n, base) == bool(is_linear(H)), (n, base)
        checked += 1
    assert checked > 50


def test_circulant_graph():
    six = circulant_graph(6, (1,))
    assert six.m == 6
    assert is_uniform(six) == 2
    matching = circulant_graph(6, (3,))
    assert matching.m == 3
    assert not is_connected(matching)
    k6 = circulant_graph(6, (1, 2, 3))
    assert k6 == complete_uniform(6, 2)
    with pytest.raises(HypergraphError):
        circulant_graph(1, ())
    with pytest.raises(HypergraphError):
        circulant_graph(6, (0,))
    with pytest.raises(HypergraphError):
        circulant_graph(6, (4,))


def test_random_uniform_hypergraph():
    H = random_uniform_hypergraph(8, 3, 10, seed=42)
    assert H == random_uniform_hypergraph(8, 3, 10, seed=42)
    assert H != random_uniform_hypergraph(8, 3, 10, seed=43)
    assert H.n == 8
    assert 0 < H.m <= 10
    assert is_uniform(H) == 3
    assert random_uniform_hypergraph(4, 2, 0, seed=1).m == 0
    saturated = random_uniform_hypergraph(4, 2, 500, seed=9)
    assert saturated.m <= 6
    assert random_uniform_hypergraph(3, 3, 5, seed=2).edges == ((0, 1, 2),)
    with pytest.raises(HypergraphError):
        random_uniform_hypergraph(3, 4, 1, seed=0)
    with pytest.raises(HypergraphError):
        random_uniform_hypergraph(3, 2, -1, seed=0)


def test_generators_emit_canonical_edge_lists():
    for name, H in builtin_corpus():
        assert H.edges == tuple(sorted(set(H.edges))), name
        for e in H.edges:
            assert e == tuple(sorted(e)), name


def test_builtin_corpus_shape():
    entries = builtin_corpus()
    names = [name for name, _ in entries]
    assert len(names) == len(set(names)) == 21
    assert names == sorted(names)
    assert all(isinstance(H, Hypergraph) for _, H in entries)


def test_transitive_graph_corpus():
    entries = transitive_graph_corpus()
    assert [name for name, _ in entries] == [
        "circulant_6_1",
        "circulant_7_12",
        "circulant_8_12",
        "circulant_9_13",
        "circulant_10_125",
    ]
    for name, H in entries:
        assert is_uniform(H) == 2, name
        assert is_connected(H), name


def test_linear_uniform_corpus():
    entries = linear_uniform_corpus()
    assert [name for name, _ in entries] == [
        "affine_3",
        "affine_5",
        "cyclic_difference_13_014",
        "cyclic_difference_21_037",
    ]
    for name, H in entries:
        k = is_uniform(H)
        assert k is not None and k >= 3, name
        assert bool(is_linear(H)), name
        assert is_connected(H), name
