"""Deterministic instance generators and the built-in verification corpora.

Every generator is 0-based and emits a lexicographically sorted,
deduplicated edge list, so serialization of generated instances is
canonical.  Where a construction is usually described with 1-based labels,
the mapping is noted on the generator (and echoed into the provenance
comments the CLI writes).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .model import Hypergraph, HypergraphError

__all__ = [
    "SplitMix64",
    "ParallelClasses",
    "complete_uniform",
    "glued_complete_family",
    "affine_plane_classes",
    "affine_hypergraph",
    "affine_doubled_family",
    "cyclic_difference_hypergraph",
    "base_differences_distinct",
    "circulant_graph",
    "random_uniform_hypergraph",
    "builtin_corpus",
    "transitive_graph_corpus",
    "linear_uniform_corpus",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: a tiny, documented, portable 64-bit generator.

    Step: state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
    output z ^ (z >> 31); all arithmetic mod 2**64.

    Identical seeds give identical streams on every platform, so corpora
    sampled through this class are reproducible across implementations.
    """

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection, so no modulo bias."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        threshold = ((1 << 64) // bound) * bound
        while True:
            u = self.next_u64()
            if u < threshold:
                return u % bound

    def subset(self, n: int, k: int) -> tuple[int, ...]:
        """Uniform k-subset of range(n) via a partial Fisher-Yates shuffle."""
        pool = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return tuple(sorted(pool[:k]))


@dataclass(frozen=True)
class ParallelClasses:
    """Parallel line classes of a k x k point grid.

    ``classes[c][j]`` is a sorted line of k points; class 0 is the rows.
    """

    k: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self) -> None:
        normalized = tuple(
            tuple(tuple(line) for line in group) for group in self.classes
        )
        object.__setattr__(self, "classes", normalized)


def complete_uniform(n: int, k: int) -> Hypergraph:
    """All k-subsets of range(n) as edges, in lexicographic order."""
    if not 2 <= k <= n:
        raise HypergraphError(f"complete uniform requires 2 <= k <= n, got k={k}, n={n}")
    return Hypergraph(n, tuple(combinations(range(n), k)))


def glued_complete_family(n: int, k: int, permissive: bool = False) -> Hypergraph:
    """k complete k-uniform blocks on n vertices each, glued by n joining edges.

    Block i (1-based) occupies vertices [(i-1)*n, i*n); the joining edge for
    position v collects that position across all blocks, so a 1-based label
    (v, i) is vertex (i-1)*n + (v-1).  Requires k >= 3 and n >= k + 2, or
    n >= k + 1 with ``permissive``.
    """
    least = k + 1 if permissive else k + 2
    if k < 3 or n < least:
        raise HypergraphError(
            f"glued complete family requires k >= 3 and n >= {least}, got n={n}, k={k}"
        )
    edges = []
    for i in range(k):
        base = i * n
        for subset in combinations(range(n), k):
            edges.append(tuple(base + v for v in subset))
    for v in range(n):
        edges.append(tuple(i * n + v for i in range(k)))
    return Hypergraph(n * k, tuple(sorted(edges)))


def affine_plane_classes(k: int) -> ParallelClasses:
    """The k + 1 parallel classes of lines of the k x k grid, k an odd prime.

    Class 0 holds the rows.  Class i (1 <= i <= k) holds lines of slope
    i - 1: the line with intercept j picks, in row t, the column congruent
    to (i - 1) * t + j modulo k.  Every class partitions the k*k points and
    any two points share exactly one line overall.
    """
    _require_odd_prime(k)
    rows = tuple(tuple(range(i * k, (i + 1) * k)) for i in range(k))
    classes = [rows]
    for slope in range(k):
        group = []
        for intercept in range(k):
            line = tuple(t * k + (slope * t + intercept) % k for t in range(k))
            group.append(tuple(sorted(line)))
        classes.append(tuple(sorted(group)))
    return ParallelClasses(k, classes)


def affine_hypergraph(k: int) -> Hypergraph:
    """k*k vertices and the k*k lines of the sloped classes; the row class is
    deliberately left out, which makes the instance k-regular and linear."""
    pc = affine_plane_classes(k)
    edges = sorted(line for group in pc.classes[1:] for line in group)
    return Hypergraph(k * k, tuple(edges))


def affine_doubled_family(k: int) -> Hypergraph:
    """Two disjoint copies of :func:`affine_hypergraph` joined row by row.

    The second copy occupies vertices k*k..2*k*k-1.  Joining edge i (size
    2k) is row i of the grid together with its shifted twin, restoring row
    adjacency that the line classes alone do not provide.
    """
    base = affine_hypergraph(k)
    shift = k * k
    edges = list(base.edges)
    edges.extend(tuple(v + shift for v in e) for e in base.edges)
    for i in range(k):
        row = tuple(range(i * k, (i + 1) * k))
        edges.append(row + tuple(v + shift for v in row))
    return Hypergraph(2 * shift, tuple(sorted(edges)))


def cyclic_difference_hypergraph(n: int, base: Iterable[int]) -> Hypergraph:
    """All translates of ``base`` modulo n, deduplicated and sorted.

    Rotation by one is always an automorphism.  The instance is linear
    exactly when the pairwise differences of the base are distinct mod n
    (see :func:`base_differences_distinct`), provided the translates are
    themselves pairwise distinct.
    """
    b = tuple(sorted(set(base)))
    if len(b) < 2:
        raise HypergraphError(f"base must contain at least 2 residues, got {b}")
    if b[0] < 0 or b[-1] >= n:
        raise HypergraphError(f"base {b} must lie in [0, {n - 1}]")
    edges = {tuple(sorted((x + t) % n for x in b)) for t in range(n)}
    return Hypergraph(n, tuple(sorted(edges)))


def base_differences_distinct(n: int, base: Iterable[int]) -> bool:
    """Whether all ordered pairwise differences of the base are distinct mod n."""
    b = tuple(sorted(set(base)))
    diffs = [(x - y) % n for x in b for y in b if x != y]
    return len(diffs) == len(set(diffs))


def circulant_graph(n: int, offsets: Iterable[int]) -> Hypergraph:
    """2-uniform instance joining v to v + d mod n for each offset d."""
    offs = sorted(set(offsets))
    if n < 2:
        raise HypergraphError(f"circulant graph requires n >= 2, got {n}")
    for d in offs:
        if not 1 <= d <= n // 2:
            raise HypergraphError(f"offset {d} outside [1, {n // 2}]")
    edges = {tuple(sorted((v, (v + d) % n))) for v in range(n) for d in offs}
    return Hypergraph(n, tuple(sorted(edges)))


def random_uniform_hypergraph(n: int, k: int, m: int, seed: int) -> Hypergraph:
    """m k-subsets of range(n) drawn uniformly with replacement through
    :class:`SplitMix64`, then deduplicated, so at most m edges are emitted."""
    if not 2 <= k <= n:
        raise HypergraphError(f"random uniform requires 2 <= k <= n, got k={k}, n={n}")
    if m < 0:
        raise HypergraphError(f"edge count must be >= 0, got {m}")
    rng = SplitMix64(seed)
    edges = {rng.subset(n, k) for _ in range(m)}
    return Hypergraph(n, tuple(sorted(edges)))


def transitive_graph_corpus() -> list[tuple[str, Hypergraph]]:
    """2-uniform connected instances with a transitive symmetry group."""
    return [
        ("circulant_6_1", circulant_graph(6, {1})),
        ("circulant_7_12", circulant_graph(7, {1, 2})),
        ("circulant_8_12", circulant_graph(8, {1, 2})),
        ("circulant_9_13", circulant_graph(9, {1, 3})),
        ("circulant_10_125", circulant_graph(10, {1, 2, 5})),
    ]


def linear_uniform_corpus() -> list[tuple[str, Hypergraph]]:
    """Linear k-uniform (k >= 3) connected vertex-transitive instances."""
    return [
        ("affine_3", affine_hypergraph(3)),
        ("affine_5", affine_hypergraph(5)),
        ("cyclic_difference_13_014", cyclic_difference_hypergraph(13, (0, 1, 4))),
        ("cyclic_difference_21_037", cyclic_difference_hypergraph(21, (0, 3, 7))),
    ]


def builtin_corpus() -> list[tuple[str, Hypergraph]]:
    """Named instances exercised by tests and the built-in verification
    suite: the generator families at small parameters plus hand-picked
    controls (a path, a matching, disconnected and non-uniform cases)."""
    items: list[tuple[str, Hypergraph]] = [
        ("single_edge_3", Hypergraph(3, ((0, 1, 2),))),
        ("path_3", Hypergraph(3, ((0, 1), (1, 2)))),
        ("matching_4", Hypergraph(4, ((0, 1), (2, 3)))),
        ("two_triangles_6", Hypergraph(6, ((0, 1, 2), (3, 4, 5)))),
        ("complete_4_2", complete_uniform(4, 2)),
        ("complete_4_3", complete_uniform(4, 3)),
        ("complete_5_3", complete_uniform(5, 3)),
        ("cyclic_difference_7_013", cyclic_difference_hypergraph(7, (0, 1, 3))),
        ("circulant_7_123", circulant_graph(7, {1, 2, 3})),
        ("random_8_3_10_s42", random_uniform_hypergraph(8, 3, 10, 42)),
        ("glued_complete_5_3", glued_complete_family(5, 3)),
        ("affine_doubled_3", affine_doubled_family(3)),
    ]
    items.extend(transitive_graph_corpus())
    items.extend(linear_uniform_corpus())
    items.sort(key=lambda pair: pair[0])
    return items


def _require_odd_prime(k: int) -> None:
    if k < 3 or k % 2 == 0 or any(k % d == 0 for d in range(3, int(k**0.5) + 1, 2)):
        raise HypergraphError(f"parameter must be an odd prime, got {k}")
