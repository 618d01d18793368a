"""Hypergraph instances, structural predicates, and boundary operators.

Vertices are the integers ``0..n-1``.  An edge is a strictly increasing
tuple of at least two vertices.  Duplicate edges (multi-edges) are legal
in the model; the generators in :mod:`hyperconn.constructions` never emit
them.  ``Hypergraph`` values are immutable and every function here is
pure, so instances can be shared freely between threads.

File format (UTF-8 text, LF line endings):

* lines starting with ``#`` are comments and may appear anywhere,
* the first content line is a header ``h <n> <m>`` with n >= 1, m >= 0,
* exactly m further content lines ``e v1 v2 ... vk`` follow, each with
  0 <= vi < n and k >= 2 (vertices in any order, no repeats),
* the serializer emits no comments, edges in lexicographic order, single
  spaces, and a trailing newline, so serialization is canonical.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "HypergraphError",
    "ParseError",
    "GuardError",
    "Hypergraph",
    "LinearityVerdict",
    "BoundaryProfile",
    "VertexProfile",
    "parse_hypergraph",
    "serialize_hypergraph",
    "degree",
    "degree_extremes",
    "is_uniform",
    "is_linear",
    "components",
    "is_connected",
    "boundary",
    "boundary_profile",
    "vertex_profile",
]


class HypergraphError(ValueError):
    """Invalid hypergraph data or operation arguments."""


class ParseError(HypergraphError):
    """Malformed hypergraph file; ``line_no`` is 1-based."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class GuardError(HypergraphError):
    """An exact-enumeration guard was hit (instance too large)."""


@dataclass(frozen=True)
class Hypergraph:
    """An immutable hypergraph on vertices ``0..n-1``.

    Edges are normalized to sorted tuples at construction; edge order (and
    hence edge indices) is preserved as given.
    """

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise HypergraphError(f"vertex count must be >= 1, got {self.n}")
        norm = []
        for e in self.edges:
            verts = tuple(sorted(e))
            if len(verts) < 2:
                raise HypergraphError(f"edge {verts} has size {len(verts)}, minimum is 2")
            if any(a == b for a, b in zip(verts, verts[1:])):
                raise HypergraphError(f"edge {verts} repeats a vertex")
            if verts[0] < 0 or verts[-1] >= self.n:
                raise HypergraphError(f"edge {verts} has a vertex outside [0, {self.n - 1}]")
            norm.append(verts)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)


class LinearityVerdict(NamedTuple):
    """Result of :func:`is_linear`; truthy exactly when linear.

    ``witness`` is ``((u, v), i, j)`` for the first vertex pair found in two
    edges, with edge indices i < j, or ``None`` when linear.
    """

    linear: bool
    witness: tuple[tuple[int, int], int, int] | None

    def __bool__(self) -> bool:
        return self.linear


class BoundaryProfile(NamedTuple):
    """Counts of boundary edges by inside-intersection size, uniform only.

    ``counts[i - 1]`` is the number of edges with exactly i vertices inside
    the queried set, for i = 1..k.  Edges disjoint from the set are not
    counted anywhere.
    """

    k: int
    counts: tuple[int, ...]


class VertexProfile(NamedTuple):
    """Incidence counts of one inside vertex x over classified edges.

    ``a[i - 1]`` counts (neighbour, edge) incidences of x with neighbours
    inside the set, over edges with exactly i vertices inside; ``b[i - 1]``
    counts incidences with neighbours outside, over the same edges.  ``b``
    stops at i = k - 1 since fully-inside edges have no outside neighbours.
    """

    k: int
    a: tuple[int, ...]
    b: tuple[int, ...]


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the text file format described in the module docstring.

    Raises:
        ParseError: on a malformed header, a malformed edge line, a vertex
            out of range, an edge of size < 2, a repeated vertex within an
            edge, or an edge count mismatch; the message names the line.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), 1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if fields[0] != "h" or len(fields) != 3:
                raise ParseError(line_no, "malformed header, expected 'h <n> <m>'")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(line_no, "malformed header, counts must be integers") from None
            if n < 1 or m < 0:
                raise ParseError(line_no, "malformed header, need n >= 1 and m >= 0")
            header = (n, m)
            continue
        n, m = header
        if fields[0] != "e":
            raise ParseError(line_no, f"malformed edge line, expected 'e v1 v2 ...' got {fields[0]!r}")
        if len(edges) >= m:
            raise ParseError(line_no, f"edge count mismatch, header declares {m} edges")
        try:
            verts = sorted(int(f) for f in fields[1:])
        except ValueError:
            raise ParseError(line_no, "malformed edge line, vertices must be integers") from None
        if len(verts) < 2:
            raise ParseError(line_no, f"edge of size {len(verts)}, minimum is 2")
        for a, b in zip(verts, verts[1:]):
            if a == b:
                raise ParseError(line_no, f"repeated vertex {a} within edge")
        if verts[0] < 0 or verts[-1] >= n:
            bad = verts[0] if verts[0] < 0 else verts[-1]
            raise ParseError(line_no, f"vertex index {bad} out of range [0, {n - 1}]")
        edges.append(tuple(verts))
    if header is None:
        raise ParseError(last_line + 1, "malformed header, missing 'h <n> <m>' line")
    n, m = header
    if len(edges) != m:
        raise ParseError(last_line, f"edge count mismatch, header declares {m} edges, found {len(edges)}")
    return Hypergraph(n, tuple(edges))


def serialize_hypergraph(H: Hypergraph) -> str:
    """Canonical text form: header, then edges in lexicographic order."""
    lines = [f"h {H.n} {H.m}"]
    for e in sorted(H.edges):
        lines.append("e " + " ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def degree(H: Hypergraph, v: int) -> int:
    """Number of edges incident to v (multi-edges counted with multiplicity)."""
    _check_vertex(H, v)
    return sum(1 for e in H.edges if v in e)


def degree_extremes(H: Hypergraph) -> tuple[int, int]:
    """(minimum degree, maximum degree) over all vertices."""
    degs = [0] * H.n
    for e in H.edges:
        for v in e:
            degs[v] += 1
    return (min(degs), max(degs))


def is_uniform(H: Hypergraph) -> int | None:
    """The common edge size k if every edge has it, else None.

    Raises:
        HypergraphError: if H has no edges (uniformity is undefined there).
    """
    if H.m == 0:
        raise HypergraphError("uniformity is undefined for a hypergraph with no edges")
    sizes = {len(e) for e in H.edges}
    return sizes.pop() if len(sizes) == 1 else None


def is_linear(H: Hypergraph) -> LinearityVerdict:
    """Whether every vertex pair lies in at most one edge, with a witness."""
    seen: dict[tuple[int, int], int] = {}
    for j, e in enumerate(H.edges):
        for x in range(len(e)):
            for y in range(x + 1, len(e)):
                pair = (e[x], e[y])
                i = seen.get(pair)
                if i is not None:
                    return LinearityVerdict(False, (pair, i, j))
                seen[pair] = j
    return LinearityVerdict(True, None)


def components(H: Hypergraph) -> list[list[int]]:
    """Vertex sets of connected components, each sorted, ordered by minimum.

    Breadth-first traversal over vertex-edge incidences; isolated vertices
    form their own components.
    """
    incident: list[list[int]] = [[] for _ in range(H.n)]
    for i, e in enumerate(H.edges):
        for v in e:
            incident[v].append(i)
    seen_v = [False] * H.n
    seen_e = [False] * H.m
    out: list[list[int]] = []
    for start in range(H.n):
        if seen_v[start]:
            continue
        comp = []
        queue = deque([start])
        seen_v[start] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for i in incident[v]:
                if seen_e[i]:
                    continue
                seen_e[i] = True
                for w in H.edges[i]:
                    if not seen_v[w]:
                        seen_v[w] = True
                        queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(H: Hypergraph) -> bool:
    return len(components(H)) == 1


def boundary(H: Hypergraph, X: Iterable[int]) -> frozenset[int]:
    """Indices of edges meeting both X and its complement."""
    xs = _as_vertex_set(H, X)
    out = []
    for i, e in enumerate(H.edges):
        inside = sum(1 for v in e if v in xs)
        if 0 < inside < len(e):
            out.append(i)
    return frozenset(out)


def boundary_profile(H: Hypergraph, X: Iterable[int]) -> BoundaryProfile:
    """Classify edges meeting X by their inside-intersection size.

    Requires a uniform hypergraph; counts for i = 1..k-1 partition the
    boundary, and counts[k-1] is the number of edges entirely inside X.
    """
    k = _uniform_k(H, "boundary profile")
    xs = _as_vertex_set(H, X)
    counts = [0] * k
    for e in H.edges:
        inside = sum(1 for v in e if v in xs)
        if inside:
            counts[inside - 1] += 1
    return BoundaryProfile(k, tuple(counts))


def vertex_profile(H: Hypergraph, X: Iterable[int], x: int) -> VertexProfile:
    """Inside/outside incidence counts of x over edges classified by X.

    Each edge through x with exactly i vertices inside X contributes i - 1
    to a[i - 1] and k - i to b[i - 1], so a_i + b_i over one such edge is
    always k - 1.  Requires a uniform hypergraph and x in X.
    """
    k = _uniform_k(H, "vertex profile")
    xs = _as_vertex_set(H, X)
    if x not in xs:
        raise HypergraphError(f"vertex {x} is not in X")
    a = [0] * k
    b = [0] * k
    for e in H.edges:
        if x not in e:
            continue
        inside = sum(1 for v in e if v in xs)
        a[inside - 1] += inside - 1
        b[inside - 1] += k - inside
    return VertexProfile(k, tuple(a), tuple(b[: k - 1]))


def _uniform_k(H: Hypergraph, what: str) -> int:
    k = is_uniform(H)
    if k is None:
        raise HypergraphError(f"{what} requires a uniform hypergraph")
    return k


def _as_vertex_set(H: Hypergraph, X: Iterable[int]) -> frozenset[int]:
    xs = frozenset(X)
    for v in xs:
        if not 0 <= v < H.n:
            raise HypergraphError(f"vertex {v} out of range [0, {H.n - 1}]")
    return xs


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise HypergraphError(f"vertex {v} out of range [0, {H.n - 1}]")


def _edge_bitmasks(H: Hypergraph) -> list[int]:
    """Each edge as a vertex bitmask; internal fast path for enumerations."""
    out = []
    for e in H.edges:
        mask = 0
        for v in e:
            mask |= 1 << v
        out.append(mask)
    return out
