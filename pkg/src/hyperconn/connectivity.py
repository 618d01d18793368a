"""Exact edge-connectivity: a max-flow route, an independent brute-force
oracle, minimum-cut witnesses, and edge atoms.

The flow route reduces "minimum number of edges separating s from t" to a
unit-capacity max-flow problem: every hyperedge e becomes a node pair
(e_in, e_out) joined by a capacity-1 arc, and every incidence v in e adds
arcs v -> e_in and e_out -> v with capacity m + 1, which no minimum
separating edge set can reach.  The max s-t flow then equals the minimum
boundary over vertex sets separating s from t, and the vertex nodes
reachable in the residual network form the witness side.

The oracle enumerates vertex subsets outright and shares no code with the
flow route, so the two can check each other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import (
    GuardError,
    Hypergraph,
    HypergraphError,
    _check_vertex,
    _edge_bitmasks,
    boundary,
    components,
    degree_extremes,
    is_connected,
)

__all__ = [
    "CutResult",
    "st_edge_connectivity",
    "edge_connectivity",
    "edge_connectivity_oracle",
    "edge_atom",
    "is_maximally_edge_connected",
]

_ENUM_GUARD = 20  # exhaustive subset enumeration beyond this is refused


@dataclass(frozen=True)
class CutResult:
    """A vertex side and the edge cut it induces; ``value == len(cut_edges)``."""

    side: tuple[int, ...]
    cut_edges: tuple[int, ...]
    value: int

    @classmethod
    def from_side(cls, H: Hypergraph, side) -> "CutResult":
        verts = tuple(sorted(side))
        if not verts or len(verts) >= H.n:
            raise HypergraphError("cut side must be a nonempty proper vertex subset")
        cut = tuple(sorted(boundary(H, verts)))
        return cls(verts, cut, len(cut))


class _Dinic:
    """Blocking-flow max-flow on an integer-capacity digraph.

    Arcs are stored in pairs, so ``a ^ 1`` is the reverse of arc ``a``.
    """

    def __init__(self, size: int) -> None:
        self.size = size
        self.adj: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, capacity: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s)
            if level[t] < 0:
                return total
            it = [0] * self.size
            while True:
                pushed = self._augment(s, t, 1 << 60, level, it)
                if not pushed:
                    break
                total += pushed

    def _levels(self, s: int) -> list[int]:
        level = [-1] * self.size
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.adj[u]:
                v = self.to[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level

    def _augment(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        while it[u] < len(self.adj[u]):
            a = self.adj[u][it[u]]
            v = self.to[a]
            if self.cap[a] > 0 and level[v] == level[u] + 1:
                pushed = self._augment(v, t, min(limit, self.cap[a]), level, it)
                if pushed:
                    self.cap[a] -= pushed
                    self.cap[a ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def residual_reachable(self, s: int) -> list[bool]:
        seen = [False] * self.size
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for a in self.adj[u]:
                v = self.to[a]
                if self.cap[a] > 0 and not seen[v]:
                    seen[v] = True
                    stack.append(v)
        return seen


def _build_network(H: Hypergraph) -> _Dinic:
    # node ids: vertex v -> v, edge i -> (n + 2i, n + 2i + 1)
    big = H.m + 1
    net = _Dinic(H.n + 2 * H.m)
    for i, e in enumerate(H.edges):
        e_in = H.n + 2 * i
        e_out = e_in + 1
        net.add(e_in, e_out, 1)
        for v in e:
            net.add(v, e_in, big)
            net.add(e_out, v, big)
    return net


def st_edge_connectivity(H: Hypergraph, s: int, t: int) -> CutResult:
    """Minimum number of edges whose removal separates s from t, with the
    witness side containing s."""
    _check_vertex(H, s)
    _check_vertex(H, t)
    if s == t:
        raise HypergraphError("source and target must differ")
    net = _build_network(H)
    value = net.max_flow(s, t)
    reach = net.residual_reachable(s)
    result = CutResult.from_side(H, (v for v in range(H.n) if reach[v]))
    if result.value != value:
        raise AssertionError("flow value disagrees with boundary size of the residual side")
    return result


def edge_connectivity(H: Hypergraph) -> CutResult:
    """Global edge-connectivity via flows from one fixed source.

    The source is the lowest-indexed minimum-degree vertex; the minimum over
    all other targets is the global value because the witness side of a
    global minimum cut either contains or excludes the source.  Disconnected
    input yields value 0 with a component as witness.
    """
    if H.n < 2:
        raise HypergraphError("edge-connectivity is undefined for fewer than 2 vertices")
    comps = components(H)
    if len(comps) > 1:
        return CutResult.from_side(H, comps[0])
    delta, _ = degree_extremes(H)
    degs = [0] * H.n
    for e in H.edges:
        for v in e:
            degs[v] += 1
    s = next(v for v in range(H.n) if degs[v] == delta)
    best: CutResult | None = None
    for t in range(H.n):
        if t == s:
            continue
        result = st_edge_connectivity(H, s, t)
        if best is None or result.value < best.value:
            best = result
    assert best is not None
    return best


def edge_connectivity_oracle(H: Hypergraph) -> CutResult:
    """Brute-force reference: minimize the boundary over all vertex sides.

    By complement symmetry only sides containing vertex 0 are enumerated.
    Independent of the flow route by construction.  Guarded to n <= 20.
    """
    if not 2 <= H.n <= _ENUM_GUARD:
        raise GuardError(f"oracle enumeration requires 2 <= n <= {_ENUM_GUARD}, got n={H.n}")
    emasks = _edge_bitmasks(H)
    full = (1 << H.n) - 1
    best_val: int | None = None
    best_mask = 0
    for mask in range(1, full, 2):
        val = 0
        for em in emasks:
            inside = em & mask
            if inside and inside != em:
                val += 1
        if best_val is None or val < best_val:
            best_val, best_mask = val, mask
            if val == 0:
                break
    return CutResult.from_side(H, _mask_vertices(best_mask, H.n))


def edge_atom(H: Hypergraph) -> CutResult:
    """The canonical optimal side: minimum boundary, then minimum size, then
    lexicographically smallest sorted vertex sequence.

    The complement of an optimal side is optimal too, so the atom never has
    more than n/2 vertices.  Requires a connected input; guarded to n <= 20.
    """
    if not is_connected(H):
        raise HypergraphError("edge atom is undefined for a disconnected hypergraph")
    if not 2 <= H.n <= _ENUM_GUARD:
        raise GuardError(f"atom enumeration requires 2 <= n <= {_ENUM_GUARD}, got n={H.n}")
    emasks = _edge_bitmasks(H)
    n = H.n
    full = (1 << n) - 1
    best: tuple[int, int, tuple[int, ...]] | None = None
    for mask in range(1, full, 2):
        val = 0
        for em in emasks:
            inside = em & mask
            if inside and inside != em:
                val += 1
        for side_mask in (mask, full ^ mask):
            size = side_mask.bit_count()
            if best is None or (val, size) < best[:2]:
                best = (val, size, _mask_vertices(side_mask, n))
            elif (val, size) == best[:2]:
                verts = _mask_vertices(side_mask, n)
                if verts < best[2]:
                    best = (val, size, verts)
    assert best is not None
    return CutResult.from_side(H, best[2])


def is_maximally_edge_connected(H: Hypergraph) -> bool:
    """Whether the edge-connectivity meets its trivial upper bound, the
    minimum degree."""
    return edge_connectivity(H).value == degree_extremes(H)[0]


def _mask_vertices(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if mask >> v & 1)
