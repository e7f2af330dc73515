"""Immutable simple-graph value type with bitset adjacency, plus basic structural queries.

Vertices are 0..n-1; vertex sets are handled as Python sets at the API
surface and as 64-bit masks internally, which caps supported order at 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    `edges` holds each edge once as an (u, v) pair with u < v; `adj` is a
    per-vertex neighbor bitset. Instances are immutable and safe to share.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return bits_to_list(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self) -> str:  # keep pytest diffs readable
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def bits_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def set_to_bits(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def build_graph(n: int, edge_list: Iterable[Sequence[int] | frozenset]) -> Graph:
    """Build a Graph from an edge list, deduplicating repeated edges.

    Raises GraphError on self-loops or out-of-range endpoints, naming the
    offending pair.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds the supported cap of {MAX_VERTICES}")
    edges = set()
    for e in edge_list:
        u, v = tuple(e) if not isinstance(e, tuple) else e
        if u == v:
            raise GraphError(f"self-loop ({u},{v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        edges.add((u, v) if u < v else (v, u))
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n=n, edges=frozenset(edges), adj=tuple(adj))


def from_adjacency(adj: Sequence[int]) -> Graph:
    """Build a Graph from neighbor bitsets (trusted input, no validation)."""
    n = len(adj)
    edges = frozenset(
        (u, v) for u in range(n) for v in bits_to_list(adj[u]) if u < v
    )
    return Graph(n=n, edges=edges, adj=tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex v of `g` becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex set")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def components_after_removal(
    g: Graph, removed: Iterable[int]
) -> tuple[int, list[frozenset[int]]]:
    """Connected components of G - removed, as (count, partition).

    Removing every vertex yields (0, []); that is a defined result, not an
    error.
    """
    removed_mask = 0
    for v in removed:
        if not 0 <= v < g.n:
            raise GraphError(f"removed vertex {v} outside [0,{g.n})")
        removed_mask |= 1 << v
    remaining = ((1 << g.n) - 1) & ~removed_mask
    parts = []
    while remaining:
        low = remaining & -remaining
        comp = _flood(g.adj, low, remaining)
        parts.append(frozenset(bits_to_list(comp)))
        remaining &= ~comp
    return len(parts), parts


def _flood(adj: Sequence[int], seed: int, allowed: int) -> int:
    """Bitset flood fill from `seed` within `allowed`; returns the component mask."""
    comp = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in bits_to_list(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def connected_components(g: Graph) -> list[frozenset[int]]:
    return components_after_removal(g, ())[1]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    full = (1 << g.n) - 1
    return _flood(g.adj, 1, full) == full


def is_two_connected(g: Graph) -> bool:
    """True iff g is connected and has no cut vertex (n >= 3)."""
    if g.n < 3 or not is_connected(g):
        return False
    full = (1 << g.n) - 1
    for v in range(g.n):
        allowed = full & ~(1 << v)
        seed = allowed & -allowed
        if _flood(g.adj, seed, allowed) != allowed:
            return False
    return True


@dataclass(frozen=True)
class DegreeSequence:
    """Vertex degrees in non-increasing order."""

    degrees: tuple[int, ...]

    def __str__(self) -> str:
        return "-".join(str(d) for d in self.degrees)

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        return cls(tuple(sorted((int(t) for t in text.split("-")), reverse=True)))


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees(), reverse=True)))
