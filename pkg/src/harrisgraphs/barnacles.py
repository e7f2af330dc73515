"""Barnacle detection and the k-barnacle <-> 2-barnacle replacement.

A k-barnacle is a path of length k between distinct vertices x and y whose
internal vertices all have degree 2 in the host graph. Only maximal chains
are reported (deg(x) != 2 != deg(y)), which makes the barnacle list a
partition of the chain-internal vertices. Degenerate shapes -- chains that
close on a single anchor, and pure-cycle components -- are surfaced as
diagnostics, never as barnacles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, build_graph


class BarnacleError(ValueError):
    """Invalid or stale barnacle argument."""


@dataclass(frozen=True)
class Barnacle:
    x: int
    y: int
    internal: tuple[int, ...]

    @property
    def k(self) -> int:
        """Path length in edges."""
        return len(self.internal) + 1

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "internal": list(self.internal), "k": self.k}


@dataclass(frozen=True)
class BarnacleDiagnostics:
    """Degree-2 structure that is not a barnacle: chains whose two ends meet
    at the same anchor vertex, and components that are pure cycles."""

    anchored_cycles: tuple[tuple[int, ...], ...]  # (anchor, mid...) chains
    pure_cycles: tuple[tuple[int, ...], ...]


def _chase(g: Graph, start: int, away_from: int) -> tuple[int, list[int]]:
    """Follow degree-2 vertices from `start` (moving away from `away_from`)
    until a vertex of degree != 2; returns (endpoint, interior walked)."""
    prev, cur = away_from, start
    interior = []
    while g.degree(cur) == 2:
        interior.append(cur)
        a, b = g.neighbors(cur)
        nxt = b if a == prev else a
        prev, cur = cur, nxt
        if cur == start:
            break
    return cur, interior


def find_barnacles(g: Graph) -> tuple[list[Barnacle], BarnacleDiagnostics]:
    """All maximal barnacles, ordered by smallest internal vertex id."""
    seen = set()
    barnacles = []
    anchored = []
    pure = []
    for v in range(g.n):
        if g.degree(v) != 2 or v in seen:
            continue
        a, b = g.neighbors(v)
        # walk both directions from v
        ex, left = _chase(g, v, b)
        if ex == v:
            # came back around: v lies on a cycle of degree-2 vertices
            pure.append(tuple(sorted(left)))
            seen.update(left)
            continue
        # left currently lists v..(toward a side); walk the other way
        ey, right = _chase(g, v, a)
        internal = list(reversed(left[1:])) + [v] + right[1:]
        # left[0] == right[0] == v; re-walk gives interior on each side
        seen.update(internal)
        if ex == ey:
            anchored.append((ex,) + tuple(internal))
            continue
        if ex < ey:
            barnacles.append(Barnacle(x=ex, y=ey, internal=tuple(internal)))
        else:
            barnacles.append(
                Barnacle(x=ey, y=ex, internal=tuple(reversed(internal)))
            )
    barnacles.sort(key=lambda b: min(b.internal))
    return barnacles, BarnacleDiagnostics(tuple(anchored), tuple(pure))


def _validate(g: Graph, b: Barnacle) -> None:
    path = (b.x,) + b.internal + (b.y,)
    if b.x == b.y or not b.internal:
        raise BarnacleError(f"malformed barnacle {b}")
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise BarnacleError(f"stale barnacle: edge ({u},{v}) missing from graph")
    for v in b.internal:
        if g.degree(v) != 2:
            raise BarnacleError(f"stale barnacle: internal vertex {v} has degree != 2")
    if g.degree(b.x) == 2 or g.degree(b.y) == 2:
        raise BarnacleError("stale barnacle: endpoint has degree 2 (not maximal)")


def simplify_barnacle(g: Graph, b: Barnacle) -> Graph:
    """Replace a k-barnacle (k > 2) by a 2-barnacle.

    Remaining vertices keep their relative order and are compacted to
    0..n'-2; the new middle vertex gets the highest id n'-1.
    """
    _validate(g, b)
    if b.k == 2:
        raise BarnacleError("barnacle already has k=2; nothing to simplify")
    dropped = set(b.internal)
    keep = [v for v in range(g.n) if v not in dropped]
    remap = {old: new for new, old in enumerate(keep)}
    mid = len(keep)
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u not in dropped and v not in dropped
    ]
    edges += [(remap[b.x], mid), (mid, remap[b.y])]
    return build_graph(len(keep) + 1, edges)


def grow_barnacle(g: Graph, b: Barnacle, extra: int) -> Graph:
    """Subdivide the barnacle path `extra` times (k -> k + extra).

    New degree-2 vertices take ids n..n+extra-1, threaded between x and the
    first internal vertex; no degree outside the path changes.
    """
    _validate(g, b)
    if extra < 1:
        raise BarnacleError(f"extra must be >= 1, got {extra}")
    first = b.internal[0]
    edges = [e for e in g.edges if e != tuple(sorted((b.x, first)))]
    chain = [b.x] + list(range(g.n, g.n + extra)) + [first]
    edges += list(zip(chain, chain[1:]))
    return build_graph(g.n + extra, edges)


def simplify_all(g: Graph) -> Graph:
    """Fixpoint of simplify_barnacle: every barnacle ends up with k = 2."""
    while True:
        barns, _ = find_barnacles(g)
        target = next((b for b in barns if b.k > 2), None)
        if target is None:
            return g
        g = simplify_barnacle(g, target)


def is_barnacle_free(g: Graph) -> bool:
    return not find_barnacles(g)[0]
