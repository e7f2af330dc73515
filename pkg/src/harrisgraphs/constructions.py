"""Harris-graph-producing transforms: W5 edge subdivision + grafting, and
flowering a tough non-Hamiltonian graph into an all-even one.

Both operations are total on any graphs meeting their structural
preconditions; the Harris guarantees are conditional on the inputs being
Harris (graft) or tough and non-Hamiltonian (flower) and can be re-checked
with properties.is_harris.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph, build_graph, is_connected


class ConstructionError(ValueError):
    """Missing edge or otherwise unusable input."""


@dataclass(frozen=True)
class W5Subdivision:
    """Bookkeeping for one W5 edge subdivision.

    The 4-cycle rim is attach_x - free_pair[0] - attach_y - free_pair[1];
    hub is adjacent to all four. attach_x picked up the edge to the former
    edge's lower endpoint, attach_y to the higher one; the free pair are
    the two degree-3 vertices a graft later joins across graphs.
    """

    hub: int
    rim: tuple[int, int, int, int]
    attach_x: int
    attach_y: int
    free_pair: tuple[int, int]


def subdivide_edge_by_w5(g: Graph, edge: tuple[int, int]) -> tuple[Graph, W5Subdivision]:
    """Replace edge {x,y} by a 5-wheel: opposite rim vertices join to x and
    y, the hub rides every rim vertex. Order grows by 5; x and y keep
    their degrees; exactly the two free rim vertices end up with degree 3.
    """
    x, y = min(edge), max(edge)
    if not g.has_edge(x, y):
        raise ConstructionError(f"({x},{y}) is not an edge of the graph")
    hub = g.n
    r0, r1, r2, r3 = g.n + 1, g.n + 2, g.n + 3, g.n + 4
    edges = [e for e in g.edges if e != (x, y)]
    edges += [(r0, r1), (r1, r2), (r2, r3), (r3, r0)]  # rim 4-cycle
    edges += [(hub, r0), (hub, r1), (hub, r2), (hub, r3)]
    edges += [(x, r0), (y, r2)]  # opposite (non-adjacent) rim vertices
    out = build_graph(g.n + 5, edges)
    sub = W5Subdivision(
        hub=hub, rim=(r0, r1, r2, r3), attach_x=r0, attach_y=r2, free_pair=(r1, r3)
    )
    return out, sub


def graft(g: Graph, edge_g: tuple[int, int], h: Graph, edge_h: tuple[int, int]) -> Graph:
    """G (+) H: subdivide one edge of each graph by W5, then join the two
    degree-3 free pairs across the graphs (lower rim id to lower rim id).
    Order is |G| + |H| + 10; all degrees stay even when both inputs were
    even-degreed."""
    g2, sub_g = subdivide_edge_by_w5(g, edge_g)
    h2, sub_h = subdivide_edge_by_w5(h, edge_h)
    shift = g2.n
    edges = list(g2.edges)
    edges += [(u + shift, v + shift) for u, v in h2.edges]
    fg = sorted(sub_g.free_pair)
    fh = sorted(sub_h.free_pair)
    edges += [(fg[0], fh[0] + shift), (fg[1], fh[1] + shift)]
    return build_graph(g2.n + h2.n, edges)


def graft_edge_candidates(g: Graph, max_n: int = 14) -> list[tuple[int, int]]:
    """Edges {x,y} whose endpoints never both belong to a vertex set S with
    components(G-S) >= |S|.

    Grafting replaces the chosen edge by a bridge that separates from G
    exactly when both endpoints are removed; on such "slack" edges the
    grafted graph keeps the toughness margin. Exhaustive over all vertex
    subsets, hence the small-order ceiling."""
    if g.n > max_n:
        raise ConstructionError(
            f"graft edge scan is exhaustive and capped at n <= {max_n}"
        )
    from .core import components_after_removal

    bad_pairs: set[tuple[int, int]] = set()
    for mask in range(1 << g.n):
        size = bin(mask).count("1")
        if size < 2:
            continue
        members = [v for v in range(g.n) if mask >> v & 1]
        count, _ = components_after_removal(g, members)
        if count >= size:
            for i, u in enumerate(members):
                for v in members[i + 1:]:
                    bad_pairs.add((u, v))
    return [e for e in sorted(g.edges) if e not in bad_pairs]


def _bfs_tree(g: Graph, source: int) -> tuple[list[int], list[int]]:
    """BFS levels and lowest-id parent pointers from source."""
    dist = [-1] * g.n
    parent = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):  # ascending id: lowest-id parents win
            if dist[v] == -1:
                dist[v] = dist[u] + 1
                parent[v] = u
                queue.append(v)
    return dist, parent


def flower(g: Graph) -> Graph:
    """Pair off odd-degree vertices along shortest paths, hanging a
    2-barnacle parallel to each path edge until parity is fixed.

    Deterministic tie-breaks: lowest-id odd vertex first, nearest odd
    partner by BFS level then lowest id, path via lowest-id BFS parents.
    All-even input comes back unchanged. Only new degree-2 vertices and
    their edges are added; the input's vertices and edges are preserved.
    """
    if not is_connected(g):
        raise ConstructionError("flowering needs a connected input")
    n = g.n
    edges = list(g.edges)
    deg = g.degrees()
    while True:
        # new barnacle vertices are born even, so only original ids can be odd
        odd = [v for v in range(g.n) if deg[v] % 2]
        if not odd:
            return g if n == g.n else build_graph(n, edges)
        v1 = odd[0]
        cur = build_graph(n, edges)
        dist, parent = _bfs_tree(cur, v1)
        vk = min(
            (u for u in odd if u != v1),
            key=lambda u: (dist[u], u),
        )
        path = [vk]
        while path[-1] != v1:
            path.append(parent[path[-1]])
        path.reverse()
        for a, b in zip(path, path[1:]):
            was_odd = deg[b] % 2 == 1
            c = n
            n += 1
            edges += [(a, c), (c, b)]
            deg[a] += 1
            deg[b] += 1
            deg.append(2)
            if was_odd:
                break
