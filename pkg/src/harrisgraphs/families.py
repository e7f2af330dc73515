"""The three named infinite families, as labeled iterated constructions.

Each generator carries a role map (vertex names -> ids) so steps can be
iterated; the plain graph is always available for checking and
serialization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, build_graph


class FamilyError(ValueError):
    """Role schema mismatch or invalid family parameter."""


@dataclass(frozen=True)
class LabeledFamilyState:
    graph: Graph
    roles: dict[str, int]
    step: int

    def role(self, name: str) -> int:
        try:
            return self.roles[name]
        except KeyError:
            raise FamilyError(f"state has no role {name!r}") from None


# The unique order-7 Harris graph with its iteration labeling. The labeling
# is pinned by constraint satisfaction (see tests): B is a degree-2 vertex
# whose neighbors A and C are adjacent and dominate the graph, the chain
# v1..v4 fills the rest, and three iterations of the step stay simple and
# Harris. A carries degree 4 here; the degree-6 vertex must be C, since the
# step adds the edge {A, v_k} and the degree-6 vertex already neighbors
# everything.
_HIROTAKA_EDGES = [
    (0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3),
    (0, 4), (3, 4), (0, 5), (2, 5), (0, 6), (1, 6),
]
_HIROTAKA_ROLES = {"A": 3, "B": 4, "C": 0, "v1": 1, "v2": 2, "v3": 5, "v4": 6}


def hirotaka_base() -> LabeledFamilyState:
    """The unique order-7 Harris graph, labeled for iteration."""
    return LabeledFamilyState(
        graph=build_graph(7, _HIROTAKA_EDGES),
        roles=dict(_HIROTAKA_ROLES),
        step=0,
    )


def hirotaka_step(state: LabeledFamilyState) -> LabeledFamilyState:
    """Extend the chain: new vertices v_{k+1}, v_{k+2}, six new edges
    {v_k,v_{k+1}}, {v_{k+1},v_{k+2}}, {A,v_k}, {A,v_{k+1}}, {C,v_{k+1}},
    {C,v_{k+2}}. Order grows by 2; A and C each gain degree 2."""
    roles = state.roles
    k = sum(1 for name in roles if name.startswith("v"))
    if k < 2 or any(f"v{i}" not in roles for i in range(1, k + 1)):
        raise FamilyError("state does not follow the Hirotaka role schema")
    g = state.graph
    a, c, vk = roles["A"], roles["C"], roles[f"v{k}"]
    w1, w2 = g.n, g.n + 1
    new_edges = [(vk, w1), (w1, w2), (a, vk), (a, w1), (c, w1), (c, w2)]
    for u, v in new_edges:
        if max(u, v) < g.n and g.has_edge(u, v):
            raise FamilyError(f"step would duplicate edge ({u},{v})")
    out = build_graph(g.n + 2, list(g.edges) + new_edges)
    new_roles = dict(roles)
    new_roles[f"v{k + 1}"] = w1
    new_roles[f"v{k + 2}"] = w2
    return LabeledFamilyState(graph=out, roles=new_roles, step=state.step + 1)


def shaw_base() -> LabeledFamilyState:
    """The order-9, 14-edge Harris graph seeding the Shaw family.

    Degree sequence 4-4-4-4-4-2-2-2-2; a member of the order-9 catalog.
    Five degree-4 vertices a, d1, e1, d2, e2 form the core (edges a-d1,
    a-d2, a-e2, d1-d2, d2-e2, e1-e2), tied together by four 2-barnacles
    (mids b1: d1-e1, c1: a-e1, b2: e1-d2, c2: d1-e2). The labeling is
    pinned by an exhaustive search over the catalog (see tests): this is
    the only order-9, 14-edge Harris graph admitting pivot roles
    (a, d2, e2) under which shaw_step yields a Harris graph. Only those
    three roles drive the iteration."""
    roles = {
        "a": 0, "d1": 1, "e1": 2, "d2": 3, "e2": 4,
        "b1": 5, "c1": 6, "b2": 7, "c2": 8,
    }
    edges = [
        (0, 1), (0, 3), (0, 4), (1, 3), (2, 4), (3, 4),
        (1, 5), (2, 5),  # b1
        (0, 6), (2, 6),  # c1
        (2, 7), (3, 7),  # b2
        (1, 8), (4, 8),  # c2
    ]
    return LabeledFamilyState(graph=build_graph(9, edges), roles=roles, step=0)


def shaw_step(state: LabeledFamilyState) -> LabeledFamilyState:
    """Add two 2-barnacles from a and a new K4 chained to the current outer
    pair: four new vertices b,c,d,e at index k+1 and nine new edges."""
    roles = state.roles
    k = sum(1 for name in roles if name.startswith("d"))
    if k < 2 or "a" not in roles or f"e{k}" not in roles:
        raise FamilyError("state does not follow the Shaw role schema")
    g = state.graph
    a, dk, ek = roles["a"], roles[f"d{k}"], roles[f"e{k}"]
    b, c, d, e = g.n, g.n + 1, g.n + 2, g.n + 3
    new_edges = [
        (a, b), (a, c),
        (b, d), (c, e),
        (dk, e), (ek, d),
        (dk, d), (ek, e),
        (d, e),
    ]
    out = build_graph(g.n + 4, list(g.edges) + new_edges)
    new_roles = dict(roles)
    new_roles.update({f"b{k + 1}": b, f"c{k + 1}": c, f"d{k + 1}": d, f"e{k + 1}": e})
    return LabeledFamilyState(graph=out, roles=new_roles, step=state.step + 1)


def justine(n: int) -> Graph:
    """Two nested n-cycles (n odd) joined by rungs {a_i, b_i}, each rung
    doubled by a 2-barnacle. Order 3n: 2n vertices of degree 4, n of
    degree 2."""
    if n < 3 or n % 2 == 0:
        raise FamilyError(f"cycle length must be odd and >= 3, got {n}")
    a = list(range(n))
    b = list(range(n, 2 * n))
    mids = list(range(2 * n, 3 * n))
    edges = [(a[i], a[(i + 1) % n]) for i in range(n)]
    edges += [(b[i], b[(i + 1) % n]) for i in range(n)]
    edges += [(a[i], b[i]) for i in range(n)]
    edges += [(a[i], mids[i]) for i in range(n)]
    edges += [(mids[i], b[i]) for i in range(n)]
    return build_graph(3 * n, edges)
