"""Canonical labeling for isomorphism tests and census deduplication.

Uses iterated neighborhood refinement with individualization backtracking:
refine an ordered partition until equitable, then branch on the first
non-singleton cell and take the lexicographically smallest adjacency code
over all discrete leaves. Deterministic, no randomized hashing.

The exhaustive branching is practical for the structured graphs this
toolkit handles; the hard ceiling below exists so oversized inputs fail
loudly instead of running forever.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, relabel

CANONICAL_MAX_N = 32


class CanonicalError(ValueError):
    """Input above the supported canonical-labeling ceiling."""


@dataclass(frozen=True)
class CanonicalForm:
    """Order-independent fingerprint: equal iff the graphs are isomorphic."""

    data: bytes

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.data < other.data


def _refine(adj: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Refine an ordered partition to equitability.

    Sub-cells produced by a split are ordered by their (invariant) count
    signatures, so the refined partition does not depend on input labels.
    """
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            m = 0
            for v in cell:
                m |= 1 << v
            masks[i] = m
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple(bin(adj[v] & m).count("1") for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for key in sorted(sig):
                new_cells.append(tuple(sig[key]))
        if not changed:
            return new_cells
        cells = new_cells


def _code_for_order(adj: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle adjacency bits of the relabeled graph, row-major."""
    n = len(order)
    code = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (ai >> order[j] & 1)
    return code


def _search(adj, cells, best: list):
    cells = _refine(adj, cells)
    target = None
    for idx, cell in enumerate(cells):
        if len(cell) > 1:
            target = idx
            break
    if target is None:
        order = [c[0] for c in cells]
        code = _code_for_order(adj, order)
        if best[0] is None or code < best[0]:
            best[0] = code
            best[1] = order
        return
    cell = cells[target]
    for v in cell:
        rest = tuple(u for u in cell if u != v)
        _search(adj, cells[:target] + [(v,), rest] + cells[target + 1:], best)


def _canonical_order(g: Graph) -> tuple[int, list[int]]:
    if g.n > CANONICAL_MAX_N:
        raise CanonicalError(
            f"canonical labeling supports n <= {CANONICAL_MAX_N}, got {g.n}"
        )
    degs = g.degrees()
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(degs[v], []).append(v)
    cells = [tuple(by_degree[d]) for d in sorted(by_degree, reverse=True)]
    best: list = [None, None]
    _search(g.adj, cells, best)
    return best[0], best[1]


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical fingerprint; equal for two graphs iff they are isomorphic."""
    code, _ = _canonical_order(g)
    nbits = g.n * (g.n - 1) // 2
    return CanonicalForm(bytes([g.n]) + code.to_bytes((nbits + 7) // 8 or 1, "big"))


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g (same form for all isomorphs)."""
    _, order = _canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return relabel(g, perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)
