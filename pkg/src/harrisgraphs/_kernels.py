"""Compiled inner loops: census scan, toughness subset search, Hamiltonian DP.

Everything here works on uint64 bitsets (vertex sets, edge masks) so the
hot loops stay allocation-free. Python-facing wrappers live in the modules
that own each algorithm.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64, int64


@njit(cache=True, nogil=True)
def _component_count(adj, remaining):
    """Number of connected components induced on the `remaining` bitset."""
    count = 0
    rem = remaining
    while rem != uint64(0):
        count += 1
        comp = rem & (~rem + uint64(1))  # lowest set bit
        frontier = comp
        while frontier != uint64(0):
            nxt = uint64(0)
            f = frontier
            while f != uint64(0):
                low = f & (~f + uint64(1))
                v = 0
                b = low
                while b > uint64(1):
                    b >>= uint64(1)
                    v += 1
                nxt |= adj[v]
                f ^= low
            nxt &= rem & ~comp
            comp |= nxt
            frontier = nxt
        rem &= ~comp
    return count


@njit(cache=True, nogil=True)
def toughness_violation(adj, n, max_size):
    """First vertex set S (smallest size, then lowest mask) with
    components(G-S) > |S|, or 0 if none exists up to `max_size`.

    The returned mask for a disconnected graph is handled by the caller
    (empty S already violates there); this kernel assumes a connected input.
    """
    full = (uint64(1) << uint64(n)) - uint64(1)
    for size in range(1, max_size + 1):
        # Gosper's hack over all size-subsets of n vertices
        s = (uint64(1) << uint64(size)) - uint64(1)
        limit = uint64(1) << uint64(n)
        while s < limit:
            remaining = full & ~s
            if _component_count(adj, remaining) > size:
                return s
            c = s & (~s + uint64(1))
            r = s + c
            s = (((r ^ s) >> uint64(2)) // c) | r
    return uint64(0)


@njit(cache=True, nogil=True)
def hamiltonian_dp(adj, n, dp):
    """Held-Karp reachability for a spanning cycle through vertex 0.

    dp is a zeroed uint32 array of length 2**(n-1); dp[mask] collects the
    endpoint set of simple paths that start at 0 and cover exactly the
    vertices of `mask` (over vertices 1..n-1, bit v-1 for vertex v).
    Returns the endpoint bitmask of full-cover paths whose endpoint is
    adjacent to 0 (nonzero iff Hamiltonian).
    """
    half = uint64(1) << uint64(n - 1)
    a0 = adj[0]
    for v in range(1, n):
        if (a0 >> uint64(v)) & uint64(1):
            dp[(uint64(1) << uint64(v - 1))] |= np.uint32(1) << np.uint32(v - 1)
    for mask in range(1, half):
        ends = dp[mask]
        if ends == 0:
            continue
        e = np.uint32(ends)
        while e != 0:
            low = e & (~e + np.uint32(1))
            v = 0
            b = low
            while b > np.uint32(1):
                b >>= np.uint32(1)
                v += 1
            v += 1  # endpoint vertex id
            cand = adj[v] >> uint64(1)  # neighbor bits shifted to mask space
            cand &= ~uint64(mask)
            while cand != uint64(0):
                lw = cand & (~cand + uint64(1))
                dp[uint64(mask) | lw] |= np.uint32(lw)
                cand ^= lw
            e ^= low
    closing = np.uint32((a0 >> uint64(1)) & (half - uint64(1)))
    return np.uint32(dp[half - uint64(1)] & closing)


@njit(cache=True, nogil=True)
def scan_even_connected(n, basis_edges, fixed_cycles, free_cycles, out, cap):
    """Gray-code scan of one work unit of the cycle space of K_n.

    basis_edges: (d, 3) int64 array; row c holds the three edge ids of
    fundamental cycle c (triangle 0-i-j of the spanning star at 0).
    fixed_cycles / free_cycles: cycle indices pre-applied once vs toggled
    by the Gray scan. Appends to `out` every labeled graph that is
    even-degreed (guaranteed), min-degree >= 2, connected, and in
    sorted-by-(degree, neighbor-degree-sum) vertex order -- a cheap
    semi-canonical filter every isomorphism class satisfies at least once.
    Returns the survivor count (may exceed cap; caller must re-run bigger).
    """
    m = n * (n - 1) // 2
    # edge id -> endpoints
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    eid = np.empty((n, n), dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            eu[k] = i
            ev[k] = j
            eid[i, j] = k
            eid[j, i] = k
            k += 1

    mask = uint64(0)
    deg = np.zeros(n, dtype=np.int64)
    adj = np.zeros(n, dtype=np.uint64)

    def_toggle = fixed_cycles  # pre-apply fixed part
    for idx in range(def_toggle.shape[0]):
        c = def_toggle[idx]
        for t in range(3):
            e = basis_edges[c, t]
            bit = uint64(1) << uint64(e)
            u = eu[e]
            v = ev[e]
            if mask & bit:
                mask ^= bit
                deg[u] -= 1
                deg[v] -= 1
                adj[u] ^= uint64(1) << uint64(v)
                adj[v] ^= uint64(1) << uint64(u)
            else:
                mask |= bit
                deg[u] += 1
                deg[v] += 1
                adj[u] |= uint64(1) << uint64(v)
                adj[v] |= uint64(1) << uint64(u)

    nfree = free_cycles.shape[0]
    steps = uint64(1) << uint64(nfree)
    count = int64(0)
    full = (uint64(1) << uint64(n)) - uint64(1)
    key1 = np.zeros(n, dtype=np.int64)
    key2 = np.zeros(n, dtype=np.int64)
    t = uint64(0)
    while True:
        # filter current state
        ok = deg[n - 1] >= 2
        if ok:
            for v in range(n - 1):
                if deg[v] < deg[v + 1]:
                    ok = False
                    break
        if ok:
            # two rounds of neighbor-sum refinement keys; each must be
            # non-increasing within runs of equal preceding attributes
            for v in range(n):
                s = int64(0)
                nb = adj[v]
                while nb != uint64(0):
                    low = nb & (~nb + uint64(1))
                    w = 0
                    b = low
                    while b > uint64(1):
                        b >>= uint64(1)
                        w += 1
                    s += deg[w] * deg[w]
                    nb ^= low
                key1[v] = s
                if v > 0 and deg[v] == deg[v - 1] and s > key1[v - 1]:
                    ok = False
                    break
        if ok:
            for v in range(n):
                s = int64(0)
                nb = adj[v]
                while nb != uint64(0):
                    low = nb & (~nb + uint64(1))
                    w = 0
                    b = low
                    while b > uint64(1):
                        b >>= uint64(1)
                        w += 1
                    s += key1[w]
                    nb ^= low
                key2[v] = s
                if (
                    v > 0
                    and deg[v] == deg[v - 1]
                    and key1[v] == key1[v - 1]
                    and s > key2[v - 1]
                ):
                    ok = False
                    break
        if ok:
            # swap-maximality: transposing two vertices with identical
            # attributes must not increase the labeled edge mask. The
            # attribute-sorted labeling with maximal mask satisfies this,
            # so every class keeps at least one representative.
            for u in range(n - 1):
                for v in range(u + 1, n):
                    if (
                        deg[u] != deg[v]
                        or key1[u] != key1[v]
                        or key2[u] != key2[v]
                    ):
                        break  # attributes are sorted, runs are contiguous
                    sm = mask
                    for w in range(n):
                        if w == u or w == v:
                            continue
                        euw = eid[u, w]
                        evw = eid[v, w]
                        bu = (mask >> uint64(euw)) & uint64(1)
                        bv = (mask >> uint64(evw)) & uint64(1)
                        if bu != bv:
                            sm ^= (uint64(1) << uint64(euw)) | (
                                uint64(1) << uint64(evw)
                            )
                    if sm > mask:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            if _component_count(adj, full) == 1:
                if count < cap:
                    out[count] = mask
                count += 1
        t += uint64(1)
        if t >= steps:
            break
        # Gray transition: toggle cycle ctz(t)
        x = t
        c = 0
        while (x & uint64(1)) == uint64(0):
            x >>= uint64(1)
            c += 1
        cyc = free_cycles[c]
        for tt in range(3):
            e = basis_edges[cyc, tt]
            bit = uint64(1) << uint64(e)
            u = eu[e]
            v = ev[e]
            if mask & bit:
                mask ^= bit
                deg[u] -= 1
                deg[v] -= 1
                adj[u] ^= uint64(1) << uint64(v)
                adj[v] ^= uint64(1) << uint64(u)
            else:
                mask |= bit
                deg[u] += 1
                deg[v] += 1
                adj[u] |= uint64(1) << uint64(v)
                adj[v] |= uint64(1) << uint64(u)
    return count
