"""Exhaustive Harris census: every even connected graph class, then the
tough / non-Hamiltonian survivors.

The labeled search space is the cycle space of K_n (dimension C(n-1,2)),
scanned with Gray-code toggles of the fundamental triangles of the star at
vertex 0 -- odd-degree graphs are skipped for free. A cheap semi-canonical
labeling filter (degrees, then neighbor-degree sums, non-increasing) cuts
the survivors to a manageable multiple of the class count before exact
canonical deduplication. NP-hard checks then run once per class.

Work is partitioned by fixing the top basis bits; the partition count
depends only on the order, so results are byte-identical for any thread
count and for checkpoint/resume runs.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .canonical import canonical_graph
from .core import Graph, from_adjacency, is_two_connected, degree_sequence, DegreeSequence
from .graph6 import emit_graph6, parse_graph6
from .properties import (
    _dp_cycle,
    _heuristic_cycle,
    is_tough,
)

EVEN_CONNECTED_MIN_N = 3
EVEN_CONNECTED_MAX_N = 10
HARRIS_MIN_ORDER = 7
HARRIS_MAX_ORDER = 10

CHECKPOINT_VERSION = 1

# Fixed top basis bits per order; constant so any thread count and any
# resume produce the identical work split.
_PARTITION_BITS = {3: 0, 4: 0, 5: 0, 6: 0, 7: 4, 8: 5, 9: 6, 10: 12}


class EnumerationError(ValueError):
    """Order outside the documented desk-scale ceiling."""


class CheckpointError(ValueError):
    """Checkpoint incompatible with the requested run."""


@dataclass
class CensusResult:
    order: int
    harris_count: int
    catalog: list[str]
    stats: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    def summary(self) -> dict:
        return {
            "order": self.order,
            "count": self.harris_count,
            "stage_statistics": self.stats,
            "wall_time": self.wall_time,
        }


@dataclass
class CensusCheckpoint:
    order: int
    partition_bits: int
    completed: dict[int, list[int]]  # unit id -> survivor edge masks

    def dump(self, path) -> None:
        blob = {
            "version": CHECKPOINT_VERSION,
            "order": self.order,
            "partition_bits": self.partition_bits,
            "completed": {str(k): v for k, v in self.completed.items()},
        }
        with open(path, "w") as fh:
            json.dump(blob, fh)

    @classmethod
    def load(cls, path) -> "CensusCheckpoint":
        with open(path) as fh:
            blob = json.load(fh)
        if blob.get("version") != CHECKPOINT_VERSION:
            raise CheckpointError(
                f"checkpoint version {blob.get('version')} != {CHECKPOINT_VERSION}"
            )
        return cls(
            order=blob["order"],
            partition_bits=blob["partition_bits"],
            completed={int(k): list(v) for k, v in blob["completed"].items()},
        )


def _edge_ids(n: int) -> dict[tuple[int, int], int]:
    ids = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            ids[(i, j)] = k
            k += 1
    return ids


def _basis(n: int) -> np.ndarray:
    """Fundamental triangles 0-i-j of the spanning star at vertex 0."""
    ids = _edge_ids(n)
    rows = []
    for i in range(1, n):
        for j in range(i + 1, n):
            rows.append((ids[(0, i)], ids[(0, j)], ids[(i, j)]))
    return np.array(rows, dtype=np.int64)


def _mask_to_graph(n: int, mask: int) -> Graph:
    adj = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return from_adjacency(adj)


def _scan_unit(n: int, basis: np.ndarray, bits: int, unit: int) -> list[int]:
    """Scan one work unit; returns the semi-canonical survivor edge masks."""
    d = basis.shape[0]
    fixed = np.array(
        [d - bits + i for i in range(bits) if unit >> i & 1], dtype=np.int64
    )
    free = np.arange(d - bits, dtype=np.int64)
    cap = 1 << 16
    while True:
        out = np.zeros(cap, dtype=np.uint64)
        count = int(_kernels.scan_even_connected(n, basis, fixed, free, out, cap))
        if count <= cap:
            return [int(x) for x in out[:count]]
        cap = max(cap * 2, count)


def enumerate_even_connected(n: int, threads: int = 1) -> list[Graph]:
    """One canonical representative per isomorphism class of connected,
    even-degree graphs on n vertices (all degrees >= 2), sorted by
    canonical graph6 string."""
    if not EVEN_CONNECTED_MIN_N <= n <= EVEN_CONNECTED_MAX_N:
        raise EnumerationError(
            f"even-connected enumeration supports "
            f"{EVEN_CONNECTED_MIN_N} <= n <= {EVEN_CONNECTED_MAX_N}, got {n}"
        )
    masks, _ = _scan_all(n, threads=threads)
    classes = _dedup(n, masks)
    return [g for _, g in classes]


def _scan_all(
    n: int,
    threads: int = 1,
    checkpoint: CensusCheckpoint | None = None,
    checkpoint_path=None,
) -> tuple[list[int], int]:
    """Run (or finish) the partitioned scan; returns (masks, labeled_count)."""
    basis = _basis(n)
    bits = _PARTITION_BITS[n]
    units = list(range(1 << bits))
    done: dict[int, list[int]] = {}
    if checkpoint is not None:
        if checkpoint.order != n:
            raise CheckpointError(
                f"checkpoint is for order {checkpoint.order}, requested {n}"
            )
        if checkpoint.partition_bits != bits:
            raise CheckpointError(
                f"checkpoint partition_bits {checkpoint.partition_bits} != {bits}"
            )
        done = dict(checkpoint.completed)
    todo = [u for u in units if u not in done]
    if todo:
        with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
            futures = {u: pool.submit(_scan_unit, n, basis, bits, u) for u in todo}
            for u in todo:
                done[u] = futures[u].result()
                if checkpoint_path is not None:
                    CensusCheckpoint(n, bits, done).dump(checkpoint_path)
    masks = []
    for u in units:
        masks.extend(done[u])
    return masks, len(masks)


def _dedup(n: int, masks: list[int]) -> list[tuple[str, Graph]]:
    """Canonicalize labeled survivors; one (g6, graph) pair per class, sorted."""
    seen: dict[str, Graph] = {}
    for mask in masks:
        g = canonical_graph(_mask_to_graph(n, mask))
        seen.setdefault(emit_graph6(g), g)
    return sorted(seen.items())


def enumerate_harris(
    n: int,
    threads: int = 1,
    checkpoint: CensusCheckpoint | None = None,
    checkpoint_path=None,
) -> CensusResult:
    """The complete Harris catalog of order n, up to isomorphism."""
    if not HARRIS_MIN_ORDER <= n <= HARRIS_MAX_ORDER:
        raise EnumerationError(
            f"the Harris census supports {HARRIS_MIN_ORDER} <= n <= "
            f"{HARRIS_MAX_ORDER}, got {n}"
        )
    t0 = time.perf_counter()
    masks, labeled = _scan_all(
        n, threads=threads, checkpoint=checkpoint, checkpoint_path=checkpoint_path
    )
    classes = _dedup(n, masks)
    stats = {
        "labeled_survivors": labeled,
        "even_connected_classes": len(classes),
        "two_connected": 0,
        "heuristic_hamiltonian": 0,
        "exact_hamiltonian": 0,
        "not_tough": 0,
        "harris": 0,
    }
    catalog = []
    for g6, g in classes:
        if not is_two_connected(g):
            continue
        stats["two_connected"] += 1
        if _heuristic_cycle(g) is not None:
            stats["heuristic_hamiltonian"] += 1
            continue
        if _dp_cycle(g) is not None:
            stats["exact_hamiltonian"] += 1
            continue
        if not is_tough(g).tough:
            stats["not_tough"] += 1
            continue
        stats["harris"] += 1
        catalog.append(g6)
    catalog.sort()
    return CensusResult(
        order=n,
        harris_count=len(catalog),
        catalog=catalog,
        stats=stats,
        wall_time=time.perf_counter() - t0,
    )


def resume(
    checkpoint_path, threads: int = 1
) -> CensusResult:
    """Finish an interrupted census; identical output to an uninterrupted run."""
    cp = CensusCheckpoint.load(checkpoint_path)
    return enumerate_harris(
        cp.order, threads=threads, checkpoint=cp, checkpoint_path=checkpoint_path
    )


def census_degree_histogram(result: CensusResult) -> list[DegreeSequence]:
    """Degree sequences of all catalog members, sorted."""
    seqs = [degree_sequence(parse_graph6(line)) for line in result.catalog]
    return sorted(seqs, key=lambda s: s.degrees, reverse=True)
