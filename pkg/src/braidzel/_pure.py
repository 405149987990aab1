"""Pure-Python kernels: reference semantics for the compiled module.

Every function here has a bit-identical counterpart in ``_speedups``;
``braidzel.kernels`` picks whichever is available at import time.  Keep the
two in lockstep.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def first_bad_pair(twists) -> int:
    """Index of the first pair (i < j, row-major) with t_i + t_j >= 0.

    Returns ``i * k + j`` using 0-based indices, or -1 when every pairwise
    sum is negative.
    """
    k = len(twists)
    for i in range(k):
        ti = twists[i]
        for j in range(i + 1, k):
            if ti + twists[j] >= 0:
                return i * k + j
    return -1


def qp_all_negative_batch(rows: np.ndarray) -> np.ndarray:
    """Per row: 1 if all pairwise twist sums are negative, else 0."""
    n, k = rows.shape
    out = np.empty(n, dtype=np.uint8)
    for r in range(n):
        row = rows[r]
        out[r] = 1 if first_bad_pair(row) < 0 else 0
    return out


def boundary_cycles(images, odd) -> int:
    """Boundary components of a band surface.

    ``images`` gives each band's top attachment position (1-based, a
    permutation of 1..k); ``odd`` flags bands whose half-twist count is odd
    (those exchange the band's two edges).  Each band contributes four edge
    endpoints; disk arcs join neighbouring bands cyclically on both disks;
    the boundary is the disjoint union of the resulting cycles.
    """
    k = len(images)
    n = 4 * k
    band = [0] * n
    disk = [0] * n

    def node(d: int, p: int, s: int) -> int:
        return ((d * k + p) << 1) | s

    for x in range(k):
        p = images[x] - 1
        if odd[x]:
            pairs = ((node(0, x, 0), node(1, p, 1)), (node(0, x, 1), node(1, p, 0)))
        else:
            pairs = ((node(0, x, 0), node(1, p, 0)), (node(0, x, 1), node(1, p, 1)))
        for a, b in pairs:
            band[a] = b
            band[b] = a
    for d in (0, 1):
        for p in range(k):
            a, b = node(d, p, 1), node(d, (p + 1) % k, 0)
            disk[a] = b
            disk[b] = a

    visited = bytearray(n)
    cycles = 0
    for start in range(n):
        if visited[start]:
            continue
        cycles += 1
        cur = start
        use_band = True
        while not visited[cur]:
            visited[cur] = 1
            cur = band[cur] if use_band else disk[cur]
            use_band = not use_band
    return cycles


def pretzel_boundary_batch(rows: np.ndarray) -> np.ndarray:
    """Boundary component counts for trivially braided surfaces, per row."""
    n, k = rows.shape
    images = tuple(range(1, k + 1))
    out = np.empty(n, dtype=np.int64)
    for r in range(n):
        odd = [int(t) & 1 for t in rows[r]]
        out[r] = boundary_cycles(images, odd)
    return out
