"""Pure-Python reference kernels.

Same semantics and tie-breaking as the compiled versions in ``_native.pyx``:
the two backends are interchangeable and are cross-checked in the test suite.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

BACKEND = "pure"


def _lap_rows_le_cols(cost: np.ndarray) -> np.ndarray:
    """Solve the rectangular assignment problem for nr <= nc.

    Shortest-augmenting-path algorithm with dual variables (Jonker-Volgenant
    style). Returns col4row: for each row, the assigned column.
    """
    nr, nc = cost.shape
    u = np.zeros(nr)
    v = np.zeros(nc)
    path = np.full(nc, -1, dtype=np.intp)
    col4row = np.full(nr, -1, dtype=np.intp)
    row4col = np.full(nc, -1, dtype=np.intp)

    for cur_row in range(nr):
        min_val = 0.0
        i = cur_row
        remaining = list(range(nc))
        shortest = np.full(nc, np.inf)
        scanned_rows: list[int] = []
        scanned_cols: list[int] = []
        sink = -1
        while sink == -1:
            scanned_rows.append(i)
            lowest = math.inf
            index = -1
            for it, j in enumerate(remaining):
                r = min_val + cost[i, j] - u[i] - v[j]
                if r < shortest[j]:
                    path[j] = i
                    shortest[j] = r
                if shortest[j] < lowest:
                    lowest = shortest[j]
                    index = it
            if index == -1 or lowest == math.inf:
                raise ValueError("cost matrix is infeasible")
            min_val = lowest
            j = remaining[index]
            if row4col[j] == -1:
                sink = j
            else:
                i = row4col[j]
            scanned_cols.append(j)
            remaining[index] = remaining[-1]
            remaining.pop()

        u[cur_row] += min_val
        for ip in scanned_rows:
            if ip != cur_row:
                u[ip] += min_val - shortest[col4row[ip]]
        for j in scanned_cols:
            v[j] -= min_val - shortest[j]

        while True:
            i = path[sink]
            row4col[sink] = i
            col4row[i], sink = sink, col4row[i]
            if i == cur_row:
                break
    return col4row


def solve_assignment(cost: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Minimum-cost matching of the smaller side of ``cost`` into the larger.

    Returns (rows, cols) index arrays of the min(k, l) matched pairs, sorted
    by row index. Every entry must be finite.
    """
    cost = np.ascontiguousarray(cost, dtype=np.float64)
    if cost.ndim != 2:
        raise ValueError("cost must be a 2-D matrix")
    if cost.size == 0:
        return np.empty(0, dtype=np.intp), np.empty(0, dtype=np.intp)
    if not np.isfinite(cost).all():
        raise ValueError("cost matrix contains non-finite entries")
    k, l = cost.shape
    if k <= l:
        col4row = _lap_rows_le_cols(cost)
        rows = np.arange(k, dtype=np.intp)
        return rows, col4row
    col4row = _lap_rows_le_cols(np.ascontiguousarray(cost.T))
    order = np.argsort(col4row, kind="stable")
    return col4row[order], np.arange(l, dtype=np.intp)[order]


def solve_eikonal(slowness: np.ndarray, sx: int, sy: int) -> np.ndarray:
    """First-order upwind fast-marching solution of |grad T| = slowness.

    ``slowness`` is (H, W); infinite entries are impassable. The source cell
    (sx, sy) gets T = 0. Unreached cells stay at +inf.
    """
    slowness = np.ascontiguousarray(slowness, dtype=np.float64)
    h, w = slowness.shape
    if not (0 <= sx < w and 0 <= sy < h):
        raise ValueError("source outside grid")
    if not math.isfinite(slowness[sy, sx]):
        raise ValueError("source cell has infinite cost")

    t = np.full((h, w), np.inf)
    frozen = np.zeros((h, w), dtype=bool)
    t[sy, sx] = 0.0
    heap: list[tuple[float, int]] = [(0.0, sy * w + sx)]

    while heap:
        tv, idx = heapq.heappop(heap)
        y, x = divmod(idx, w)
        if frozen[y, x]:
            continue
        frozen[y, x] = True
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            nx, ny = x + dx, y + dy
            if not (0 <= nx < w and 0 <= ny < h) or frozen[ny, nx]:
                continue
            s = slowness[ny, nx]
            if not math.isfinite(s):
                continue
            a1 = min(
                t[ny, nx - 1] if nx > 0 else math.inf,
                t[ny, nx + 1] if nx + 1 < w else math.inf,
            )
            a2 = min(
                t[ny - 1, nx] if ny > 0 else math.inf,
                t[ny + 1, nx] if ny + 1 < h else math.inf,
            )
            if a1 > a2:
                a1, a2 = a2, a1
            if a2 - a1 >= s or a2 == math.inf:
                t_new = a1 + s
            else:
                diff = a1 - a2
                t_new = 0.5 * (a1 + a2 + math.sqrt(2.0 * s * s - diff * diff))
            if t_new < t[ny, nx]:
                t[ny, nx] = t_new
                heapq.heappush(heap, (t_new, ny * w + nx))
    return t
