# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: rectangular assignment and fast-marching eikonal solve.

Mirrors ``pure.py`` exactly, including tie-breaking, so the two backends
produce identical outputs.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport INFINITY, isfinite, sqrt

cnp.import_array()

BACKEND = "native"


cdef cnp.intp_t[::1] _lap_rows_le_cols(double[:, ::1] cost) except *:
    cdef Py_ssize_t nr = cost.shape[0]
    cdef Py_ssize_t nc = cost.shape[1]
    cdef cnp.ndarray[double, ndim=1] u = np.zeros(nr)
    cdef cnp.ndarray[double, ndim=1] v = np.zeros(nc)
    cdef cnp.ndarray[double, ndim=1] shortest = np.empty(nc)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] path = np.full(nc, -1, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] col4row = np.full(nr, -1, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] row4col = np.full(nc, -1, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] remaining = np.empty(nc, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] scanned_rows = np.empty(nr, dtype=np.intp)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] scanned_cols = np.empty(nc, dtype=np.intp)

    cdef double[::1] u_v = u
    cdef double[::1] v_v = v
    cdef double[::1] shortest_v = shortest
    cdef cnp.intp_t[::1] path_v = path
    cdef cnp.intp_t[::1] col4row_v = col4row
    cdef cnp.intp_t[::1] row4col_v = row4col
    cdef cnp.intp_t[::1] remaining_v = remaining
    cdef cnp.intp_t[::1] sr_v = scanned_rows
    cdef cnp.intp_t[::1] sc_v = scanned_cols

    cdef Py_ssize_t cur_row, i, j, it, index, n_remaining, n_sr, n_sc, sink, ip
    cdef double min_val, lowest, r

    for cur_row in range(nr):
        min_val = 0.0
        i = cur_row
        n_remaining = nc
        for j in range(nc):
            remaining_v[j] = j
            shortest_v[j] = INFINITY
        n_sr = 0
        n_sc = 0
        sink = -1
        while sink == -1:
            sr_v[n_sr] = i
            n_sr += 1
            lowest = INFINITY
            index = -1
            for it in range(n_remaining):
                j = remaining_v[it]
                r = min_val + cost[i, j] - u_v[i] - v_v[j]
                if r < shortest_v[j]:
                    path_v[j] = i
                    shortest_v[j] = r
                if shortest_v[j] < lowest:
                    lowest = shortest_v[j]
                    index = it
            if index == -1 or lowest == INFINITY:
                raise ValueError("cost matrix is infeasible")
            min_val = lowest
            j = remaining_v[index]
            if row4col_v[j] == -1:
                sink = j
            else:
                i = row4col_v[j]
            sc_v[n_sc] = j
            n_sc += 1
            remaining_v[index] = remaining_v[n_remaining - 1]
            n_remaining -= 1

        u_v[cur_row] += min_val
        for it in range(n_sr):
            ip = sr_v[it]
            if ip != cur_row:
                u_v[ip] += min_val - shortest_v[col4row_v[ip]]
        for it in range(n_sc):
            j = sc_v[it]
            v_v[j] -= min_val - shortest_v[j]

        while True:
            i = path_v[sink]
            row4col_v[sink] = i
            j = col4row_v[i]
            col4row_v[i] = sink
            sink = j
            if i == cur_row:
                break
    return col4row_v


def solve_assignment(cost):
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
        col4row = np.asarray(_lap_rows_le_cols(cost))
        return np.arange(k, dtype=np.intp), col4row
    col4row = np.asarray(_lap_rows_le_cols(np.ascontiguousarray(cost.T)))
    order = np.argsort(col4row, kind="stable")
    return col4row[order], np.arange(l, dtype=np.intp)[order]


# Binary min-heap on (t, idx) pairs with lexicographic order, matching the
# tuple ordering heapq uses in the pure backend.

cdef inline bint _heap_less(double ta, Py_ssize_t ia, double tb, Py_ssize_t ib) nogil:
    if ta != tb:
        return ta < tb
    return ia < ib


cdef void _heap_swap(double[::1] ht, cnp.intp_t[::1] hi,
                     Py_ssize_t a, Py_ssize_t b) nogil:
    cdef double td = ht[a]
    cdef cnp.intp_t ti = hi[a]
    ht[a] = ht[b]
    hi[a] = hi[b]
    ht[b] = td
    hi[b] = ti


cdef void _heap_push(double[::1] ht, cnp.intp_t[::1] hi, Py_ssize_t* n,
                     double tv, Py_ssize_t idx) nogil:
    cdef Py_ssize_t child = n[0]
    cdef Py_ssize_t parent
    ht[child] = tv
    hi[child] = idx
    n[0] += 1
    while child > 0:
        parent = (child - 1) >> 1
        if _heap_less(ht[child], hi[child], ht[parent], hi[parent]):
            _heap_swap(ht, hi, child, parent)
            child = parent
        else:
            break


cdef void _heap_pop(double[::1] ht, cnp.intp_t[::1] hi, Py_ssize_t* n,
                    double* tv, Py_ssize_t* idx) nogil:
    cdef Py_ssize_t root = 0
    cdef Py_ssize_t child
    tv[0] = ht[0]
    idx[0] = hi[0]
    n[0] -= 1
    ht[0] = ht[n[0]]
    hi[0] = hi[n[0]]
    while True:
        child = 2 * root + 1
        if child >= n[0]:
            break
        if child + 1 < n[0] and _heap_less(ht[child + 1], hi[child + 1],
                                           ht[child], hi[child]):
            child += 1
        if _heap_less(ht[child], hi[child], ht[root], hi[root]):
            _heap_swap(ht, hi, child, root)
            root = child
        else:
            break


def solve_eikonal(slowness, Py_ssize_t sx, Py_ssize_t sy):
    """First-order upwind fast-marching solution of |grad T| = slowness.

    ``slowness`` is (H, W); infinite entries are impassable. The source cell
    (sx, sy) gets T = 0. Unreached cells stay at +inf.
    """
    cdef cnp.ndarray[double, ndim=2] s_arr = np.ascontiguousarray(
        slowness, dtype=np.float64)
    cdef Py_ssize_t h = s_arr.shape[0]
    cdef Py_ssize_t w = s_arr.shape[1]
    if not (0 <= sx < w and 0 <= sy < h):
        raise ValueError("source outside grid")
    if not isfinite(s_arr[sy, sx]):
        raise ValueError("source cell has infinite cost")

    cdef cnp.ndarray[double, ndim=2] t_arr = np.full((h, w), np.inf)
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] frozen_arr = np.zeros((h, w), dtype=np.uint8)
    # Each cell is pushed at most once per improvement; 4 neighbours bound
    # the number of live entries.
    cdef cnp.ndarray[double, ndim=1] heap_t = np.empty(4 * h * w + 1)
    cdef cnp.ndarray[cnp.intp_t, ndim=1] heap_i = np.empty(4 * h * w + 1, dtype=np.intp)

    cdef double[:, ::1] s = s_arr
    cdef double[:, ::1] t = t_arr
    cdef cnp.uint8_t[:, ::1] frozen = frozen_arr
    cdef double[::1] ht = heap_t
    cdef cnp.intp_t[::1] hi = heap_i

    cdef Py_ssize_t n_heap = 0
    cdef Py_ssize_t idx, x, y, nx, ny, k
    cdef double tv, a1, a2, sv, t_new, diff, tmp
    cdef int[4] dxs = [1, -1, 0, 0]
    cdef int[4] dys = [0, 0, 1, -1]

    t[sy, sx] = 0.0
    _heap_push(ht, hi, &n_heap, 0.0, sy * w + sx)

    with nogil:
        while n_heap > 0:
            _heap_pop(ht, hi, &n_heap, &tv, &idx)
            y = idx // w
            x = idx - y * w
            if frozen[y, x]:
                continue
            frozen[y, x] = 1
            for k in range(4):
                nx = x + dxs[k]
                ny = y + dys[k]
                if nx < 0 or nx >= w or ny < 0 or ny >= h or frozen[ny, nx]:
                    continue
                sv = s[ny, nx]
                if not isfinite(sv):
                    continue
                a1 = INFINITY
                if nx > 0 and t[ny, nx - 1] < a1:
                    a1 = t[ny, nx - 1]
                if nx + 1 < w and t[ny, nx + 1] < a1:
                    a1 = t[ny, nx + 1]
                a2 = INFINITY
                if ny > 0 and t[ny - 1, nx] < a2:
                    a2 = t[ny - 1, nx]
                if ny + 1 < h and t[ny + 1, nx] < a2:
                    a2 = t[ny + 1, nx]
                if a1 > a2:
                    tmp = a1
                    a1 = a2
                    a2 = tmp
                if a2 - a1 >= sv or a2 == INFINITY:
                    t_new = a1 + sv
                else:
                    diff = a1 - a2
                    t_new = 0.5 * (a1 + a2 + sqrt(2.0 * sv * sv - diff * diff))
                if t_new < t[ny, nx]:
                    t[ny, nx] = t_new
                    _heap_push(ht, hi, &n_heap, t_new, ny * w + nx)
    return t_arr
