# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Semantics and result order match ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int64_t i64


def enumerate_maps(
    i64[::1] y_level,
    i64[:, ::1] y_faces,
    i64[::1] y_deg_src,
    i64[::1] y_deg_j,
    i64[::1] y_base,
    i64[::1] y_fixed,
    i64[::1] x_level_start,
    i64[:, ::1] x_faces,
    i64[:, ::1] x_degs,
    i64[::1] x_base,
    i64[::1] d0_start,
    i64[::1] d0_count,
    i64[::1] d0_order,
    long limit,
    bint store,
):
    cdef Py_ssize_t ny = y_level.shape[0]
    cdef Py_ssize_t p, i, lvl, src
    cdef i64 x, g, cur, hi
    cdef long count = 0
    cdef bint good, advanced
    cdef cnp.ndarray[i64, ndim=1] f_arr = np.full(max(ny, 1), -1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] lo_arr = np.zeros(max(ny, 1), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] hi_arr = np.zeros(max(ny, 1), dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] kind_arr = np.zeros(max(ny, 1), dtype=np.int64)
    cdef i64[::1] f = f_arr
    cdef i64[::1] lo = lo_arr
    cdef i64[::1] hiv = hi_arr
    cdef i64[::1] kind = kind_arr
    cdef Py_ssize_t cap = 16
    cdef Py_ssize_t nsol = 0
    cdef cnp.ndarray[i64, ndim=2] buf

    if ny == 0:
        if store:
            return 1, np.zeros((1, 0), dtype=np.int64)
        return 1, None
    if store:
        buf = np.empty((cap, ny), dtype=np.int64)

    # kind: 0 = level-0 range, 1 = d0 bucket (indirect), 2 = forced value
    p = 0
    _setup(0, y_level, y_faces, y_deg_src, y_deg_j, x_level_start, x_degs,
           d0_start, d0_count, f, lo, hiv, kind)
    while p >= 0:
        advanced = False
        cur = lo[p]
        hi = hiv[p]
        while cur < hi:
            if kind[p] == 1:
                x = d0_order[cur]
            else:
                x = cur
            cur += 1
            good = True
            if y_fixed[p] >= 0 and x != y_fixed[p]:
                good = False
            elif y_base[p] >= 0 and x_base[x] != y_base[p]:
                good = False
            elif y_deg_src[p] < 0:
                lvl = y_level[p]
                for i in range(1, lvl + 1):
                    if x_faces[x, i] != f[y_faces[p, i]]:
                        good = False
                        break
            if good:
                f[p] = x
                advanced = True
                break
        lo[p] = cur
        if not advanced:
            p -= 1
            continue
        if p == ny - 1:
            count += 1
            if store:
                if nsol == cap:
                    cap *= 2
                    buf = np.resize(buf, (cap, ny))
                for i in range(ny):
                    buf[nsol, i] = f[i]
                nsol += 1
            if limit >= 0 and count >= limit:
                break
            continue
        p += 1
        _setup(p, y_level, y_faces, y_deg_src, y_deg_j, x_level_start, x_degs,
               d0_start, d0_count, f, lo, hiv, kind)

    if store:
        return count, np.ascontiguousarray(buf[:nsol])
    return count, None


cdef inline void _setup(
    Py_ssize_t p,
    i64[::1] y_level,
    i64[:, ::1] y_faces,
    i64[::1] y_deg_src,
    i64[::1] y_deg_j,
    i64[::1] x_level_start,
    i64[:, ::1] x_degs,
    i64[::1] d0_start,
    i64[::1] d0_count,
    i64[::1] f,
    i64[::1] lo,
    i64[::1] hiv,
    i64[::1] kind,
) noexcept nogil:
    cdef i64 src = y_deg_src[p]
    cdef i64 v, g
    if src >= 0:
        v = x_degs[f[src], y_deg_j[p]]
        kind[p] = 2
        if v >= 0:
            lo[p] = v
            hiv[p] = v + 1
        else:
            lo[p] = 0
            hiv[p] = 0
    elif y_level[p] == 0:
        kind[p] = 0
        lo[p] = x_level_start[0]
        hiv[p] = x_level_start[1]
    else:
        g = f[y_faces[p, 0]]
        kind[p] = 1
        lo[p] = d0_start[g]
        hiv[p] = d0_start[g] + d0_count[g]


def components(Py_ssize_t n, i64[::1] src, i64[::1] tgt):
    cdef cnp.ndarray[i64, ndim=1] parent_arr = np.arange(n, dtype=np.int64)
    cdef i64[::1] parent = parent_arr
    cdef Py_ssize_t e, a
    cdef i64 ra, rb
    for e in range(src.shape[0]):
        ra = _find(parent, src[e])
        rb = _find(parent, tgt[e])
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    for a in range(n):
        parent[a] = _find(parent, a)
    return parent_arr


cdef inline i64 _find(i64[::1] parent, i64 a) noexcept nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a
