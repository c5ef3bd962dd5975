# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled pair sweep over sparse Z[phi] vectors (int64, GIL released)."""

from libc.stdint cimport int64_t
from libc.stdlib cimport calloc, free


cdef inline int sign_ab(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t u = 2 * a + b
    cdef int64_t v = b
    cdef int64_t uu, vv
    if u >= 0 and v >= 0:
        return 0 if (u == 0 and v == 0) else 1
    if u <= 0 and v <= 0:
        return -1
    uu = u * u
    vv = 5 * v * v
    if u > 0:
        return 1 if uu > vv else -1
    return -1 if uu > vv else 1


def sweep_rows(const int64_t[:, ::1] idx, const int64_t[:, ::1] vp, const int64_t[:, ::1] vq,
               const int64_t[::1] nnz, const int64_t[::1] sp, const int64_t[::1] sq,
               const int64_t[::1] indptr, const int64_t[::1] indices, int64_t r0, int64_t r1):
    """Classify all pairs (i, j) with r0 <= i < r1 and i < j.

    Returns (n_adj, n_non, adj_fail, first_adj, non_fail, first_non, worst)
    where first_* and worst are (i, j, a, b) tuples or None.
    """
    cdef int64_t N = sp.shape[0]
    cdef int64_t i, j, k, x, y, ia, jb, p1, q1, p2, q2
    cdef int64_t d1, d2, P1, Q1, a, b
    cdef int64_t n_adj = 0, n_non = 0, adj_fail = 0, non_fail = 0
    cdef int64_t fa_i = -1, fa_j = -1, fa_a = 0, fa_b = 0
    cdef int64_t fn_i = -1, fn_j = -1, fn_a = 0, fn_b = 0
    cdef int64_t w_i = -1, w_j = -1, w_a = 0, w_b = 0
    cdef unsigned char* mark = <unsigned char*> calloc(N if N > 0 else 1, 1)
    if mark == NULL:
        raise MemoryError()
    with nogil:
        for i in range(r0, r1):
            for k in range(indptr[i], indptr[i + 1]):
                mark[indices[k]] = 1
            for j in range(i + 1, N):
                d1 = 0
                d2 = 0
                x = 0
                y = 0
                while x < nnz[i] and y < nnz[j]:
                    ia = idx[i, x]
                    jb = idx[j, y]
                    if ia == jb:
                        p1 = vp[i, x]
                        q1 = vq[i, x]
                        p2 = vp[j, y]
                        q2 = vq[j, y]
                        d1 += p1 * p2 + q1 * q2
                        d2 += p1 * q2 + q1 * p2 + q1 * q2
                        x += 1
                        y += 1
                    elif ia < jb:
                        x += 1
                    else:
                        y += 1
                P1 = sp[i] * sp[j] + sq[i] * sq[j]
                Q1 = sp[i] * sq[j] + sq[i] * sp[j] + sq[i] * sq[j]
                a = -Q1 + d1 + d2
                b = -P1 - Q1 + d1 + 2 * d2
                if mark[j]:
                    n_adj += 1
                    if a != 0 or b != 0:
                        adj_fail += 1
                        if fa_i < 0:
                            fa_i = i; fa_j = j; fa_a = a; fa_b = b
                else:
                    n_non += 1
                    if sign_ab(a, b + 1) > 0:
                        non_fail += 1
                        if fn_i < 0:
                            fn_i = i; fn_j = j; fn_a = a; fn_b = b
                    if w_i < 0 or sign_ab(a - w_a, b - w_b) > 0:
                        w_i = i; w_j = j; w_a = a; w_b = b
            for k in range(indptr[i], indptr[i + 1]):
                mark[indices[k]] = 0
    free(mark)
    first_adj = (fa_i, fa_j, fa_a, fa_b) if fa_i >= 0 else None
    first_non = (fn_i, fn_j, fn_a, fn_b) if fn_i >= 0 else None
    worst = (w_i, w_j, w_a, w_b) if w_i >= 0 else None
    return n_adj, n_non, adj_fail, first_adj, non_fail, first_non, worst
