# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: sparse product, threshold peeling, core numbers.

Every function here has a pure-Python twin in ``_pykernels`` with the same
signature and bit-identical results.
"""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport qsort
from libc.math cimport fabs

cnp.import_array()

ctypedef cnp.int64_t idx_t


cdef int _cmp_idx(const void *a, const void *b) noexcept nogil:
    cdef idx_t x = (<idx_t *> a)[0]
    cdef idx_t y = (<idx_t *> b)[0]
    return (x > y) - (x < y)


def spgemm(const idx_t[::1] a_indptr, const idx_t[::1] a_indices, const double[::1] a_data,
           const idx_t[::1] b_indptr, const idx_t[::1] b_indices, const double[::1] b_data,
           Py_ssize_t n_rows, Py_ssize_t n_cols):
    """C = A * B over CSR inputs, returning canonical CSR ``(indptr, indices, data)``.

    Rows are produced one at a time with a dense accumulator over the result
    columns. Intermediate nodes k of a row are visited in ascending order, so
    every c_ij receives its terms in the same order as the k-outer loop.
    """
    cdef Py_ssize_t i, j, kk, jj, k, pos, start, nnz_bound = 0, nnz = 0
    cdef idx_t[::1] marker = np.full(n_cols, -1, dtype=np.int64)
    cdef double[::1] acc = np.zeros(n_cols, dtype=np.float64)
    cdef double a, v

    # symbolic pass: distinct columns per row bound the output size
    with nogil:
        for i in range(n_rows):
            for kk in range(a_indptr[i], a_indptr[i + 1]):
                k = a_indices[kk]
                for jj in range(b_indptr[k], b_indptr[k + 1]):
                    j = b_indices[jj]
                    if marker[j] != i:
                        marker[j] = i
                        nnz_bound += 1

    indptr_arr = np.zeros(n_rows + 1, dtype=np.int64)
    indices_arr = np.empty(nnz_bound, dtype=np.int64)
    data_arr = np.empty(nnz_bound, dtype=np.float64)
    cdef idx_t[::1] c_indptr = indptr_arr
    cdef idx_t[::1] c_indices = indices_arr
    cdef double[::1] c_data = data_arr
    marker[:] = -1

    with nogil:
        for i in range(n_rows):
            start = nnz
            for kk in range(a_indptr[i], a_indptr[i + 1]):
                k = a_indices[kk]
                a = a_data[kk]
                for jj in range(b_indptr[k], b_indptr[k + 1]):
                    j = b_indices[jj]
                    if marker[j] != i:
                        marker[j] = i
                        acc[j] = a * b_data[jj]
                        c_indices[nnz] = j
                        nnz += 1
                    else:
                        acc[j] += a * b_data[jj]
            if nnz - start > 1:
                qsort(&c_indices[start], nnz - start, sizeof(idx_t), _cmp_idx)
            pos = start
            for jj in range(start, nnz):
                j = c_indices[jj]
                v = acc[j]
                if v != 0.0:
                    c_indices[pos] = j
                    c_data[pos] = v
                    pos += 1
            nnz = pos
            c_indptr[i + 1] = nnz

    if nnz != nnz_bound:
        indices_arr = indices_arr[:nnz].copy()
        data_arr = data_arr[:nnz].copy()
    return indptr_arr, indices_arr, data_arr


cdef inline double _live_sum(const idx_t[::1] indptr, const idx_t[::1] indices,
                             const double[::1] weights, const unsigned char[::1] alive,
                             Py_ssize_t u) noexcept nogil:
    cdef double s = 0.0
    cdef Py_ssize_t e
    for e in range(indptr[u], indptr[u + 1]):
        if alive[indices[e]]:
            s += weights[e]
    return s


def peel(const idx_t[::1] indptr, const idx_t[::1] indices, const double[::1] weights,
         double threshold):
    """Membership mask of the largest node set whose internal weight sums all reach ``threshold``.

    Input is a symmetric, loop-free CSR. Removal candidates are confirmed by
    an exact recount over surviving neighbours, so accumulated decrements
    never decide membership on their own.
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t u, v, e, head = 0, tail = 0
    cdef double margin = 1e-9 * (fabs(threshold) if fabs(threshold) > 1.0 else 1.0)
    alive_arr = np.ones(n, dtype=np.uint8)
    cdef unsigned char[::1] alive = alive_arr
    cdef unsigned char[::1] queued = np.zeros(n, dtype=np.uint8)
    cdef double[::1] p = np.zeros(n, dtype=np.float64)
    cdef idx_t[::1] queue = np.empty(n, dtype=np.int64)

    with nogil:
        for u in range(n):
            p[u] = _live_sum(indptr, indices, weights, alive, u)
            if p[u] < threshold:
                queued[u] = 1
                queue[tail] = u
                tail += 1
        while head < tail:
            u = queue[head]
            head += 1
            alive[u] = 0
            for e in range(indptr[u], indptr[u + 1]):
                v = indices[e]
                if not alive[v] or queued[v]:
                    continue
                p[v] -= weights[e]
                if p[v] < threshold + margin:
                    p[v] = _live_sum(indptr, indices, weights, alive, v)
                    if p[v] < threshold:
                        queued[v] = 1
                        queue[tail] = v
                        tail += 1
    return alive_arr.astype(bool)


def core_numbers(const idx_t[::1] indptr, const idx_t[::1] indices):
    """Degree core number of every node (bucket-ordered peeling, linear time).

    Input is a symmetric, loop-free CSR.
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t u, v, e, i, d, md = 0, start, num, pu, pw, w
    deg_arr = np.zeros(n, dtype=np.int64)
    cdef idx_t[::1] deg = deg_arr
    for u in range(n):
        deg[u] = indptr[u + 1] - indptr[u]
        if deg[u] > md:
            md = deg[u]
    cdef idx_t[::1] bins = np.zeros(md + 1, dtype=np.int64)
    cdef idx_t[::1] pos = np.zeros(n, dtype=np.int64)
    cdef idx_t[::1] vert = np.zeros(n, dtype=np.int64)

    with nogil:
        for u in range(n):
            bins[deg[u]] += 1
        start = 0
        for d in range(md + 1):
            num = bins[d]
            bins[d] = start
            start += num
        for u in range(n):
            pos[u] = bins[deg[u]]
            vert[pos[u]] = u
            bins[deg[u]] += 1
        for d in range(md, 0, -1):
            bins[d] = bins[d - 1]
        if md >= 0 and n > 0:
            bins[0] = 0
        for i in range(n):
            v = vert[i]
            for e in range(indptr[v], indptr[v + 1]):
                u = indices[e]
                if deg[u] > deg[v]:
                    d = deg[u]
                    pu = pos[u]
                    pw = bins[d]
                    w = vert[pw]
                    if u != w:
                        pos[u] = pw
                        vert[pu] = w
                        pos[w] = pu
                        vert[pw] = u
                    bins[d] += 1
                    deg[u] -= 1
    return deg_arr
