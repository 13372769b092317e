"""Pure-Python kernels; the fallback when the compiled extension is unavailable.

Signatures and results match ``_kernels`` exactly.
"""
from collections import deque

import numpy as np


def _csr_from_keys(keys, values, n_rows, n_cols):
    keys = np.fromiter(keys, dtype=np.int64, count=len(keys))
    values = np.fromiter(values, dtype=np.float64, count=len(keys))
    order = np.argsort(keys, kind="stable")
    keys, values = keys[order], values[order]
    keep = values != 0.0
    keys, values = keys[keep], values[keep]
    rows, cols = np.divmod(keys, n_cols) if n_cols else (keys, keys)
    indptr = np.zeros(n_rows + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n_rows), out=indptr[1:])
    return indptr, cols.astype(np.int64), values


def spgemm(a_indptr, a_indices, a_data, b_indptr, b_indices, b_data, n_rows, n_cols):
    """C = A * B by the intermediate-node loop.

    For every k, each pair (i, j) in predecessors_A(k) x successors_B(k)
    adds a_ik * b_kj to c_ij.
    """
    a_indptr = np.asarray(a_indptr)
    n_k = b_indptr.shape[0] - 1
    a_rows = np.repeat(np.arange(n_rows, dtype=np.int64), np.diff(a_indptr))
    order = np.argsort(a_indices, kind="stable")
    colptr = np.zeros(n_k + 1, dtype=np.int64)
    np.cumsum(np.bincount(a_indices, minlength=n_k), out=colptr[1:])
    pred = a_rows[order].tolist()
    pred_w = np.asarray(a_data)[order].tolist()
    colptr = colptr.tolist()
    b_ptr = np.asarray(b_indptr).tolist()
    succ = np.asarray(b_indices).tolist()
    succ_w = np.asarray(b_data).tolist()

    c = {}
    for k in range(n_k):
        lo, hi = colptr[k], colptr[k + 1]
        blo, bhi = b_ptr[k], b_ptr[k + 1]
        if lo == hi or blo == bhi:
            continue
        targets = list(zip(succ[blo:bhi], succ_w[blo:bhi]))
        for i, a in zip(pred[lo:hi], pred_w[lo:hi]):
            base = i * n_cols
            for j, b in targets:
                key = base + j
                if key in c:
                    c[key] += a * b
                else:
                    c[key] = a * b
    return _csr_from_keys(c.keys(), c.values(), n_rows, n_cols)


def _live_sum(indptr, indices, weights, alive, u):
    s = 0.0
    for e in range(indptr[u], indptr[u + 1]):
        if alive[indices[e]]:
            s += weights[e]
    return s


def peel(indptr, indices, weights, threshold):
    indptr = np.asarray(indptr).tolist()
    indices = np.asarray(indices).tolist()
    weights = np.asarray(weights, dtype=np.float64).tolist()
    n = len(indptr) - 1
    margin = 1e-9 * max(abs(threshold), 1.0)
    alive = [True] * n
    queued = [False] * n
    p = [0.0] * n
    queue = deque()
    for u in range(n):
        p[u] = _live_sum(indptr, indices, weights, alive, u)
        if p[u] < threshold:
            queued[u] = True
            queue.append(u)
    while queue:
        u = queue.popleft()
        alive[u] = False
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            if not alive[v] or queued[v]:
                continue
            p[v] -= weights[e]
            if p[v] < threshold + margin:
                p[v] = _live_sum(indptr, indices, weights, alive, v)
                if p[v] < threshold:
                    queued[v] = True
                    queue.append(v)
    return np.array(alive, dtype=bool)


def core_numbers(indptr, indices):
    indptr = np.asarray(indptr).tolist()
    indices = np.asarray(indices).tolist()
    n = len(indptr) - 1
    deg = [indptr[u + 1] - indptr[u] for u in range(n)]
    md = max(deg, default=0)
    bins = [0] * (md + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(md + 1):
        bins[d], start = start, start + bins[d]
    pos = [0] * n
    vert = [0] * n
    for u in range(n):
        pos[u] = bins[deg[u]]
        vert[pos[u]] = u
        bins[deg[u]] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0
    for i in range(n):
        v = vert[i]
        for e in range(indptr[v], indptr[v + 1]):
            u = indices[e]
            if deg[u] > deg[v]:
                d = deg[u]
                pu, pw = pos[u], bins[d]
                w = vert[pw]
                if u != w:
                    pos[u], vert[pu] = pw, w
                    pos[w], vert[pw] = pu, u
                bins[d] += 1
                deg[u] -= 1
    return np.array(deg, dtype=np.int64)
