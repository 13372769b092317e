"""k-cores and p_S-cores of one-mode networks.

The network is read as an undirected simple graph: an edge {u, v} exists if
either arc does, with weight ``max(w_uv, w_vu)``. Loops are ignored, so a
node never supports itself.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import IncompatibleNetworks
from .netcore import NodeSet, NodeVector, Partition, SparseNetwork

__all__ = ["CoreResult", "undirected", "k_core", "ps_core", "core_decomposition", "ps_core_numbers"]


@dataclass(frozen=True, eq=False)
class CoreResult:
    level: float
    over: NodeSet
    mask: np.ndarray
    induced_arcs: int

    @property
    def members(self) -> frozenset[str]:
        return frozenset(self.over.labels[i] for i in np.flatnonzero(self.mask).tolist())

    @property
    def size(self) -> int:
        return int(np.count_nonzero(self.mask))

    def to_partition(self) -> Partition:
        """1 for members, 0 for the rest."""
        return Partition(self.over, self.mask.astype(np.int64))


def undirected(net: SparseNetwork, weighted: bool = True) -> SparseNetwork:
    """Symmetric loop-free version of a one-mode network.

    Edge weights are ``max(w_uv, w_vu)``, or 1 when ``weighted`` is false.
    """
    if not net.is_one_mode:
        raise IncompatibleNetworks("cores need a one-mode network")
    off = net.row_ids != net.indices
    r, c = net.row_ids[off], net.indices[off]
    w = net.data[off] if weighted else np.ones(r.shape[0])
    rows = np.concatenate((r, c))
    cols = np.concatenate((c, r))
    vals = np.concatenate((w, w))
    order = np.lexsort((cols, rows))
    rows, cols, vals = rows[order], cols[order], vals[order]
    if rows.size:
        starts = np.flatnonzero(np.concatenate(([True], (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1]))))
        vals = np.maximum.reduceat(vals, starts)
        rows, cols = rows[starts], cols[starts]
    return SparseNetwork.from_coo(net.row_set, net.col_set, rows, cols, vals, directed=False)


def _result(net: SparseNetwork, level: float, mask: np.ndarray) -> CoreResult:
    inside = mask[net.row_ids] & mask[net.indices] & (net.row_ids != net.indices)
    return CoreResult(level, net.row_set, mask, int(np.count_nonzero(inside)))


def k_core(net: SparseNetwork, k: int) -> CoreResult:
    """Largest node set in which every node has at least ``k`` neighbours inside the set."""
    if k < 0:
        raise ValueError("core order k must be nonnegative")
    g = undirected(net, weighted=False)
    mask = kernels.peel(g.indptr, g.indices, g.data, float(k))
    return _result(net, k, mask)


def ps_core(net: SparseNetwork, t: float) -> CoreResult:
    """Largest node set in which every node's total edge weight into the set is at least ``t``."""
    if net.n_arcs and net.data.min() < 0:
        raise ValueError("p_S-cores need nonnegative weights")
    if not math.isfinite(t):
        raise ValueError("core level must be finite")
    g = undirected(net, weighted=True)
    mask = kernels.peel(g.indptr, g.indices, g.data, float(t))
    return _result(net, t, mask)


def core_decomposition(net: SparseNetwork) -> NodeVector:
    """Core number of every node: the largest k whose k-core contains it."""
    g = undirected(net, weighted=False)
    return NodeVector(net.row_set, kernels.core_numbers(g.indptr, g.indices).astype(np.float64))


def ps_core_numbers(net: SparseNetwork) -> NodeVector:
    """p_S core value of every node: the largest t whose p_S-core contains it.

    Repeatedly removes a node of minimal remaining weight sum (heap keyed by
    the current sum); ``ps_core(net, t)`` is exactly the set of nodes with
    value >= t.
    """
    if net.n_arcs and net.data.min() < 0:
        raise ValueError("p_S-cores need nonnegative weights")
    g = undirected(net, weighted=True)
    indptr = g.indptr.tolist()
    indices = g.indices.tolist()
    weights = g.data.tolist()
    n = g.row_set.size
    alive = [True] * n

    def live_sum(u):
        return sum(weights[e] for e in range(indptr[u], indptr[u + 1]) if alive[indices[e]])

    p = [live_sum(u) for u in range(n)]
    heap = [(p[u], u) for u in range(n)]
    heapq.heapify(heap)
    value = [0.0] * n
    level = -math.inf
    while heap:
        key, u = heapq.heappop(heap)
        if not alive[u] or key != p[u]:
            continue
        exact = live_sum(u)
        if exact != key:
            p[u] = exact
            heapq.heappush(heap, (exact, u))
            continue
        level = max(level, exact)
        value[u] = level
        alive[u] = False
        for e in range(indptr[u], indptr[u + 1]):
            v = indices[e]
            if alive[v]:
                p[v] -= weights[e]
                heapq.heappush(heap, (p[v], v))
    return NodeVector(net.row_set, value)
