"""Network operators: product, transposition, normalization, binarization, scaling, sums."""
from __future__ import annotations

import numpy as np

from ._backend import kernels
from .errors import IncompatibleNetworks
from .netcore import NodeVector, SparseNetwork, require_compatible

__all__ = [
    "multiply",
    "transpose",
    "row_normalize",
    "binarize",
    "diag_scale",
    "add_scaled",
    "drop_loops",
]


def multiply(a: SparseNetwork, b: SparseNetwork, *, backend=None) -> SparseNetwork:
    """Network product ``a * b``; ``c_ij = sum_k a_ik * b_kj`` over nonzero terms only.

    ``a.col_set`` and ``b.row_set`` must hold the same nodes. Entries that
    cancel to exactly zero are not stored. ``backend`` overrides the kernel
    module (used by benchmarks and backend-equivalence tests).
    """
    if not a.col_set.same_nodes(b.row_set):
        raise IncompatibleNetworks(
            f"cannot multiply: left columns are {a.col_set.mode.value}[{a.col_set.size}], "
            f"right rows are {b.row_set.mode.value}[{b.row_set.size}]"
        )
    k = backend or kernels
    indptr, indices, data = k.spgemm(
        a.indptr, a.indices, a.data, b.indptr, b.indices, b.data,
        a.row_set.size, b.col_set.size,
    )
    return SparseNetwork(a.row_set, b.col_set, indptr, indices, data, a.directed or b.directed)


def transpose(net: SparseNetwork) -> SparseNetwork:
    """Reverse every arc; row and column sets swap."""
    colptr, rows, data = net.csc
    return SparseNetwork(net.col_set, net.row_set, colptr, rows, data, net.directed)


def row_normalize(net: SparseNetwork, denominator: str = "share") -> SparseNetwork:
    """Divide each arc weight by the total weight leaving its source.

    With ``denominator="share"`` every row sums to 1 (up to rounding), and
    empty rows stay empty. ``"newman"`` divides binary rows by
    ``max(1, outdeg - 1)`` instead, the time-share variant for collaboration
    links; its rows do not sum to 1.
    """
    if net.n_arcs and net.data.min() < 0:
        raise ValueError("row normalization needs nonnegative weights")
    if denominator == "share":
        sums = np.bincount(net.row_ids, weights=net.data, minlength=net.row_set.size)
    elif denominator == "newman":
        sums = np.maximum(1.0, np.diff(net.indptr) - 1.0) * 1.0
    else:
        raise ValueError(f"unknown denominator {denominator!r}")
    divisor = np.where(sums > 0, sums, 1.0)
    return net.with_data(net.data / divisor[net.row_ids])


def binarize(net: SparseNetwork) -> SparseNetwork:
    """Same arcs, every weight set to 1."""
    return SparseNetwork(net.row_set, net.col_set, net.indptr, net.indices,
                         np.ones(net.n_arcs), net.directed)


def diag_scale(net: SparseNetwork, d: NodeVector | np.ndarray, side: str = "left") -> SparseNetwork:
    """``diag(d) * net`` (``left``) or ``net * diag(d)`` (``right``)."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    target = net.row_set if side == "left" else net.col_set
    if isinstance(d, NodeVector):
        require_compatible(d.over, target, "vector and network")
        values = d.values
    else:
        values = np.asarray(d, dtype=np.float64)
        if values.shape != (target.size,):
            raise IncompatibleNetworks(f"scaling vector has shape {values.shape}, need ({target.size},)")
    factor = values[net.row_ids] if side == "left" else values[net.indices]
    return net.with_data(net.data * factor)


def add_scaled(a: SparseNetwork, alpha: float, b: SparseNetwork, beta: float) -> SparseNetwork:
    """Arc-wise ``alpha * a + beta * b``; absent arcs count as 0."""
    require_compatible(a.row_set, b.row_set, "row sets")
    require_compatible(a.col_set, b.col_set, "column sets")
    rows = np.concatenate((a.row_ids, b.row_ids))
    cols = np.concatenate((a.indices, b.indices))
    vals = np.concatenate((alpha * a.data, beta * b.data))
    return SparseNetwork.from_coo(a.row_set, a.col_set, rows, cols, vals, a.directed or b.directed)


def drop_loops(net: SparseNetwork) -> SparseNetwork:
    """Remove arcs ``(i, i)`` from a one-mode network."""
    if not net.is_one_mode:
        return net
    keep = net.row_ids != net.indices
    if keep.all():
        return net
    return SparseNetwork.from_coo(net.row_set, net.col_set, net.row_ids[keep],
                                  net.indices[keep], net.data[keep], net.directed)
