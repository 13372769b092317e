"""Sparseness analysis of a planned product and an explosion guard around it.

Every intermediate node k contributes a complete bipartite block between its
predecessors in A and its successors in B, i.e. ``dA(k) * dB(k)``
accumulations. Their sum is the exact work of the product and an upper bound
on its number of arcs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import multiply
from .errors import ExplosionRefused, IncompatibleNetworks
from .netcore import SparseNetwork

__all__ = ["SparsityReport", "analyze_product", "guarded_multiply", "drop_high_degree", "smallest_d_star"]


def smallest_d_star(d_max: np.ndarray) -> int:
    """Smallest d >= 1 with at most d nodes of ``d_max >= d``."""
    d_max = np.sort(np.asarray(d_max, dtype=np.int64))
    top = int(d_max[-1]) if d_max.size else 0
    ds = np.arange(1, top + 2)
    counts = d_max.size - np.searchsorted(d_max, ds, side="left")
    return int(ds[np.argmax(counts <= ds)])


@dataclass(frozen=True)
class SparsityReport:
    labels: tuple[str, ...]
    d_a: np.ndarray
    d_b: np.ndarray
    n_rows: int
    n_cols: int
    arcs_a: int
    arcs_b: int

    @property
    def d_min(self) -> np.ndarray:
        return np.minimum(self.d_a, self.d_b)

    @property
    def d_max(self) -> np.ndarray:
        return np.maximum(self.d_a, self.d_b)

    @property
    def work(self) -> np.ndarray:
        return self.d_a * self.d_b

    @property
    def exact_work(self) -> int:
        return int(self.work.sum())

    @property
    def delta_min(self) -> int:
        return int(self.d_min.max()) if self.d_a.size else 0

    def k_size(self, d: int) -> int:
        """Number of intermediate nodes with ``d_max >= d``."""
        return int(np.count_nonzero(self.d_max >= d))

    @property
    def d_star(self) -> int:
        return smallest_d_star(self.d_max)

    @property
    def k_star_size(self) -> int:
        return self.k_size(self.d_star)

    @property
    def split_bound(self) -> int:
        """Work bound with K split at d*: nodes in K* charged delta_min per d_max, the rest d* per d_min."""
        in_star = self.d_max >= self.d_star
        return int(self.delta_min * self.d_max[in_star].sum() + self.d_star * self.d_min[~in_star].sum())

    @property
    def fill_bound(self) -> int:
        return self.d_star * (self.delta_min * max(self.n_rows, self.n_cols) + min(self.arcs_a, self.arcs_b))

    def worst(self, n: int | None = 10) -> list[tuple[str, int]]:
        """Intermediate nodes with the largest work, ties by label."""
        work = self.work
        ids = [i for i in np.flatnonzero(work).tolist()]
        ids.sort(key=lambda i: (-int(work[i]), self.labels[i]))
        if n is not None:
            ids = ids[:n]
        return [(self.labels[i], int(work[i])) for i in ids]

    def to_text(self, n_worst: int = 10) -> str:
        lines = ["# node\tdA\tdB"]
        for label, a, b in zip(self.labels, self.d_a.tolist(), self.d_b.tolist()):
            lines.append(f"{label}\t{a}\t{b}")
        lines += [
            "",
            "*Summary",
            f"deltaMin\t{self.delta_min}",
            f"dStar\t{self.d_star}",
            f"kStarSize\t{self.k_star_size}",
            f"exactWork\t{self.exact_work}",
            f"fillBound\t{self.fill_bound}",
            "",
            "*Worst",
        ]
        lines += [f"{label}\t{work}" for label, work in self.worst(n_worst)]
        return "\n".join(lines) + "\n"


def analyze_product(a: SparseNetwork, b: SparseNetwork) -> SparsityReport:
    """Degree profile of the shared node set of ``a * b`` and the derived bounds."""
    if not a.col_set.same_nodes(b.row_set):
        raise IncompatibleNetworks(
            f"cannot analyze product: {a.col_set.mode.value}[{a.col_set.size}] vs "
            f"{b.row_set.mode.value}[{b.row_set.size}]"
        )
    d_a = np.bincount(a.indices, minlength=a.col_set.size).astype(np.int64)
    d_b = np.diff(b.indptr).astype(np.int64)
    return SparsityReport(a.col_set.labels, d_a, d_b, a.row_set.size, b.col_set.size, a.n_arcs, b.n_arcs)


def guarded_multiply(a: SparseNetwork, b: SparseNetwork, max_work: float, n_worst: int = 10) -> SparseNetwork:
    """``multiply(a, b)`` unless it needs more than ``max_work`` accumulations.

    Raises :class:`ExplosionRefused` with the report and the worst
    intermediate nodes, so the caller can drop them and retry.
    """
    report = analyze_product(a, b)
    if report.exact_work > max_work:
        raise ExplosionRefused(report, report.worst(n_worst), max_work)
    return multiply(a, b)


def drop_high_degree(net: SparseNetwork, direction: str = "out", threshold: int = 0):
    """Remove all arcs of nodes whose degree exceeds ``threshold``.

    Node sets are kept intact so the result stays compatible with the rest
    of a collection. Returns ``(network, removed labels)``.
    """
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    if direction == "out":
        deg = np.diff(net.indptr)
        removed = np.flatnonzero(deg > threshold)
        keep = deg[net.row_ids] <= threshold
        labels = [net.row_set.labels[i] for i in removed.tolist()]
    elif direction == "in":
        deg = np.bincount(net.indices, minlength=net.col_set.size)
        removed = np.flatnonzero(deg > threshold)
        keep = deg[net.indices] <= threshold
        labels = [net.col_set.labels[i] for i in removed.tolist()]
    else:
        raise ValueError(f"direction must be 'out' or 'in', not {direction!r}")
    if keep.all():
        return net, labels
    out = SparseNetwork.from_coo(net.row_set, net.col_set, net.row_ids[keep], net.indices[keep],
                                 net.data[keep], net.directed)
    return out, labels
