"""Network data model: node sets, sparse weighted networks, partitions, vectors.

A :class:`SparseNetwork` is stored in compressed-row form (``indptr``,
``indices``, ``data``) with sorted, duplicate-free columns in every row and
no explicit zeros. Instances are immutable; every operation in the package
returns a new network.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import IncompatibleNetworks

__all__ = [
    "Mode",
    "NodeSet",
    "SparseNetwork",
    "Partition",
    "NodeVector",
    "new_two_mode",
    "new_one_mode",
    "degree_vector",
    "weight_sums",
    "require_compatible",
]

INDEX = np.int64


class Mode(str, enum.Enum):
    WORKS = "works"
    AUTHORS = "authors"
    KEYWORDS = "keywords"
    JOURNALS = "journals"
    GENERIC = "generic"


class NodeSet:
    """Ordered set of uniquely labelled nodes of one mode.

    Node ids are the positions ``0..len-1`` and never change.
    """

    __slots__ = ("mode", "labels", "_index")

    def __init__(self, labels: Iterable[str], mode: Mode | str = Mode.GENERIC):
        self.mode = Mode(mode)
        self.labels = tuple(str(x) for x in labels)
        self._index = {label: i for i, label in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            seen = set()
            for label in self.labels:
                if label in seen:
                    raise ValueError(f"duplicate node label {label!r}")
                seen.add(label)

    @classmethod
    def numbered(cls, n: int, mode: Mode | str = Mode.GENERIC, prefix: str = "") -> "NodeSet":
        return cls((f"{prefix}{i + 1}" for i in range(n)), mode)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node {label!r} in {self.mode.value} set") from None

    def indices(self, labels: Iterable[str]) -> np.ndarray:
        return np.fromiter((self.index(x) for x in labels), dtype=INDEX)

    def same_nodes(self, other: "NodeSet") -> bool:
        """Compatibility test used by multiplication: identical label order."""
        return self is other or self.labels == other.labels

    def subset(self, ids: Sequence[int]) -> "NodeSet":
        return NodeSet((self.labels[i] for i in ids), self.mode)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodeSet):
            return NotImplemented
        return self is other or (self.mode == other.mode and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.mode, self.labels))

    def __repr__(self) -> str:
        return f"NodeSet({self.mode.value}, size={self.size})"


def require_compatible(a: NodeSet, b: NodeSet, what: str = "node sets") -> None:
    if not a.same_nodes(b):
        raise IncompatibleNetworks(
            f"incompatible {what}: {a.mode.value}[{a.size}] vs {b.mode.value}[{b.size}]"
        )


def _freeze(*arrays: np.ndarray) -> None:
    for a in arrays:
        a.flags.writeable = False


class SparseNetwork:
    """Weighted network from ``row_set`` to ``col_set``.

    One-mode networks are the case where both sets hold the same nodes.
    """

    __slots__ = ("row_set", "col_set", "indptr", "indices", "data", "directed", "__dict__")

    def __init__(self, row_set, col_set, indptr, indices, data, directed=True):
        # Trusted constructor: arrays must already be canonical CSR.
        self.row_set = row_set
        self.col_set = col_set
        self.indptr = np.ascontiguousarray(indptr, dtype=INDEX)
        self.indices = np.ascontiguousarray(indices, dtype=INDEX)
        self.data = np.ascontiguousarray(data, dtype=np.float64)
        self.directed = bool(directed)
        _freeze(self.indptr, self.indices, self.data)

    # construction -------------------------------------------------------

    @classmethod
    def from_coo(cls, row_set, col_set, rows, cols, weights=None, directed=True):
        """Build from coordinate arrays; duplicates are summed, zeros dropped."""
        rows = np.asarray(rows, dtype=INDEX).ravel()
        cols = np.asarray(cols, dtype=INDEX).ravel()
        if weights is None:
            weights = np.ones(rows.shape[0], dtype=np.float64)
        else:
            weights = np.asarray(weights, dtype=np.float64).ravel()
        if not (rows.shape == cols.shape == weights.shape):
            raise ValueError("row, column and weight arrays differ in length")
        if not np.all(np.isfinite(weights)):
            raise ValueError("arc weights must be finite")
        n, m = row_set.size, col_set.size
        if rows.size and (rows.min() < 0 or rows.max() >= n):
            raise IndexError("source id out of range")
        if cols.size and (cols.min() < 0 or cols.max() >= m):
            raise IndexError("target id out of range")

        order = np.lexsort((cols, rows))
        rows, cols, weights = rows[order], cols[order], weights[order]
        if rows.size:
            starts = np.flatnonzero(
                np.concatenate(([True], (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])))
            )
            if starts.size != rows.size:
                weights = np.add.reduceat(weights, starts)
                rows, cols = rows[starts], cols[starts]
            keep = weights != 0.0
            if not keep.all():
                rows, cols, weights = rows[keep], cols[keep], weights[keep]
        indptr = np.zeros(n + 1, dtype=INDEX)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
        return cls(row_set, col_set, indptr, cols, weights, directed)

    @classmethod
    def empty(cls, row_set, col_set, directed=True):
        return cls(row_set, col_set, np.zeros(row_set.size + 1, INDEX),
                   np.zeros(0, INDEX), np.zeros(0), directed)

    @classmethod
    def from_dense(cls, matrix, row_set=None, col_set=None, directed=True):
        matrix = np.asarray(matrix, dtype=np.float64)
        if row_set is None:
            row_set = NodeSet.numbered(matrix.shape[0], prefix="r")
        if col_set is None:
            col_set = row_set if matrix.shape[0] == matrix.shape[1] else NodeSet.numbered(matrix.shape[1], prefix="c")
        rows, cols = np.nonzero(matrix)
        return cls.from_coo(row_set, col_set, rows, cols, matrix[rows, cols], directed)

    # shape / access -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.row_set.size, self.col_set.size

    @property
    def n_arcs(self) -> int:
        return int(self.indices.shape[0])

    @property
    def is_one_mode(self) -> bool:
        return self.row_set.same_nodes(self.col_set)

    @cached_property
    def row_ids(self) -> np.ndarray:
        """Source id of every stored arc, aligned with ``indices``/``data``."""
        r = np.repeat(np.arange(self.row_set.size, dtype=INDEX), np.diff(self.indptr))
        _freeze(r)
        return r

    @cached_property
    def csc(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """In-arc access: ``(colptr, source ids, weights)`` grouped by target, sources ascending."""
        order = np.argsort(self.indices, kind="stable")
        colptr = np.zeros(self.col_set.size + 1, dtype=INDEX)
        np.cumsum(np.bincount(self.indices, minlength=self.col_set.size), out=colptr[1:])
        rows = self.row_ids[order]
        data = self.data[order]
        _freeze(colptr, rows, data)
        return colptr, rows, data

    def successors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def predecessors(self, j: int) -> np.ndarray:
        colptr, rows, _ = self.csc
        return rows[colptr[j]:colptr[j + 1]]

    def out_arcs(self, i: int) -> Iterator[tuple[int, float]]:
        lo, hi = self.indptr[i], self.indptr[i + 1]
        return zip(self.indices[lo:hi].tolist(), self.data[lo:hi].tolist())

    def arcs(self) -> Iterator[tuple[int, int, float]]:
        return zip(self.row_ids.tolist(), self.indices.tolist(), self.data.tolist())

    def labelled_arcs(self) -> Iterator[tuple[str, str, float]]:
        rl, cl = self.row_set.labels, self.col_set.labels
        for i, j, w in self.arcs():
            yield rl[i], cl[j], w

    def weight(self, source: str, target: str) -> float:
        """Weight of arc ``source -> target`` by label; 0.0 when absent."""
        i = self.row_set.index(source)
        j = self.col_set.index(target)
        lo, hi = self.indptr[i], self.indptr[i + 1]
        pos = lo + np.searchsorted(self.indices[lo:hi], j)
        if pos < hi and self.indices[pos] == j:
            return float(self.data[pos])
        return 0.0

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.shape)
        out[self.row_ids, self.indices] = self.data
        return out

    def total_weight(self) -> float:
        return float(self.data.sum())

    # predicates ---------------------------------------------------------

    def is_binary(self) -> bool:
        return bool(np.all(self.data == 1.0))

    def is_symmetric(self, tol: float = 0.0) -> bool:
        if not self.is_one_mode:
            return False
        colptr, rows, data = self.csc
        # csc of a square net, read as CSR, is the transpose; both are canonical
        if not np.array_equal(colptr, self.indptr) or not np.array_equal(rows, self.indices):
            return False
        if tol == 0.0:
            return bool(np.array_equal(data, self.data))
        scale = np.maximum(np.abs(data), np.abs(self.data))
        return bool(np.all(np.abs(data - self.data) <= tol * np.maximum(scale, 1.0)))

    def with_data(self, data: np.ndarray) -> "SparseNetwork":
        """Same arc pattern with new weights; zeros are removed."""
        data = np.asarray(data, dtype=np.float64)
        if np.all(data != 0.0):
            return SparseNetwork(self.row_set, self.col_set, self.indptr, self.indices, data, self.directed)
        return SparseNetwork.from_coo(self.row_set, self.col_set, self.row_ids, self.indices, data, self.directed)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseNetwork):
            return NotImplemented
        return (
            self.row_set == other.row_set
            and self.col_set == other.col_set
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.data, other.data)
        )

    __hash__ = None

    def __repr__(self) -> str:
        kind = "one-mode" if self.is_one_mode else "two-mode"
        return (f"SparseNetwork({kind}, {self.row_set.mode.value}[{self.row_set.size}] x "
                f"{self.col_set.mode.value}[{self.col_set.size}], arcs={self.n_arcs})")


def new_two_mode(row_set: NodeSet, col_set: NodeSet, arcs, directed: bool = True) -> SparseNetwork:
    """Build a network from ``(source label, target label, weight)`` triples.

    Repeated pairs are merged by summing; pairs that sum to zero disappear.
    """
    rows, cols, weights = [], [], []
    for src, dst, w in arcs:
        if src not in row_set:
            raise KeyError(f"unknown source label {src!r}")
        if dst not in col_set:
            raise KeyError(f"unknown target label {dst!r}")
        w = float(w)
        if not np.isfinite(w):
            raise ValueError(f"non-finite weight on arc ({src!r}, {dst!r})")
        rows.append(row_set.index(src))
        cols.append(col_set.index(dst))
        weights.append(w)
    return SparseNetwork.from_coo(row_set, col_set, rows, cols, weights, directed)


def new_one_mode(nodes: NodeSet, arcs, directed: bool = True) -> SparseNetwork:
    return new_two_mode(nodes, nodes, arcs, directed)


@dataclass(frozen=True, eq=False)
class Partition:
    """Class id for every node of ``over``."""

    over: NodeSet
    classes: np.ndarray
    class_labels: dict | None = field(default=None)

    def __post_init__(self):
        classes = np.asarray(self.classes, dtype=INDEX).ravel()
        if classes.shape[0] != self.over.size:
            raise ValueError(f"partition has {classes.shape[0]} entries for {self.over.size} nodes")
        _freeze(classes)
        object.__setattr__(self, "classes", classes)

    def class_of(self, label: str) -> int:
        return int(self.classes[self.over.index(label)])

    def class_ids(self) -> list[int]:
        return sorted(set(self.classes.tolist()))

    def label_of_class(self, c: int) -> str:
        if self.class_labels and c in self.class_labels:
            return str(self.class_labels[c])
        return str(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.over.labels == other.over.labels and np.array_equal(self.classes, other.classes)


@dataclass(frozen=True, eq=False)
class NodeVector:
    """One finite real value per node of ``over``."""

    over: NodeSet
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64).ravel()
        if values.shape[0] != self.over.size:
            raise ValueError(f"vector has {values.shape[0]} entries for {self.over.size} nodes")
        if not np.all(np.isfinite(values)):
            raise ValueError("vector values must be finite")
        _freeze(values)
        object.__setattr__(self, "values", values)

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.over.index(label)])

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.over.labels, self.values.tolist()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodeVector):
            return NotImplemented
        return self.over.labels == other.over.labels and np.array_equal(self.values, other.values)


def degree_vector(net: SparseNetwork, direction: str = "out") -> NodeVector:
    """Number of arcs leaving (``out``) or entering (``in``) every node."""
    if direction == "out":
        return NodeVector(net.row_set, np.diff(net.indptr).astype(np.float64))
    if direction == "in":
        return NodeVector(net.col_set, np.bincount(net.indices, minlength=net.col_set.size).astype(np.float64))
    raise ValueError(f"direction must be 'out' or 'in', not {direction!r}")


def weight_sums(net: SparseNetwork, direction: str = "out") -> NodeVector:
    """Sum of arc weights leaving (``out``) or entering (``in``) every node."""
    if direction == "out":
        return NodeVector(net.row_set, np.bincount(net.row_ids, weights=net.data, minlength=net.row_set.size))
    if direction == "in":
        return NodeVector(net.col_set, np.bincount(net.indices, weights=net.data, minlength=net.col_set.size))
    raise ValueError(f"direction must be 'out' or 'in', not {direction!r}")
