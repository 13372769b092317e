"""Ranked tables: most collaborators, outdegree distribution, best authors by self-contribution."""
from __future__ import annotations

import csv
import io
from collections import Counter

import numpy as np

from .derived import author_indices, diagonal
from .netcore import SparseNetwork, require_compatible

__all__ = ["Table", "collaborators_table", "outdegree_distribution", "best_authors_table"]


class Table:
    def __init__(self, columns, rows):
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]

    def _cells(self):
        def fmt(v):
            if isinstance(v, float):
                return f"{v:.3f}" if abs(v) < 1 else f"{v:.2f}"
            return str(v)
        return [[fmt(v) for v in r] for r in self.rows]

    def to_text(self) -> str:
        cells = self._cells()
        widths = [max([len(c)] + [len(r[k]) for r in cells]) for k, c in enumerate(self.columns)]
        numeric = [all(isinstance(r[k], (int, float)) for r in self.rows) for k in range(len(self.columns))]

        def line(vals):
            return "  ".join(v.rjust(w) if num else v.ljust(w)
                             for v, w, num in zip(vals, widths, numeric)).rstrip()

        out = [line(self.columns), line(["-" * w for w in widths])]
        out += [line(r) for r in cells]
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([repr(v) if isinstance(v, float) else v for v in r])
        return buf.getvalue()


def _ranked(labels, scores, top):
    order = sorted(range(len(labels)), key=lambda i: (-scores[i], labels[i]))
    return order if top is None else order[:top]


def collaborators_table(co: SparseNetwork, top: int | None = 20) -> Table:
    """Authors with the most distinct collaborators (neighbours in Co other than themselves)."""
    off = co.row_ids != co.indices
    counts = np.bincount(co.row_ids[off], minlength=co.row_set.size).tolist()
    labels = co.row_set.labels
    rows = [(rank, labels[i], counts[i]) for rank, i in enumerate(_ranked(labels, counts, top), 1)]
    return Table(["i", "author", "collaborators"], rows)


def outdegree_distribution(wa: SparseNetwork, include_zero: bool = False) -> Table:
    """Number of works per author count."""
    freq = Counter(np.diff(wa.indptr).tolist())
    if not include_zero:
        freq.pop(0, None)
    return Table(["outdeg", "frequency"], sorted(freq.items()))


def best_authors_table(cn: SparseNetwork, wa: SparseNetwork, top: int | None = 50) -> Table:
    """Authors ranked by self-contribution ``cn_ii`` with work count and collaborativeness."""
    require_compatible(cn.row_set, wa.col_set, "Cn and WA authors")
    cn_ii = diagonal(cn).tolist()
    total = np.bincount(wa.indices, minlength=wa.col_set.size).tolist()
    k = author_indices(cn, wa).collaborativeness.values.tolist()
    labels = cn.row_set.labels
    rows = [(rank, labels[i], cn_ii[i], total[i], k[i])
            for rank, i in enumerate(_ranked(labels, cn_ii, top), 1)]
    return Table(["i", "author", "cn_ii", "total", "K_i"], rows)
