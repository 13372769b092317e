"""Data tables to two-mode networks; extraction and shrinking by partition."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .netcore import Mode, NodeSet, Partition, SparseNetwork, require_compatible

__all__ = ["DataTable", "read_table", "table_to_networks", "extract", "shrink"]


@dataclass
class DataTable:
    """Records keyed by ``key_column``.

    ``multi`` names set-valued properties (cells hold values joined by
    ``sep``); ``single`` names scalar properties.
    """

    key_column: str
    rows: list[dict[str, str]]
    multi: list[str] = field(default_factory=list)
    single: list[str] = field(default_factory=list)
    sep: str = ";"

    def __post_init__(self):
        seen = set()
        for n, row in enumerate(self.rows, 1):
            if self.key_column not in row:
                raise KeyError(f"record {n} has no key column {self.key_column!r}")
            key = row[self.key_column].strip()
            if key in seen:
                raise ValueError(f"duplicate key {key!r}")
            seen.add(key)

    @property
    def keys(self) -> list[str]:
        return [row[self.key_column].strip() for row in self.rows]

    def values(self, prop: str) -> list[list[str]]:
        """Parsed, trimmed, de-duplicated values of ``prop`` per record."""
        out = []
        for row in self.rows:
            cell = row.get(prop) or ""
            vals = [v.strip() for v in cell.split(self.sep)] if self.sep else [cell.strip()]
            out.append(list(dict.fromkeys(v for v in vals if v)))
        return out


def read_table(source, key_column: str, multi=(), single=(), sep: str = ";", delimiter: str = ",") -> DataTable:
    """Read a CSV table from a path or a text stream."""
    if isinstance(source, (str, bytes)) or hasattr(source, "__fspath__"):
        with open(source, newline="", encoding="utf-8") as fh:
            return read_table(fh, key_column, multi, single, sep, delimiter)
    reader = csv.DictReader(source, delimiter=delimiter)
    header = reader.fieldnames or []
    for name in [key_column, *multi, *single]:
        if name not in header:
            raise KeyError(f"column {name!r} not in table (have {', '.join(header)})")
    rows = [dict(r) for r in reader]
    return DataTable(key_column, rows, list(multi), list(single), sep)


def _class_codes(values: list[str]):
    """Integer class ids: the values themselves when all are integers, else first-seen order."""
    present = [v for v in values if v != ""]
    try:
        ints = [int(v) for v in present]
    except ValueError:
        ints = None
    if ints is not None:
        missing = min(ints, default=1) - 1 if "" in values else None
        codes = [int(v) if v != "" else missing for v in values]
        labels = {missing: ""} if missing is not None else None
        return codes, labels
    order = {}
    for v in values:
        order.setdefault(v, len(order) + 1)
    return [order[v] for v in values], {c: v for v, c in order.items()}


def table_to_networks(table: DataTable, props=None, *, modes=None, citations: str | None = None):
    """One binary key x value network per multi-valued property, one partition per single-valued one.

    Value node sets list values in first-seen order. All networks share the
    key node set. ``citations`` names a multi-valued property whose values are
    keys: it becomes the one-mode network ``Ci`` over the keys, and cited
    values missing from the table are appended as keys without properties.
    Returns ``(networks, partitions)`` dicts keyed by property name, plus
    ``"Ci"`` and a ``"dc"`` partition (1 described, 2 cited only) when
    ``citations`` is given.
    """
    modes = modes or {}
    if props is None:
        props = [*table.multi, *table.single]
    known = set(table.multi) | set(table.single)
    for p in props:
        if p not in known:
            raise KeyError(f"unknown property {p!r}")
    if citations is not None and citations not in table.multi:
        raise KeyError(f"citation property {citations!r} must be multi-valued")

    keys = table.keys
    n_described = len(keys)
    cited = table.values(citations) if citations is not None else []
    if citations is not None:
        index = {k: i for i, k in enumerate(keys)}
        for refs in cited:
            for r in refs:
                if r not in index:
                    index[r] = len(keys)
                    keys.append(r)
    works = NodeSet(keys, Mode.WORKS)

    networks, partitions = {}, {}
    for p in props:
        if p == citations:
            continue
        vals = table.values(p)
        if p in table.multi:
            value_order = {}
            rows, cols = [], []
            for i, vs in enumerate(vals):
                for v in vs:
                    rows.append(i)
                    cols.append(value_order.setdefault(v, len(value_order)))
            value_set = NodeSet(value_order, modes.get(p, Mode.GENERIC))
            networks[p] = SparseNetwork.from_coo(works, value_set, rows, cols)
        else:
            flat = []
            for n, vs in enumerate(vals):
                if len(vs) > 1:
                    raise ValueError(f"key {keys[n]!r}: single-valued property {p!r} has {len(vs)} values")
                flat.append(vs[0] if vs else "")
            flat += [""] * (works.size - n_described)
            codes, labels = _class_codes(flat)
            partitions[p] = Partition(works, codes, labels)
    if citations is not None:
        rows, cols = [], []
        for i, refs in enumerate(cited):
            for r in refs:
                rows.append(i)
                cols.append(works.index(r))
        networks["Ci"] = SparseNetwork.from_coo(works, works, rows, cols, np.ones(len(rows)))
        dc = np.full(works.size, 2)
        dc[:n_described] = 1
        partitions["dc"] = Partition(works, dc, {1: "described", 2: "cited only"})
    return networks, partitions


def _class_mask(partition: Partition, classes) -> np.ndarray:
    classes = [int(c) for c in classes]
    present = set(partition.classes.tolist())
    unknown = [c for c in classes if c not in present]
    if unknown:
        raise KeyError(f"unknown class(es) {unknown}")
    return np.isin(partition.classes, classes)


def extract(net: SparseNetwork, partition: Partition, classes) -> SparseNetwork:
    """Subnetwork induced by nodes whose class is in ``classes``.

    The partition is over the row set; for one-mode networks it restricts
    both ends.
    """
    require_compatible(partition.over, net.row_set, "partition and network rows")
    keep = _class_mask(partition, classes)
    row_ids = np.flatnonzero(keep)
    new_rows = net.row_set.subset(row_ids.tolist())
    rmap = np.full(net.row_set.size, -1, dtype=np.int64)
    rmap[row_ids] = np.arange(row_ids.size)
    arc_keep = keep[net.row_ids]
    if net.is_one_mode:
        arc_keep &= keep[net.indices]
        new_cols, cols = new_rows, rmap[net.indices[arc_keep]]
    else:
        new_cols, cols = net.col_set, net.indices[arc_keep]
    return SparseNetwork.from_coo(new_rows, new_cols, rmap[net.row_ids[arc_keep]], cols,
                                  net.data[arc_keep], net.directed)


def shrink(net: SparseNetwork, partition: Partition, side: str = "rows") -> SparseNetwork:
    """Merge the nodes of every class into one node; weights between classes add up.

    For one-mode networks both ends are shrunk. For two-mode networks
    ``side`` picks the shrunk set. New nodes are ordered by class id and
    labelled with the class label (or the id).
    """
    if net.is_one_mode:
        sides = ("rows", "cols")
    elif side in ("rows", "cols"):
        sides = (side,)
    else:
        raise ValueError(f"side must be 'rows' or 'cols', not {side!r}")
    target = net.row_set if sides[0] == "rows" else net.col_set
    require_compatible(partition.over, target, "partition and network")
    ids = partition.class_ids()
    code = np.searchsorted(np.array(ids, dtype=np.int64), partition.classes)
    mode = target.mode
    merged = NodeSet((partition.label_of_class(c) for c in ids), mode)
    rows, cols = net.row_ids, net.indices
    row_set, col_set = net.row_set, net.col_set
    if "rows" in sides:
        rows, row_set = code[rows], merged
    if "cols" in sides:
        cols, col_set = code[cols], merged
    return SparseNetwork.from_coo(row_set, col_set, rows, cols, net.data, net.directed)
