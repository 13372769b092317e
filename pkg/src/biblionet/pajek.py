"""Pajek ``.net`` / ``.clu`` / ``.vec`` readers and writers.

Vertex ids in files are 1-based. A two-mode network is written with the
header ``*Vertices N N1`` where the first ``N1`` vertices are the row nodes.
Symmetric one-mode networks are written as ``*Edges``. Writers emit LF line
ends and quote every label; readers accept LF or CRLF.

Node-set modes and the directed flag are kept in a ``%`` comment line that
Pajek itself ignores.
"""
from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import PajekFormatError
from .netcore import Mode, NodeSet, NodeVector, Partition, SparseNetwork

__all__ = [
    "write_net", "read_net", "write_clu", "read_clu", "write_vec", "read_vec",
    "save", "load_net", "load_clu", "load_vec",
]

_META = re.compile(r"^%\s*biblionet\s+(.*)$")
_LABEL = re.compile(r'^\s*(\d+)\s*(?:"([^"]*)"|(\S+))?')


def format_weight(w: float) -> str:
    if w.is_integer() and abs(w) < 2.0 ** 53:
        return str(int(w))
    return repr(w)


def _check_label(label: str) -> str:
    if '"' in label or "\n" in label or "\r" in label:
        raise ValueError(f"label {label!r} cannot be written to a Pajek file")
    return label


def write_net(net: SparseNetwork) -> str:
    one_mode = net.is_one_mode
    n_rows = net.row_set.size
    out = [f"% biblionet rows={net.row_set.mode.value} cols={net.col_set.mode.value} "
           f"directed={int(net.directed)}"]
    labels = list(net.row_set.labels) if one_mode else [*net.row_set.labels, *net.col_set.labels]
    out.append(f"*Vertices {len(labels)}" if one_mode else f"*Vertices {len(labels)} {n_rows}")
    out.extend(f'{i} "{_check_label(label)}"' for i, label in enumerate(labels, 1))

    rows, cols, data = net.row_ids, net.indices, net.data
    if one_mode and net.is_symmetric():
        keep = rows <= cols
        rows, cols, data = rows[keep], cols[keep], data[keep]
        out.append("*Edges")
    else:
        out.append("*Arcs")
    shift = 1 if one_mode else n_rows + 1
    cache: dict[float, str] = {}
    for i, j, w in zip((rows + 1).tolist(), (cols + shift).tolist(), data.tolist()):
        s = cache.get(w)
        if s is None:
            s = cache[w] = format_weight(w)
        out.append(f"{i} {j} {s}")
    return "\n".join(out) + "\n"


def _parse_meta(line: str) -> dict:
    m = _META.match(line)
    if not m:
        return {}
    return dict(item.split("=", 1) for item in m.group(1).split() if "=" in item)


def _mode(name: str | None) -> Mode:
    try:
        return Mode(name) if name else Mode.GENERIC
    except ValueError:
        return Mode.GENERIC


def read_net(text: str) -> SparseNetwork:
    meta: dict = {}
    n = n1 = None
    labels: list[str | None] = []
    section = None
    saw_arcs = saw_edges = False
    rows: list[int] = []
    cols: list[int] = []
    weights: list[float] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("%"):
            meta.update(_parse_meta(line))
            continue
        if line.startswith("*"):
            head = line.split()
            kw = head[0].lower()
            if kw == "*vertices":
                if n is not None:
                    raise PajekFormatError("repeated *Vertices header", lineno)
                try:
                    n = int(head[1])
                    n1 = int(head[2]) if len(head) > 2 else None
                except (IndexError, ValueError):
                    raise PajekFormatError(f"bad *Vertices header {line!r}", lineno) from None
                if n < 0 or (n1 is not None and not 0 <= n1 <= n):
                    raise PajekFormatError(f"bad *Vertices sizes {line!r}", lineno)
                labels = [None] * n
                section = "vertices"
            elif kw in ("*arcs", "*edges"):
                if n is None:
                    raise PajekFormatError(f"{head[0]} before *Vertices", lineno)
                section = kw[1:]
                saw_arcs |= section == "arcs"
                saw_edges |= section == "edges"
            else:
                raise PajekFormatError(f"unsupported section {head[0]}", lineno)
            continue
        if section is None:
            raise PajekFormatError(f"data outside a section: {line!r}", lineno)

        if section == "vertices":
            m = _LABEL.match(line)
            if not m:
                raise PajekFormatError(f"bad vertex line {line!r}", lineno)
            vid = int(m.group(1))
            if not 1 <= vid <= n:
                raise PajekFormatError(f"vertex id {vid} out of range 1..{n}", lineno)
            label = m.group(2) if m.group(2) is not None else m.group(3)
            labels[vid - 1] = label if label is not None else str(vid)
            continue

        parts = line.split()
        try:
            src, dst = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) > 2 else 1.0
        except (IndexError, ValueError):
            raise PajekFormatError(f"bad {section[:-1]} line {line!r}", lineno) from None
        if not np.isfinite(w):
            raise PajekFormatError(f"non-finite weight {parts[2]!r}", lineno)
        if not (1 <= src <= n and 1 <= dst <= n):
            raise PajekFormatError(f"vertex id out of range 1..{n} in {line!r}", lineno)
        src, dst = src - 1, dst - 1
        if n1 is not None:
            if section == "edges" and src >= n1 > dst:
                src, dst = dst, src
            if not (src < n1 <= dst):
                raise PajekFormatError(f"{line!r} does not link the two modes", lineno)
            dst -= n1
        rows.append(src)
        cols.append(dst)
        weights.append(w)
        if section == "edges" and n1 is None and src != dst:
            rows.append(dst)
            cols.append(src)
            weights.append(w)

    if n is None:
        raise PajekFormatError("missing *Vertices header")
    names = [label if label is not None else str(i) for i, label in enumerate(labels, 1)]
    try:
        if n1 is None:
            rs = cs = NodeSet(names, _mode(meta.get("rows")))
        else:
            rs = NodeSet(names[:n1], _mode(meta.get("rows")))
            cs = NodeSet(names[n1:], _mode(meta.get("cols")))
    except ValueError as exc:
        raise PajekFormatError(str(exc)) from None
    if "directed" in meta:
        directed = meta["directed"] == "1"
    else:
        directed = saw_arcs or not saw_edges
    return SparseNetwork.from_coo(rs, cs, rows, cols, weights, directed)


def _read_header(lines: list[str]) -> tuple[int, list[tuple[int, str]]]:
    body = [(no, ln.strip()) for no, ln in enumerate(lines, 1)
            if ln.strip() and not ln.strip().startswith("%")]
    if not body or not body[0][1].lower().startswith("*vertices"):
        raise PajekFormatError("missing *Vertices header", body[0][0] if body else None)
    no, head = body[0]
    try:
        n = int(head.split()[1])
    except (IndexError, ValueError):
        raise PajekFormatError(f"bad *Vertices header {head!r}", no) from None
    values = body[1:]
    if len(values) != n:
        raise PajekFormatError(f"header announces {n} values, found {len(values)}", no)
    return n, values


def write_clu(partition: Partition) -> str:
    return "\n".join([f"*Vertices {partition.over.size}", *map(str, partition.classes.tolist())]) + "\n"


def read_clu(text: str, over: NodeSet | None = None) -> Partition:
    n, values = _read_header(text.splitlines())
    classes = []
    for no, v in values:
        try:
            classes.append(int(v.split()[0]))
        except ValueError:
            raise PajekFormatError(f"bad class id {v!r}", no) from None
    if over is None:
        over = NodeSet.numbered(n)
    elif over.size != n:
        raise PajekFormatError(f"partition has {n} entries, node set has {over.size}")
    return Partition(over, classes)


def write_vec(vector: NodeVector) -> str:
    return "\n".join([f"*Vertices {vector.over.size}", *map(repr, vector.values.tolist())]) + "\n"


def read_vec(text: str, over: NodeSet | None = None) -> NodeVector:
    n, values = _read_header(text.splitlines())
    vals = []
    for no, v in values:
        try:
            x = float(v.split()[0])
        except ValueError:
            raise PajekFormatError(f"bad value {v!r}", no) from None
        if not np.isfinite(x):
            raise PajekFormatError(f"non-finite value {v!r}", no)
        vals.append(x)
    if over is None:
        over = NodeSet.numbered(n)
    elif over.size != n:
        raise PajekFormatError(f"vector has {n} entries, node set has {over.size}")
    return NodeVector(over, vals)


def save(obj, path) -> None:
    """Write a network, partition or vector; format chosen by type."""
    if isinstance(obj, SparseNetwork):
        text = write_net(obj)
    elif isinstance(obj, Partition):
        text = write_clu(obj)
    elif isinstance(obj, NodeVector):
        text = write_vec(obj)
    else:
        raise TypeError(f"cannot save {type(obj).__name__}")
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def load_net(path) -> SparseNetwork:
    return read_net(_read(path))


def load_clu(path, over: NodeSet | None = None) -> Partition:
    return read_clu(_read(path), over)


def load_vec(path, over: NodeSet | None = None) -> NodeVector:
    return read_vec(_read(path), over)
