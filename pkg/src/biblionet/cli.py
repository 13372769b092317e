"""Command-line driver.

Exit codes: 0 success, 1 usage error, 2 input/format error, 3 product
refused by the work guard. Errors are reported as one line on stderr:
``biblionet: error: <kind>: <message>``.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra, cores, derived, pajek, reports
from .errors import BiblioError, ExplosionRefused
from .ingest import extract, read_table, shrink, table_to_networks
from .netcore import Mode, Partition
from .sparsity import analyze_product, drop_high_degree, guarded_multiply

EXIT_USAGE, EXIT_FORMAT, EXIT_GUARD = 1, 2, 3
DEFAULT_GUARD = 10 ** 8

COLLECTION_FILES = {"WA": "WA.net", "WK": "WK.net", "WC": "WC.net", "WJ": "WJ.net", "Ci": "Ci.net"}
DERIVE_KINDS = ("co", "cn", "ct", "bico", "bicon", "coci", "cocin", "aci", "aco", "ak", "qua", "cc", "ca")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def load_collection(directory) -> derived.BiblioCollection:
    """Read ``WA.net``, ``Ci.net``, ``WK.net``, ... and ``*.clu`` from a collection directory."""
    directory = Path(directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"collection directory {directory} not found")
    nets = {name: pajek.load_net(directory / fname)
            for name, fname in COLLECTION_FILES.items() if (directory / fname).exists()}
    if not nets:
        raise FileNotFoundError(f"no collection networks in {directory}")
    works = next(iter(nets.values())).row_set
    shared = {}
    for name, net in nets.items():
        # reuse one works NodeSet object across the collection
        cols = works if name == "Ci" and net.col_set.same_nodes(works) else net.col_set
        if net.row_set.same_nodes(works):
            net = type(net)(works, cols, net.indptr, net.indices, net.data, net.directed)
        shared[name] = net
    parts = {p.stem: pajek.load_clu(p, works) for p in sorted(directory.glob("*.clu"))}
    return derived.BiblioCollection(works, partitions=parts, **shared)


def _need(coll, *names):
    for name in names:
        if getattr(coll, name) is None:
            raise FileNotFoundError(f"collection lacks {COLLECTION_FILES[name]}")
    return [getattr(coll, n) for n in names]


def _derive(kind, coll, guard):
    """Return (network, {suffix: NodeVector})."""
    g = {"max_work": guard}
    if kind in ("co", "cn", "ct"):
        (wa,) = _need(coll, "WA")
        if kind == "co":
            return derived.collab_co(wa, **g), {}
        if kind == "cn":
            cn = derived.collab_cn(wa, **g)
            idx = derived.author_indices(cn, wa)
            return cn, {"S": idx.self_sufficiency, "K": idx.collaborativeness}
        ct = derived.collab_ct(wa, **g)
        return ct, {"ac": derived.author_indices(derived.collab_cn(wa, **g), wa).contribution}
    if kind in ("bico", "bicon", "coci", "cocin"):
        (ci,) = _need(coll, "Ci")
        fn = {"bico": derived.bi_coupling, "bicon": derived.bi_coupling_norm,
              "coci": derived.co_citation, "cocin": derived.co_citation_norm}[kind]
        return fn(ci, **g), {}
    if kind == "ak":
        wa, wk = _need(coll, "WA", "WK")
        return derived.author_keywords(wa, wk, **g), {}
    wa, ci = _need(coll, "WA", "Ci")
    if kind == "aci":
        return derived.author_citation(wa, ci, **g), {}
    if kind == "aco":
        return derived.author_co_citation(derived.author_citation(wa, ci, **g), **g), {}
    if kind in ("qua", "cc"):
        return derived.cited_coauthorship(wa, ci, normalized=kind == "cc", **g), {}
    return derived.authors_citations(wa, ci, **g), {}


def _write_text(text, path):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8", newline="\n")


def _parse_classes(tokens, present):
    """Explicit ids are kept as given; a range ``LO..HI`` selects the present classes inside it."""
    out = []
    for tok in tokens:
        for part in tok.split(","):
            if ".." in part:
                lo, hi = (int(x) for x in part.split("..", 1))
                out.extend(c for c in present if lo <= c <= hi)
            elif part:
                out.append(int(part))
    return out


# commands --------------------------------------------------------------------

def cmd_ingest(args):
    multi = {}
    for col, name, mode in ((args.authors, "WA", Mode.AUTHORS), (args.keywords, "WK", Mode.KEYWORDS),
                            (args.journals, "WJ", Mode.JOURNALS), (args.classes, "WC", Mode.GENERIC)):
        if col:
            multi[col] = (name, mode)
    for col in args.multi:
        multi.setdefault(col, (col, Mode.GENERIC))
    single = {args.year: "year"} if args.year else {}
    for col in args.single:
        single.setdefault(col, col)
    multi_cols = list(multi) + ([args.citations] if args.citations else [])
    table = read_table(args.table, args.key, multi_cols, list(single), sep=args.sep, delimiter=args.delimiter)
    nets, parts = table_to_networks(table, [*multi, *single],
                                    modes={c: m for c, (_, m) in multi.items()}, citations=args.citations)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for col, net in nets.items():
        name = "Ci" if col == "Ci" else multi[col][0]
        pajek.save(net, out / f"{name}.net")
    for col, part in parts.items():
        pajek.save(part, out / f"{single.get(col, col)}.clu")


def _operand(path, transpose, normalize):
    net = pajek.load_net(path)
    if transpose:
        net = algebra.transpose(net)
    if normalize:
        net = algebra.row_normalize(net)
    return net


def _refusal(exc, report_path):
    _write_text(exc.report.to_text(), report_path)
    return exc


def cmd_multiply(args):
    a = _operand(args.a, args.transpose_a, args.normalize_left)
    b = _operand(args.b, args.transpose_b, args.normalize_right)
    guard = float("inf") if args.guard is None else args.guard
    try:
        c = guarded_multiply(a, b, guard)
    except ExplosionRefused as exc:
        raise _refusal(exc, args.report or f"{args.output}.sparsity.txt")
    pajek.save(c, args.output)


def cmd_derive(args):
    coll = load_collection(args.collection)
    out = Path(args.output) if args.output else Path(args.collection) / f"{args.kind}.net"
    try:
        net, vectors = _derive(args.kind, coll, args.guard)
    except ExplosionRefused as exc:
        raise _refusal(exc, args.report or f"{out}.sparsity.txt")
    if args.drop_loops:
        net = algebra.drop_loops(net)
    pajek.save(net, out)
    for suffix, vec in vectors.items():
        pajek.save(vec, out.with_name(f"{out.stem}_{suffix}.vec"))


def cmd_core(args):
    net = pajek.load_net(args.net)
    if args.numbers:
        vec = cores.core_decomposition(net) if args.kind == "k" else cores.ps_core_numbers(net)
        if args.kind == "k":
            pajek.save(Partition(vec.over, vec.values.astype(int)), args.output)
        else:
            pajek.save(vec, args.output)
        return
    if args.level is None:
        raise UsageError("core needs --level or --numbers")
    if args.kind == "k":
        if args.level != int(args.level):
            raise UsageError("k-core level must be an integer")
        result = cores.k_core(net, int(args.level))
    else:
        result = cores.ps_core(net, args.level)
    pajek.save(result.to_partition(), args.output)


def cmd_sparsity(args):
    a = _operand(args.a, args.transpose_a, False)
    b = _operand(args.b, args.transpose_b, False)
    _write_text(analyze_product(a, b).to_text(), args.output)


def cmd_extract(args):
    net = pajek.load_net(args.net)
    part = pajek.load_clu(args.clu, net.row_set)
    pajek.save(extract(net, part, _parse_classes(args.classes, part.class_ids())), args.output)


def cmd_shrink(args):
    net = pajek.load_net(args.net)
    over = net.col_set if args.side == "cols" and not net.is_one_mode else net.row_set
    part = pajek.load_clu(args.clu, over)
    pajek.save(shrink(net, part, args.side), args.output)


def cmd_report(args):
    nets = [pajek.load_net(p) for p in args.inputs]
    if args.kind == "collaborators":
        table = reports.collaborators_table(nets[0], args.top)
    elif args.kind == "outdeg":
        table = reports.outdegree_distribution(nets[0])
    else:
        if len(nets) != 2:
            raise UsageError("report best needs CN.net and WA.net")
        table = reports.best_authors_table(nets[0], nets[1], args.top)
    _write_text(table.to_csv() if args.csv else table.to_text(), args.output)


def cmd_droploops(args):
    pajek.save(algebra.drop_loops(pajek.load_net(args.net)), args.output)


def cmd_drophigh(args):
    net, removed = drop_high_degree(pajek.load_net(args.net), args.direction, args.threshold)
    pajek.save(net, args.output)
    if args.removed:
        _write_text("".join(f"{x}\n" for x in removed), args.removed)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="biblionet", description="Bibliographic network algebra and cores.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ingest", help="CSV table -> collection directory of .net/.clu files")
    s.add_argument("table")
    s.add_argument("--key", required=True, help="key column (works)")
    s.add_argument("--authors", help="column -> WA.net")
    s.add_argument("--keywords", help="column -> WK.net")
    s.add_argument("--journals", help="column -> WJ.net")
    s.add_argument("--classes", help="column -> WC.net")
    s.add_argument("--citations", help="column of cited keys -> Ci.net and dc.clu")
    s.add_argument("--year", help="column -> year.clu")
    s.add_argument("--multi", action="append", default=[], help="other set-valued column -> COL.net")
    s.add_argument("--single", action="append", default=[], help="other scalar column -> COL.clu")
    s.add_argument("--sep", default=";", help="separator inside multi-valued cells")
    s.add_argument("--delimiter", default=",", help="CSV field delimiter")
    s.add_argument("-o", "--output", required=True, help="collection directory")
    s.set_defaults(func=cmd_ingest)

    s = sub.add_parser("multiply", help="product of two networks")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--guard", type=int, metavar="WORK", help="refuse products needing more accumulations")
    s.add_argument("--normalize-left", action="store_true", help="row-normalize the left operand")
    s.add_argument("--normalize-right", action="store_true", help="row-normalize the right operand")
    s.add_argument("--transpose-a", action="store_true")
    s.add_argument("--transpose-b", action="store_true")
    s.add_argument("--report", help="where to write the sparsity report on refusal")
    s.set_defaults(func=cmd_multiply)

    s = sub.add_parser("derive", help="derived network from a collection directory")
    s.add_argument("kind", choices=DERIVE_KINDS)
    s.add_argument("collection")
    s.add_argument("-o", "--output", help="output .net (default COLLECTION/KIND.net)")
    s.add_argument("--guard", type=int, default=DEFAULT_GUARD, metavar="WORK")
    s.add_argument("--drop-loops", action="store_true")
    s.add_argument("--report", help="where to write the sparsity report on refusal")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("core", help="k-core or p_S-core membership as .clu")
    s.add_argument("kind", choices=("k", "ps"))
    s.add_argument("net")
    s.add_argument("--level", type=float)
    s.add_argument("--numbers", action="store_true", help="write core numbers instead of one core")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_core)

    s = sub.add_parser("sparsity", help="degree profile and fill bounds of a planned product")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--transpose-a", action="store_true")
    s.add_argument("--transpose-b", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_sparsity)

    s = sub.add_parser("extract", help="subnetwork induced by selected partition classes")
    s.add_argument("net")
    s.add_argument("clu")
    s.add_argument("--classes", nargs="+", required=True, help="class ids, lists or ranges LO..HI")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("shrink", help="merge partition classes into single nodes")
    s.add_argument("net")
    s.add_argument("clu")
    s.add_argument("--side", choices=("rows", "cols"), default="rows")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_shrink)

    s = sub.add_parser("report", help="ranked tables")
    s.add_argument("kind", choices=("collaborators", "outdeg", "best"))
    s.add_argument("inputs", nargs="+", help="Co.net | WA.net | Cn.net WA.net")
    s.add_argument("--top", type=int, default=50)
    s.add_argument("--csv", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("droploops", help="remove loops")
    s.add_argument("net")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_droploops)

    s = sub.add_parser("drophigh", help="remove arcs of nodes with degree above a threshold")
    s.add_argument("net")
    s.add_argument("--threshold", type=int, required=True)
    s.add_argument("--direction", choices=("out", "in"), default="out")
    s.add_argument("--removed", help="file listing removed node labels")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_drophigh)
    return p


def _fail(code, kind, exc):
    msg = " ".join(str(exc).split())
    print(f"biblionet: error: {kind}: {msg}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "usage", exc)
    except ExplosionRefused as exc:
        return _fail(EXIT_GUARD, "guard", exc)
    except FileNotFoundError as exc:
        return _fail(EXIT_USAGE, "file", exc)
    except (BiblioError, ValueError, KeyError, IndexError) as exc:
        return _fail(EXIT_FORMAT, "input", exc)
    return 0


if __name__ == "__main__":
    sys.exit(main())
