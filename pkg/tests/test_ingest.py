import io

import numpy as np
import pytest

from biblionet import Mode, NodeSet, Partition, derived
from biblionet.ingest import DataTable, extract, read_table, shrink, table_to_networks

import oracles

SAMPLE = """work|authors|year
SNA|S. Wasserman, K. Faust|1994
W2|R. Hale, T. Ibsen|2011
W3|T. Ibsen, R. Hale|2004
W4|L. Moss, P. Quade, R. Hale|2012
W5|D. Orr, M. Stone, R. Hale|2010
"""


def sample_table():
    return read_table(io.StringIO(SAMPLE), "work", multi=["authors"], single=["year"], sep=",", delimiter="|")


def test_sample_table():
    nets, parts = table_to_networks(sample_table(), modes={"authors": Mode.AUTHORS})
    wa = nets["authors"]
    sna = [arc for arc in wa.labelled_arcs() if arc[0] == "SNA"]
    assert sna == [("SNA", "S. Wasserman", 1.0), ("SNA", "K. Faust", 1.0)]
    assert parts["year"].class_of("SNA") == 1994
    assert parts["year"].class_of("W3") == 2004
    # shared author is a single node
    assert wa.col_set.labels.count("R. Hale") == 1
    assert degree_in(wa, "R. Hale") == 4
    assert wa.col_set.labels[:2] == ("S. Wasserman", "K. Faust")
    assert wa.col_set.mode is Mode.AUTHORS


def degree_in(net, label):
    return int(np.sum(net.indices == net.col_set.index(label)))


def test_sample_collaboration():
    wa = table_to_networks(sample_table())[0]["authors"]
    co = derived.collab_co(wa)
    assert co.weight("R. Hale", "T. Ibsen") == 2
    assert co.weight("R. Hale", "R. Hale") == 4


def test_empty_value_gives_no_arcs():
    t = DataTable("k", [{"k": "x", "a": ""}, {"k": "y", "a": "u; v ; u"}], multi=["a"])
    net = table_to_networks(t)[0]["a"]
    assert net.successors(0).size == 0
    assert net.col_set.labels == ("u", "v")  # trimmed and de-duplicated
    assert net.n_arcs == 2


def test_shared_value_dedup():
    t = DataTable("k", [{"k": "x", "a": "u"}, {"k": "y", "a": "u"}], multi=["a"])
    net = table_to_networks(t)[0]["a"]
    assert net.col_set.size == 1 and net.n_arcs == 2


def test_networks_share_key_set():
    t = DataTable("k", [{"k": "x", "a": "u", "b": "z"}], multi=["a", "b"])
    nets, _ = table_to_networks(t)
    assert nets["a"].row_set is nets["b"].row_set


def test_missing_property_rejected():
    with pytest.raises(KeyError):
        table_to_networks(sample_table(), ["keywords"])
    with pytest.raises(KeyError):
        read_table(io.StringIO("work,authors\nA,x\n"), "work", multi=["keywords"])


def test_non_scalar_single_value_rejected():
    t = DataTable("k", [{"k": "x", "y": "1990;1991"}], single=["y"])
    with pytest.raises(ValueError):
        table_to_networks(t)


def test_duplicate_key_rejected():
    with pytest.raises(ValueError):
        DataTable("k", [{"k": "x"}, {"k": "x"}])


def test_non_integer_classes_get_labels():
    t = DataTable("k", [{"k": "x", "j": "Nature"}, {"k": "y", "j": "Science"}, {"k": "z", "j": "Nature"}], single=["j"])
    p = table_to_networks(t)[1]["j"]
    assert p.classes.tolist() == [1, 2, 1]
    assert p.label_of_class(2) == "Science"


def test_citations_add_cited_only_works():
    t = DataTable("k", [{"k": "x", "r": "y;q"}, {"k": "y", "r": ""}], multi=["r"])
    nets, parts = table_to_networks(t, citations="r")
    ci = nets["Ci"]
    assert ci.row_set.labels == ("x", "y", "q")
    assert ci.weight("x", "q") == 1 and ci.n_arcs == 2
    assert parts["dc"].classes.tolist() == [1, 1, 2]


def dc_partition(f1):
    return Partition(f1.works, [1, 1, 2])


def test_extract_f1(f1):
    sub = extract(f1.WA, dc_partition(f1), [1])
    assert sub.row_set.labels == ("p1", "p2")
    assert sub.n_arcs == 5
    assert sub.col_set is f1.WA.col_set


def test_extract_one_mode(f1):
    sub = extract(f1.Ci, dc_partition(f1), [1])
    assert list(sub.labelled_arcs()) == [("p2", "p1", 1.0)]


def test_extract_all_classes_unchanged(f1):
    assert extract(f1.WA, dc_partition(f1), [1, 2]) == f1.WA


def test_extract_unknown_class(f1):
    with pytest.raises(KeyError):
        extract(f1.WA, dc_partition(f1), [7])


def test_time_slice():
    t = sample_table()
    nets, parts = table_to_networks(t)
    sl = extract(nets["authors"], parts["year"], [2004, 2010, 2011])
    assert set(sl.row_set.labels) == {"W3", "W5", "W2"}


def test_shrink_f1_co(f1):
    co = derived.collab_co(f1.WA)
    p = Partition(f1.authors, [1, 1, 2], {1: "X", 2: "Y"})
    s = shrink(co, p)
    assert s.row_set.labels == ("X", "Y")
    assert s.weight("X", "Y") == 2
    assert s.total_weight() == co.total_weight()


def test_shrink_identity(f1):
    co = derived.collab_co(f1.WA)
    s = shrink(co, Partition(f1.authors, [1, 2, 3]))
    assert np.array_equal(s.to_dense(), co.to_dense())


def test_shrink_single_class(f1):
    co = derived.collab_co(f1.WA)
    s = shrink(co, Partition(f1.authors, [5, 5, 5]))
    assert list(s.arcs()) == [(0, 0, co.total_weight())]


def test_shrink_two_mode_side(f1):
    s = shrink(f1.WA, Partition(f1.authors, [1, 1, 2]), side="cols")
    assert s.row_set is f1.WA.row_set
    assert s.weight("p2", "1") == 2
    with pytest.raises(ValueError):
        shrink(f1.WA, Partition(f1.authors, [1, 1, 2]), side="both")


def test_shrink_random_conserves_weight(rng):
    for _ in range(20):
        dense = oracles.random_dense(rng, 15, 15, 0.3)
        net = oracles.one_mode(dense, NodeSet.numbered(15))
        p = Partition(net.row_set, rng.integers(1, 5, 15))
        assert shrink(net, p).total_weight() == net.total_weight()
