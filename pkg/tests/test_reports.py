import pytest

from biblionet import derived
from biblionet.reports import Table, best_authors_table, collaborators_table, outdegree_distribution


def test_outdeg_f1(f1):
    t = outdegree_distribution(f1.WA)
    assert [tuple(r) for r in t.rows] == [(1, 1), (2, 1), (3, 1)]
    assert t.to_csv() == "outdeg,frequency\n1,1\n2,1\n3,1\n"


def test_collaborators_f1(f1):
    t = collaborators_table(derived.collab_co(f1.WA))
    assert [(r[1], r[2]) for r in t.rows] == [("a", 2), ("b", 2), ("c", 2)]


def test_best_f1(f1):
    t = best_authors_table(derived.collab_cn(f1.WA), f1.WA)
    assert t.columns == ["i", "author", "cn_ii", "total", "K_i"]
    top = t.rows[0]
    assert top[1] == "c"
    assert top[2] == pytest.approx(4 / 3)
    assert top[3] == 2
    assert top[4] == pytest.approx(1 / 3)


def test_text_alignment():
    text = Table(["x", "name"], [(1, "long name"), (10, "b")]).to_text()
    assert text.splitlines() == [" x  name", "--  ---------", " 1  long name", "10  b"]
