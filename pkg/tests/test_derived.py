from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from biblionet import IncompatibleNetworks, Mode, NodeSet, NotBinaryError, SparseNetwork, derived
from biblionet.algebra import binarize, multiply, transpose

import oracles


def test_f1_dense_oracle_values():
    # hand-checked against the fixture definition
    d = oracles.dense_derived(oracles.F1_WA, oracles.F1_CI, oracles.F1_WK)
    assert d["cn"][0, 1] == pytest.approx(5 / 6, abs=1e-15)
    assert d["ct"][0, 1] == pytest.approx(13 / 36, abs=1e-15)
    assert d["cc"][0, 1] == pytest.approx(11 / 18, abs=1e-15)


def test_collab_co(f1):
    co = derived.collab_co(f1.WA)
    assert (co.weight("a", "b"), co.weight("a", "c"), co.weight("b", "c"), co.weight("c", "c")) == (2, 1, 1, 2)
    assert co.is_symmetric()


def test_single_author_corpus():
    works, authors = NodeSet(["p", "q"]), NodeSet(["x", "y"])
    wa = oracles.net([[1, 0], [0, 1]], works, authors)
    co = derived.collab_co(wa)
    assert np.all(co.row_ids == co.indices)


def test_non_binary_rejected(f1):
    heavy = f1.WA.with_data(f1.WA.data * 2)
    for fn in (derived.collab_co, derived.collab_cn, derived.collab_ct):
        with pytest.raises(NotBinaryError):
            fn(heavy)


def test_collab_cn(f1):
    cn = derived.collab_cn(f1.WA)
    assert cn.weight("a", "b") == pytest.approx(5 / 6, abs=1e-12)
    assert cn.weight("c", "c") == pytest.approx(4 / 3, abs=1e-12)
    assert cn.total_weight() == pytest.approx(6, abs=1e-12)


def test_cn_single_author_work():
    wa = oracles.net([[1, 0]], NodeSet(["p"]), NodeSet(["a", "b"]))
    cn = derived.collab_cn(wa)
    assert list(cn.labelled_arcs()) == [("a", "a", 1.0)]


def test_collab_ct(f1):
    ct = derived.collab_ct(f1.WA)
    assert ct.weight("a", "b") == pytest.approx(13 / 36, abs=1e-12)
    assert ct.weight("c", "c") == pytest.approx(10 / 9, abs=1e-12)
    assert ct.total_weight() == pytest.approx(3, abs=1e-12)
    assert binarize(derived.collab_co(f1.WA)) == binarize(derived.collab_cn(f1.WA)) == binarize(ct)


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_ct_single_work(k):
    wa = oracles.net(np.ones((1, k)))
    ct = derived.collab_ct(wa)
    assert ct.n_arcs == k * k
    np.testing.assert_allclose(ct.data, 1 / k**2, rtol=1e-15)


def test_author_indices_f1(f1):
    s, kk, ac = derived.author_indices(derived.collab_cn(f1.WA), f1.WA)
    assert s["c"] == pytest.approx(2 / 3, abs=1e-12)
    assert kk["c"] == pytest.approx(1 / 3, abs=1e-12)
    assert ac["a"] == pytest.approx(5 / 6, abs=1e-12)
    assert ac.values.sum() == pytest.approx(3, abs=1e-12)


def test_author_indices_solo_and_absent():
    works, authors = NodeSet(["p", "q"]), NodeSet(["solo", "ghost"])
    wa = oracles.net([[1, 0], [1, 0]], works, authors)
    s, kk, ac = derived.author_indices(derived.collab_cn(wa), wa)
    assert (s["solo"], kk["solo"]) == (1.0, 0.0)
    assert (s["ghost"], kk["ghost"], ac["ghost"]) == (1.0, 0.0, 0.0)


def test_coupling(f1):
    bico = derived.bi_coupling(f1.Ci)
    assert bico.weight("p2", "p3") == 1
    assert bico.weight("p3", "p3") == 2  # loops count references
    assert bico.is_symmetric()


def test_disjoint_references_not_coupled():
    ci = oracles.one_mode([[0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert derived.bi_coupling(ci).weight("v1", "v2") == 0


def test_coupling_norm(f1):
    bicon = derived.bi_coupling_norm(f1.Ci)
    assert bicon.weight("p2", "p3") == 0.75
    assert bicon.is_symmetric()


def test_coupling_norm_identical_and_nested():
    # p, q share {x}; r cites {x, y, z}
    nodes = NodeSet(["p", "q", "r", "x", "y", "z"])
    ci = oracles.one_mode(np.array([
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 1, 1],
        [0] * 6, [0] * 6, [0] * 6,
    ]), nodes)
    bicon = derived.bi_coupling_norm(ci)
    assert bicon.weight("p", "q") == 1.0
    cC = derived.coupling_share(ci)
    assert cC.weight("p", "r") == 1.0
    assert cC.weight("r", "p") == pytest.approx(1 / 3, abs=1e-15)
    assert bicon.weight("p", "r") == pytest.approx(2 / 3, abs=1e-15)


def test_co_citation(f1):
    coci = derived.co_citation(f1.Ci)
    assert coci.weight("p1", "p2") == 1
    assert coci.weight("p3", "p3") == 0  # never cited: isolated
    assert coci == derived.bi_coupling(transpose(f1.Ci))


def test_author_networks(f1):
    aci = derived.author_citation(f1.WA, f1.Ci)
    assert aci.weight("c", "p1") == 2
    assert aci.weight("a", "p1") == 1
    aco = derived.author_co_citation(aci)
    assert aco.weight("a", "c") == 1
    assert aco.weight("c", "c") == 2
    ak = derived.author_keywords(f1.WA, f1.WK)
    assert ak.weight("a", "k1") == 2
    assert ak.weight("c", "k2") == 2


def test_author_without_works_has_empty_row():
    works, authors = NodeSet(["p"]), NodeSet(["a", "idle"])
    wa = oracles.net([[1, 0]], works, authors)
    ci = SparseNetwork.empty(works, works)
    assert derived.author_citation(wa, ci).successors(1).size == 0


def test_keywordless_corpus(f1):
    wk = SparseNetwork.empty(f1.works, NodeSet([], Mode.KEYWORDS))
    assert derived.author_keywords(f1.WA, wk).n_arcs == 0


def test_cited_coauthorship(f1):
    raw = derived.cited_coauthorship(f1.WA, f1.Ci)
    assert raw.weight("a", "b") == 3
    cc = derived.cited_coauthorship(f1.WA, f1.Ci, normalized=True)
    assert cc.weight("a", "b") == pytest.approx(11 / 18, abs=1e-12)
    assert cc.total_weight() == pytest.approx(3, abs=1e-12)
    empty = SparseNetwork.empty(f1.works, f1.works)
    assert derived.cited_coauthorship(f1.WA, empty).n_arcs == 0


def test_authors_citations(f1):
    ca = derived.authors_citations(f1.WA, f1.Ci)
    assert ca.weight("c", "a") == 3
    assert ca.weight("a", "a") == 1
    aw = transpose(f1.WA)
    assert multiply(multiply(aw, f1.Ci), f1.WA) == multiply(aw, multiply(f1.Ci, f1.WA))
    assert derived.authors_citations(f1.WA, SparseNetwork.empty(f1.works, f1.works)).n_arcs == 0


def test_incompatible_inputs(f1):
    other = NodeSet(["x", "y"])
    with pytest.raises(IncompatibleNetworks):
        derived.author_citation(f1.WA, SparseNetwork.empty(other, other))


def test_exact_values_with_fractions(f1):
    """cn and ct agree with exact rational arithmetic."""
    wa = oracles.F1_WA.astype(int)
    n = [[Fraction(int(x), int(r.sum())) for x in r] for r in wa]
    cn_ab = sum(wa[p][0] * n[p][1] for p in range(3))
    ct_ab = sum(n[p][0] * n[p][1] for p in range(3))
    assert cn_ab == Fraction(5, 6) and ct_ab == Fraction(13, 36)
    assert derived.collab_cn(f1.WA).weight("a", "b") == pytest.approx(float(cn_ab), abs=1e-15)
    assert derived.collab_ct(f1.WA).weight("a", "b") == pytest.approx(float(ct_ab), abs=1e-15)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_all_derived_match_dense_oracle(seed):
    rng = np.random.default_rng(seed)
    n_works, n_auth, n_kw = rng.integers(1, 40), rng.integers(1, 30), rng.integers(1, 10)
    wa_d = oracles.random_binary(rng, n_works, n_auth, rng.uniform(0.02, 0.3))
    ci_d = oracles.random_dag(rng, n_works, rng.uniform(0.02, 0.3))
    wk_d = oracles.random_binary(rng, n_works, n_kw, 0.2)
    works = NodeSet.numbered(n_works, Mode.WORKS, "w")
    wa = oracles.net(wa_d, works)
    ci = oracles.net(ci_d, works, works)
    wk = oracles.net(wk_d, works)
    d = oracles.dense_derived(wa_d, ci_d, wk_d)
    got = {
        "co": derived.collab_co(wa), "cn": derived.collab_cn(wa), "ct": derived.collab_ct(wa),
        "bico": derived.bi_coupling(ci), "bicon": derived.bi_coupling_norm(ci),
        "cC": derived.coupling_share(ci),
        "coci": derived.co_citation(ci), "cocin": derived.co_citation_norm(ci),
        "aci": derived.author_citation(wa, ci), "ak": derived.author_keywords(wa, wk),
        "qua": derived.cited_coauthorship(wa, ci), "cc": derived.cited_coauthorship(wa, ci, True),
        "ca": derived.authors_citations(wa, ci),
    }
    got["aco"] = derived.author_co_citation(got["aci"])
    for name, net in got.items():
        np.testing.assert_allclose(net.to_dense(), d[name], rtol=1e-12, atol=1e-12, err_msg=name)
    for name in ("co", "cn", "ct", "bico", "bicon", "coci", "cocin", "aco"):
        assert got[name].is_symmetric(tol=1e-12), name
