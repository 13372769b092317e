import numpy as np
import pytest

from biblionet import derived, pajek
from biblionet.cli import main

import oracles

F1_CSV = """id,authors,refs,kw,year
p1,a;b,,k1,1994
p2,a;b;c,p1,k1;k2,1994
p3,c,p1;p2,k2,2004
"""


def run(*argv):
    return main([str(a) for a in argv])


@pytest.fixture
def ingested(tmp_path):
    src = tmp_path / "f1.csv"
    src.write_text(F1_CSV)
    out = tmp_path / "coll"
    assert run("ingest", src, "--key", "id", "--authors", "authors", "--citations", "refs",
               "--keywords", "kw", "--year", "year", "-o", out) == 0
    return out


def test_ingest_matches_fixture(ingested, f1):
    assert pajek.load_net(ingested / "WA.net") == f1.WA
    assert pajek.load_net(ingested / "Ci.net") == f1.Ci
    assert pajek.load_net(ingested / "WK.net") == f1.WK
    assert (ingested / "year.clu").read_text() == "*Vertices 3\n1994\n1994\n2004\n"
    assert (ingested / "dc.clu").read_text() == "*Vertices 3\n1\n1\n1\n"


def test_derive_ct_matches_oracle(ingested):
    assert run("derive", "ct", ingested) == 0
    ct = pajek.load_net(ingested / "ct.net")
    expected = oracles.dense_derived(oracles.F1_WA, oracles.F1_CI)["ct"]
    np.testing.assert_allclose(ct.to_dense(), expected, rtol=0, atol=1e-12)
    ac = pajek.load_vec(ingested / "ct_ac.vec")
    assert ac.values.sum() == pytest.approx(3, abs=1e-12)


@pytest.mark.parametrize("kind", ["co", "cn", "ct", "bico", "bicon", "coci", "cocin",
                                  "aci", "aco", "ak", "qua", "cc", "ca"])
def test_every_derived_kind(f1_dir, tmp_path, kind):
    out = tmp_path / f"{kind}.net"
    assert run("derive", kind, f1_dir, "-o", out) == 0
    got = pajek.load_net(out).to_dense()
    d = oracles.dense_derived(oracles.F1_WA, oracles.F1_CI, oracles.F1_WK)
    np.testing.assert_allclose(got, d[kind], rtol=0, atol=1e-12)


def test_derive_cn_writes_indices(f1_dir):
    assert run("derive", "cn", f1_dir, "--drop-loops") == 0
    s = pajek.load_vec(f1_dir / "cn_S.vec")
    k = pajek.load_vec(f1_dir / "cn_K.vec")
    np.testing.assert_allclose(s.values + k.values, 1.0, atol=1e-15)
    cn = pajek.load_net(f1_dir / "cn.net")
    assert np.all(cn.row_ids != cn.indices)


def test_derive_is_byte_deterministic(f1_dir, tmp_path):
    run("derive", "cc", f1_dir, "-o", tmp_path / "x.net")
    run("derive", "cc", f1_dir, "-o", tmp_path / "y.net")
    assert (tmp_path / "x.net").read_bytes() == (tmp_path / "y.net").read_bytes()


def test_derive_guard(f1_dir, tmp_path, capsys):
    assert run("derive", "co", f1_dir, "--guard", "5", "-o", tmp_path / "co.net") == 3
    assert not (tmp_path / "co.net").exists()
    assert "exactWork\t14" in (tmp_path / "co.net.sparsity.txt").read_text()
    err = capsys.readouterr().err
    assert err.startswith("biblionet: error: guard:") and err.count("\n") == 1


def test_multiply_and_guard_zero(f1_dir, tmp_path):
    wa = f1_dir / "WA.net"
    out = tmp_path / "co.net"
    assert run("multiply", wa, wa, "--transpose-a", "-o", out) == 0
    assert np.array_equal(pajek.load_net(out).to_dense(), oracles.F1_WA.T @ oracles.F1_WA)
    rep = tmp_path / "rep.txt"
    assert run("multiply", wa, wa, "--transpose-a", "--guard", "0", "-o", tmp_path / "z.net", "--report", rep) == 3
    assert rep.exists()


def test_multiply_normalized(f1_dir, tmp_path):
    wa = f1_dir / "WA.net"
    out = tmp_path / "cn.net"
    assert run("multiply", wa, wa, "--normalize-right", "--transpose-a", "-o", out) == 0
    assert pajek.load_net(out) == derived.collab_cn(pajek.load_net(wa))
    # transpose first, then normalize: rows of AW sum to one
    assert run("multiply", wa, wa, "--normalize-left", "--transpose-a", "-o", out) == 0
    expected = oracles.row_share(oracles.F1_WA.T) @ oracles.F1_WA
    np.testing.assert_allclose(pajek.load_net(out).to_dense(), expected, atol=1e-15)


def test_multiply_incompatible(f1_dir, tmp_path, capsys):
    wa = f1_dir / "WA.net"
    assert run("multiply", wa, wa, "-o", tmp_path / "x.net") == 2
    assert "biblionet: error: input:" in capsys.readouterr().err


def test_sparsity_report(f1_dir, tmp_path):
    out = tmp_path / "s.txt"
    assert run("sparsity", f1_dir / "WA.net", f1_dir / "WA.net", "--transpose-a", "-o", out) == 0
    text = out.read_text()
    assert "p2\t3\t3" in text and "deltaMin\t3" in text


def test_report_outdeg(f1_dir, tmp_path):
    out = tmp_path / "o.csv"
    assert run("report", "outdeg", f1_dir / "WA.net", "--csv", "-o", out) == 0
    assert out.read_text() == "outdeg,frequency\n1,1\n2,1\n3,1\n"


def test_report_best_and_collaborators(f1_dir, tmp_path, capsys):
    run("derive", "cn", f1_dir)
    run("derive", "co", f1_dir)
    assert run("report", "best", f1_dir / "cn.net", f1_dir / "WA.net", "--csv") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "i,author,cn_ii,total,K_i"
    assert lines[1].split(",")[1:4] == ["c", repr(4 / 3), "2"]
    assert run("report", "collaborators", f1_dir / "co.net", "--top", "1") == 0
    assert len(capsys.readouterr().out.splitlines()) == 3
    assert run("report", "best", f1_dir / "cn.net") == 1


def test_core_commands(f1_dir, tmp_path):
    run("derive", "co", f1_dir)
    co = f1_dir / "co.net"
    out = tmp_path / "k.clu"
    assert run("core", "k", co, "--level", "2", "-o", out) == 0
    assert out.read_text() == "*Vertices 3\n1\n1\n1\n"
    assert run("core", "ps", co, "--level", "2.5", "-o", out) == 0
    assert out.read_text() == "*Vertices 3\n0\n0\n0\n"
    assert run("core", "k", co, "--numbers", "-o", out) == 0
    assert out.read_text() == "*Vertices 3\n2\n2\n2\n"
    assert run("core", "ps", co, "--numbers", "-o", tmp_path / "ps.vec") == 0
    assert pajek.load_vec(tmp_path / "ps.vec").values.tolist() == [2.0, 2.0, 2.0]
    assert run("core", "k", co, "-o", out) == 1
    assert run("core", "k", co, "--level", "1.5", "-o", out) == 1


def test_extract_and_shrink(ingested, tmp_path):
    out = tmp_path / "slice.net"
    assert run("extract", ingested / "WA.net", ingested / "year.clu", "--classes", "1990..2000", "-o", out) == 0
    assert pajek.load_net(out).n_arcs == 5
    assert run("extract", ingested / "WA.net", ingested / "year.clu", "--classes", "1995", "-o", out) == 2
    clu = tmp_path / "ab.clu"
    clu.write_text("*Vertices 3\n1\n1\n2\n")
    run("derive", "co", ingested)
    assert run("shrink", ingested / "co.net", clu, "-o", out) == 0
    assert pajek.load_net(out).weight("1", "2") == 2
    assert run("shrink", ingested / "WA.net", clu, "--side", "cols", "-o", out) == 0
    assert pajek.load_net(out).weight("p2", "1") == 2


def test_droploops_and_drophigh(f1_dir, tmp_path):
    run("derive", "co", f1_dir)
    out = tmp_path / "x.net"
    assert run("droploops", f1_dir / "co.net", "-o", out) == 0
    assert pajek.load_net(out).n_arcs == 6
    removed = tmp_path / "removed.txt"
    assert run("drophigh", f1_dir / "WA.net", "--threshold", "2", "--removed", removed, "-o", out) == 0
    assert removed.read_text() == "p2\n"
    assert pajek.load_net(out).n_arcs == 3


def test_usage_errors(capsys, tmp_path):
    assert run() == 1
    assert run("frobnicate") == 1
    assert run("derive", "co", tmp_path / "missing") == 1
    err = capsys.readouterr().err.strip().splitlines()
    assert all(line.startswith("biblionet: error: ") for line in err)


def test_format_error(tmp_path, capsys):
    bad = tmp_path / "bad.net"
    bad.write_text("*Vertices 2\n1 \"a\"\n*Arcs\n1 9 1\n")
    assert run("droploops", bad, "-o", tmp_path / "o.net") == 2
    assert "line 4" in capsys.readouterr().err
