import numpy as np
import pytest

from biblionet import BiblioCollection, Mode, NodeSet, new_two_mode

import oracles


@pytest.fixture
def f1():
    works = NodeSet(oracles.F1_WORKS, Mode.WORKS)
    authors = NodeSet(oracles.F1_AUTHORS, Mode.AUTHORS)
    keywords = NodeSet(oracles.F1_KEYWORDS, Mode.KEYWORDS)
    wa = new_two_mode(works, authors, [
        ("p1", "a", 1), ("p1", "b", 1),
        ("p2", "a", 1), ("p2", "b", 1), ("p2", "c", 1),
        ("p3", "c", 1),
    ])
    ci = new_two_mode(works, works, [("p2", "p1", 1), ("p3", "p1", 1), ("p3", "p2", 1)])
    wk = new_two_mode(works, keywords, [("p1", "k1", 1), ("p2", "k1", 1), ("p2", "k2", 1), ("p3", "k2", 1)])
    return BiblioCollection(works, WA=wa, Ci=ci, WK=wk)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def f1_dir(tmp_path, f1):
    """F1 saved as a collection directory."""
    from biblionet import pajek

    d = tmp_path / "f1"
    d.mkdir()
    for name in ("WA", "Ci", "WK"):
        pajek.save(getattr(f1, name), d / f"{name}.net")
    return d


def pytest_terminal_summary(terminalreporter, config):
    from test_acceptance import ACCEPTANCE_KEY

    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
