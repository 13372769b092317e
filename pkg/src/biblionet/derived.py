"""Derived bibliographic networks and author indices.

All networks are built from a collection of compatible networks sharing the
works node set: ``WA`` (works x authors), ``WK`` (works x keywords), ``Ci``
(works x works, ``p -> q`` when p cites q) and so on. Loops are kept in every
derived network; use :func:`biblionet.algebra.drop_loops` where they are not
wanted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .algebra import binarize, diag_scale, multiply, row_normalize, transpose
from .errors import NotBinaryError
from .netcore import NodeSet, NodeVector, Partition, SparseNetwork, require_compatible
from .sparsity import guarded_multiply

__all__ = [
    "BiblioCollection",
    "AuthorIndices",
    "collab_co",
    "collab_cn",
    "collab_ct",
    "author_indices",
    "works_without_authors",
    "diagonal",
    "bi_coupling",
    "coupling_share",
    "bi_coupling_norm",
    "co_citation",
    "co_citation_norm",
    "author_citation",
    "author_co_citation",
    "author_keywords",
    "cited_coauthorship",
    "authors_citations",
]


@dataclass
class BiblioCollection:
    """Networks and partitions that share one works node set."""

    works: NodeSet
    WA: SparseNetwork | None = None
    WK: SparseNetwork | None = None
    WC: SparseNetwork | None = None
    WJ: SparseNetwork | None = None
    Ci: SparseNetwork | None = None
    partitions: dict[str, Partition] = field(default_factory=dict)

    def __post_init__(self):
        for name in ("WA", "WK", "WC", "WJ", "Ci"):
            net = getattr(self, name)
            if net is not None:
                require_compatible(net.row_set, self.works, f"{name} rows and works")
        if self.Ci is not None:
            require_compatible(self.Ci.col_set, self.works, "Ci columns and works")
        for name, part in self.partitions.items():
            require_compatible(part.over, self.works, f"partition {name} and works")

    @property
    def authors(self) -> NodeSet | None:
        return self.WA.col_set if self.WA is not None else None

    @property
    def keywords(self) -> NodeSet | None:
        return self.WK.col_set if self.WK is not None else None

    @property
    def journals(self) -> NodeSet | None:
        return self.WJ.col_set if self.WJ is not None else None


class AuthorIndices(NamedTuple):
    self_sufficiency: NodeVector
    collaborativeness: NodeVector
    contribution: NodeVector


def _binary(net: SparseNetwork, name: str) -> None:
    if not net.is_binary():
        raise NotBinaryError(f"{name} must be binary (all weights 1)")


def _mul(a: SparseNetwork, b: SparseNetwork, max_work) -> SparseNetwork:
    if max_work is None:
        return multiply(a, b)
    return guarded_multiply(a, b, max_work)


def diagonal(net: SparseNetwork) -> np.ndarray:
    """Loop weights ``w(i, i)`` of a one-mode network as a dense array."""
    out = np.zeros(net.row_set.size)
    loops = net.row_ids == net.indices
    out[net.row_ids[loops]] = net.data[loops]
    return out


def works_without_authors(wa: SparseNetwork) -> int:
    return int(np.count_nonzero(np.diff(wa.indptr) == 0))


# collaboration -----------------------------------------------------------


def collab_co(wa: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``co_ij``: number of works authors i and j wrote together (``co_ii``: works of i)."""
    _binary(wa, "WA")
    return _mul(transpose(wa), wa, max_work)


def collab_cn(wa: SparseNetwork, *, denominator: str = "share", max_work=None) -> SparseNetwork:
    """``cn_ij``: contribution of author j to the works j wrote with author i."""
    _binary(wa, "WA")
    return _mul(transpose(wa), row_normalize(wa, denominator), max_work)


def collab_ct(wa: SparseNetwork, *, denominator: str = "share", max_work=None) -> SparseNetwork:
    """``ct_ij``: joint contribution of i and j; each authored work adds total weight 1."""
    _binary(wa, "WA")
    n = row_normalize(wa, denominator)
    return _mul(transpose(n), n, max_work)


def author_indices(cn: SparseNetwork, wa: SparseNetwork) -> AuthorIndices:
    """Self-sufficiency ``S``, collaborativeness ``K = 1 - S`` and field contribution ``ac``.

    ``S_i = cn_ii / (number of works of i)``. Authors without works get
    ``S = 1``, ``K = 0`` and ``ac = 0``.
    ``ac_i = |A| / |W| * (sum of i's shares)``.
    """
    authors = wa.col_set
    require_compatible(cn.row_set, authors, "Cn and WA authors")
    works_of = np.bincount(wa.indices, minlength=authors.size).astype(np.float64)
    cn_ii = diagonal(cn)
    has_works = works_of > 0
    s = np.ones(authors.size)
    s[has_works] = cn_ii[has_works] / works_of[has_works]
    shares = row_normalize(wa)
    total_share = np.bincount(shares.indices, weights=shares.data, minlength=authors.size)
    n_works = wa.row_set.size
    ac = total_share * (authors.size / n_works) if n_works else np.zeros(authors.size)
    return AuthorIndices(NodeVector(authors, s), NodeVector(authors, 1.0 - s), NodeVector(authors, ac))


# coupling and co-citation ----------------------------------------------------


def _one_mode_citations(ci: SparseNetwork) -> None:
    _binary(ci, "Ci")
    require_compatible(ci.row_set, ci.col_set, "Ci rows and columns")


def bi_coupling(ci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``bico_pq``: number of works cited by both p and q."""
    _one_mode_citations(ci)
    return _mul(ci, transpose(ci), max_work)


def coupling_share(ci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``cC = n(Ci) * Ci^T``: share of p's references that q also cites."""
    _one_mode_citations(ci)
    return _mul(row_normalize(ci), transpose(ci), max_work)


def _symmetric_share(counts: SparseNetwork, degree: np.ndarray) -> SparseNetwork:
    # counts is symmetric, so its own pattern carries both one-sided shares
    d = degree.astype(np.float64)
    rows, cols = counts.row_ids, counts.indices
    values = 0.5 * (counts.data / d[rows] + counts.data / d[cols])
    return counts.with_data(values)


def bi_coupling_norm(ci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``bicon_pq = (cC_pq + cC_qp) / 2``, in [0, 1]; 1 iff p and q cite the same works.

    Only the first term is needed since the second is its transpose. With
    binary ``Ci`` the term is ``bico_pq / outdeg(p)``, a single division of an
    exact count, so identical reference sets give exactly 1.
    """
    bico = bi_coupling(ci, max_work=max_work)
    return _symmetric_share(bico, np.diff(ci.indptr))


def co_citation(ci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``coci_pq``: number of works citing both p and q."""
    _one_mode_citations(ci)
    return _mul(transpose(ci), ci, max_work)


def co_citation_norm(ci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """Normalized co-citation: shares taken over the citing works of p and q."""
    coci = co_citation(ci, max_work=max_work)
    return _symmetric_share(coci, np.bincount(ci.indices, minlength=ci.col_set.size))


# author-level networks -------------------------------------------------------


def author_citation(wa: SparseNetwork, ci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``aci_ip``: number of i's works citing work p."""
    _binary(wa, "WA")
    _one_mode_citations(ci)
    return _mul(transpose(wa), ci, max_work)


def author_co_citation(aci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``aco_ij``: number of works cited by both authors i and j."""
    b = binarize(aci)
    return _mul(b, transpose(b), max_work)


def author_keywords(wa: SparseNetwork, wk: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``ak_ik``: number of works in which author i used keyword k."""
    _binary(wa, "WA")
    _binary(wk, "WK")
    return _mul(transpose(wa), wk, max_work)


def cited_coauthorship(wa: SparseNetwork, ci: SparseNetwork, normalized: bool = False, *, max_work=None) -> SparseNetwork:
    """Co-authorship weighted by citations received by the joint works.

    Raw: ``sum over shared works p of indeg_Ci(p)``. Normalized: each work's
    factor is divided by ``max(1, authors(p))**2`` so that the author clique
    of p carries total weight ``indeg_Ci(p)``.
    """
    _binary(wa, "WA")
    require_compatible(ci.row_set, wa.row_set, "Ci and WA works")
    require_compatible(ci.col_set, wa.row_set, "Ci and WA works")
    factor = np.bincount(ci.indices, weights=ci.data, minlength=ci.col_set.size)
    if normalized:
        n_authors = np.maximum(1.0, np.diff(wa.indptr).astype(np.float64))
        factor = factor / (n_authors * n_authors)
    return _mul(diag_scale(transpose(wa), factor, "right"), wa, max_work)


def authors_citations(wa: SparseNetwork, ci: SparseNetwork, *, max_work=None) -> SparseNetwork:
    """``ca_ij``: number of citations from a work co-authored by i to a work co-authored by j."""
    _binary(wa, "WA")
    _one_mode_citations(ci)
    return _mul(_mul(transpose(wa), ci, max_work), wa, max_work)
