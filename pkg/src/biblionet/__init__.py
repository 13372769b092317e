"""Compatible bibliographic networks, sparse network multiplication and generalized cores."""
from . import pajek
from ._backend import COMPILED, backend_name
from .algebra import add_scaled, binarize, diag_scale, drop_loops, multiply, row_normalize, transpose
from .cores import CoreResult, core_decomposition, k_core, ps_core, ps_core_numbers
from .derived import (
    AuthorIndices,
    BiblioCollection,
    author_citation,
    author_co_citation,
    author_indices,
    author_keywords,
    authors_citations,
    bi_coupling,
    bi_coupling_norm,
    cited_coauthorship,
    co_citation,
    co_citation_norm,
    collab_cn,
    collab_co,
    collab_ct,
    coupling_share,
)
from .errors import BiblioError, ExplosionRefused, IncompatibleNetworks, NotBinaryError, PajekFormatError
from .ingest import DataTable, extract, read_table, shrink, table_to_networks
from .netcore import Mode, NodeSet, NodeVector, Partition, SparseNetwork, degree_vector, new_one_mode, new_two_mode, weight_sums
from .sparsity import SparsityReport, analyze_product, drop_high_degree, guarded_multiply

__version__ = "0.1.0"

__all__ = [
    "pajek",
    "add_scaled",
    "analyze_product",
    "author_citation",
    "author_co_citation",
    "author_indices",
    "author_keywords",
    "AuthorIndices",
    "authors_citations",
    "backend_name",
    "bi_coupling",
    "bi_coupling_norm",
    "BiblioCollection",
    "BiblioError",
    "binarize",
    "cited_coauthorship",
    "co_citation",
    "co_citation_norm",
    "collab_cn",
    "collab_co",
    "collab_ct",
    "COMPILED",
    "core_decomposition",
    "CoreResult",
    "coupling_share",
    "DataTable",
    "degree_vector",
    "diag_scale",
    "drop_high_degree",
    "drop_loops",
    "ExplosionRefused",
    "extract",
    "guarded_multiply",
    "IncompatibleNetworks",
    "k_core",
    "Mode",
    "multiply",
    "new_one_mode",
    "new_two_mode",
    "NodeSet",
    "NodeVector",
    "NotBinaryError",
    "PajekFormatError",
    "Partition",
    "ps_core",
    "ps_core_numbers",
    "read_table",
    "row_normalize",
    "shrink",
    "SparseNetwork",
    "SparsityReport",
    "table_to_networks",
    "transpose",
    "weight_sums",
]
