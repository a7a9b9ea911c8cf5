"""Computing and certifying the transitivity of graphs."""

from .atoms import (
    Atom,
    AtomCatalog,
    LowerBoundCertificate,
    atom_from_partition,
    certify_lower_bound,
    classify_tr3,
    generate_catalog,
    min_catalog,
)
from .chain import ChainCertificate, Kind, NotChainGraphError, chain_transitivity, max_index
from .exact import (
    OrderedPartition,
    PartitionError,
    TransitivityResult,
    Verdict,
    grundy_exact,
    transitivity_exact,
    validate_transitive,
)
from .graph import Graph, GraphFormatError, load_graph, read_graph, recognize_bipartite, recognize_chain
from .isomorphism import canonical_form, find_subgraph
from .kernels import BACKEND
from .reduction import (
    ReductionInstance,
    build_elimination_order,
    build_reduction,
    coloring_to_partition,
    partition_to_coloring,
    verify_elimination,
)

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "AtomCatalog",
    "BACKEND",
    "ChainCertificate",
    "Graph",
    "GraphFormatError",
    "Kind",
    "LowerBoundCertificate",
    "NotChainGraphError",
    "OrderedPartition",
    "PartitionError",
    "ReductionInstance",
    "TransitivityResult",
    "Verdict",
    "atom_from_partition",
    "build_elimination_order",
    "build_reduction",
    "canonical_form",
    "certify_lower_bound",
    "chain_transitivity",
    "classify_tr3",
    "coloring_to_partition",
    "find_subgraph",
    "generate_catalog",
    "grundy_exact",
    "load_graph",
    "max_index",
    "min_catalog",
    "partition_to_coloring",
    "read_graph",
    "recognize_bipartite",
    "recognize_chain",
    "transitivity_exact",
    "validate_transitive",
    "verify_elimination",
]
