"""Square roots of graphs inside hereditary split-graph classes.

The pipeline decides whether a connected graph is the square of a split
graph in one of eight classes, constructs a verified root when it is,
and reports a small witness when it is not.  Desk-scale brute force
lives in splitroot.oracle for cross-checking.
"""

from .classes import (
    CLASS_IDS,
    COMPARABILITY_SPLIT,
    INTERVAL_SPLIT,
    ODD_SUN_FREE_SPLIT,
    PERMUTATION_SPLIT,
    PROBE_THRESHOLD_SPLIT,
    STRONGLY_CHORDAL_SPLIT,
    SUN3FREE_SPLIT,
    SUN3_NET_FREE_SPLIT,
    SplitPartition,
    all_split_partitions,
    is_chordal,
    is_strongly_chordal,
    recognize,
    split_partition,
)
from .cliques import CliqueFamily, GateResult, gate, maximal_cliques
from .errors import (
    GraphFormatError,
    InternalVerificationError,
    PreconditionError,
    SizeGuardError,
)
from .formats import (
    format_edge_list,
    format_graph6,
    parse,
    parse_edge_list,
    parse_graph6,
    serialise,
    sniff_format,
)
from .graphs import Graph, bits, mask_of
from .oracle import (
    ObstructionReport,
    canonical_form,
    enumerate_connected,
    mine_obstructions,
    oracle_find_root,
    split_square_roots,
)
from .patterns import Pattern, catalog, find_induced_cycle_2mod4, has_induced, sun
from .roots import (
    RootCertificate,
    Trunk,
    augment,
    clique_incidence,
    find_root,
    incidence_root,
    odd_sun_free_root_by_balance,
    sun3free_root_by_clique_helly,
    trunk,
    verify_root,
)

__version__ = "0.1.0"

__all__ = [
    "CLASS_IDS",
    "COMPARABILITY_SPLIT",
    "CliqueFamily",
    "GateResult",
    "Graph",
    "GraphFormatError",
    "INTERVAL_SPLIT",
    "InternalVerificationError",
    "ODD_SUN_FREE_SPLIT",
    "ObstructionReport",
    "PERMUTATION_SPLIT",
    "PROBE_THRESHOLD_SPLIT",
    "Pattern",
    "PreconditionError",
    "RootCertificate",
    "STRONGLY_CHORDAL_SPLIT",
    "SUN3FREE_SPLIT",
    "SUN3_NET_FREE_SPLIT",
    "SizeGuardError",
    "SplitPartition",
    "Trunk",
    "all_split_partitions",
    "augment",
    "bits",
    "canonical_form",
    "catalog",
    "clique_incidence",
    "enumerate_connected",
    "find_induced_cycle_2mod4",
    "find_root",
    "format_edge_list",
    "format_graph6",
    "gate",
    "has_induced",
    "incidence_root",
    "is_chordal",
    "is_strongly_chordal",
    "mask_of",
    "maximal_cliques",
    "mine_obstructions",
    "odd_sun_free_root_by_balance",
    "oracle_find_root",
    "parse",
    "parse_edge_list",
    "parse_graph6",
    "recognize",
    "serialise",
    "sniff_format",
    "split_partition",
    "split_square_roots",
    "sun",
    "sun3free_root_by_clique_helly",
    "trunk",
    "verify_root",
    "__version__",
]
