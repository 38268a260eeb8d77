"""Certifying tools for the consecutive ones property (C1P) of binary matrices."""

from .bounds import expected_pattern_length, reproduce_table, stress_bound, theorem_bound
from .certify import (
    ForcingPathCertificate,
    OddCycleCertificate,
    cycle_to_path,
    forcing_path,
    parse_certificate,
    path_to_cycle,
    serialize_certificate,
    shortest_odd_cycle,
    verify_forcing_path,
    verify_odd_cycle,
)
from .graphs import (
    build_forcing_graph,
    build_incompatibility_graph,
    critical_edges,
    is_bipartite,
)
from .matrix import (
    BinaryMatrix,
    TuckerKind,
    brute_force_c1p,
    check_ordering,
    parse_matrix,
    random_matrix,
    serialize_matrix,
    submatrix,
    tucker_pattern,
)
from .tucker import classify_pattern, find_tucker, minimal_nonc1p_cols, minimal_nonc1p_rows

__version__ = "0.1.0"
