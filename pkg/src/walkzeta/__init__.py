"""Exact quantum-walk transition matrices, graph zeta functions and spectra."""

from .exact import (
    BoundTooSmallError,
    ExactDivisionError,
    Matrix,
    Poly,
    Rational,
    RationalFunction,
    charpoly_exact,
    det_exact,
    interpolate,
    poly_divexact,
    poly_gcd,
    polymat_det,
    square_free_decomposition,
)
from .graphs import (
    ArcSet,
    DegreeInfo,
    Graph,
    GraphFormatError,
    ValidationReport,
    adjacency_matrix,
    betti,
    build_arcs,
    degree_info,
    degree_matrix,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    validate,
)
from .identities import (
    charpoly_support_via_adjacency_form,
    charpoly_u_factored,
    charpoly_u_via_degree_form,
    charpoly_u_via_walk_form,
)
from .operators import (
    arc_matrices,
    coin_weight_matrix,
    nonbacktracking_matrix,
    positive_support,
    power_support,
    random_walk_matrix,
    transition_matrix,
    verify_support_identity,
    weighted_edge_matrix,
)
from .spectra import (
    CompareResult,
    SpectrumMultiset,
    compare,
    map_adjacency_spectrum,
    map_random_walk_spectrum,
    real_roots,
    roots,
)
from .zeta import (
    CycleClass,
    OracleSizeError,
    PowerSeries,
    cycle_norm,
    euler_product_oracle,
    ihara_reciprocal_bass_form,
    ihara_reciprocal_edge_form,
    prime_cycle_classes,
    weighted_zeta_reciprocal,
)
from .experiments import (
    CorpusEntry,
    DistinguishResult,
    VerificationReport,
    builtin_corpus,
    named_graph,
    run_identity_suite,
    srg_distinguish,
)

__version__ = "0.1.0"
