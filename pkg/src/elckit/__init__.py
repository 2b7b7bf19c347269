"""Edge-local complementation toolkit.

Pivot moves on simple graphs, the group of GF(2) linear fractional maps
acting on adjacency matrices, polynomial-time recognition of pivot
equivalence with constructive pivot sequences, equivalence-class counting
and invariants, the interlace polynomial, matrix inversion by pivoting,
and exact graph-state checks of the local-Hadamard correspondence.
"""

from .equivalence import (
    ElcSequence,
    decompose_h,
    elc_sequence_between,
    f_double,
    f_transform,
    invert_via_elc,
    recognize_elc,
    recognize_elc_space,
    replay,
)
from .gf2 import (
    AffineSolution,
    BitMatrix,
    BitVector,
    SingularMatrixError,
    VertexSet,
    inverse,
    kernel_basis,
    kronecker,
    offdiag_submatrix,
    principal_submatrix,
    rank,
    row_space_key,
    solve_affine,
)
from .graph import (
    Graph,
    NotAnEdgeError,
    all_graphs,
    clebsch_graph,
    complete_graph,
    cycle_graph,
    edge_local_complement,
    elc_by_local_complements,
    empty_graph,
    generate,
    girth,
    graph_from_key,
    graph_key,
    local_complement,
    path_graph,
    petersen_graph,
    srg_check,
    twins,
)
from .graphstate import (
    AmplitudeVector,
    amplitudes,
    apply_local_hadamard,
    matches_up_to_flips,
    proportional,
    quadratic_form,
    verify_theorem4,
)
from .interlace import (
    DivisibilityResult,
    EvennessCondition,
    InterlacePoly,
    divisibility_check,
    evaluate,
    evenness_sufficient,
    format_poly,
    interlace_poly,
)
from .invariants import (
    DEFAULT_SUBSET_CAP,
    InvariantReport,
    SigmaSpace,
    TooLargeError,
    bineighborhood_space,
    class_size,
    corank_counts,
    delta_count,
    invariant_report,
    sigma_space,
)
from .io import (
    DiagonalViolation,
    ParseError,
    SymmetryViolation,
    load_graph,
    parse,
    parse_adjtext,
    parse_graph6,
    serialize,
    serialize_adjtext,
    serialize_graph6,
)
from .lft import (
    LftOp,
    NonzeroDiagonalError,
    NotInDomainError,
    SingularDenominatorError,
    apply,
    apply_h_blockwise,
    bilinear_check,
    compose,
    identity_op,
    in_domain,
    lc_operator,
    make_h,
)
from .orbit import CapExceededError, GraphOrbit, elc_orbit, lc_orbit

__version__ = "0.1.0"
