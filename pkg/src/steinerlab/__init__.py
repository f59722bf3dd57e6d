"""steinerlab: exact-integer calculator for based augmented directed complexes.

The package models strict higher-categorical shapes through their chain-level
presentations: finitely based augmented directed complexes with unbounded
integer coefficients.  It provides the Gray tensor product, join, antijoin,
suspension, the op/co/coop involutions, the disk/cube/oriental/theta shape
families, basis analysis (atoms, unitality, strong loop-freeness), cell
tables with composition, finite colimits by exact elimination, and verified
chain-level sections and retractions between cubes, orientals, and wedges.
"""

from .basic import interval, two_points, unit, zero
from .cells import (
    BadLevelError,
    CellTable,
    InvalidResultError,
    NotComposableError,
    compose_tables,
    identity_table,
    is_degenerate,
    source,
    target,
    validate_table,
)
from .colimits import (
    NonBasedPushoutError,
    PushoutResult,
    coequalizer,
    induced_from_coequalizer,
    induced_from_pushout,
    pushout,
)
from .core import (
    BasedComplex,
    Chain,
    CheckItem,
    CheckReport,
    ComplexMap,
    CompositionError,
    DegreeMismatchError,
    MalformedError,
    SizeLimitError,
    SteinerlabError,
    basis_renaming_map,
    chain_of,
    compose,
    direct_sum,
    equal_presentation,
    graded_counts,
    identity_map,
    invert_basis_bijection,
    validate_complex,
    validate_map,
    verify_mutually_inverse,
)
from .io import ParseError, ValidationError, emit, parse
from .names import Name, name_key, parse_name, render_name
from .ops import (
    antijoin,
    antisuspension,
    antisuspension_pushout,
    cube_selfduality,
    dual_co,
    dual_co_map,
    dual_coop,
    dual_op,
    dual_op_map,
    ell_map,
    gray_tensor,
    gray_tensor_map,
    join,
    join_pushout,
    join_swap_iso_op,
    left_p_map,
    p_map,
    q_susp_map,
    susp_coop_iso,
    suspension,
    suspension_map,
    suspension_pushout,
    swap_iso_co,
    swap_iso_op,
)
from .retract import (
    RetractionPair,
    UnsupportedSpecError,
    e_s_kappa,
    ell_oriental,
    h_map,
    phi_map,
    q2,
    q_cube,
    rho_map,
    s2,
    section_ell,
    section_q_cube,
    section_xi,
    theta_left_inverse,
    theta_retract_into_oriental,
    xi,
    zeta,
)
from .shapes import (
    BadBasepointError,
    BadDimsError,
    EmptyComplexError,
    ThetaSpec,
    antioriental,
    boundary_decomposition_check,
    boundary_disk,
    cube,
    disk,
    disk_inclusion,
    oriental,
    oriental_via_join,
    random_theta_spec,
    shape_library,
    theta,
    top_cell_decomposition_check,
    truncate_top,
    wedge,
    wedge_with_legs,
)
from .steiner import (
    NegativeEntryError,
    PreorderRelation,
    atom_table,
    is_steiner,
    is_strongly_loopfree,
    pos_neg_parts,
    preorder,
    unitality_check,
)

__version__ = "0.1.0"
