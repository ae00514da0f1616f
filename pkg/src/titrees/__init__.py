"""Transmission-irregular trees: invariants, family constructors,
closed-form Wiener values, extremal-case dispatchers, and an exhaustive
enumeration harness with sparse6 interchange."""

from .errors import (
    BadFamilyParams,
    BadLabel,
    BranchIsAlreadyPath,
    CapExceeded,
    DichotomyViolated,
    InconsistentSizes,
    LengthOrderViolated,
    MalformedSparse6,
    NonIntegerResult,
    NotABranchingVertex,
    NotAnEdge,
    NotATree,
    NotPendentPaths,
    NotTI,
    ParityError,
    ParseError,
    PreconditionFailed,
    TitreesError,
    VerificationFailed,
)
from .extremal import (
    DichotomyResult,
    ExtremalOutcome,
    TICondition,
    classify_type,
    even_extremal,
    extremal,
    odd_extremal,
    square_dichotomy,
    ti_condition,
)
from .families import (
    Built,
    FamilySpec,
    OrdinaryCaterpillar,
    Path,
    Starlike,
    VariantCaterpillar,
    build,
    build_tree,
    format_spec,
    order_of,
    parse_spec,
)
from .formulas import (
    CLOSED_FORMS,
    SPECTRA,
    SpectrumOffsets,
    integer_sqrt,
    is_perfect_square,
    wiener_branching,
    wiener_fusion,
    wiener_path,
)
from .search import (
    Maximizer,
    SearchReport,
    TreeShard,
    VerifyRow,
    enumerate_shards,
    enumerate_trees,
    enumeration_cap,
    search_max_ti,
    ti_trees,
    verify_orders,
)
from .sparse6 import decode_graph6, decode_line, decode_sparse6, encode_sparse6
from .transforms import arm_straighten, fuse, majorize, pendent_path
from .tree import (
    TransmissionProfile,
    Tree,
    branching_vertices,
    canonical_code,
    decompose_at,
    degree,
    distances_from,
    leaves,
    new_tree,
    split_count,
    transmission_profile,
    transmissions_linear,
    tree_center,
    wiener_index,
)

__version__ = "0.1.0"
