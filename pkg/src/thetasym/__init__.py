"""Symbol combinatorics for the finite theta correspondence and branching laws.

The package is organized in layers:

* :mod:`thetasym.core` - partitions, bipartitions and reduced two-row
  symbols, with rank/defect invariants, the staircase bijection and
  deterministic enumeration;
* :mod:`thetasym.catalog` - representation labels of finite symplectic and
  orthogonal groups, cuspidal staircases, twists and the label grammar;
* :mod:`thetasym.theta` - pair-membership predicates for the oscillator
  representation, closed-form first occurrences and the cuspidal chain;
* :mod:`thetasym.ggp` - relevance, branching multiplicities, variant
  selection and restriction decompositions;
* :mod:`thetasym.oracle` - brute-force verifiers that gate the closed
  forms;
* :mod:`thetasym.cli` - table generation and verification from the shell.

All values are immutable and all operations pure functions.
"""

from .catalog import (
    KH,
    MINUS,
    PLUS,
    CuspidalKind,
    GroupFamily,
    GroupTag,
    RepLabel,
    RhoDescriptor,
    Sign,
    TRIVIAL_RHO,
    Twist,
    cuspidal_support_kh,
    cuspidal_symbol,
    enumerate_labels,
    eps_minus_one_from_q,
    format_label,
    format_sign,
    is_unipotent_cuspidal,
    is_unipotent_label,
    kh_of,
    make_label,
    o_even,
    o_odd,
    parse_group,
    parse_label,
    parse_sign,
    sp,
    symbol_regular_by_convention,
    twist_label,
    unipotent_label,
)
from .core import (
    Bipartition,
    EMPTY_SYMBOL,
    Partition,
    Symbol,
    SymbolFamily,
    ZERO_SYMBOL,
    close_dominates,
    enumerate_symbols,
    format_bipartition,
    format_symbol,
    parse_bipartition,
    parse_symbol,
    partition,
    partition_transpose,
    symbol_defect,
    symbol_normalize,
    symbol_rank,
    symbol_transpose,
    upsilon,
    upsilon_inverse,
)
from .errors import (
    CaseMismatch,
    DefectClassMismatch,
    InapplicableTwist,
    MultipleNonzero,
    NormalizationError,
    NotCuspidalSupport,
    NotUnipotent,
    ParseError,
    RankMismatch,
    RankOrder,
    RankOverflow,
    SignMismatch,
    ThetasymError,
)
from .ggp import (
    BESSEL,
    FOURIER_JACOBI,
    GGPCase,
    GGPKind,
    Multiplicity,
    Undetermined,
    VariantReport,
    branch_decomposition,
    default_rho_catalog,
    ggp_multiplicity,
    is_strongly_relevant,
    relevance_necessary,
    select_nonzero_variant,
)
from .oracle import (
    VerificationReport,
    brute_first_occurrence,
    verify_counts,
    verify_f1,
    verify_variant_uniqueness,
)
from .theta import (
    CuspidalThetaVariant,
    FirstOccurrence,
    GVariant,
    ThetaDirection,
    Tower,
    TowerContext,
    cuspidal_theta,
    first_occurrence_supported,
    first_occurrence_unipotent,
    in_B,
    in_G,
    theta_fiber,
)

__version__ = "0.1.0"
