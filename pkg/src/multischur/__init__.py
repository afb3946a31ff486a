"""Exact multi-Schur calculus over labelled alphabets.

Two independent engines compute the same families of functions: the
closed-form determinants in :mod:`multischur.expansions` and the
charged-fermion calculator in :mod:`multischur.fock`.  They share the
exact scalar ring in :mod:`multischur.exactalg` and the shape/alphabet
combinatorics in :mod:`multischur.shapes`.
"""

from .exactalg import (
    DimensionError,
    Scalar,
    UnboundIndeterminateError,
    det_over_ring,
    scalar_eval,
    scalar_from_json,
    scalar_to_json,
    variables,
)
from .expansions import (
    StabilityError,
    SymFunc,
    TractabilityError,
    TruncationError,
    eval_symfunc,
    expand_in_refined_basis,
    flagged_schur,
    flagged_tableau_oracle,
    hall_inner,
    multi_schur,
    pieri_mult_h,
    refined_dual_grothendieck,
    schur_expand_multischur,
    schur_tableau_oracle,
    skew_function,
    skew_multi_schur,
    stable_dual_in_G,
    stable_grothendieck_schur,
    sym_schur,
    sym_zero,
    symfunc_from_json,
    symfunc_to_json,
    truncated_dual_expansion,
    verify_branching,
    verify_cauchy,
)
from .fock import (
    PSI,
    PSI_STAR,
    ChargeError,
    FockVector,
    MayaState,
    apply_dressed_fermion,
    apply_exp_H,
    apply_fermion,
    apply_heisenberg,
    bra_refined_pair,
    ket_general,
    ket_partition,
    ket_refined,
    vacuum_ket,
    wick_expectation,
)
from .shapes import (
    AlphabetSequence,
    ConstantTail,
    EmptyTail,
    Partition,
    RefinedTail,
    constant_sequence,
    contains,
    empty_sequence,
    motegi_scrimshaw_sequence,
    partitions_of_weight,
    partitions_up_to_weight,
    prefix_sequence,
    refined_alphabet,
    refined_sequence,
    subpartitions,
    superpartitions,
    transpose,
)
from .supersym import e_elem, h_complete, h_super, p_power, supersym_schur
from .verifications import SUITES

__version__ = "0.1.0"

__all__ = [
    "AlphabetSequence",
    "ChargeError",
    "ConstantTail",
    "DimensionError",
    "EmptyTail",
    "FockVector",
    "MayaState",
    "PSI",
    "PSI_STAR",
    "Partition",
    "RefinedTail",
    "SUITES",
    "Scalar",
    "StabilityError",
    "SymFunc",
    "TractabilityError",
    "TruncationError",
    "UnboundIndeterminateError",
    "apply_dressed_fermion",
    "apply_exp_H",
    "apply_fermion",
    "apply_heisenberg",
    "bra_refined_pair",
    "constant_sequence",
    "contains",
    "det_over_ring",
    "e_elem",
    "empty_sequence",
    "eval_symfunc",
    "expand_in_refined_basis",
    "flagged_schur",
    "flagged_tableau_oracle",
    "h_complete",
    "h_super",
    "hall_inner",
    "ket_general",
    "ket_partition",
    "ket_refined",
    "motegi_scrimshaw_sequence",
    "multi_schur",
    "p_power",
    "partitions_of_weight",
    "partitions_up_to_weight",
    "pieri_mult_h",
    "prefix_sequence",
    "refined_alphabet",
    "refined_dual_grothendieck",
    "refined_sequence",
    "scalar_eval",
    "scalar_from_json",
    "scalar_to_json",
    "schur_expand_multischur",
    "schur_tableau_oracle",
    "skew_function",
    "skew_multi_schur",
    "stable_dual_in_G",
    "stable_grothendieck_schur",
    "subpartitions",
    "superpartitions",
    "supersym_schur",
    "sym_schur",
    "sym_zero",
    "symfunc_from_json",
    "symfunc_to_json",
    "transpose",
    "truncated_dual_expansion",
    "vacuum_ket",
    "variables",
    "verify_branching",
    "verify_cauchy",
    "wick_expectation",
]
