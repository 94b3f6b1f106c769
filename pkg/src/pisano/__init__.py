"""Pisano periods, rank, order, and residue for generalized Fibonacci
sequences modulo m, with classification and exhaustive verification tools."""

from .arith import Factorization, factorize, lcm_list, legendre, mult_order, nu2
from .classify import (
    classify_by_factors,
    format_bfile,
    oeis_sequence,
    omega_lcm_table,
    rank_order_correspondence,
    verify_oeis_conjectures,
)
from .periods import (
    PisanoProfile,
    is_wall_sun_sun,
    negative_index_check,
    powers_of_two_profile,
    profile_fast,
    profile_oracle,
    residue_of,
)
from .report import Counterexample, SweepReport
from .seq import PairState, RecurrenceParams, lucas_term_mod, matrix_power, step, term_mod

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "PairState",
    "PisanoProfile",
    "Counterexample",
    "RecurrenceParams",
    "SweepReport",
    "classify_by_factors",
    "factorize",
    "format_bfile",
    "is_wall_sun_sun",
    "lcm_list",
    "legendre",
    "lucas_term_mod",
    "matrix_power",
    "mult_order",
    "negative_index_check",
    "nu2",
    "oeis_sequence",
    "omega_lcm_table",
    "powers_of_two_profile",
    "profile_fast",
    "profile_oracle",
    "rank_order_correspondence",
    "residue_of",
    "step",
    "term_mod",
    "verify_oeis_conjectures",
]
