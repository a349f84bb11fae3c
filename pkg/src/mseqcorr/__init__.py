"""Crosscorrelation of binary m-sequences of lengths 2^m - 1 and 2^k - 1, m = 2k."""

from .errors import *  # noqa: F401,F403
from .field import FieldCtx, FieldSpec, arith, build_field, elem_hex, load_moduli_config
from .sequences import (
    CorrDistribution,
    crosscorr,
    crosscorr_all,
    crosscorr_distribution,
    long_seq,
    moment_check,
    short_seq,
)
from .expsums import S_all_wht, S_component, S_naive, decomposition_check
from .dobbertin import make_lparams
from .zerocount import M_distribution, affine_zeros_A, classify_M, linearized_kernel_L, p_zeros
from .verify import (
    DecimationClass,
    VerifyReport,
    run_suite,
    search_three_valued,
    solve_distribution,
    valid_decimations,
)

__version__ = "0.1.0"
