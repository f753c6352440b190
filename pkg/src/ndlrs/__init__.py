"""Exact algebra for n-dimensional linear recurring sequences.

Border decomposition of f * Gamma(s), border polynomials, the axis
generators gamma_i of Ann(s) (gcd and lcm routes) and an F-basis of Ann(s)
from an ideal-quotient kernel, over F_p or Q.
"""

from .annihilator import (
    AnnBasisResult,
    EvrWitness,
    ann_basis,
    cofinite_dim,
    gamma_1d,
    gamma_axis_gcd,
    gamma_axis_lcm,
    is_member,
    quotient_kernel,
)
from .border import (
    beta0,
    beta0_direct,
    beta_k,
    beta_k_direct,
    border_cell,
    classify,
    decompose,
    is_char_window,
    truncated_product,
)
from .errors import DomainError, NdlrsError, ParseError, WindowError
from .field import FieldCtx
from .poly import (
    Poly,
    Series,
    axis_content,
    degree_vector,
    divided_difference,
    gcd_axis,
    normal_form,
    reciprocal,
    restrict,
    uni_divrem,
    uni_gcd,
    uni_lcm,
)
from .regions import Region
from .sequences import (
    EvrSequence,
    NDSequence,
    WindowSequence,
    evr_from_rational,
    evr_seq_new,
    gamma_window,
    left_shift,
    minus_map,
    section,
    shift_action,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
