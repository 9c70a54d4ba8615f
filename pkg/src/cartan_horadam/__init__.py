"""Exact arithmetic for Cartan numbers, Horadam sequences and their spinors."""
from .cartan import CartanNumber, Mat2, character, cn_conj, cn_mul, theta, theta_inv
from .cfinite import CFiniteSeq, builtin_identity_suite, cf_add, cf_from_horadam, cf_geometric, cf_is_zero
from .errors import (
    DegenerateDiscriminantError,
    NonUnitConstantError,
    NotInvertibleError,
    RingMismatchError,
    UnknownPresetError,
)
from .exact_arith import Complex, ComplexQuad, QuadElem, cq_mul, embed, quad_conj, quad_inv, quad_mul
from .genfunc import Poly, RationalGF, cartan_gf, reconcile_gf, series_expand, spinor_gf
from .horadam import PRESETS, HoradamParams, preset, roots, term_fast, term_iter
from .sequences import CartanSeqContext, binet_coeffs, binet_term, context, cw_term, reconcile_binet_constants
from .spinor import (
    Spinor,
    SpinorMat,
    epsilon,
    isotropic,
    mate,
    q_hat,
    spinor_binet,
    spinor_term,
    tilde_conj,
    vivarelli,
)

__version__ = "0.1.0"
