"""Exact symplectic tree-algebra calculator.

Public surface: exact scalars and free vectors with exact linear algebra
(``exact``), the symplectic module with its GL action and coinvariant
reduction (``symplectic``), H-trees and the tree space with its normal
forms (``trees``), bidegree projections, traces and bilinear forms
(``forms``), knot polynomials and surgery formulas (``surgery``), the text
grammar (``grammar``), and the command line (``cli``).
"""

from .exact import (
    FreeVec,
    InconsistentSystem,
    LinearSystemError,
    Scalar,
    SpanBasis,
    UnderdeterminedSystem,
    scalar,
    solve_linear,
    span_reduce,
)
from .symplectic import (
    BasisLabel,
    DEFAULT_GENUS,
    Elementary,
    SignFlip,
    Transposition,
    a,
    all_generators,
    b,
    basis_labels,
    coinvariant_reduce,
    gl_generator_action,
    gl_hvec_action,
    hvec,
    omega,
    omega_bar,
    project_lagrangian,
)
from .trees import (
    HTree,
    a2_equal,
    a2_normalize,
    lambda4_embed,
    tau2_bscc_twist,
    tree,
    tree_expand,
)
from .forms import (
    b_form,
    cocycle,
    contract_cs,
    eta_s,
    j_form,
    nabla,
    project_bidegree,
    q_form,
    trace_a,
    trace_b,
    upsilon,
    w0_member,
)
from .surgery import (
    BUILTIN_KNOTS,
    FIGURE_EIGHT,
    KnotRecord,
    LaurentPoly,
    POINCARE,
    SphereInvariants,
    TREFOIL,
    casson_surgery,
    cocycle_coefficients,
    connected_sum,
    conway_coefficient,
    d2_value,
    jones_h_derivative,
    lambda2_surgery,
    reverse_orientation,
    solve_alpha_r,
    vanishing_combo,
)
from .grammar import (
    ParseError,
    format_hvec,
    format_tensor,
    parse_hvec,
    parse_tensor,
    parse_tree,
    parse_twist,
)

__all__ = [name for name in dir() if not name.startswith("_")]
