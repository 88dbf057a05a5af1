"""Exact quantum Hilbert, generalized quantum Hilbert, Filbert and Hilbert matrices.

All arithmetic happens in Q(i, sqrt(d)); nothing is ever rounded.
"""

from .errors import (
    BridgeViolation,
    CertificationError,
    ContextMismatch,
    DegenerateDenominator,
    DivisionByZero,
    IdentityViolation,
    QHilbertError,
    RootOfUnity,
    SingularMatrix,
)
from .fib import (
    ThetaParam,
    bridge_check,
    fib_closed_form,
    fib_sequence,
    fib_theta,
    fibonomial,
    quantum_param_from_theta,
)
from .field import DEFAULT_CONTEXT, FieldContext, FieldElement, field_arith, field_pow, i_power
from .hankel import (
    MatrixKind,
    build_matrix,
    closed_form_det,
    closed_form_inverse,
    det_ratio_check,
    filbert_reciprocal_det,
    filbert_reciprocal_inverse,
    unitary_conjugate,
)
from .matrix import ExactMatrix
from .oracle import bareiss_det, exact_inverse
from .qpoly import (
    MeasureSpec,
    PolyCoeffs,
    braces_identity_check,
    induction_identity_check,
    integrate_against_measure,
    kernel_coeffs,
    little_q_jacobi,
    q_pochhammer,
    specialized_poly,
    verify_orthogonality,
)
from .quantum import (
    QuantumParam,
    assert_valid_order,
    gaussian_q_binomial,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
)

__version__ = "0.1.0"
