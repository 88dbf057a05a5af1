"""Hilbert, quantum Hilbert and Filbert matrices with their closed-form inverses and determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IdentityViolation
from .fib import ThetaParam, fib_theta, fibonomial, quantum_param_from_theta
from .field import DEFAULT_CONTEXT, FieldElement, parse_rational
from .matrix import ExactMatrix
from .quantum import QuantumParam, assert_valid_order, quantum_binomial, quantum_integer

__all__ = [
    "MatrixKind",
    "build_matrix",
    "closed_form_inverse",
    "closed_form_det",
    "unitary_conjugate",
    "det_ratio_check",
    "generalized_binomial",
    "quantum_inverse_entry",
    "filbert_reciprocal_inverse",
    "filbert_reciprocal_det",
]

KINDS = ("classical", "quantum", "filbert")


@dataclass(frozen=True)
class MatrixKind:
    """Which matrix family, with its shift ``alpha`` and parameter.

    ``classical`` takes a positive rational ``alpha``; ``quantum`` and
    ``filbert`` take a positive integer ``alpha`` plus a
    :class:`QuantumParam` or :class:`ThetaParam` respectively.
    """

    tag: str
    alpha: Fraction | int = 1
    param: QuantumParam | ThetaParam | None = None

    def __post_init__(self):
        if self.tag not in KINDS:
            raise ValueError(f"unknown matrix kind {self.tag!r}")
        if self.tag == "classical":
            alpha = parse_rational(self.alpha)
            if alpha <= 0:
                raise ValueError(f"alpha must be positive, got {alpha}")
            if self.param is not None:
                raise ValueError("classical matrices take no parameter")
            object.__setattr__(self, "alpha", alpha)
            return
        alpha = parse_rational(self.alpha)
        if alpha.denominator != 1 or alpha < 1:
            raise ValueError(f"{self.tag} matrices need a positive integer alpha, got {alpha}")
        object.__setattr__(self, "alpha", int(alpha))
        expected = QuantumParam if self.tag == "quantum" else ThetaParam
        if not isinstance(self.param, expected):
            raise TypeError(f"{self.tag} matrices need a {expected.__name__}")

    @classmethod
    def classical(cls, alpha=1):
        return cls("classical", alpha)

    @classmethod
    def quantum(cls, param, alpha=1):
        return cls("quantum", alpha, param)

    @classmethod
    def filbert(cls, param, alpha=1):
        if isinstance(param, int):
            param = ThetaParam(param)
        return cls("filbert", alpha, param)

    @property
    def quantum_param(self):
        if self.tag == "quantum":
            return self.param
        if self.tag == "filbert":
            return quantum_param_from_theta(self.param)
        raise ValueError("classical matrices have no quantum parameter")

    @property
    def context(self):
        if self.tag == "classical":
            return DEFAULT_CONTEXT
        return self.param.context

    def matched_quantum(self):
        """The quantum kind related to this Filbert kind by ``H = U F U``."""
        if self.tag != "filbert":
            raise ValueError("only Filbert kinds have a matched quantum kind")
        return MatrixKind.quantum(self.quantum_param, self.alpha)

    def validate(self, n):
        if self.tag == "quantum":
            assert_valid_order(self.param, 2 * n + self.alpha)


def generalized_binomial(x, k):
    """``prod_{j=1..k} (x - j + 1) / j`` for rational ``x``; zero for ``k < 0``."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    acc = Fraction(1)
    for j in range(1, k + 1):
        acc = acc * (x - j + 1) / j
    return acc


def _sign(k):
    return -1 if k % 2 else 1


def build_matrix(kind, n):
    """The Hankel matrix of size ``n + 1`` for ``kind``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    kind.validate(n)
    alpha = kind.alpha
    if kind.tag == "classical":
        return ExactMatrix.from_function(
            n, lambda l, j: alpha / (l + j + alpha), kind.context)
    if kind.tag == "quantum":
        p = kind.param
        qa = quantum_integer(alpha, p)
        return ExactMatrix.from_function(
            n, lambda l, j: qa / quantum_integer(l + j + alpha, p), kind.context)
    t = kind.param
    fa = fib_theta(alpha, t)
    return ExactMatrix.from_function(
        n, lambda l, j: Fraction(fa, fib_theta(l + j + alpha, t)), kind.context)


def quantum_inverse_entry(n, l, j, alpha, p):
    """Closed-form ``(l, j)`` entry of the inverse generalized quantum Hilbert matrix.

    Zero when ``l`` or ``j`` exceeds ``n`` (the binomial conventions make it so).
    """
    qb = quantum_binomial
    factor = quantum_integer(l + j + alpha, p) / quantum_integer(alpha, p)
    return (_sign(l + j) * factor
            * qb(n + l + alpha, n - j, p) * qb(n + j + alpha, n - l, p)
            * qb(l + j + alpha - 1, l, p) * qb(l + j + alpha - 1, j, p))


def _classical_inverse_entry(n, l, j, alpha):
    gb = generalized_binomial
    return (_sign(l + j) * (l + j + alpha) / alpha
            * gb(n + l + alpha, n - j) * gb(n + j + alpha, n - l)
            * gb(l + j + alpha - 1, l) * gb(l + j + alpha - 1, j))


def filbert_reciprocal_inverse(n, alpha, t):
    """Inverse of ``(1 / F_{l+j+alpha}(theta))`` with integer entries.

    Note the matrix here has no ``F_alpha`` numerator.
    """
    def entry(l, j):
        exponent = n * (l + j + alpha) - l * (l - 1) // 2 - j * (j - 1) // 2
        return (_sign(exponent) * fib_theta(l + j + alpha, t)
                * fibonomial(n + l + alpha, n - j, t)
                * fibonomial(n + j + alpha, n - l, t)
                * fibonomial(l + j + alpha - 1, l, t)
                * fibonomial(l + j + alpha - 1, j, t))
    return ExactMatrix.from_function(n, entry, t.context)


def filbert_reciprocal_det(n, alpha, t):
    """Determinant of ``(1 / F_{l+j+alpha}(theta))`` as an exact Fraction."""
    prod = fib_theta(alpha, t)
    for k in range(1, n + 1):
        prod *= fib_theta(2 * k + alpha, t) * fibonomial(2 * k + alpha - 1, k, t) ** 2
    return Fraction(_sign(alpha * (n * (n + 1) // 2)), prod)


def closed_form_inverse(kind, n):
    """Inverse of ``build_matrix(kind, n)`` from the explicit entry formulas."""
    if n < 0:
        raise ValueError("n must be non-negative")
    kind.validate(n)
    alpha = kind.alpha
    if kind.tag == "classical":
        return ExactMatrix.from_function(
            n, lambda l, j: _classical_inverse_entry(n, l, j, alpha), kind.context)
    if kind.tag == "quantum":
        p = kind.param
        return ExactMatrix.from_function(
            n, lambda l, j: quantum_inverse_entry(n, l, j, alpha, p), kind.context)
    # F = F_alpha * A, so F^{-1} = A^{-1} / F_alpha.
    fa = fib_theta(alpha, kind.param)
    return filbert_reciprocal_inverse(n, alpha, kind.param) * Fraction(1, fa)


def closed_form_det(kind, n):
    """Determinant of ``build_matrix(kind, n)`` as a :class:`FieldElement`."""
    if n < 0:
        raise ValueError("n must be non-negative")
    kind.validate(n)
    alpha = kind.alpha
    ctx = kind.context
    if kind.tag == "classical":
        prod = Fraction(1)
        for k in range(1, n + 1):
            prod *= (2 * k + alpha) * generalized_binomial(2 * k + alpha - 1, k) ** 2
        return FieldElement(ctx, alpha ** n / prod)
    if kind.tag == "quantum":
        p = kind.param
        prod = ctx.one
        for k in range(1, n + 1):
            prod = prod * quantum_integer(2 * k + alpha, p) * quantum_binomial(2 * k + alpha - 1, k, p) ** 2
        return quantum_integer(alpha, p) ** n / prod
    t = kind.param
    # det(F_alpha * A) = F_alpha^(n+1) det A
    return FieldElement(ctx, fib_theta(alpha, t) ** (n + 1) * filbert_reciprocal_det(n, alpha, t))


def unitary_conjugate(M):
    """``U_n M U_n`` where ``U_n = diag(i^0, ..., i^n)``."""
    return M.unitary_conjugate()


def det_ratio_check(kind, n):
    """Check ``D_{n-1} / D_n = ([2n+alpha]/[alpha]) * binom(2n+alpha-1, n)**2``."""
    if kind.tag == "classical":
        raise ValueError("det_ratio_check applies to quantum kinds")
    if n < 1:
        raise ValueError("n must be positive")
    p = kind.quantum_param
    qkind = kind if kind.tag == "quantum" else kind.matched_quantum()
    alpha = kind.alpha
    lhs = closed_form_det(qkind, n - 1) / closed_form_det(qkind, n)
    rhs = (quantum_integer(2 * n + alpha, p) / quantum_integer(alpha, p)
           * quantum_binomial(2 * n + alpha - 1, n, p) ** 2)
    if lhs != rhs:
        raise IdentityViolation(f"D_{n - 1}/D_{n} = {lhs} but the leading-coefficient side is {rhs}")
    return lhs
