"""Little q-Jacobi polynomials, the discrete measure ``mu^(alpha)(q)`` and kernel coefficients.

The measure puts mass ``(1 - q^alpha) q^(k alpha)`` at ``q^(k + 1/2)`` for
``k >= 0``.  Integrals are evaluated by closed-form geometric sums, never by
truncation, so they are exact identities whenever ``q^(alpha+j) != 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominator, IdentityViolation
from .field import FieldContext, FieldElement
from .hankel import quantum_inverse_entry
from .matrix import ExactMatrix
from .quantum import QuantumParam, assert_valid_order, quantum_binomial, quantum_integer

__all__ = [
    "PolyCoeffs",
    "MeasureSpec",
    "q_pochhammer",
    "little_q_jacobi",
    "specialized_poly",
    "specialized_poly_via_jacobi",
    "integrate_against_measure",
    "moment",
    "verify_orthogonality",
    "kernel_term",
    "kernel_coeffs",
    "induction_identity_check",
    "braces_identity_check",
]


class PolyCoeffs:
    """Coefficients of a polynomial in ``x``; index is the power of ``x``."""

    __slots__ = ("context", "coeffs")

    def __init__(self, coeffs, context=None):
        coeffs = list(coeffs)
        if context is None:
            context = next((c.context for c in coeffs
                            if isinstance(c, FieldElement) and not c.is_gaussian_rational()),
                           None)
        if context is None:
            context = next((c.context for c in coeffs if isinstance(c, FieldElement)),
                           FieldContext(5))
        coeffs = [c.with_context(context) if isinstance(c, FieldElement)
                  else FieldElement(context, c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyCoeffs is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.context.zero

    def __eq__(self, other):
        if not isinstance(other, PolyCoeffs):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        size = max(len(self), len(other))
        return PolyCoeffs([self[k] + other[k] for k in range(size)], self.context)

    def __mul__(self, other):
        if not isinstance(other, PolyCoeffs):
            return PolyCoeffs([c * other for c in self.coeffs], self.context)
        if not self.coeffs or not other.coeffs:
            return PolyCoeffs([], self.context)
        out = [self.context.zero] * (len(self) + len(other) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] = out[i + j] + x * y
        return PolyCoeffs(out, self.context)

    __rmul__ = __mul__

    def rescale(self, c):
        """Coefficients of ``x -> P(c * x)``."""
        power = self.context.one
        out = []
        for coef in self.coeffs:
            out.append(coef * power)
            power = power * c
        return PolyCoeffs(out, self.context)

    def __call__(self, x):
        acc = self.context.zero
        for coef in reversed(self.coeffs):
            acc = acc * x + coef
        return acc

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        return f"PolyCoeffs([{', '.join(str(c) for c in self.coeffs)}])"


@dataclass(frozen=True)
class MeasureSpec:
    alpha: int
    p: QuantumParam

    def __post_init__(self):
        if isinstance(self.alpha, bool) or not isinstance(self.alpha, int) or self.alpha < 1:
            raise ValueError(f"alpha must be a positive integer, got {self.alpha!r}")

    def converges(self):
        """Exact test of ``|q| < 1`` (so the masses form a convergent series)."""
        q = self.p.q
        mod2 = q * q.conj_i()  # |q|^2 = u + v sqrt(d), real
        u = mod2.a - 1
        v = mod2.b
        return _sign_of(u, v, q.d) < 0


def _sign_of(u, v, d):
    """Sign of the real number ``u + v sqrt(d)``."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if su == sv or sv == 0:
        return su
    if su == 0:
        return sv
    # opposite signs: compare u^2 with d v^2
    diff = u * u - d * v * v
    return su if diff > 0 else (sv if diff < 0 else 0)


def q_pochhammer(a, q, k):
    """``(a; q)_k = prod_{i<k} (1 - a q^i)``."""
    if isinstance(a, FieldElement):
        result = a.context.one
    elif isinstance(q, FieldElement):
        result = q.context.one
    else:
        result = Fraction(1)
    term = a
    for _ in range(k):
        result = result * (1 - term)
        term = term * q
    return result


def little_q_jacobi(n, a, b, p):
    """Coefficients in ``x`` of the terminating series ``2phi1(q^-n, abq^(n+1); aq; q, xq)``."""
    q = p.q
    ctx = p.context
    top1 = q ** -n
    top2 = a * b * q ** (n + 1)
    bottom = a * q
    coeffs = []
    for k in range(n + 1):
        den = q_pochhammer(bottom, q, k) * q_pochhammer(q, q, k)
        if den.is_zero():
            raise DegenerateDenominator(f"(aq;q)_{k} (q;q)_{k} vanishes")
        num = q_pochhammer(top1, q, k) * q_pochhammer(top2, q, k) * q ** k
        coeffs.append(num / den)
    return PolyCoeffs(coeffs, ctx)


def specialized_poly(n, alpha, p):
    """``sum_j binom(n,j) binom(n+j+alpha-1, n) (-x)^j`` with quantum binomials."""
    assert_valid_order(p, 2 * n + alpha - 1)
    coeffs = [(-1) ** j * quantum_binomial(n, j, p) * quantum_binomial(n + j + alpha - 1, n, p)
              for j in range(n + 1)]
    return PolyCoeffs(coeffs, p.context)


def specialized_poly_via_jacobi(n, alpha, p):
    """Same polynomial built from ``little_q_jacobi(n, q^(alpha-1), 1)`` at ``x / s``."""
    jac = little_q_jacobi(n, p.q ** (alpha - 1), p.context.one, p)
    return jac.rescale(p.s_inv) * quantum_binomial(n + alpha - 1, n, p)


def moment(j, spec):
    """``int x^j dmu^(alpha)(q) = (1 - q^alpha) s^j / (1 - q^(alpha + j))``."""
    q = spec.p.q
    den = 1 - q ** (spec.alpha + j)
    if den.is_zero():
        raise DegenerateDenominator(f"q^{spec.alpha + j} = 1: the geometric series has no closed form")
    return (1 - q ** spec.alpha) * spec.p.s ** j / den


def integrate_against_measure(P, spec):
    total = spec.p.context.zero
    for j, c in enumerate(P.coeffs):
        if c:
            total = total + c * moment(j, spec)
    return total


def verify_orthogonality(n, m, alpha, p):
    """``int p_n p_m dmu``; equals ``delta_{nm} [alpha]/[2n+alpha]``."""
    spec = MeasureSpec(alpha, p)
    return integrate_against_measure(
        specialized_poly(n, alpha, p) * specialized_poly(m, alpha, p), spec)


def kernel_term(k, l, j, alpha, p):
    """Contribution of degree ``k`` to the ``x^l y^j`` kernel coefficient."""
    if k < max(l, j):
        return p.context.zero
    qb = quantum_binomial
    sign = -1 if (l + j) % 2 else 1
    return (sign * quantum_integer(2 * k + alpha, p) / quantum_integer(alpha, p)
            * qb(k, l, p) * qb(k, j, p) * qb(k + l + alpha - 1, k, p) * qb(k + j + alpha - 1, k, p))


def kernel_coeffs(n, alpha, p):
    """Matrix of ``x^l y^j`` coefficients of the kernel polynomial ``K_n``."""
    assert_valid_order(p, 2 * n + alpha)

    def entry(l, j):
        total = p.context.zero
        for k in range(max(l, j), n + 1):
            total = total + kernel_term(k, l, j, alpha, p)
        return total

    return ExactMatrix.from_function(n, entry, p.context)


def induction_identity_check(n, l, j, alpha, p):
    """Check ``R(n+1; l, j) - R(n; l, j) = C(n+1; l, j)``; returns the common value."""
    lhs = (quantum_inverse_entry(n + 1, l, j, alpha, p)
           - quantum_inverse_entry(n, l, j, alpha, p))
    rhs = kernel_term(n + 1, l, j, alpha, p)
    if lhs != rhs:
        raise IdentityViolation(f"induction step fails at n={n}, l={l}, j={j}: {lhs} != {rhs}")
    return lhs


def braces_identity_check(n, l, j, alpha, p):
    """Check ``[n+l+a+1][n+j+a+1] - [n+1-j][n+1-l] = [2n+2+a][l+j+a]``."""
    qi = quantum_integer
    a = alpha
    lhs = qi(n + l + a + 1, p) * qi(n + j + a + 1, p) - qi(n + 1 - j, p) * qi(n + 1 - l, p)
    rhs = qi(2 * n + 2 + a, p) * qi(l + j + a, p)
    if lhs != rhs:
        raise IdentityViolation(f"braces identity fails at n={n}, l={l}, j={j}: {lhs} != {rhs}")
    return lhs
