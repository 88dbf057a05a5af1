"""Generalized Fibonacci numbers ``F_n(theta)`` with ``2 sinh(theta) = m``.

``theta`` itself is never materialized.  With ``d = m**2 + 4`` the
exponentials are exact: ``e**theta = (m + sqrt(d))/2`` and
``e**-theta = (sqrt(d) - m)/2``, and ``q = -e**(-2 theta)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import BridgeViolation
from .field import FieldContext, FieldElement, i_power
from .quantum import QuantumParam, quantum_binomial, quantum_integer

__all__ = [
    "ThetaParam",
    "fib_sequence",
    "fib_theta",
    "fib_closed_form",
    "fibonomial",
    "quantum_param_from_theta",
    "bridge_check",
]


@dataclass(frozen=True)
class ThetaParam:
    m: int
    d: int = field(init=False)
    context: FieldContext = field(init=False, repr=False, compare=False)
    e_theta: FieldElement = field(init=False, repr=False, compare=False)
    e_minus_theta: FieldElement = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"m = 2 sinh(theta) must be a positive integer, got {self.m!r}")
        d = self.m * self.m + 4
        ctx = FieldContext(d)
        half = Fraction(1, 2)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "context", ctx)
        object.__setattr__(self, "e_theta", FieldElement(ctx, self.m * half, half))
        object.__setattr__(self, "e_minus_theta", FieldElement(ctx, -self.m * half, half))

    def to_json(self):
        return {"m": self.m}


@lru_cache(maxsize=None)
def fib_sequence(N, m):
    """``(F_0, ..., F_N)`` from ``F_{n+1} = m F_n + F_{n-1}``."""
    values = [0, 1]
    while len(values) <= N:
        values.append(m * values[-1] + values[-2])
    return tuple(values[:N + 1])


def fib_theta(n, t):
    if n < 0:
        raise ValueError("negative-index Fibonacci numbers are not supported")
    return fib_sequence(n, t.m)[n]


def fib_closed_form(n, t):
    """``(e^{n theta} - (-1)^n e^{-n theta}) / (e^theta + e^-theta)`` in Q(sqrt(d))."""
    sign = -1 if n % 2 else 1
    num = t.e_theta ** n - sign * t.e_minus_theta ** n
    return num / (t.e_theta + t.e_minus_theta)


def fibonomial(n, k, t):
    """``prod_{j=1..k} F_{n-j+1}(theta) / F_j(theta)``, an integer."""
    if k < 0 or k > n:
        return 0
    F = fib_sequence(n, t.m)
    acc = Fraction(1)
    for j in range(1, k + 1):
        acc = acc * F[n - j + 1] / F[j]
    if acc.denominator != 1:
        raise BridgeViolation(f"Fibonomial ({n} choose {k}) for m={t.m} is not an integer: {acc}")
    return acc.numerator


def quantum_param_from_theta(t):
    """``s = i e^{-theta}``, the branch with ``q = s**2 = -e^{-2 theta}``."""
    return _theta_quantum_param(t.m)


@lru_cache(maxsize=None)
def _theta_quantum_param(m):
    t = ThetaParam(m)
    return QuantumParam(t.e_minus_theta * t.context.i)


def bridge_check(n, t):
    """Check ``[n]_q = (-i)^{n-1} F_n`` and the binomial/Fibonomial link for all ``k <= n``."""
    p = quantum_param_from_theta(t)
    ctx = t.context
    lhs = quantum_integer(n, p)
    rhs = i_power(-(n - 1), ctx) * fib_theta(n, t)
    if lhs != rhs:
        raise BridgeViolation(f"[{n}]_q = {lhs} but (-i)^{n - 1} F_{n} = {rhs} (m={t.m})")
    for k in range(n + 1):
        lhs = quantum_binomial(n, k, p)
        rhs = i_power(-k * (n - k), ctx) * fibonomial(n, k, t)
        if lhs != rhs:
            raise BridgeViolation(
                f"quantum binomial ({n} choose {k}) = {lhs}, Fibonomial side = {rhs} (m={t.m})")
