"""Quantum integers, factorials and binomial coefficients at an exact ``s = q**(1/2)``."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DegenerateDenominator, RootOfUnity
from .field import DEFAULT_CONTEXT, FieldElement, parse_rational

__all__ = [
    "QuantumParam",
    "quantum_integer",
    "quantum_factorial",
    "quantum_binomial",
    "gaussian_q_binomial",
    "assert_valid_order",
]


@dataclass(frozen=True)
class QuantumParam:
    """A fixed square root ``s`` of ``q``.

    Every half-integer power of ``q`` is computed as an integer power of
    ``s``, so the branch of ``q**(1/2)`` is whatever ``s`` the caller chose.
    """

    s: FieldElement
    q: FieldElement = field(init=False, repr=False, compare=False)
    s_inv: FieldElement = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.s, FieldElement):
            raise TypeError("s must be a FieldElement")
        if self.s.is_zero():
            raise ValueError("s = q^(1/2) must be nonzero")
        object.__setattr__(self, "q", self.s * self.s)
        object.__setattr__(self, "s_inv", self.s.inverse())

    @classmethod
    def from_rational(cls, value, context=DEFAULT_CONTEXT):
        """Real rational ``s``; ``value`` may be a string ``"p/q"``."""
        return cls(FieldElement(context, parse_rational(value)))

    @classmethod
    def from_gaussian(cls, imag, context=DEFAULT_CONTEXT):
        """Purely imaginary ``s = imag * i``, so that ``q = -imag**2 < 0``."""
        return cls(FieldElement(context, 0, 0, parse_rational(imag)))

    @property
    def context(self):
        return self.s.context

    def to_json(self):
        return {"s": self.s.to_json()}


@lru_cache(maxsize=None)
def quantum_integer(n, p):
    """``[n]_q`` as the symmetric Laurent sum ``sum_j s**(n-1-2j)``.

    The sum form needs no division, so it is defined for every nonzero ``s``,
    including ``s = 1`` (where it returns ``n``) and roots of unity.
    """
    if n < 0:
        raise ValueError(f"quantum integers are defined for n >= 0, got {n}")
    total = p.s.context.zero
    if n == 0:
        return total
    step = p.s_inv * p.s_inv
    term = p.s ** (n - 1)
    for _ in range(n):
        total = total + term
        term = term * step
    return total


@lru_cache(maxsize=None)
def quantum_factorial(n, p):
    result = p.s.context.one
    for k in range(1, n + 1):
        result = result * quantum_integer(k, p)
    return result


@lru_cache(maxsize=None)
def quantum_binomial(n, k, p):
    """``prod_{j=1..k} [n-j+1]_q / [j]_q``; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return p.s.context.zero
    k = min(k, n - k)
    num = p.s.context.one
    den = p.s.context.one
    for j in range(1, k + 1):
        qj = quantum_integer(j, p)
        if qj.is_zero():
            raise DegenerateDenominator(
                f"[{j}]_q = 0 in the quantum binomial ({n} choose {k})")
        num = num * quantum_integer(n - j + 1, p)
        den = den * qj
    return num / den


def gaussian_q_binomial(n, k, q):
    """Gaussian binomial ``(q;q)_n / ((q;q)_k (q;q)_{n-k})`` by the product formula."""
    if not isinstance(q, FieldElement):
        q = FieldElement(DEFAULT_CONTEXT, parse_rational(q))
    if k < 0 or k > n:
        return q.context.zero
    k = min(k, n - k)
    num = q.context.one
    den = q.context.one
    for j in range(1, k + 1):
        factor = 1 - q ** j
        if factor.is_zero():
            raise DegenerateDenominator(
                f"1 - q^{j} = 0 in the Gaussian binomial ({n} choose {k})")
        num = num * (1 - q ** (n - j + 1))
        den = den * factor
    return num / den


def assert_valid_order(p, N):
    """Raise :class:`RootOfUnity` unless ``[k]_q != 0`` for ``2 <= k <= N``."""
    for k in range(2, N + 1):
        if quantum_integer(k, p).is_zero():
            raise RootOfUnity(k)
