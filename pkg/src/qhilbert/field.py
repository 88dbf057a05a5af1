"""Exact arithmetic in the quartic field Q(i, sqrt(d)).

An element is stored as ``(A + B*r + i*(C + E*r)) / D`` with ``r = sqrt(d)``,
integers ``A, B, C, E`` and a positive common denominator ``D`` such that
``gcd(A, B, C, E, D) == 1``.  The public coordinates ``a, b, c, e`` are
:class:`fractions.Fraction` values in lowest terms.

Elements whose square-root part vanishes (Gaussian rationals) live in every
context at once; they combine freely with elements of any radicand.
"""

from __future__ import annotations

import math
import numbers
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatch, DivisionByZero

__all__ = [
    "FieldContext",
    "FieldElement",
    "DEFAULT_CONTEXT",
    "field_arith",
    "field_pow",
    "i_power",
    "parse_rational",
    "format_rational",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class FieldContext:
    """Radicand ``d`` of the adjoined square root."""

    d: int

    def __post_init__(self):
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise TypeError(f"radicand must be an int, got {self.d!r}")
        if self.d < 2:
            raise ValueError(f"radicand must be >= 2, got {self.d}")
        if math.isqrt(self.d) ** 2 == self.d:
            raise ValueError(f"radicand {self.d} is a perfect square")

    def element(self, a=0, b=0, c=0, e=0):
        return FieldElement(self, a, b, c, e)

    @property
    def zero(self):
        return FieldElement(self)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def i(self):
        return FieldElement(self, 0, 0, 1)

    @property
    def sqrt_d(self):
        return FieldElement(self, 0, 1)


DEFAULT_CONTEXT = FieldContext(5)


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"``. Decimal and exponent notation are rejected."""
    if isinstance(text, numbers.Rational):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if not m:
        raise ValueError(f"not an exact rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class FieldElement:
    """Immutable element ``(a + b*sqrt(d)) + i*(c + e*sqrt(d))``."""

    __slots__ = ("context", "_num", "_den", "_hash")

    def __init__(self, context=DEFAULT_CONTEXT, a=0, b=0, c=0, e=0):
        coords = [_as_fraction(v) for v in (a, b, c, e)]
        den = 1
        for v in coords:
            den = den * v.denominator // math.gcd(den, v.denominator)
        nums = tuple(v.numerator * (den // v.denominator) for v in coords)
        self._set(context, nums, den)

    def _set(self, context, nums, den):
        g = math.gcd(*nums, den)
        if den < 0:
            g = -g
        if g != 1:
            nums = tuple(v // g for v in nums)
            den //= g
        if not any(nums):
            den = 1
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "_num", nums)
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, context, nums, den):
        obj = cls.__new__(cls)
        obj._set(context, nums, den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- coordinates ------------------------------------------------------

    @property
    def a(self):
        return Fraction(self._num[0], self._den)

    @property
    def b(self):
        return Fraction(self._num[1], self._den)

    @property
    def c(self):
        return Fraction(self._num[2], self._den)

    @property
    def e(self):
        return Fraction(self._num[3], self._den)

    @property
    def coords(self):
        return (self.a, self.b, self.c, self.e)

    @property
    def d(self):
        return self.context.d

    def is_zero(self):
        return not any(self._num)

    def __bool__(self):
        return any(self._num)

    def is_gaussian_rational(self):
        return self._num[1] == 0 and self._num[3] == 0

    def is_rational(self):
        return self._num[1] == 0 and self._num[2] == 0 and self._num[3] == 0

    def is_integer(self):
        return self.is_rational() and self._den == 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def with_context(self, context):
        if context == self.context:
            return self
        if not self.is_gaussian_rational():
            raise ContextMismatch(
                f"cannot move {self} from d={self.d} to d={context.d}")
        return FieldElement._raw(context, self._num, self._den)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        """Return ``(context, other_nums, other_den)`` or None."""
        if isinstance(other, FieldElement):
            if other.context == self.context:
                return self.context, other._num, other._den
            if other.is_gaussian_rational():
                return self.context, other._num, other._den
            if self.is_gaussian_rational():
                return other.context, other._num, other._den
            raise ContextMismatch(
                f"elements over sqrt({self.d}) and sqrt({other.d}) do not mix")
        if isinstance(other, numbers.Rational):
            f = Fraction(other)
            return self.context, (f.numerator, 0, 0, 0), f.denominator
        return None

    def _lift(self, other):
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, numbers.Rational):
            return FieldElement(self.context, other)
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, (A2, B2, C2, E2), D2 = co
        A1, B1, C1, E1 = self._num
        D1 = self._den
        return FieldElement._raw(
            ctx,
            (A1 * D2 + A2 * D1, B1 * D2 + B2 * D1,
             C1 * D2 + C2 * D1, E1 * D2 + E2 * D1),
            D1 * D2)

    __radd__ = __add__

    def __neg__(self):
        A, B, C, E = self._num
        return FieldElement._raw(self.context, (-A, -B, -C, -E), self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self + (-lifted)

    def __rsub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted + (-self)

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, (a2, b2, c2, e2), D2 = co
        a1, b1, c1, e1 = self._num
        d = ctx.d
        re_rat = a1 * a2 - c1 * c2 + d * (b1 * b2 - e1 * e2)
        re_rad = a1 * b2 + b1 * a2 - c1 * e2 - e1 * c2
        im_rat = a1 * c2 + c1 * a2 + d * (b1 * e2 + e1 * b2)
        im_rad = a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2
        return FieldElement._raw(ctx, (re_rat, re_rad, im_rat, im_rad), self._den * D2)

    __rmul__ = __mul__

    def conj_i(self):
        """Complex conjugation ``i -> -i``."""
        A, B, C, E = self._num
        return FieldElement._raw(self.context, (A, B, -C, -E), self._den)

    def conj_sqrt(self):
        """Galois conjugation ``sqrt(d) -> -sqrt(d)``."""
        A, B, C, E = self._num
        return FieldElement._raw(self.context, (A, -B, C, -E), self._den)

    def norm(self):
        """Rational norm: product of all four Galois conjugates (positive)."""
        half = self * self.conj_i()
        return (half * half.conj_sqrt()).to_fraction()

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        ci = self.conj_i()
        half = self * ci
        partner = ci * half.conj_sqrt()
        n = (half * half.conj_sqrt()).to_fraction()
        return partner * Fraction(n.denominator, n.numerator)

    def __truediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self * lifted.inverse()

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        k = int(k)
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = FieldElement._raw(self.context, (1, 0, 0, 0), 1)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if self._num != other._num or self._den != other._den:
                return False
            return self.context == other.context or self.is_gaussian_rational()
        if isinstance(other, numbers.Rational):
            return self.is_rational() and self.to_fraction() == other
        if isinstance(other, complex):
            return NotImplemented
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(Fraction(self._num[0], self._den))
            elif self.is_gaussian_rational():
                h = hash(("QQi", self._num, self._den))
            else:
                h = hash((self.d, self._num, self._den))
            object.__setattr__(self, "_hash", h)
        return h

    # -- presentation -----------------------------------------------------

    def __complex__(self):
        r = math.sqrt(self.d)
        return complex(float(self.a) + float(self.b) * r,
                       float(self.c) + float(self.e) * r)

    def __repr__(self):
        return f"FieldElement(d={self.d}, {self})"

    def __str__(self):
        a, b, c, e = self.coords
        parts = []
        for coef, unit in ((a, ""), (b, f"√{self.d}"), (c, "i"), (e, f"i√{self.d}")):
            if coef == 0:
                continue
            if unit and abs(coef) == 1:
                txt = unit
            elif unit:
                txt = f"{format_rational(abs(coef))}{unit}"
            else:
                txt = format_rational(abs(coef))
            parts.append(("-" if coef < 0 else "+", txt))
        if not parts:
            return "0"
        sign, txt = parts[0]
        out = ("-" if sign == "-" else "") + txt
        for sign, txt in parts[1:]:
            out += f" {sign} {txt}"
        return out

    def to_json(self):
        a, b, c, e = self.coords
        return {"d": self.d,
                "re": [format_rational(a), format_rational(b)],
                "im": [format_rational(c), format_rational(e)]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            return cls(DEFAULT_CONTEXT, parse_rational(obj))
        re_, im_ = obj["re"], obj["im"]
        return cls(FieldContext(int(obj["d"])),
                   parse_rational(re_[0]), parse_rational(re_[1]),
                   parse_rational(im_[0]), parse_rational(im_[1]))


def field_arith(x, y, op):
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two field elements."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def field_pow(x, k):
    return x ** k


_I_TABLE = ((1, 0), (0, 1), (-1, 0), (0, -1))


def i_power(k, context=DEFAULT_CONTEXT):
    """``i**k`` for any integer ``k`` (period 4)."""
    re_, im_ = _I_TABLE[k % 4]
    return FieldElement._raw(context, (re_, 0, im_, 0), 1)
