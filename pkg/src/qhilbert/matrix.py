"""Dense square matrices over Q(i, sqrt(d))."""

from __future__ import annotations

import numbers

from .errors import ContextMismatch
from .field import DEFAULT_CONTEXT, FieldElement, format_rational, i_power

__all__ = ["ExactMatrix"]


def _common_context(values, default):
    ctx = None
    for v in values:
        if isinstance(v, FieldElement) and not v.is_gaussian_rational():
            if ctx is None:
                ctx = v.context
            elif v.context != ctx:
                raise ContextMismatch(f"matrix mixes sqrt({ctx.d}) and sqrt({v.context.d})")
    if ctx is None:
        for v in values:
            if isinstance(v, FieldElement):
                return v.context if default is None else default
    return ctx or default or DEFAULT_CONTEXT


class ExactMatrix:
    """Immutable ``(n+1) x (n+1)`` matrix with entries in one field context.

    ``n`` follows the index convention ``0 <= l, j <= n``; ``size == n + 1``.
    """

    __slots__ = ("context", "rows")

    def __init__(self, rows, context=None):
        rows = [list(r) for r in rows]
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise ValueError("matrix must be square and non-empty")
        flat = [v for r in rows for v in r]
        ctx = _common_context(flat, context)
        out = []
        for r in rows:
            row = []
            for v in r:
                if isinstance(v, FieldElement):
                    row.append(v.with_context(ctx))
                elif isinstance(v, numbers.Rational):
                    row.append(FieldElement(ctx, v))
                else:
                    raise TypeError(f"unsupported entry {v!r}")
            out.append(tuple(row))
        object.__setattr__(self, "context", ctx)
        object.__setattr__(self, "rows", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_function(cls, n, entry, context=None):
        """Build the matrix with entries ``entry(l, j)`` for ``0 <= l, j <= n``."""
        return cls([[entry(l, j) for j in range(n + 1)] for l in range(n + 1)], context)

    @classmethod
    def identity(cls, n, context=DEFAULT_CONTEXT):
        return cls.from_function(n, lambda l, j: 1 if l == j else 0, context)

    @property
    def size(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows) - 1

    def __getitem__(self, idx):
        l, j = idx
        return self.rows[l][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if other.size != self.size:
            raise ValueError("size mismatch")
        cols = list(zip(*other.rows))
        zero = self.context.zero
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out)

    def __mul__(self, scalar):
        return ExactMatrix([[v * scalar for v in r] for r in self.rows])

    __rmul__ = __mul__

    def map(self, fn):
        """Entrywise ``fn(l, j, value)``."""
        return ExactMatrix([[fn(l, j, v) for j, v in enumerate(r)]
                            for l, r in enumerate(self.rows)])

    def transpose(self):
        return ExactMatrix(list(zip(*self.rows)))

    def is_symmetric(self):
        return self.rows == tuple(zip(*self.rows))

    def is_identity(self):
        return all(v == (1 if l == j else 0)
                   for l, r in enumerate(self.rows) for j, v in enumerate(r))

    def is_rational(self):
        return all(v.is_rational() for r in self.rows for v in r)

    def is_integral(self):
        return all(v.is_integer() for r in self.rows for v in r)

    def unitary_conjugate(self):
        """``U M U`` with ``U = diag(i^0, ..., i^n)``."""
        return self.map(lambda l, j, v: v * i_power(l + j, self.context))

    # -- serialization ----------------------------------------------------

    def to_json(self):
        return [[v.to_json() for v in r] for r in self.rows]

    @classmethod
    def from_json(cls, rows):
        return cls([[FieldElement.from_json(v) for v in r] for r in rows])

    def to_csv(self):
        """Rows of ``p/q`` strings. Raises ValueError for non-rational entries."""
        if not self.is_rational():
            raise ValueError("CSV export requires every entry to be rational")
        return "\n".join(",".join(format_rational(v.to_fraction()) for v in r)
                         for r in self.rows)

    def to_pretty(self):
        cells = [[str(v) for v in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)

    def __repr__(self):
        return f"ExactMatrix(d={self.context.d}, n={self.n},\n{self.to_pretty()})"
