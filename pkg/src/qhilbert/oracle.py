"""Independent exact linear algebra used to certify the closed forms.

Nothing here imports the formula modules; the oracle only sees matrices.
"""

from __future__ import annotations

from .errors import CertificationError, SingularMatrix
from .matrix import ExactMatrix

__all__ = ["bareiss_det", "exact_inverse"]


def bareiss_det(M):
    """Determinant by fraction-free (Bareiss) elimination.

    Pivot choice is the first nonzero entry at or below the diagonal. Each
    division by the previous pivot is exact.
    """
    ctx = M.context
    a = [list(r) for r in M.rows]
    size = len(a)
    sign = 1
    prev = ctx.one
    for k in range(size - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, size):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return ctx.zero
        pivot = a[k][k]
        for i in range(k + 1, size):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
            row_i[k] = ctx.zero
        prev = pivot
    det = a[-1][-1]
    return det if sign == 1 else -det


def exact_inverse(M, certify=True):
    """Gauss-Jordan inverse; ``M @ result`` is checked against the identity."""
    ctx = M.context
    size = M.size
    aug = [list(r) + [ctx.one if i == j else ctx.zero for j in range(size)]
           for i, r in enumerate(M.rows)]
    for k in range(size):
        piv_row = next((r for r in range(k, size) if not aug[r][k].is_zero()), None)
        if piv_row is None:
            raise SingularMatrix(f"matrix is singular (no pivot in column {k})")
        if piv_row != k:
            aug[k], aug[piv_row] = aug[piv_row], aug[k]
        inv_p = aug[k][k].inverse()
        aug[k] = [v * inv_p for v in aug[k]]
        row_k = aug[k]
        for i in range(size):
            if i == k:
                continue
            f = aug[i][k]
            if f.is_zero():
                continue
            aug[i] = [x - f * y for x, y in zip(aug[i], row_k)]
    result = ExactMatrix([r[size:] for r in aug], ctx)
    if certify and not (M @ result).is_identity():
        raise CertificationError("Gauss-Jordan inverse failed its own certificate")
    return result
