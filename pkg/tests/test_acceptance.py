"""Exit criteria. Every check is exact (zero tolerance).

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

from fractions import Fraction

import pytest

from qhilbert import (
    ExactMatrix,
    MatrixKind,
    MeasureSpec,
    PolyCoeffs,
    QuantumParam,
    ThetaParam,
    bareiss_det,
    braces_identity_check,
    bridge_check,
    build_matrix,
    closed_form_det,
    closed_form_inverse,
    exact_inverse,
    filbert_reciprocal_inverse,
    fib_sequence,
    fib_theta,
    fibonomial,
    i_power,
    induction_identity_check,
    integrate_against_measure,
    kernel_coeffs,
    quantum_integer,
    quantum_param_from_theta,
    unitary_conjugate,
    verify_orthogonality,
)
from qhilbert.errors import CertificationError

from conftest import GRID_PARAMS

ALPHAS = (1, 2, 3)
MS = (1, 2, 3)


def _run(criterion, number, title, body):
    """Evaluate ``body`` (returns a list of failures) and record the outcome."""
    try:
        failures = body()
    except CertificationError as exc:
        failures = [str(exc)]
    detail = "" if not failures else f"{len(failures)} failure(s), first: {failures[0]}"
    criterion(number, title, not failures, detail)
    assert not failures, detail


def test_c01_choi_inverse(criterion):
    def body():
        kind = MatrixKind.classical(1)
        bad = []
        if closed_form_inverse(kind, 1) != ExactMatrix([[4, -6], [-6, 12]]):
            bad.append("n=1 example")
        for n in range(11):
            if closed_form_inverse(kind, n) != exact_inverse(build_matrix(kind, n)):
                bad.append(f"n={n}")
        return bad
    _run(criterion, 1, "Choi inverse of the Hilbert matrix, n <= 10", body)


def test_c02_hilbert_determinant(criterion):
    def body():
        kind = MatrixKind.classical(1)
        bad = []
        if closed_form_det(kind, 2) != Fraction(1, 2160):
            bad.append("n=2 value")
        for n in range(11):
            if closed_form_det(kind, n) != bareiss_det(build_matrix(kind, n)):
                bad.append(f"n={n}")
        return bad
    _run(criterion, 2, "Hilbert determinant, n <= 10", body)


def test_c03_quantum_inverse_and_det(criterion):
    def body():
        bad = []
        for name, p in GRID_PARAMS.items():
            for alpha in ALPHAS:
                kind = MatrixKind.quantum(p, alpha)
                for n in range(11):
                    M = build_matrix(kind, n)
                    if not (closed_form_inverse(kind, n) @ M).is_identity():
                        bad.append(f"inverse {name} alpha={alpha} n={n}")
                    if closed_form_det(kind, n) != bareiss_det(M):
                        bad.append(f"det {name} alpha={alpha} n={n}")
        return bad
    _run(criterion, 3, "generalized quantum Hilbert inverse and determinant", body)


def test_c04_filbert_inverse_det_integrality(criterion):
    def body():
        bad = []
        for m in MS:
            t = ThetaParam(m)
            for alpha in ALPHAS:
                kind = MatrixKind.filbert(t, alpha)
                for n in range(11):
                    M = build_matrix(kind, n)
                    if not (closed_form_inverse(kind, n) @ M).is_identity():
                        bad.append(f"inverse m={m} alpha={alpha} n={n}")
                    if closed_form_det(kind, n) != bareiss_det(M):
                        bad.append(f"det m={m} alpha={alpha} n={n}")
                    A = ExactMatrix.from_function(
                        n, lambda l, j: Fraction(1, fib_theta(l + j + alpha, t)), t.context)
                    Ainv = filbert_reciprocal_inverse(n, alpha, t)
                    if not Ainv.is_integral() or not (A @ Ainv).is_identity():
                        bad.append(f"integral inverse m={m} alpha={alpha} n={n}")
        return bad
    _run(criterion, 4, "Filbert inverse, determinant and integrality", body)


def test_c05_conjugation(criterion):
    def body():
        bad = []
        for m in MS:
            for alpha in ALPHAS:
                fkind = MatrixKind.filbert(m, alpha)
                qkind = fkind.matched_quantum()
                for n in range(11):
                    if unitary_conjugate(build_matrix(fkind, n)) != build_matrix(qkind, n):
                        bad.append(f"H = UFU m={m} alpha={alpha} n={n}")
                    if unitary_conjugate(closed_form_inverse(qkind, n)) != closed_form_inverse(fkind, n):
                        bad.append(f"F^-1 = U H^-1 U m={m} alpha={alpha} n={n}")
        return bad
    _run(criterion, 5, "unitary conjugation between quantum and Filbert matrices", body)


def test_c06_moments(criterion):
    def body():
        bad = []
        for name, p in GRID_PARAMS.items():
            for alpha in ALPHAS:
                spec = MeasureSpec(alpha, p)
                for n in range(21):
                    xn = PolyCoeffs([0] * n + [1], p.context)
                    value = integrate_against_measure(xn, spec)
                    if value != quantum_integer(alpha, p) / quantum_integer(n + alpha, p):
                        bad.append(f"{name} alpha={alpha} n={n}")
                    if alpha == 1 and value != 1 / quantum_integer(n + 1, p):
                        bad.append(f"{name} 1/[n+1] n={n}")
        return bad
    _run(criterion, 6, "moment identities, n <= 20", body)


def test_c07_orthogonality(criterion):
    def body():
        bad = []
        for name, p in GRID_PARAMS.items():
            for alpha in ALPHAS:
                for n in range(7):
                    for m in range(7):
                        value = verify_orthogonality(n, m, alpha, p)
                        expected = (quantum_integer(alpha, p) / quantum_integer(2 * n + alpha, p)
                                    if n == m else 0)
                        if value != expected:
                            bad.append(f"{name} alpha={alpha} n={n} m={m}")
        return bad
    _run(criterion, 7, "orthogonality of the specialized polynomials, n, m <= 6", body)


def test_c08_kernel_inverse_duality(criterion):
    def body():
        bad = []
        for name, p in GRID_PARAMS.items():
            for alpha in ALPHAS:
                for n in range(9):
                    if kernel_coeffs(n, alpha, p) != closed_form_inverse(MatrixKind.quantum(p, alpha), n):
                        bad.append(f"{name} alpha={alpha} n={n}")
        return bad
    _run(criterion, 8, "kernel coefficients equal the closed-form inverse, n <= 8", body)


def test_c09_proof_and_bridge_identities(criterion):
    def body():
        bad = []
        for name, p in GRID_PARAMS.items():
            for alpha in ALPHAS:
                for n in range(7):
                    for l in range(n + 2):
                        for j in range(n + 2):
                            try:
                                induction_identity_check(n, l, j, alpha, p)
                                braces_identity_check(n, l, j, alpha, p)
                            except CertificationError as exc:
                                bad.append(f"{name}: {exc}")
        for m in MS:
            t = ThetaParam(m)
            p = quantum_param_from_theta(t)
            for n in range(21):
                try:
                    bridge_check(n, t)
                except CertificationError as exc:
                    bad.append(str(exc))
                for alpha in ALPHAS:
                    lhs = quantum_integer(alpha, p) / quantum_integer(n + alpha, p)
                    rhs = i_power(n, t.context) * Fraction(fib_theta(alpha, t), fib_theta(n + alpha, t))
                    if lhs != rhs:
                        bad.append(f"entry link m={m} alpha={alpha} l+j={n}")
        return bad
    _run(criterion, 9, "induction, braces and bridge identities", body)


def test_c10_fibonomials(criterion):
    def body():
        bad = []
        for m in MS:
            t = ThetaParam(m)
            F = fib_sequence(20, m)
            for n in range(21):
                for k in range(n + 1):
                    exact = Fraction(1)
                    for j in range(1, k + 1):
                        exact *= Fraction(F[n - j + 1], F[j])
                    if exact.denominator != 1 or fibonomial(n, k, t) != exact:
                        bad.append(f"integrality m={m} ({n} {k})")
                    if 1 <= k < n:
                        rec = (F[k - 1] * fibonomial(n - 1, k, t)
                               + F[n - k + 1] * fibonomial(n - 1, k - 1, t))
                        if rec != exact:
                            bad.append(f"recursion m={m} ({n} {k})")
        return bad
    _run(criterion, 10, "Fibonomial integrality and recursion, n <= 20", body)


def test_c11_classical_limit(criterion):
    def body():
        bad = []
        one = QuantumParam.from_rational(1)
        for alpha in (1, 2):
            qkind = MatrixKind.quantum(one, alpha)
            ckind = MatrixKind.classical(alpha)
            for n in range(9):
                if closed_form_inverse(qkind, n) != closed_form_inverse(ckind, n):
                    bad.append(f"inverse alpha={alpha} n={n}")
                if closed_form_det(qkind, n) != closed_form_det(ckind, n):
                    bad.append(f"det alpha={alpha} n={n}")
                if build_matrix(qkind, n) != build_matrix(ckind, n):
                    bad.append(f"matrix alpha={alpha} n={n}")
        return bad
    _run(criterion, 11, "s = 1 reproduces the classical formulas, n <= 8", body)
