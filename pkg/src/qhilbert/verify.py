"""Invariant suites over a parameter grid, shared by the CLI and the tests."""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .errors import CertificationError
from .fib import bridge_check, fib_closed_form, fib_theta, fibonomial
from .field import i_power
from .hankel import (
    MatrixKind,
    build_matrix,
    closed_form_det,
    closed_form_inverse,
    det_ratio_check,
)
from .qpoly import (
    MeasureSpec,
    braces_identity_check,
    induction_identity_check,
    kernel_coeffs,
    moment,
    verify_orthogonality,
)
from .quantum import QuantumParam, quantum_integer

SUITES = ("inverse", "det", "orthogonality", "identities", "bridge")


@dataclass(frozen=True)
class CaseResult:
    suite: str
    label: str
    ok: bool
    detail: str = ""

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        tail = f"  ({self.detail})" if self.detail else ""
        return f"{status} {self.suite} {self.label}{tail}"


def _case(suite, label, check, note=""):
    """Run ``check``; only an explicit ``False`` or a certification error fails."""
    try:
        outcome = check()
    except CertificationError as exc:
        return CaseResult(suite, label, False, str(exc))
    if outcome is False:
        return CaseResult(suite, label, False, "mismatch")
    return CaseResult(suite, label, True, note)


def inverse_suite(kind, n):
    def check(k):
        def run():
            M = build_matrix(kind, k)
            closed = closed_form_inverse(kind, k)
            if not (M @ closed).is_identity():
                return False
            return closed == oracle.exact_inverse(M)
        return run
    return [_case("inverse", f"n={k}", check(k)) for k in range(n + 1)]


def det_suite(kind, n):
    def check(k):
        def run():
            closed = closed_form_det(kind, k)
            return (not closed.is_zero()) and closed == oracle.bareiss_det(build_matrix(kind, k))
        return run
    return [_case("det", f"n={k}", check(k)) for k in range(n + 1)]


def orthogonality_suite(kind, n):
    p = kind.quantum_param
    alpha = kind.alpha
    spec = MeasureSpec(alpha, p)
    note = "" if spec.converges() else "formal: |q| >= 1"
    out = []
    for a in range(n + 1):
        for b in range(n + 1):
            def run(a=a, b=b):
                value = verify_orthogonality(a, b, alpha, p)
                if a != b:
                    return value.is_zero()
                return value == quantum_integer(alpha, p) / quantum_integer(2 * a + alpha, p)
            out.append(_case("orthogonality", f"n={a} m={b}", run, note))
    for j in range(2 * n + 1):
        def run(j=j):
            return moment(j, spec) == quantum_integer(alpha, p) / quantum_integer(j + alpha, p)
        out.append(_case("orthogonality", f"moment x^{j}", run, note))
    return out


def identities_suite(kind, n):
    if kind.tag == "classical":
        return _classical_limit_cases(kind, n)
    p = kind.quantum_param
    qkind = kind if kind.tag == "quantum" else kind.matched_quantum()
    alpha = kind.alpha
    out = []
    for k in range(n + 1):
        out.append(_case("identities", f"kernel n={k}",
                         lambda k=k: kernel_coeffs(k, alpha, p) == closed_form_inverse(qkind, k)))
        if k >= 1:
            out.append(_case("identities", f"det-ratio n={k}",
                             lambda k=k: det_ratio_check(qkind, k) is not None))

        def steps(k=k):
            for l in range(k + 2):
                for j in range(k + 2):
                    induction_identity_check(k, l, j, alpha, p)
                    braces_identity_check(k, l, j, alpha, p)
        out.append(_case("identities", f"induction+braces n={k}", steps))
    return out


def _classical_limit_cases(kind, n):
    alpha = kind.alpha
    if alpha.denominator != 1:
        return [CaseResult("identities", "classical-limit", True, "skipped: non-integer alpha")]
    qkind = MatrixKind.quantum(QuantumParam.from_rational(1), int(alpha))
    out = []
    for k in range(n + 1):
        out.append(_case("identities", f"classical-limit n={k}",
                         lambda k=k: closed_form_inverse(qkind, k) == closed_form_inverse(kind, k)
                         and closed_form_det(qkind, k) == closed_form_det(kind, k)))
    return out


def bridge_suite(kind, n):
    if kind.tag != "filbert":
        raise ValueError("the bridge suite needs a Filbert kind (--m)")
    t = kind.param
    p = kind.quantum_param
    alpha = kind.alpha
    qkind = kind.matched_quantum()
    out = []
    for k in range(n + 1):
        out.append(_case("bridge", f"quantum/fib n={k}", lambda k=k: bridge_check(k, t)))
        out.append(_case("bridge", f"closed-form F_{k}",
                         lambda k=k: fib_closed_form(k, t) == fib_theta(k, t)))

        def recursion(k=k):
            for j in range(1, k):
                lhs = fibonomial(k, j, t)
                rhs = (fib_theta(j - 1, t) * fibonomial(k - 1, j, t)
                       + fib_theta(k - j + 1, t) * fibonomial(k - 1, j - 1, t))
                if lhs != rhs:
                    return False
            return True
        out.append(_case("bridge", f"fibonomial recursion n={k}", recursion))

        def entries(k=k):
            ctx = t.context
            for s in range(2 * k + 1):
                lhs = quantum_integer(alpha, p) / quantum_integer(s + alpha, p)
                rhs = i_power(s, ctx) * fib_theta(alpha, t) / fib_theta(s + alpha, t)
                if lhs != rhs:
                    return False
            return True
        out.append(_case("bridge", f"entry link n={k}", entries))

        def conjugation(k=k):
            F = build_matrix(kind, k)
            H = build_matrix(qkind, k)
            if F.unitary_conjugate() != H:
                return False
            if closed_form_inverse(qkind, k).unitary_conjugate() != closed_form_inverse(kind, k):
                return False
            sign = -1 if (k * (k + 1) // 2) % 2 else 1
            return closed_form_det(qkind, k) == sign * closed_form_det(kind, k)
        out.append(_case("bridge", f"conjugation n={k}", conjugation))
    return out


RUNNERS = {
    "inverse": inverse_suite,
    "det": det_suite,
    "orthogonality": orthogonality_suite,
    "identities": identities_suite,
    "bridge": bridge_suite,
}


def run_suite(suite, kind, n):
    if suite not in RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    if suite == "orthogonality" and kind.tag == "classical":
        raise ValueError("the orthogonality suite needs a quantum parameter")
    return RUNNERS[suite](kind, n)
