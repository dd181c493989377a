"""Numerical thresholds shared across modules."""
import os

# Jacobi stops when the off-diagonal Frobenius norm drops below this.
OFFDIAG_TOL = 1e-12
MAX_SWEEPS = 100
RESIDUAL_TOL = 1e-9
# A bound counts as violated only below -SLACK_TOL.
SLACK_TOL = 1e-7
_DEFAULT_EQ_TOL = 1e-7


def eq_tol() -> float:
    """Relative gap under which a bound is reported as attained (env ``Q1LAB_EQ_TOL``)."""
    raw = os.environ.get("Q1LAB_EQ_TOL")
    return float(raw) if raw else _DEFAULT_EQ_TOL


def attained(bound: float, value: float, tol: float | None = None) -> bool:
    tol = eq_tol() if tol is None else tol
    return abs(bound - value) <= tol * max(1.0, abs(value))
