"""Independent ground truth for testing and error measurement.

Nothing here goes through the Laguerre rules except as the object under
study: exact diagonal resolvents come from direct spectral evaluation, and
integral references come from adaptive quadrature on finite windows sized so
the discarded tail is provably negligible.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .estimates import q_estimates
from .integrands import Params, bounds, exact_scalar_resolvent, f1, f2
from .laguerre import gauss_laguerre
from .operators import mode_counts, scalar_approx

__all__ = [
    "OracleError",
    "RepresentationCheck",
    "SweepRecord",
    "exact_diagonal_apply",
    "representation_check",
    "error_sweep",
]


class OracleError(RuntimeError):
    """The adaptive reference integration did not certify its accuracy."""


class RepresentationCheck(NamedTuple):
    lhs: float
    rhs: float
    gap: float


@dataclass(frozen=True)
class SweepRecord:
    """Measured errors and a-priori estimates at one spectral point."""

    lam: float
    err_total: float
    err_int1: float
    err_int2: float
    q_I: float
    q_II: float
    q_III: float
    q_IV: float
    regime1: str
    regime2: str


def exact_diagonal_apply(entries: Sequence[float], b, p: Params) -> np.ndarray:
    """Entrywise resolvent b_i / (1 + h * d_i**alpha); +inf entries map to 0."""
    d = np.atleast_1d(np.asarray(entries, dtype=float))
    vec = np.asarray(b, dtype=float)
    if vec.shape != d.shape:
        raise ValueError(f"shape mismatch: entries {d.shape}, vector {vec.shape}")
    if np.isnan(d).any() or (d < 1.0).any():
        raise ValueError("diagonal entries must be >= 1")
    # h > 0, so an inf entry gives an inf denominator and a clean 0 quotient
    with np.errstate(over="ignore"):
        return vec / (1.0 + p.h * d**p.alpha)


def _knee(lam: float, p: Params, which: int) -> float:
    # abscissa where the solve factor switches regimes; a useful breakpoint
    big_l = p.log_h_root + math.log(lam)
    if which == 1:
        return p.alpha * max(0.0, big_l)
    return (p.alpha + 1.0) * max(0.0, -big_l)


def _reference_integral(
    which: int, lam: float, p: Params, upper: float, epsabs: float, epsrel: float
) -> tuple[float, float]:
    """Adaptive quadrature of exp(-x) * f_which over [0, upper]."""
    f = f1 if which == 1 else f2

    def integrand(x: float) -> float:
        return math.exp(-x) * f(x, lam, p)

    knee = _knee(lam, p, which)
    points = [knee] if 0.0 < knee < upper else None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, achieved = quad(
            integrand, 0.0, upper, epsabs=epsabs, epsrel=epsrel, limit=500, points=points
        )
    return value, achieved


def representation_check(lam: float, p: Params, tol: float) -> RepresentationCheck:
    """Confirm the two-integral representation against the closed form.

    Each integral is evaluated adaptively on [0, X_i] with X_i large enough
    that the tail, bounded by K_i * exp(-X_i), stays below tol/10.
    """
    if not (tol > 0.0) or math.isnan(tol):
        raise ValueError(f"tol must be positive, got {tol!r}")
    k1, k2 = bounds(p)
    budget = tol / 10.0
    total = 0.0
    for which, k in ((1, k1), (2, k2)):
        upper = max(50.0, math.log(k / budget))
        value, achieved = _reference_integral(which, lam, p, upper, epsabs=budget, epsrel=0.0)
        if not math.isfinite(value) or achieved > tol / 2.0:
            raise OracleError(
                f"reference integration of integrand {which} at lam={lam!r} "
                f"reported error {achieved!r}, above the tol/2 budget"
            )
        total += value
    lhs = p.prefactor * total
    rhs = exact_scalar_resolvent(lam, p)
    return RepresentationCheck(lhs=lhs, rhs=rhs, gap=abs(lhs - rhs))


# windows for the relative-accuracy sweep references: wide enough that the
# tail is below the integral value times machine precision
_SWEEP_PAD1 = 40.0
_SWEEP_PAD2 = 60.0


def _sweep_reference(which: int, lam: float, p: Params) -> float:
    big_l = p.log_h_root + math.log(lam)
    if which == 1:
        upper = _SWEEP_PAD1 + p.alpha * max(0.0, big_l)
    else:
        upper = _SWEEP_PAD2 + (p.alpha + 1.0) * max(0.0, -big_l)
    value, _ = _reference_integral(which, lam, p, upper, epsabs=0.0, epsrel=1e-13)
    return value


def error_sweep(p: Params, n: int, lambda_grid: Sequence[float], mode: str = "standard") -> list[SweepRecord]:
    """Measured-vs-estimated errors over a grid of spectral points.

    Per point: the total error of the assembled approximation, the two
    per-integral quadrature errors against adaptive references, and the four
    modulus estimates with their active regimes.
    """
    (n1, n2), (c1, c2) = mode_counts(n, p, mode)
    rule1 = gauss_laguerre(n1)
    rule2 = gauss_laguerre(n2)
    x1, w1 = rule1.nodes[:c1], rule1.weights[:c1]
    x2, w2 = rule2.nodes[:c2], rule2.weights[:c2]

    records = []
    for lam in lambda_grid:
        lam = float(lam)
        exact = exact_scalar_resolvent(lam, p)
        approx = scalar_approx(lam, p, n, mode)
        int1 = float(w1 @ f1(x1, lam, p))
        int2 = float(w2 @ f2(x2, lam, p))
        est = q_estimates(lam, n1, p)
        est2 = est if n2 == n1 else q_estimates(lam, n2, p)
        records.append(
            SweepRecord(
                lam=lam,
                err_total=abs(exact - approx),
                err_int1=abs(_sweep_reference(1, lam, p) - int1),
                err_int2=abs(_sweep_reference(2, lam, p) - int2),
                q_I=est.q_I,
                q_II=est.q_II,
                q_III=est2.q_III,
                q_IV=est2.q_IV,
                regime1=est.regime1,
                regime2=est.regime2,
            )
        )
    return records
