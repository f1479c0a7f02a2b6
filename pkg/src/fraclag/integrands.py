"""Problem parameters and the two integrands of the resolvent representation.

For a spectral point ``lam >= 1`` of a positive self-adjoint operator, the
scalar resolvent value ``1 / (1 + h * lam**alpha)`` equals

    (sin(alpha*pi) / (alpha*pi)) * (I1(lam) + I2(lam)),

where ``I1`` and ``I2`` integrate ``exp(-x) * f1(x, lam)`` and
``exp(-x) * f2(x, lam)`` over ``[0, inf)``.  Both integrands are bounded,
positive and smooth, which is what makes Gauss-Laguerre rules effective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = ["Params", "f1", "f2", "bounds", "exact_scalar_resolvent"]


@dataclass(frozen=True)
class Params:
    """Fractional power ``alpha`` in (0, 1) and scaling ``h > 0``.

    Derived quantities used throughout the package are computed once and
    cached on the instance.
    """

    alpha: float
    h: float

    def __post_init__(self) -> None:
        alpha = float(self.alpha)
        h = float(self.h)
        if not (math.isfinite(alpha) and 0.0 < alpha < 1.0):
            raise ValueError(f"alpha must lie strictly inside (0, 1), got {self.alpha!r}")
        if not (math.isfinite(h) and h > 0.0):
            raise ValueError(f"h must be finite and positive, got {self.h!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "h", h)

    @cached_property
    def h_root(self) -> float:
        """``h**(1/alpha)``."""
        return math.exp(self.log_h_root)

    @cached_property
    def log_h_root(self) -> float:
        """``log(h) / alpha``, kept separately so products with large ``lam``
        can be formed in log space without intermediate overflow."""
        return math.log(self.h) / self.alpha

    @cached_property
    def cos_pi_alpha(self) -> float:
        return math.cos(math.pi * self.alpha)

    @cached_property
    def sin_pi_alpha(self) -> float:
        return math.sin(math.pi * self.alpha)

    @cached_property
    def prefactor(self) -> float:
        """``sin(alpha*pi) / (alpha*pi)``, the factor in front of both sums."""
        return self.sin_pi_alpha / (self.alpha * math.pi)


def _validated(x, lam):
    x = np.asarray(x, dtype=float)
    lam = np.asarray(lam, dtype=float)
    if np.any(x < 0) or np.any(np.isnan(x)) or np.any(np.isinf(x)):
        raise ValueError("x must be finite and nonnegative")
    if np.any(lam < 1) or np.any(np.isnan(lam)):
        raise ValueError("lam must be >= 1")
    return x, lam


def f1(x, lam, p: Params):
    """First integrand, evaluated elementwise.

    ``f1(x) = 1 / ((1 + exp(-x/alpha) * h**(1/alpha) * lam)
              * (exp(-2x) + 2*exp(-x)*cos(alpha*pi) + 1))``

    Values are nonnegative, below 1 for ``alpha <= 1/2`` and below
    ``1 / sin(alpha*pi)**2`` in general.  The product ``h**(1/alpha) * lam``
    is formed in log space, so extreme magnitudes degrade gracefully to the
    0-limit of the integrand instead of producing NaN.
    """
    x, lam = _validated(x, lam)
    with np.errstate(over="ignore", divide="ignore"):
        t = np.exp(-x / p.alpha + p.log_h_root + np.log(lam))
        e = np.exp(-x)
        den = (1.0 + t) * (e * e + 2.0 * p.cos_pi_alpha * e + 1.0)
        out = 1.0 / den
    return out if out.ndim else float(out)


def f2(x, lam, p: Params):
    """Second integrand, evaluated elementwise.

    ``f2(x) = (alpha/(alpha+1)) / ((exp(-x/(alpha+1)) + h**(1/alpha) * lam)
              * (1 + 2*cos(alpha*pi)*exp(-alpha*x/(alpha+1))
                 + exp(-2*alpha*x/(alpha+1))))``
    """
    x, lam = _validated(x, lam)
    ap1 = p.alpha + 1.0
    with np.errstate(over="ignore", divide="ignore"):
        s = np.exp(p.log_h_root + np.log(lam))
        u = np.exp(-x / ap1)
        v = np.exp(-p.alpha * x / ap1)
        den = (u + s) * (1.0 + 2.0 * p.cos_pi_alpha * v + v * v)
        out = (p.alpha / ap1) / den
    return out if out.ndim else float(out)


def bounds(p: Params) -> tuple[float, float]:
    """Tail envelope constants ``(K1, K2)`` of the two integrands:
    ``K1 = 1`` and ``K2 = (alpha/(alpha+1)) * h**(-1/alpha)``.

    Both integrands approach these envelopes from below as ``x`` grows;
    for ``alpha > 1/2`` they may exceed them near the origin by at most
    the resonance factor ``1 / sin(alpha*pi)**2``."""
    return 1.0, (p.alpha / (p.alpha + 1.0)) * math.exp(-p.log_h_root)


def exact_scalar_resolvent(lam, p: Params):
    """Closed form ``1 / (1 + h * lam**alpha)`` for ``lam in [1, inf]``.

    ``lam = +inf`` is accepted and maps to 0.
    """
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < 1) or np.any(np.isnan(lam)):
        raise ValueError("lam must be >= 1")
    with np.errstate(over="ignore"):
        lam_pow = np.exp(p.alpha * np.log(lam))
        out = 1.0 / (1.0 + p.h * lam_pow)
    return out if out.ndim else float(out)
