"""Applying the rational approximation to an operator.

Each quadrature node becomes one shifted linear solve (sigma*I + tau*L)y = b;
the resolvent approximation is a weighted sum of those solutions.  Three
variants share the accumulation path: ``standard`` runs both node sets at the
same size, ``balanced`` shrinks the second set, ``truncated`` additionally
drops tail nodes per the plan.
"""

from __future__ import annotations

import math
import os
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .integrands import Params
from .laguerre import gauss_laguerre
from .planner import balance_m, make_plan

__all__ = [
    "OperatorError",
    "ShiftedSystem",
    "OperatorHandle",
    "DiagonalOperator",
    "DenseOperator",
    "CallbackOperator",
    "node_system",
    "mode_counts",
    "apply_resolvent",
    "scalar_approx",
    "MODES",
]

MODES = ("standard", "balanced", "truncated")

_THREAD_ENV = "FRACLAG_THREADS"


class OperatorError(RuntimeError):
    """A shifted solve could not be completed."""


@dataclass(frozen=True)
class ShiftedSystem:
    """One node's solve (sigma*I + tau*L)y = b and the multiplier scale
    applied to its solution.  sigma > 0 keeps the system positive definite
    whenever the spectrum of L is nonnegative."""

    sigma: float
    tau: float
    scale: float


def node_system(x: float, w: float, which: str, p: Params) -> ShiftedSystem:
    """Shifted system of the node at ``x`` with weight ``w``.

    ``which`` selects the integrand: "first" pairs a unit identity shift
    with a decaying operator coefficient, "second" the other way around.
    The trigonometric denominator of the integrand is folded into ``scale``.
    """
    a = p.alpha
    if which == "first":
        e = math.exp(-x)
        return ShiftedSystem(
            sigma=1.0,
            tau=math.exp(-x / a + p.log_h_root),
            scale=w / (e * e + 2.0 * e * p.cos_pi_alpha + 1.0),
        )
    if which == "second":
        v = math.exp(-a * x / (a + 1.0))
        return ShiftedSystem(
            sigma=math.exp(-x / (a + 1.0)),
            tau=p.h_root,
            scale=w * (a / (a + 1.0)) / (1.0 + 2.0 * p.cos_pi_alpha * v + v * v),
        )
    raise ValueError(f"which must be 'first' or 'second', got {which!r}")


class OperatorHandle(ABC):
    """Self-adjoint positive operator with spectrum in [1, inf), exposed
    only through shifted solves."""

    @property
    @abstractmethod
    def dimension(self) -> int:
        """Size of the vectors the operator acts on."""

    @abstractmethod
    def solve_shifted(self, sigma: float, tau: float, b: np.ndarray) -> np.ndarray:
        """Solve (sigma*I + tau*L)y = b.  Must be safe to call concurrently."""


class DiagonalOperator(OperatorHandle):
    """Operator given by its spectrum; shifted solves are elementwise.

    Entries must be >= 1; +inf is allowed and yields exact zeros in every
    solve (the resolvent annihilates that component).
    """

    def __init__(self, entries: Sequence[float]):
        d = np.atleast_1d(np.asarray(entries, dtype=float))
        if d.ndim != 1 or d.size == 0:
            raise ValueError("diagonal entries must form a nonempty 1-D sequence")
        if np.isnan(d).any() or (d < 1.0).any():
            raise ValueError("diagonal entries must be >= 1")
        d.setflags(write=False)
        self._d = d
        self._infinite = np.isinf(d)

    @property
    def dimension(self) -> int:
        return self._d.size

    @property
    def entries(self) -> np.ndarray:
        return self._d

    def solve_shifted(self, sigma: float, tau: float, b: np.ndarray) -> np.ndarray:
        # tau can underflow to 0 for far-tail nodes; 0 * inf would poison the
        # +inf entries, so those are pinned to the 0 limit explicitly.
        with np.errstate(over="ignore", invalid="ignore"):
            out = b / (sigma + tau * self._d)
        if self._infinite.any():
            out[self._infinite] = 0.0
        return out


class DenseOperator(OperatorHandle):
    """Dense symmetric positive definite matrix.

    Every shifted solve factorizes sigma*I + tau*A from scratch; the shifts
    differ per node, so nothing can be reused.
    """

    def __init__(self, matrix):
        a = np.asarray(matrix, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValueError(f"matrix must be square and nonempty, got shape {a.shape}")
        if not np.isfinite(a).all():
            raise ValueError("matrix entries must be finite")
        scale = np.abs(a).max()
        if scale > 0.0 and np.abs(a - a.T).max() > 1e-12 * scale:
            raise OperatorError("matrix is not symmetric")
        self._a = a

    @property
    def dimension(self) -> int:
        return self._a.shape[0]

    def solve_shifted(self, sigma: float, tau: float, b: np.ndarray) -> np.ndarray:
        shifted = tau * self._a + sigma * np.eye(self.dimension)
        try:
            factor = cho_factor(shifted, lower=True, check_finite=False)
        except LinAlgError as exc:
            raise OperatorError(
                f"factorization failed at shift sigma={sigma!r}, tau={tau!r}: "
                "matrix is not positive definite"
            ) from exc
        return cho_solve(factor, b, check_finite=False)


class CallbackOperator(OperatorHandle):
    """Operator backed by a user-supplied solver ``solve(sigma, tau, b)``.

    Self-adjointness and positivity are taken on trust.
    """

    def __init__(self, dimension: int, solve: Callable[[float, float, np.ndarray], np.ndarray]):
        if not isinstance(dimension, int) or isinstance(dimension, bool) or dimension < 1:
            raise ValueError(f"dimension must be a positive integer, got {dimension!r}")
        self._dim = dimension
        self._solve = solve

    @property
    def dimension(self) -> int:
        return self._dim

    def solve_shifted(self, sigma: float, tau: float, b: np.ndarray) -> np.ndarray:
        y = np.asarray(self._solve(sigma, tau, b), dtype=float)
        if y.shape != b.shape:
            raise OperatorError(
                f"callback returned shape {y.shape}, expected {b.shape}"
            )
        return y


def mode_counts(n: int, p: Params, mode: str) -> tuple[tuple[int, int], tuple[int, int]]:
    """Rule sizes and kept-node counts ((n1, n2), (k1, k2)) of a mode.

    standard runs both integrands at ``n``; balanced shrinks the second rule;
    truncated additionally keeps only the plan's leading nodes of each rule.
    """
    if mode == "standard":
        return (n, n), (n, n)
    if mode == "balanced":
        m = balance_m(n, p)
        return (n, m), (n, m)
    if mode == "truncated":
        plan = make_plan(n, p)
        return (n, plan.m), (plan.k_n, plan.k_m)
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _systems_for(n: int, p: Params, mode: str) -> list[ShiftedSystem]:
    sizes, counts = mode_counts(n, p, mode)
    systems: list[ShiftedSystem] = []
    for size, count, which in zip(sizes, counts, ("first", "second")):
        rule = gauss_laguerre(size)
        systems.extend(
            node_system(rule.nodes[j], rule.weights[j], which, p) for j in range(count)
        )
    return systems


def _worker_count() -> int:
    raw = os.environ.get(_THREAD_ENV)
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        return 1
    return workers if workers > 1 else 1


def apply_resolvent(
    op: OperatorHandle, b, p: Params, n: int, mode: str = "standard"
) -> np.ndarray:
    """Approximate (I + h*L^alpha)^{-1} b with the n-point method.

    The solves are independent and may run on a thread pool (capped by the
    FRACLAG_THREADS environment variable), but the solutions are reduced in
    fixed node order so results are bit-reproducible.
    """
    vec = np.asarray(b, dtype=float)
    if vec.ndim != 1:
        raise ValueError(f"b must be 1-D, got shape {vec.shape}")
    if vec.size != op.dimension:
        raise ValueError(
            f"dimension mismatch: operator is {op.dimension}, vector is {vec.size}"
        )
    systems = _systems_for(n, p, mode)

    workers = _worker_count()
    if workers > 1 and len(systems) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            solutions = list(
                pool.map(lambda s: op.solve_shifted(s.sigma, s.tau, vec), systems)
            )
    else:
        solutions = [op.solve_shifted(s.sigma, s.tau, vec) for s in systems]

    acc = np.zeros_like(vec)
    for system, y in zip(systems, solutions):
        acc += system.scale * y
    return p.prefactor * acc


def scalar_approx(lam: float, p: Params, n: int, mode: str = "standard") -> float:
    """The method's value at a single eigenvalue: same code path as
    apply_resolvent on a 1x1 diagonal operator."""
    op = DiagonalOperator([lam])
    return float(apply_resolvent(op, np.ones(1), p, n, mode)[0])
