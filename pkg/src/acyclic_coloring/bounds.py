"""Generating-function bound on the run length.

With ``q = 1 - exp(-1/gamma)`` and weights ``w_k = q^(2k-3) / gamma`` the
tree generating function satisfies ``W(z) = z * phi(W(z))`` where

    phi(x) = sum_{k>=3} w_k (1+x)^(2k-2) = q^3 (1+x)^4 / (gamma (1 - q^2 (1+x)^2)),

valid for ``q (1+x) < 1``. The coefficients obey ``Q_n <= rho^n`` with
``rho = min_{x>0} phi(x)/x``, so runs stop almost surely once ``rho < 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .palette import num_colors, quota

__all__ = [
    "BoundParams",
    "SeriesBound",
    "base_q",
    "weight_wk",
    "phi_E",
    "phi_E_series",
    "golden_section_min",
    "rho",
    "gamma_threshold",
    "q_sequence",
    "series_bound",
]

INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class BoundParams:
    gamma: float
    delta: int

    @property
    def N(self) -> int:
        return num_colors(self.gamma, self.delta)

    @property
    def K(self) -> int:
        return quota(self.gamma, self.delta)

    @property
    def q(self) -> float:
        return base_q(self.gamma)


@dataclass(frozen=True)
class SeriesBound:
    qn: list[float]
    rho: float
    xstar: float


def base_q(gamma: float) -> float:
    if not gamma > 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    return -math.expm1(-1.0 / gamma)


def weight_wk(gamma: float, k: int) -> float:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    return base_q(gamma) ** (2 * k - 3) / gamma


def phi_E(gamma: float, x: float) -> float:
    q = base_q(gamma)
    s = q * (1.0 + x)
    if not x >= 0 or s >= 1.0:
        raise ValueError(f"x={x} outside the convergence domain 0 <= x < {1 / q - 1}")
    return q**3 * (1.0 + x) ** 4 / (gamma * (1.0 - s * s))


def phi_E_series(gamma: float, x: float, terms: int = 200) -> float:
    """Truncated sum of ``w_k (1+x)^(2k-2)`` for ``k = 3 .. terms+2``."""
    q = base_q(gamma)
    if not x >= 0 or q * (1.0 + x) >= 1.0:
        raise ValueError(f"x={x} outside the convergence domain")
    k = np.arange(3, terms + 3)
    return float(np.sum(q ** (2 * k - 3) * (1.0 + x) ** (2 * k - 2)) / gamma)


def golden_section_min(f, lo: float, hi: float, tol: float = 1e-10, max_iter: int = 500) -> tuple[float, float]:
    """Minimise a unimodal ``f`` on ``[lo, hi]``; returns ``(x, f(x))``."""
    a, b = lo, hi
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    x = 0.5 * (a + b)
    return x, f(x)


def rho(gamma: float, grid: int = 1000, tol: float = 1e-10) -> tuple[float, float]:
    """``(min phi(x)/x, argmin)`` over ``0 < x < 1/q - 1``.

    A coarse scan locates the best grid cell first, so the golden-section
    refinement only assumes unimodality inside one bracket.
    """
    q = base_q(gamma)
    hi = 1.0 / q - 1.0
    xs = np.linspace(0.0, hi, grid + 2)[1:-1]
    s = q * (1.0 + xs)
    vals = q**3 * (1.0 + xs) ** 4 / (gamma * (1.0 - s * s)) / xs
    i = int(np.argmin(vals))
    lo_b = xs[i - 1] if i > 0 else xs[0] * 1e-6
    hi_b = xs[i + 1] if i + 1 < len(xs) else 0.5 * (xs[-1] + hi)
    x, val = golden_section_min(lambda x: phi_E(gamma, x) / x, lo_b, hi_b, tol=tol)
    return float(val), float(x)


def gamma_threshold(tol: float = 1e-4, lo: float = 1.0, hi: float = 3.0) -> float:
    """Smallest gamma (to within ``tol``) with ``rho(gamma) < 1``, by bisection.

    Returns the upper end of the final bracket, which always satisfies the
    predicate.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if rho(lo)[0] < 1 or not rho(hi)[0] < 1:
        raise ValueError(f"rho < 1 does not change truth value across [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if rho(mid)[0] < 1:
            hi = mid
        else:
            lo = mid
    return hi


def _mul(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    return np.convolve(a, b)[:n]


def _inv(a: np.ndarray, n: int) -> np.ndarray:
    # power series reciprocal, a[0] != 0
    out = np.zeros(n)
    out[0] = 1.0 / a[0]
    for j in range(1, n):
        out[j] = -np.dot(a[1:j + 1], out[j - 1::-1][:j]) / a[0]
    return out


def q_sequence(gamma: float, nmax: int) -> list[float]:
    """Coefficients ``Q_0..Q_nmax`` of ``1 + W(z)``.

    Fixed-point iteration ``W <- z * phi(W)`` on series truncated at degree
    ``nmax``, with phi applied through its closed form. Iteration j fixes the
    degree-j coefficient, and the loop stops once a pass changes nothing.
    """
    q = base_q(gamma)
    n = nmax + 1
    W = np.zeros(n)
    for _ in range(n + 1):
        U = W.copy()
        U[0] += 1.0
        U2 = _mul(U, U, n)
        U4 = _mul(U2, U2, n)
        den = -q * q * U2
        den[0] += 1.0
        phi = q**3 / gamma * _mul(U4, _inv(den, n), n)
        new = np.zeros(n)
        new[1:] = phi[:-1]
        if not np.all(np.isfinite(new)):
            raise OverflowError(f"series coefficients overflow for gamma={gamma}, nmax={nmax}")
        if np.array_equal(new, W):
            break
        W = new
    out = W.tolist()
    out[0] = 1.0
    return out


def series_bound(gamma: float, nmax: int) -> SeriesBound:
    r, x = rho(gamma)
    return SeriesBound(q_sequence(gamma, nmax), r, x)
