"""Polynomial helpers on ascending coefficient arrays (numpy.polynomial
convention), plus the planar polynomial curve used for spines."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P


def hermite_cubic(p0: float, p1: float, m0: float, m1: float) -> np.ndarray:
    """Coefficients of the cubic h with h(0)=p0, h(1)=p1, h'(0)=m0, h'(1)=m1."""
    return np.array(
        [
            p0,
            m0,
            -3.0 * p0 - 2.0 * m0 + 3.0 * p1 - m1,
            2.0 * p0 + m0 - 2.0 * p1 + m1,
        ]
    )


def integrate01(c) -> complex:
    """Integral of the polynomial over [0, 1]."""
    c = np.asarray(c)
    return sum(c[k] / (k + 1) for k in range(len(c)))


def poly_sqrt(p, rel_tol: float = 1e-8):
    """Polynomial square root by coefficient recursion.

    Returns (q, residual) where residual = max|p - q^2| / max|p|. The caller
    decides whether the residual certifies p as a perfect square.
    """
    p = np.asarray(p, dtype=float)
    pmax = float(np.max(np.abs(p)))
    if pmax == 0.0:
        return np.zeros(1), 0.0
    p_full = p
    # trim trailing coefficients that are numerically zero
    deg = len(p) - 1
    while deg > 0 and abs(p[deg]) <= 1e-12 * pmax:
        deg -= 1
    # a tiny leading coefficient that breaks the even-degree / positive-lead
    # structure is noise too: keep trimming while it stays negligible
    while deg > 0 and (deg % 2 != 0 or p[deg] <= 0.0) and abs(p[deg]) <= rel_tol * pmax:
        deg -= 1
        while deg > 0 and abs(p[deg]) <= 1e-12 * pmax:
            deg -= 1
    p = p[: deg + 1]
    if deg % 2 != 0 or p[deg] <= 0.0:
        return np.zeros(deg // 2 + 1), 1.0
    m = deg // 2

    def _residual(q):
        return float(np.max(np.abs(P.polysub(p, P.polymul(q, q))))) / pmax

    # top-down recursion anchored at the leading coefficient
    q_hi = np.zeros(m + 1)
    q_hi[m] = np.sqrt(p[deg])
    for k in range(m - 1, -1, -1):
        acc = p[m + k]
        for i in range(k + 1, m):
            j = m + k - i
            if k < j < m:
                acc -= q_hi[i] * q_hi[j]
        q_hi[k] = acc / (2.0 * q_hi[m])
    best, best_res = q_hi, _residual(q_hi)

    # bottom-up recursion anchored at the constant term; more stable when the
    # polynomial is dominated by its low-order coefficients
    if p[0] > 0.0:
        q_lo = np.zeros(m + 1)
        q_lo[0] = np.sqrt(p[0])
        for k in range(1, m + 1):
            acc = p[k]
            for i in range(1, k):
                acc -= q_lo[i] * q_lo[k - i]
            q_lo[k] = acc / (2.0 * q_lo[0])
        res_lo = _residual(q_lo)
        if res_lo < best_res:
            best, best_res = q_lo, res_lo

    # sampled fit fallback: if p >= 0 on [0, 1] a least-squares fit of
    # sqrt(p(t)) avoids the error accumulation of either recursion; fit at
    # the full (untrimmed) half degree so tiny high-order terms survive
    m_fit = (len(p_full) - 1) // 2
    ts = 0.5 - 0.5 * np.cos(np.pi * (np.arange(8 * (m_fit + 1)) + 0.5) / (8 * (m_fit + 1)))
    vals = P.polyval(ts, p_full)
    if np.all(vals >= 0.0):
        q_fit = P.polyfit(ts, np.sqrt(vals), m_fit)
        res_fit = float(np.max(np.abs(P.polysub(p_full, P.polymul(q_fit, q_fit))))) / pmax
        if res_fit < best_res:
            best, best_res = q_fit, res_fit
    return best, best_res


@dataclass(frozen=True)
class PolyCurve2:
    """Planar polynomial curve on [0, 1] with per-component coefficients."""

    cx: np.ndarray
    cy: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "cx", np.asarray(self.cx, dtype=float))
        object.__setattr__(self, "cy", np.asarray(self.cy, dtype=float))

    @property
    def degree(self) -> int:
        return max(len(self.cx), len(self.cy)) - 1

    def point(self, t):
        """Evaluate; scalar t -> shape (2,), array t -> shape (n, 2)."""
        x = P.polyval(t, self.cx)
        y = P.polyval(t, self.cy)
        return np.stack([x, y], axis=-1)

    def derivative(self) -> "PolyCurve2":
        return PolyCurve2(P.polyder(self.cx), P.polyder(self.cy))

    def speed_squared(self) -> np.ndarray:
        """Coefficients of ||x'(t)||^2."""
        dx, dy = P.polyder(self.cx), P.polyder(self.cy)
        return P.polyadd(P.polymul(dx, dx), P.polymul(dy, dy))
