"""Mean end index after ``n`` double steps and its growth ``4 sqrt(ab) sqrt(n/pi)``.

Here ``n`` always counts double steps.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import CrossCheckError
from .series import PowerSeries, ps_div, ps_sqrt
from .vsubst import closed_forms, transfer_series
from .walk import WalkParams, expected_end_series

EXACT_LIMIT = 64


def expected_end_exact(order: int, p: WalkParams, check: bool = False) -> PowerSeries:
    """Exact series of the mean end index, transferred from its closed form in ``v``.

    With ``check=True`` the result is compared against the exact walk and
    :class:`CrossCheckError` is raised on any difference.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = transfer_series(closed_forms(p).expected_end, order, p)
    if check:
        dp = expected_end_series(order, p)
        k = out.first_difference(dp)
        if k is not None:
            raise CrossCheckError(f"expected end differs from the walk at z^{k}: {out[k]} vs {dp[k]}")
    return out


def expected_end_half_closed(order: int) -> PowerSeries:
    """``(z - 1 + (1 + z) sqrt(1 - z)) / (2 (1 - z)^2)``, the ``alpha = 1/2`` case."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    one_minus_z = PowerSeries([1, -1], order)
    num = PowerSeries([-1, 1], order) + PowerSeries([1, 1], order) * ps_sqrt(one_minus_z)
    return ps_div(num, one_minus_z * one_minus_z * 2)


def reference_coefficient(n: int) -> Fraction:
    """``[z^n] (1 - z)^(-3/2) = prod_{k=1..n} (2k + 1) / (2k)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = math.prod(range(3, 2 * n + 2, 2))
    den = math.prod(range(2, 2 * n + 1, 2))
    return Fraction(num, den)


def expected_end_float(ns: Iterable[int], p: WalkParams) -> dict[int, float]:
    """Mean end index at each requested double-step count, by a float DP sweep."""
    ns = sorted(set(ns))
    if not ns:
        return {}
    a, b = float(p.alpha), float(p.beta)
    ab, stay = a * b, a * a + b * b
    top = ns[-1]
    f = np.zeros(top + 2)
    g = np.zeros(top + 2)
    q = 0.0
    f[0] = 1.0
    idx_f = 2.0 * np.arange(top + 2)
    idx_g = idx_f + 1.0
    out = {}
    want = set(ns)
    if 0 in want:
        out[0] = 0.0
    for m in range(1, top + 1):
        nf = stay * f
        nf[1:] += ab * f[:-1]
        nf[:-1] += ab * f[1:]
        ng = stay * g
        ng[1:] += ab * g[:-1]
        ng[:-1] += ab * g[1:]
        ng[0] += ab * f[0]
        nq = ab * g[0] + a * a * q
        nf[0] += ab * q
        nf[1] += b * b * q
        ng[0] += ab * q
        f, g, q = nf, ng, nq
        if m in want:
            out[m] = float(idx_f @ f + idx_g @ g)
    return out


@dataclass(frozen=True)
class AsymptoticEstimate:
    n: int
    estimate: float
    exact: Fraction | None = None
    observed: float | None = None

    @property
    def ratio(self) -> float | None:
        if self.observed is None:
            return None
        return self.observed / self.estimate


def leading_term(n: int, p: WalkParams) -> float:
    return 4.0 * math.sqrt(float(p.alpha * p.beta)) * math.sqrt(n / math.pi)


def asymptotic_estimate(n: int, p: WalkParams, compare: bool = False) -> AsymptoticEstimate:
    """``4 sqrt(ab) sqrt(n/pi)``, optionally paired with the actual mean.

    With ``compare=True`` the actual value comes from :func:`expected_end_float`;
    for ``n <= EXACT_LIMIT`` the exact rational is attached as well.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    est = leading_term(n, p)
    if not compare:
        return AsymptoticEstimate(n, est)
    exact = expected_end_exact(n, p)[n] if n <= EXACT_LIMIT else None
    observed = expected_end_float([n], p)[n]
    return AsymptoticEstimate(n, est, exact, observed)
