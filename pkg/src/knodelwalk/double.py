"""Two-function kernel method on the double-step graph.

After an even number of steps the alternation of ``alpha`` and ``beta``
cancels out and the walk is a homogeneous chain on ``F(N)``, ``G(N)`` and
``Q``.  Its kernel is quadratic in ``u``, with the small root

    r2(z) = (1 - s z - sqrt((1 - z)(1 - z (1 - 2a)^2))) / (2 a b z),   s = a^2 + b^2,

and the large root ``1/r2``.  The large root is a Laurent series; every
relation that mentions it is multiplied through by ``r2`` first so the
computation stays inside the power series ring.
"""
from __future__ import annotations

from dataclasses import dataclass

from .brute import EquationCheck, quadrant_states_from_boundary, solve_boundary, solve_f0_g0_brute
from .series import PowerSeries, UPoly, ps_shift_div, ps_sqrt
from .walk import WalkParams


def kernel_root_r2(p: WalkParams, order: int) -> PowerSeries:
    """The kernel root that vanishes at ``z = 0``; it starts ``a*b*z``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    a, b = p.alpha, p.beta
    n = order + 1
    c2 = (1 - 2 * a) ** 2
    disc = PowerSeries([1, -1], n) * PowerSeries([1, -c2], n)
    top = PowerSeries([1, -(a * a + b * b)], n) - ps_sqrt(disc)
    if top[1] != 0:
        raise ArithmeticError("linear coefficient of the r2 numerator must cancel")
    return ps_shift_div(top, 1).scale(1 / (2 * a * b))


def kernel_polynomial(p: WalkParams, order: int) -> UPoly:
    """The common denominator of ``F(u)`` and ``G(u)`` as a quadratic in ``u``."""
    a, b = p.alpha, p.beta
    z = PowerSeries.variable(order)
    z2 = z * z
    ab = a * b
    c0 = z2 * (a**3 * b) - z * ab
    c1 = 1 - z * (2 * a * a) + z2 * (a**4) - z * (b * b) + z2 * (a * a * b * b)
    c2 = z2 * (a**3 * b) - z * ab
    return UPoly([c0, c1, c2])


def factored_kernel_times_r2(p: WalkParams, r2: PowerSeries) -> UPoly:
    """``r2 * z a b (z a^2 - 1) * (u - 1/r2)(u - r2)`` as a quadratic in ``u``.

    Multiplying by ``r2`` clears the pole of ``1/r2``; compare with
    ``r2 * kernel_polynomial``.
    """
    a, b = p.alpha, p.beta
    n = r2.order
    z = PowerSeries.variable(n)
    lead = z * (a * b) * (z * (a * a) - 1)
    # r2 (u^2 - (r2 + 1/r2) u + 1) = r2 u^2 - (r2^2 + 1) u + r2
    return UPoly([lead * r2, -lead * (r2 * r2 + 1), lead * r2])


@dataclass(frozen=True)
class DoubleBoundary:
    f0: PowerSeries
    g0: PowerSeries
    fQ: PowerSeries

    @property
    def order(self) -> int:
        return min(self.f0.order, self.g0.order, self.fQ.order)


def boundary_rows(p: WalkParams, r2: PowerSeries):
    """The two ``u = 0`` relations as ``A + B f0 + C g0 = 0`` rows.

    From ``f0 = -r2 (1 - z a^2 + g0 (r2 z^2 b^3 a + z^2 a^2 b^2)) / (z a b (z a^2 - 1))``
    and ``g0 (z a^2 - 1) = r2 ((z a^2 - 1) f0 - z a b g0)``.
    """
    a, b = p.alpha, p.beta
    n = r2.order
    z = PowerSeries.variable(n)
    z2 = z * z
    m = z * (a * a) - 1
    row1 = (
        r2 * (-m),
        z * m * (a * b),
        r2 * (z2 * (r2 * (b**3 * a) + a * a * b * b)),
    )
    row2 = (
        PowerSeries.zero(n),
        -r2 * m,
        m + r2 * z * (a * b),
    )
    return row1, row2


def solve_f0_g0_double(p: WalkParams, order: int) -> DoubleBoundary:
    """Boundary series of the double-step walk: ``F(0)``, ``G(0)`` and ``Q``."""
    if order < 2:
        raise ValueError("order must be at least 2")
    a, b = p.alpha, p.beta
    r2 = kernel_root_r2(p, order + 1)
    f0, g0 = solve_boundary(boundary_rows(p, r2))
    f0, g0 = f0.truncate(order), g0.truncate(order)
    z = PowerSeries.variable(order)
    fQ = z * g0 * (a * b) / (1 - z * (a * a))
    return DoubleBoundary(f0, g0, fQ)


def state_coeff_F(j: int, bd: DoubleBoundary, r2: PowerSeries, p: WalkParams, order: int) -> PowerSeries:
    """``[u^j] F(u)``: probability of ``Top(2j)`` after ``m`` double steps.

    The ``r2^j z b^2 g0 / (z a^2 - 1)`` term comes from the ``u``-linear part
    of the numerator and is absent for ``j = 0``.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    a, b = p.alpha, p.beta
    n = min(order + 1, bd.order, r2.order)
    g0, r2 = bd.g0.truncate(n), r2.truncate(n)
    z = PowerSeries.variable(n)
    m = z * (a * a) - 1
    N = r2 * z * z * g0 * (b**3 * a) - z * (a * a) + z * z * g0 * (a * a * b * b) + 1
    first = -ps_shift_div(r2 ** (j + 1) * N, 1) / (m.truncate(n - 1) * (a * b))
    if j == 0:
        return first.truncate(min(order, first.order))
    second = r2**j * z * g0 * (b * b) / m
    out = first - second
    return out.truncate(min(order, out.order))


def state_coeff_G(j: int, bd: DoubleBoundary, r2: PowerSeries, p: WalkParams, order: int) -> PowerSeries:
    """``[u^j] G(u)``: probability of ``Bottom(2j+1)`` after ``m`` double steps."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    a, b = p.alpha, p.beta
    n = min(order, bd.order, r2.order)
    f0, g0, r2 = bd.f0.truncate(n), bd.g0.truncate(n), r2.truncate(n)
    z = PowerSeries.variable(n)
    m = z * (a * a) - 1
    return (z * g0 * (-a * b) + m * f0) / m * r2 ** (j + 1)


def double_states(p: WalkParams, max_index: int, order: int):
    """``(F_0..F_max, G_0..G_max, Q)`` from the double-step kernel, all at ``order``."""
    bd = solve_f0_g0_double(p, order + 1)
    r2 = kernel_root_r2(p, order + 1)
    F = tuple(state_coeff_F(j, bd, r2, p, order) for j in range(max_index + 1))
    G = tuple(state_coeff_G(j, bd, r2, p, order) for j in range(max_index + 1))
    return F, G, bd.fQ.truncate(order)


def crosscheck_section2(j: int, p: WalkParams, order: int, perturb=None) -> bool:
    """Compare ``[u^j] F`` and ``[u^j] G`` with the even coefficients of the
    single-step series of ``Top(2j)`` and ``Bottom(2j+1)``.

    ``perturb`` (test hook) is applied to the double-step ``F`` series
    before comparison.
    """
    F, G, _ = double_states(p, j, order)
    Fj, Gj = F[j], G[j]
    if perturb is not None:
        Fj = perturb(Fj)
    need = 2 * order + 2 * j + 1
    f0, g0 = solve_f0_g0_brute(p, need + 1)
    qs = quadrant_states_from_boundary(f0, g0, p, 2 * j + 1)
    single_f = qs.f[2 * j].even_part().truncate(order)
    single_g = qs.g[2 * j + 1].even_part().truncate(order)
    return Fj.agrees_with(single_f, order) and Gj.agrees_with(single_g, order)


def check_double_kernel(p: WalkParams, order: int) -> list[EquationCheck]:
    """Kernel vanishing at ``r2`` and the factorisation of the kernel."""
    r2 = kernel_root_r2(p, order)
    K = kernel_polynomial(p, order)
    at_root = K.evaluate(r2)
    out = [EquationCheck("kernel(u=r2) == 0", at_root.is_zero(), None if at_root.is_zero() else (0, at_root.valuation()))]
    lhs = K * r2
    rhs = factored_kernel_times_r2(p, r2)
    diff = lhs.first_difference(rhs)
    out.append(EquationCheck("kernel factorisation", diff is None, diff))
    return out
