"""Four-function kernel method on the single-step graph.

The even/odd parts of the upper and lower layers give four bivariate
generating functions ``F_e, F_o, G_e, G_o`` that share the denominator

    D(u, z) = u^2 (1 - s z^2) - a b z^2 (1 + u^4),      s = a^2 + b^2,

and each numerator is linear in the unknown boundary series ``f0`` and
``g0``.  The small roots of ``D`` are ``+-sqrt(S)`` with ``S`` a rational
power series; substituting ``u^2 := S`` into the (even) numerators of
``F_e`` and ``G_e`` yields a 2x2 linear system for ``f0`` and ``g0``.
Working with ``S`` instead of the root itself keeps every coefficient
rational.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import InexactCancellation, SingularSystem
from .series import PowerSeries, UPoly, ps_shift_div, ps_sqrt
from .walk import WalkParams


def _linear(c0, c1, order: int) -> PowerSeries:
    return PowerSeries([c0, c1], order)


def _upoly(terms: dict[tuple[int, int], Fraction], udeg: int, order: int) -> UPoly:
    """UPoly from ``{(u_power, z_power): coefficient}``."""
    by_u: dict[int, list] = {}
    for (i, j), c in terms.items():
        if i > udeg:
            continue
        row = by_u.setdefault(i, [Fraction(0)] * (order + 1))
        if j <= order:
            row[j] += c
    return UPoly.from_terms({i: PowerSeries(row) for i, row in by_u.items()}, udeg, order)


def compute_W(p: WalkParams, order: int) -> PowerSeries:
    """``W = sqrt((1-z)(1+z)(1-z+2za)(1+z-2za))`` as a series."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    a = p.alpha
    quartic = (
        _linear(1, -1, order)
        * _linear(1, 1, order)
        * _linear(1, 2 * a - 1, order)
        * _linear(1, 1 - 2 * a, order)
    )
    return ps_sqrt(quartic)


def small_root_square(p: WalkParams, order: int) -> PowerSeries:
    """``S = (1 - (a^2+b^2) z^2 - W) / (2 a b z^2)``, the square of the small kernel roots."""
    if order < 2:
        raise ValueError("order must be at least 2")
    a, b = p.alpha, p.beta
    W = compute_W(p, order + 2)
    top = PowerSeries([1, 0, -(a * a + b * b)], order + 2) - W
    return ps_shift_div(top, 2).scale(1 / (2 * a * b))


def kernel_denominator(p: WalkParams, udeg: int, order: int) -> UPoly:
    a, b = p.alpha, p.beta
    s = a * a + b * b
    return _upoly(
        {(2, 0): Fraction(1), (2, 2): -s, (4, 2): -a * b, (0, 2): -a * b},
        udeg,
        order,
    )


class Numerator(NamedTuple):
    """``D * X = A + B*f0 + C*g0`` with each part a polynomial in u."""

    A: UPoly
    B: UPoly
    C: UPoly

    def assemble(self, f0: PowerSeries, g0: PowerSeries) -> UPoly:
        return self.A + self.B * f0 + self.C * g0

    def at_u2(self, S: PowerSeries) -> tuple[PowerSeries, PowerSeries, PowerSeries]:
        return self.A.evaluate_u2(S), self.B.evaluate_u2(S), self.C.evaluate_u2(S)


def quadrant_numerators(p: WalkParams, udeg: int, order: int) -> dict[str, Numerator]:
    """The four numerators over the common denominator ``D``.

    Expanded from the closed displays for ``D F_e``, ``D F_o``, ``D G_e``
    and ``D G_o``; keys are ``"Fe"``, ``"Fo"``, ``"Ge"``, ``"Go"``.
    """
    a, b = p.alpha, p.beta
    one = Fraction(1)

    def up(terms):
        return _upoly(terms, udeg, order)

    fe = Numerator(
        up({(2, 0): one}),
        up({(0, 2): -a * b}),
        up({(4, 3): a * b * b, (2, 3): a * a * b}),
    )
    # D F_o = u z [ (a u^2 + b) + f0 (-b + b^3 z^2 + a b^2 z^2 u^2) + g0 a b z u^2 ]
    fo = Numerator(
        up({(3, 1): a, (1, 1): b}),
        up({(1, 1): -b, (1, 3): b**3, (3, 3): a * b * b}),
        up({(3, 2): a * b}),
    )
    # D G_e = -a z^2 [ b g0 - f0 z (a b u^4 + b^2 u^2) ]
    ge = Numerator(
        up({}),
        up({(4, 3): a * a * b, (2, 3): a * b * b}),
        up({(0, 2): -a * b}),
    )
    # D G_o = -a u z [ g0 (1 - a^2 z^2 - a b z^2 u^2) - b z u^2 f0 ]
    go = Numerator(
        up({}),
        up({(3, 2): a * b}),
        up({(1, 1): -a, (1, 3): a**3, (3, 3): a * a * b}),
    )
    return {"Fe": fe, "Fo": fo, "Ge": ge, "Go": go}


def _normalized_row(A, B, C):
    # divide a boundary equation by the largest common power of z
    vals = [s.valuation() for s in (A, B, C) if s.valuation() is not None]
    if not vals:
        raise SingularSystem("boundary equation is identically zero")
    k = min(vals)
    return tuple(ps_shift_div(s, k) for s in (A, B, C))


def solve_boundary(rows) -> tuple[PowerSeries, PowerSeries]:
    """Solve ``A_i + B_i f0 + C_i g0 = 0`` (i = 1, 2) over the series ring."""
    (A1, B1, C1), (A2, B2, C2) = (_normalized_row(*r) for r in rows)
    det = B1 * C2 - B2 * C1
    if det[0] == 0:
        raise SingularSystem("determinant series has zero constant term")
    f0 = (C1 * A2 - A1 * C2) / det
    g0 = (B2 * A1 - B1 * A2) / det
    return f0, g0


def solve_f0_g0_brute(p: WalkParams, order: int) -> tuple[PowerSeries, PowerSeries]:
    """Boundary series ``f0`` (Top(0)) and ``g0`` (Bottom(0)) to ``order``."""
    if order < 4:
        raise ValueError("order must be at least 4")
    work = order + 2  # rows lose two orders when divided by z^2
    S = small_root_square(p, work)
    nums = quadrant_numerators(p, 4, work)
    f0, g0 = solve_boundary([nums["Fe"].at_u2(S), nums["Ge"].at_u2(S)])
    return f0.truncate(order), g0.truncate(order)


@dataclass(frozen=True)
class QuadrantStates:
    f: tuple[PowerSeries, ...]
    g: tuple[PowerSeries, ...]
    order: int
    P: PowerSeries = field(repr=False)
    Q: PowerSeries = field(repr=False)


def quadrant_states_from_boundary(
    f0: PowerSeries, g0: PowerSeries, p: WalkParams, max_index: int
) -> QuadrantStates:
    """Run the last-step recursions forward from ``f0`` and ``g0``.

    Every division by ``z`` is checked to be exact and costs one order, so
    ``f_i``/``g_i`` for ``i <= max_index`` come back at order
    ``min(f0.order, g0.order) - max_index``.
    """
    if f0[0] != 1:
        raise ValueError("f0 must have constant term 1")
    a, b = p.alpha, p.beta
    n = min(f0.order, g0.order)
    if max_index > n:
        raise ValueError(f"max_index {max_index} exceeds available order {n}")
    z = PowerSeries.variable(n)
    z2 = z.shift_mul(1).truncate(n)

    def over_z(x: PowerSeries, c: Fraction) -> PowerSeries:
        return ps_shift_div(x, 1).scale(1 / c)

    f = [f0.truncate(n)]
    g = [g0.truncate(n)]
    if max_index >= 1:
        f.append(over_z(f[0] - 1 - f[0] * z2 * (b * b), a))
        g.append(over_z(g[0] - g[0] * z2 * (a * a), b))
    if max_index >= 2:
        f.append(over_z(f[1] - z * f[0] * a - z2 * g[0] * (a * b), b))
        g.append(over_z(g[1] - z * g[0] * b - z2 * f[0] * (a * b), a))
    for i in range(2, max_index):
        if i % 2 == 0:
            # f_i = b z f_{i-1} + a z f_{i+1};  g_i = a z g_{i-1} + b z g_{i+1}
            f.append(over_z(f[i] - z * f[i - 1] * b, a))
            g.append(over_z(g[i] - z * g[i - 1] * a, b))
        else:
            f.append(over_z(f[i] - z * f[i - 1] * a, b))
            g.append(over_z(g[i] - z * g[i - 1] * b, a))

    m = n - max_index
    P = (z * f0 * b).truncate(m)
    Q = (z * g0 * a).truncate(m)
    return QuadrantStates(tuple(x.truncate(m) for x in f), tuple(x.truncate(m) for x in g), m, P, Q)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class EquationCheck:
    name: str
    ok: bool
    first_failure: tuple[int, int] | None = None  # (u degree, z exponent)

    def __str__(self) -> str:
        if self.ok:
            return f"{self.name}: ok"
        u, k = self.first_failure
        return f"{self.name}: FAIL at [u^{u} z^{k}]"


def _layer_polys(seq, udeg: int, parity: int) -> UPoly:
    order = min(s.order for s in seq)
    terms = {i: seq[i] for i in range(parity, min(udeg, len(seq) - 1) + 1, 2)}
    return UPoly.from_terms(terms, udeg, order)


def verify_functional_equations(fseq, gseq, f0, g0, p: WalkParams, order: int, udeg: int = 8):
    """Check the four bivariate equations and the four numerator identities.

    ``fseq``/``gseq`` must hold at least ``udeg + 1`` series.  Returns a list
    of :class:`EquationCheck`, one per identity.
    """
    if len(fseq) <= udeg or len(gseq) <= udeg:
        raise ValueError("need state series for every index up to udeg")
    a, b = p.alpha, p.beta
    fseq = [s.truncate(order) for s in fseq[: udeg + 1]]
    gseq = [s.truncate(order) for s in gseq[: udeg + 1]]
    f0, g0 = f0.truncate(order), g0.truncate(order)
    Fe, Fo = _layer_polys(fseq, udeg, 0), _layer_polys(fseq, udeg, 1)
    Ge, Go = _layer_polys(gseq, udeg, 0), _layer_polys(gseq, udeg, 1)
    z = PowerSeries.variable(order)
    z2 = z * z

    def const(s: PowerSeries) -> UPoly:
        return UPoly.from_terms({0: s}, udeg, order)

    # each equation multiplied through by u
    checks = {
        "F_e": (
            Fe.shift_u(1),
            Fo.shift_u(2) * (z * b) + Fo * (z * a) + const(1 + z2 * f0 * (b * b)).shift_u(1),
        ),
        "F_o": (
            Fo.shift_u(1),
            Fe.shift_u(2) * (z * a) + (Fe - const(f0)) * (z * b) + const(z2 * g0 * (a * b)).shift_u(2),
        ),
        "G_e": (
            Ge.shift_u(1),
            Go.shift_u(2) * (z * a) + Go * (z * b) + const(z2 * g0 * (a * a)).shift_u(1),
        ),
        "G_o": (
            Go.shift_u(1),
            Ge.shift_u(2) * (z * b) + (Ge - const(g0)) * (z * a) + const(z2 * f0 * (a * b)).shift_u(2),
        ),
    }
    D = kernel_denominator(p, udeg, order)
    nums = quadrant_numerators(p, udeg, order)
    for key, X in (("Fe", Fe), ("Fo", Fo), ("Ge", Ge), ("Go", Go)):
        checks[f"D*{key[0]}_{key[1]}"] = (D * X, nums[key].assemble(f0, g0))

    out = []
    for name, (lhs, rhs) in checks.items():
        diff = lhs.first_difference(rhs)
        out.append(EquationCheck(name, diff is None, diff))
    return out


# ---------------------------------------------------------------------------
# diagnostic for the closed boundary expressions


def _printed_factors(p: WalkParams, order: int):
    a = p.alpha
    W = compute_W(p, order)
    z = PowerSeries.variable(order)
    z2 = z * z
    z4 = z2 * z2
    # common first factor of both numerators; the "aW" token is read as alpha*W
    X = (
        z4 * (-3 * a * a + 3 * a - 1)
        + W * z2 * (a * a)
        + z2 * (3 * a * a - 3 * a + 2)
        - W * z2 * a
        + W * z2
        - 1
        - W
    )
    Y = z2 * (2 * a * a - 2 * a + 1) - 1 + W
    common = (z - 1) * (z + 1) * (z2 * (1 - 3 * a + 3 * a * a) - 1)
    return W, z, z2, z4, X, Y, common


def printed_boundary(p: WalkParams, order: int) -> tuple[PowerSeries | None, PowerSeries | None]:
    """Evaluate the closed expressions for ``f0`` and ``g0`` with ``W`` as a series.

    Returns ``None`` in place of a series whose numerator does not vanish to
    the order demanded by its power of ``z`` in the denominator.
    """
    a = p.alpha
    work = order + 7
    W, z, z2, z4, X, Y, common = _printed_factors(p, work)

    f0 = g0 = None
    try:
        num = ps_shift_div(X * Y, 4)
        den = common * (4 * a * a * (a - 1) ** 2)
        f0 = (num / den).truncate(order)
    except InexactCancellation:
        pass

    Z = z4 * (2 * a**3 - a * a) + 1 - z2 * (3 * a * a) - W + W * z2 * (a * a) - z2 + z2 * (2 * a)
    try:
        num = ps_shift_div(X * Z * Y, 7)
        den = common * (8 * (a - 1) ** 4 * a**3)
        g0 = (num / den).truncate(order)
    except InexactCancellation:
        pass
    return f0, g0


def diagnostic_printed_boundary(p: WalkParams, order: int) -> str:
    """Coefficient table comparing the closed ``f0``/``g0`` expressions with the linear solve.

    Informational only; the solve is authoritative.
    """
    if order < 8:
        raise ValueError("order must be at least 8")
    f0, g0 = solve_f0_g0_brute(p, order)
    pf0, pg0 = printed_boundary(p, order)
    lines = [f"closed-form boundary check, alpha={p.alpha}, order {order}"]
    lines.append(f"{'k':>3}  {'f0 solve':>14} {'f0 closed':>14}  {'g0 solve':>14} {'g0 closed':>14}")
    for k in range(order + 1):
        cf = str(pf0[k]) if pf0 is not None else "-"
        cg = str(pg0[k]) if pg0 is not None else "-"
        lines.append(f"{k:>3}  {str(f0[k]):>14} {cf:>14}  {str(g0[k]):>14} {cg:>14}")
    for name, mine, theirs in (("f0", f0, pf0), ("g0", g0, pg0)):
        if theirs is None:
            lines.append(f"{name}: MISMATCH (numerator does not cancel the z-power of the denominator)")
            continue
        diff = mine.first_difference(theirs)
        if diff is None:
            lines.append(f"{name}: MATCH to order {order}")
        else:
            lines.append(f"{name}: MISMATCH at z^{diff}")
    return "\n".join(lines)
