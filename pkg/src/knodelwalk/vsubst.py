"""Rational closed forms under ``z = v / ((a + b v)(b + a v))``.

With this change of variable the kernel root ``r2`` becomes ``v`` itself
and every double-step generating function is rational in ``v``.  Turning a
function of ``v`` back into ``z``-coefficients uses Lagrange inversion:

    [z^N] H = [v^N] a b (1 - v^2) ((a + b v)(b + a v))^(N-1) H(v).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .series import PowerSeries, ps_div, ps_revert
from .walk import WalkParams

Poly = tuple  # coefficients in v, lowest degree first


def _poly(cs) -> Poly:
    cs = [Fraction(c) for c in cs]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return tuple(cs) if cs else (Fraction(0),)


def _padd(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return _poly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _pmul(p: Sequence, q: Sequence) -> Poly:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return _poly(out)


def _pscale(p: Sequence, c) -> Poly:
    return _poly([x * c for x in p])


def _pprod(*ps) -> Poly:
    out: Poly = (Fraction(1),)
    for p in ps:
        out = _pmul(out, p)
    return out


def _vpow(k: int) -> Poly:
    return _poly([0] * k + [1])


@dataclass(frozen=True)
class RationalFnV:
    """``num(v) / den(v)`` with ``den(0) != 0``."""

    num: Poly
    den: Poly

    def __post_init__(self):
        object.__setattr__(self, "num", _poly(self.num))
        object.__setattr__(self, "den", _poly(self.den))
        if self.den[0] == 0:
            raise ValueError("denominator must not vanish at v = 0")

    @classmethod
    def const(cls, c) -> RationalFnV:
        return cls((c,), (1,))

    def __str__(self) -> str:
        def show(cs):
            terms = [f"{c}" if k == 0 else f"({c})*v^{k}" for k, c in enumerate(cs) if c]
            return " + ".join(terms) if terms else "0"

        return f"({show(self.num)}) / ({show(self.den)})"

    def __add__(self, other: RationalFnV) -> RationalFnV:
        return RationalFnV(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __neg__(self) -> RationalFnV:
        return RationalFnV(_pscale(self.num, -1), self.den)

    def __sub__(self, other: RationalFnV) -> RationalFnV:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalFnV):
            return RationalFnV(_pmul(self.num, other.num), _pmul(self.den, other.den))
        return RationalFnV(_pscale(self.num, Fraction(other)), self.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RationalFnV):
            return RationalFnV(_pmul(self.num, other.den), _pmul(self.den, other.num))
        return RationalFnV(self.num, _pscale(self.den, Fraction(other)))

    def times_vpow(self, k: int) -> RationalFnV:
        return RationalFnV(_pmul(self.num, _vpow(k)), self.den)

    def __call__(self, v) -> Fraction:
        v = Fraction(v)
        n = sum(c * v**i for i, c in enumerate(self.num))
        d = sum(c * v**i for i, c in enumerate(self.den))
        return n / d

    def equals(self, other: RationalFnV) -> bool:
        """Equality as rational functions (cross multiplication)."""
        return _pmul(self.num, other.den) == _pmul(other.num, self.den)

    def series(self, order: int) -> PowerSeries:
        """Expansion in powers of ``v``."""
        return ps_div(PowerSeries(self.num, order), PowerSeries(self.den, order))


# ---------------------------------------------------------------------------
# the substitution and the closed forms


def z_of_v(p: WalkParams) -> RationalFnV:
    a, b = p.alpha, p.beta
    return RationalFnV((0, 1), (a * b, a * a + b * b, a * b))


def _lin(c0, c1) -> Poly:
    return _poly([c0, c1])


@dataclass(frozen=True)
class ClosedForms:
    """Closed forms in ``v`` at a fixed ``alpha``."""

    params: WalkParams
    f0: RationalFnV
    g0: RationalFnV
    fQ: RationalFnV
    expected_end: RationalFnV

    @property
    def _ab(self):
        p = self.params
        return p.alpha, p.beta

    def _cube_den(self, c) -> Poly:
        # c * (1 - v)(v^2 + v + 1)
        return _pscale(_pmul(_lin(1, -1), (1, 1, 1)), c)

    def F_coeff(self, j: int) -> RationalFnV:
        """``[u^j] F`` in ``v``: the ``Top(2j)`` series after the substitution.

        ``v^j (a + v b)(v a + b) / (a b (1 - v^3))``, plus
        ``v^(j+2) (v a + b) / (a (1 - v^3))`` when ``j >= 1``.
        """
        a, b = self._ab
        out = RationalFnV(
            _pprod(_vpow(j), _lin(a, b), _lin(b, a)), self._cube_den(a * b)
        )
        if j >= 1:
            out = out + RationalFnV(_pmul(_vpow(j + 2), _lin(b, a)), self._cube_den(a))
        return out

    def F_coeff_as_printed(self, j: int) -> RationalFnV:
        """The coefficient form with second term ``v^(j+1) / (a (1 - v^3))``.

        Kept for regression tests only: it disagrees with the bivariate
        form and with the walk itself.
        """
        a, b = self._ab
        return RationalFnV(
            _pprod(_vpow(j), _lin(a, b), _lin(b, a)), self._cube_den(a * b)
        ) + RationalFnV(_vpow(j + 1), self._cube_den(a))

    def G_coeff(self, j: int) -> RationalFnV:
        """``[u^j] G`` in ``v``: the ``Bottom(2j+1)`` series after the substitution."""
        a, b = self._ab
        return RationalFnV(
            _pprod(_vpow(j + 1), (a, b, a), _lin(b, a)), self._cube_den(a * b)
        )

    def bivariate_F_numerator(self) -> dict[int, Poly]:
        """``F = sum_i u^i N_i(v) / (a b (1 - u v)(1 - v^3))``; returns ``{i: N_i}``."""
        a, b = self._ab
        base = _lin(b, a)
        return {0: _pmul(_lin(a, b), base), 1: _pmul(_pscale(_vpow(3), b), base)}

    def bivariate_G_numerator(self) -> dict[int, Poly]:
        a, b = self._ab
        return {0: _pprod(_vpow(1), (a, b, a), _lin(b, a))}

    def extract_u(self, numerator: dict[int, Poly], j: int) -> RationalFnV:
        """``[u^j]`` of ``sum_i u^i N_i / (a b (1 - u v)(1 - v^3))`` by expanding
        the geometric series in ``u v``."""
        a, b = self._ab
        num: Poly = (Fraction(0),)
        for i, Ni in numerator.items():
            if i <= j:
                num = _padd(num, _pmul(Ni, _vpow(j - i)))
        return RationalFnV(num, self._cube_den(a * b))


def closed_forms(p: WalkParams) -> ClosedForms:
    a, b = p.alpha, p.beta
    cube = _pscale(_pmul(_lin(1, -1), (1, 1, 1)), a * b)
    f0 = RationalFnV(_pmul(_lin(b, a), _lin(a, b)), cube)
    g0 = RationalFnV(_pprod(_vpow(1), (a, b, a), _lin(b, a)), cube)
    z = z_of_v(p)
    fQ = z * (a * b) * g0 / (RationalFnV.const(1) - z * (a * a))
    # v (v a + b)(3 v^2 b + 3 a + 3 v b + v a + a v^2 + a v^3) / (a b (1 - v)^3 (1 + v + v^2))
    ee_num = _pprod(_vpow(1), _lin(b, a), (3 * a, 3 * b + a, 3 * b + a, a))
    ee_den = _pscale(_pprod(_lin(1, -1), _lin(1, -1), _lin(1, -1), (1, 1, 1)), a * b)
    return ClosedForms(p, f0, g0, fQ, RationalFnV(ee_num, ee_den))


# ---------------------------------------------------------------------------
# coefficient transfer


def _transfer_base(p: WalkParams, order: int):
    a, b = p.alpha, p.beta
    D = PowerSeries(_pmul(_lin(a, b), _lin(b, a)), order)
    jac = PowerSeries([a * b, 0, -a * b], order)
    return D, jac


def transfer_coeff(H: RationalFnV, N: int, p: WalkParams, printed_exponent: bool = False) -> Fraction:
    """``[z^N] H(v(z))`` computed as ``[v^N] a b (1 - v^2) D(v)^(N-1) H(v)``.

    With ``printed_exponent=True`` the power of ``D`` is ``N`` instead; that
    variant is wrong (it gives ``a*b*H(0)`` at ``N = 0``) and exists only so
    the discrepancy can be demonstrated.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    D, jac = _transfer_base(p, N)
    e = N if printed_exponent else N - 1
    return (jac * D**e * H.series(N))[N]


def transfer_series(H: RationalFnV, order: int, p: WalkParams) -> PowerSeries:
    """``z``-series of ``H`` to ``order``, one transfer per coefficient."""
    D, jac = _transfer_base(p, order)
    base = jac * H.series(order)
    Dpow = PowerSeries.constant(1, order) / D  # D^(N-1) at N = 0
    out = []
    for N in range(order + 1):
        out.append((base * Dpow)[N])
        Dpow = Dpow * D
    return PowerSeries(out)


def v_of_z(p: WalkParams, order: int) -> PowerSeries:
    """Compositional inverse of ``z(v)``; equals the kernel root ``r2``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return ps_revert(z_of_v(p).series(order))
