"""Truncated formal power series with exact rational coefficients.

A :class:`PowerSeries` of order ``n`` knows the coefficients of ``z**0`` to
``z**n``; everything beyond is unknown (not zero).  Binary operations return
the minimum order of their operands, so agreement is never claimed past
what both sides actually determine.

:class:`UPoly` is a polynomial in a catalytic variable ``u`` whose
coefficients are power series sharing a single order.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    InexactCancellation,
    NonSquareConstant,
    NonzeroInnerConstant,
    NotRevertible,
    ZeroConstantTerm,
)

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _scaled_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    # common denominator, so that convolutions run on plain ints
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class PowerSeries:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = [_frac(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            # shorter input is a polynomial: missing coefficients are zero
            c = (c + [Fraction(0)] * (order + 1 - len(c)))[: order + 1]
        if not c:
            raise ValueError("a power series needs at least one coefficient")
        self._c = tuple(c)

    # construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar, order: int) -> PowerSeries:
        return cls([value], order)

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls([0], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: Scalar = 1) -> PowerSeries:
        """``coeff * z**k`` known to ``order``."""
        return cls([0] * k + [coeff], order)

    @classmethod
    def variable(cls, order: int) -> PowerSeries:
        return cls.monomial(1, order)

    # basic protocol ------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self._c):
            if c:
                terms.append(f"{c}" if k == 0 else f"({c})*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"PowerSeries({body} + O(z^{self.order + 1}))"

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self._c[: order + 1])

    def agrees_with(self, other: PowerSeries, order: int | None = None) -> bool:
        n = min(self.order, other.order)
        if order is not None:
            if order > n:
                return False
            n = order
        return self._c[: n + 1] == other._c[: n + 1]

    def first_difference(self, other: PowerSeries) -> int | None:
        """Lowest exponent where the two series differ, within the common order."""
        for k in range(min(self.order, other.order) + 1):
            if self._c[k] != other._c[k]:
                return k
        return None

    def valuation(self) -> int | None:
        for k, c in enumerate(self._c):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not any(self._c)

    def even_part(self) -> PowerSeries:
        """The series ``h(z)`` with ``self = h(z**2) + odd terms``."""
        return PowerSeries(self._c[::2])

    def shift_mul(self, k: int) -> PowerSeries:
        """Exact multiplication by ``z**k``; the known order grows by ``k``."""
        return PowerSeries((Fraction(0),) * k + self._c)

    def shift_div(self, k: int) -> PowerSeries:
        return ps_shift_div(self, k)

    def scale(self, c: Scalar) -> PowerSeries:
        c = _frac(c)
        return PowerSeries(x * c for x in self._c)

    def __call__(self, inner: PowerSeries) -> PowerSeries:
        return ps_compose(self, inner)

    def __pow__(self, n: int) -> PowerSeries:
        if n < 0:
            return ps_div(PowerSeries.constant(1, self.order), self ** (-n))
        result = PowerSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                result = ps_mul(result, base)
            n >>= 1
            if n:
                base = ps_mul(base, base)
        return result

    # arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries.constant(other, self.order)
        return NotImplemented

    def __neg__(self) -> PowerSeries:
        return PowerSeries(-c for c in self._c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return ps_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / _frac(other))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return ps_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ps_div(other, self)


# ---------------------------------------------------------------------------
# core operations


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries(a[k] + b[k] for k in range(n + 1))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    A, da = _scaled_ints(a.coeffs[: n + 1])
    B, db = _scaled_ints(b.coeffs[: n + 1])
    # skip leading zeros: valuations are often large in the kernel pipelines
    va = next((i for i, x in enumerate(A) if x), n + 1)
    vb = next((i for i, x in enumerate(B) if x), n + 1)
    den = da * db
    out = []
    for k in range(n + 1):
        s = 0
        for i in range(va, k - vb + 1):
            s += A[i] * B[k - i]
        out.append(Fraction(s, den))
    return PowerSeries(out)


def _inverse(b: PowerSeries) -> PowerSeries:
    if b[0] == 0:
        raise ZeroConstantTerm("series has zero constant term")
    n = b.order
    inv = PowerSeries([1 / b[0]])
    prec = 0
    # Newton step: inv <- inv * (2 - b*inv), doubling the known precision
    while prec < n:
        prec = min(2 * prec + 1, n)
        bt = b.truncate(prec)
        inv = PowerSeries(inv.coeffs, prec)
        inv = ps_mul(inv, ps_add(PowerSeries.constant(2, prec), -ps_mul(bt, inv)))
    return inv


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Quotient ``q`` with ``q*b == a`` to the smaller order."""
    n = min(a.order, b.order)
    return ps_mul(a.truncate(n), _inverse(b.truncate(n)))


def _rational_sqrt(x: Fraction) -> Fraction:
    if x <= 0:
        raise NonSquareConstant(f"constant term {x} has no positive rational square root")
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise NonSquareConstant(f"constant term {x} is not a rational square")
    return Fraction(rp, rq)


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    """Square root with positive constant term, by Newton iteration.

    Iterates ``s <- (s + a/s) / 2`` starting from the rational square root
    of ``a(0)``; each step doubles the number of correct coefficients.
    """
    n = a.order
    s = PowerSeries([_rational_sqrt(a[0])])
    prec = 0
    while prec < n:
        prec = min(2 * prec + 1, n)
        s = PowerSeries(s.coeffs, prec)
        s = ps_add(s, ps_div(a.truncate(prec), s)).scale(Fraction(1, 2))
    return s


def ps_shift_div(a: PowerSeries, k: int) -> PowerSeries:
    """Exact division by ``z**k``.

    Raises :class:`InexactCancellation` unless the ``k`` lowest coefficients
    are exactly zero.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > a.order:
        raise ValueError(f"cannot divide a series of order {a.order} by z^{k}")
    for i in range(k):
        if a[i] != 0:
            raise InexactCancellation(f"coefficient of z^{i} is {a[i]}, expected 0")
    return PowerSeries(a.coeffs[k:])


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """``outer(inner(z))``; ``inner`` must have zero constant term."""
    if inner[0] != 0:
        raise NonzeroInnerConstant(f"inner series has constant term {inner[0]}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = PowerSeries.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        acc = ps_mul(acc, inner) + outer[k]
    return acc


def ps_revert(a: PowerSeries) -> PowerSeries:
    """Compositional inverse ``b`` with ``a(b(z)) = z``, by Lagrange inversion.

    ``[z^n] b = (1/n) [w^(n-1)] (w / a(w))^n``.
    """
    if a[0] != 0:
        raise NotRevertible("series has nonzero constant term")
    if a.order < 1 or a[1] == 0:
        raise NotRevertible("series has zero linear coefficient")
    n = a.order
    h = _inverse(ps_shift_div(a, 1))  # w / a(w), order n - 1
    out = [Fraction(0)]
    power = PowerSeries.constant(1, n - 1)
    for m in range(1, n + 1):
        power = ps_mul(power, h)
        out.append(power[m - 1] / m)
    return PowerSeries(out)


# ---------------------------------------------------------------------------
# polynomials in u with series coefficients


class UPoly:
    """Polynomial in ``u`` of degree at most ``udeg`` with series coefficients.

    Products drop every power of ``u`` above ``udeg``: the object is a
    truncation in ``u`` as well as in ``z``.
    """

    __slots__ = ("_c",)

    def __init__(self, ucoeffs: Sequence[PowerSeries]):
        if not ucoeffs:
            raise ValueError("need at least one u-coefficient")
        order = min(c.order for c in ucoeffs)
        self._c = tuple(c.truncate(order) for c in ucoeffs)

    @classmethod
    def from_terms(cls, terms: dict[int, PowerSeries], udeg: int, order: int) -> UPoly:
        cs = [PowerSeries.zero(order)] * (udeg + 1)
        for k, s in terms.items():
            if k <= udeg:
                cs[k] = cs[k] + s
        return cls(cs)

    @property
    def udeg(self) -> int:
        return len(self._c) - 1

    @property
    def order(self) -> int:
        return self._c[0].order

    def __getitem__(self, k: int) -> PowerSeries:
        if k > self.udeg:
            raise IndexError(k)
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, UPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self) -> str:
        return f"UPoly(udeg={self.udeg}, order={self.order})"

    def _binop(self, other: UPoly, op) -> UPoly:
        d = min(self.udeg, other.udeg)
        return UPoly([op(self._c[k], other._c[k]) for k in range(d + 1)])

    def __add__(self, other: UPoly) -> UPoly:
        return self._binop(other, ps_add)

    def __sub__(self, other: UPoly) -> UPoly:
        return self._binop(other, lambda x, y: ps_add(x, -y))

    def __neg__(self) -> UPoly:
        return UPoly([-c for c in self._c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PowerSeries)):
            return UPoly([c * other for c in self._c])
        if not isinstance(other, UPoly):
            return NotImplemented
        d = min(self.udeg, other.udeg)
        order = min(self.order, other.order)
        out = [PowerSeries.zero(order) for _ in range(d + 1)]
        for i, a in enumerate(self._c[: d + 1]):
            if a.is_zero():
                continue
            for j in range(d + 1 - i):
                b = other._c[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + ps_mul(a, b)
        return UPoly(out)

    __rmul__ = __mul__

    def shift_u(self, k: int) -> UPoly:
        """Multiply by ``u**k``, keeping the same ``udeg``."""
        zero = PowerSeries.zero(self.order)
        return UPoly(([zero] * k + list(self._c))[: self.udeg + 1])

    def is_even(self) -> bool:
        return all(c.is_zero() for c in self._c[1::2])

    def is_odd(self) -> bool:
        return all(c.is_zero() for c in self._c[0::2])

    def evaluate(self, x: PowerSeries) -> PowerSeries:
        """Substitute a series for ``u`` (Horner)."""
        acc = self._c[-1]
        for c in reversed(self._c[:-1]):
            acc = ps_mul(acc, x) + c
        return acc

    def evaluate_u2(self, s: PowerSeries) -> PowerSeries:
        """Substitute ``u**2 := s`` in an even polynomial."""
        if not self.is_even():
            raise ValueError("evaluate_u2 needs an even polynomial in u")
        return UPoly(self._c[0::2]).evaluate(s)

    def first_difference(self, other: UPoly) -> tuple[int, int] | None:
        """``(u_degree, z_exponent)`` of the first disagreeing coefficient."""
        for k in range(min(self.udeg, other.udeg) + 1):
            d = self._c[k].first_difference(other._c[k])
            if d is not None:
                return k, d
        return None
