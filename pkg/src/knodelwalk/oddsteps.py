"""Odd-step probabilities from even-step ones, by looking at the last step."""
from __future__ import annotations

from fractions import Fraction

from .errors import ParityViolation
from .series import PowerSeries
from .walk import Bottom, State, StateDist, Top, WalkParams


def odd_from_even(d: StateDist, p: WalkParams) -> StateDist:
    """Distribution after one more step, for ``d`` on the even class.

    ``Top(2j+1)`` collects ``a*Top(2j) + b*Top(2j+2)`` (plus ``b*Q`` when
    ``j = 0``), ``Bottom(2j)`` collects ``a*Bottom(2j-1) + b*Bottom(2j+1)``
    with ``Q`` standing in for ``Bottom(-1)``, and ``P`` gets ``b*Top(0)``.
    """
    if d.p or any(m for i, m in enumerate(d.top) if i % 2) or any(
        m for i, m in enumerate(d.bottom) if i % 2 == 0
    ):
        raise ParityViolation("distribution has mass outside the even class")
    a, b = p.alpha, p.beta
    n = max(len(d.top), len(d.bottom)) + 1

    def top(i):
        return d.top[i] if i < len(d.top) else Fraction(0)

    def bottom(i):
        return d.bottom[i] if i < len(d.bottom) else Fraction(0)

    new_top = [Fraction(0)] * n
    new_bottom = [Fraction(0)] * n
    for j in range(0, (n - 1) // 2 + 1):
        if 2 * j + 1 < n:
            new_top[2 * j + 1] = a * top(2 * j) + b * top(2 * j + 2) + (b * d.q if j == 0 else 0)
        lower = d.q if j == 0 else bottom(2 * j - 1)
        new_bottom[2 * j] = a * lower + b * bottom(2 * j + 1)
    return StateDist(tuple(new_top), tuple(new_bottom), b * top(0), Fraction(0), d.step + 1)


def odd_state_series(
    target: State,
    F: tuple[PowerSeries, ...],
    G: tuple[PowerSeries, ...],
    Q: PowerSeries,
    p: WalkParams,
) -> PowerSeries:
    """``[z^m]`` is the probability of ``target`` after ``2m + 1`` single steps.

    ``F[j]``, ``G[j]`` and ``Q`` are the double-step series of ``Top(2j)``,
    ``Bottom(2j+1)`` and ``Q``; they must reach one index past the target.
    """
    a, b = p.alpha, p.beta
    order = min(s.order for s in (*F, *G, Q))
    zero = PowerSeries.zero(order)

    def get(seq, j):
        return seq[j] if j < len(seq) else None

    def need(s, name):
        if s is None:
            raise ValueError(f"missing double-step series for {name}")
        return s

    if target == State("P"):
        return F[0] * b
    if target == State("Q") or target.is_even_class:
        return zero
    i = target.index
    if target.kind == "top":
        j = (i - 1) // 2
        out = need(get(F, j), Top(2 * j)) * a + need(get(F, j + 1), Top(2 * j + 2)) * b
        return out + Q * b if j == 0 else out
    j = i // 2
    lower = Q if j == 0 else need(get(G, j - 1), Bottom(2 * j - 1))
    return lower * a + need(get(G, j), Bottom(2 * j + 1)) * b
