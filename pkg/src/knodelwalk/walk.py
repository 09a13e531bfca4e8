"""Exact probability evolution on the two-layer walk graph.

Single steps act on four kinds of states: ``Top(i)``, ``Bottom(i)`` and the
two extra states ``P`` (upper) and ``Q`` (lower).  A double step (two
single steps, started at an even time) only visits ``Top(2N)``,
``Bottom(2N+1)`` and ``Q``; those are called ``F(N)``, ``G(N)`` and ``Q`` on
the double-step graph.

Everything here is exact and serves as the ground truth for the
generating-function routes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .series import PowerSeries

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class WalkParams:
    """Step probabilities ``alpha`` and ``beta = 1 - alpha``."""

    alpha: Fraction

    def __post_init__(self):
        a = Fraction(self.alpha)
        if not 0 < a < 1:
            raise ValueError(f"alpha must lie strictly between 0 and 1, got {a}")
        object.__setattr__(self, "alpha", a)

    @property
    def beta(self) -> Fraction:
        return 1 - self.alpha

    @classmethod
    def parse(cls, text: str) -> WalkParams:
        return cls(Fraction(text.strip()))

    def __str__(self) -> str:
        return str(self.alpha)


# ---------------------------------------------------------------------------
# state labels


@dataclass(frozen=True, order=True)
class State:
    """A state of the single-step graph; ``kind`` is top, bottom, P or Q."""

    kind: str
    index: int = 0

    def __str__(self) -> str:
        if self.kind in ("P", "Q"):
            return self.kind
        return f"{self.kind}:{self.index}"

    @classmethod
    def parse(cls, text: str) -> State:
        t = text.strip()
        if t.upper() in ("P", "Q"):
            return cls(t.upper())
        kind, sep, idx = t.partition(":")
        kind = kind.lower()
        if not sep or kind not in ("top", "bottom"):
            raise ValueError(f"malformed state {text!r}; use top:i, bottom:i, P or Q")
        i = int(idx)
        if i < 0:
            raise ValueError(f"state index must be nonnegative in {text!r}")
        return cls(kind, i)

    @property
    def is_even_class(self) -> bool:
        """Reachable after an even number of single steps."""
        if self.kind == "top":
            return self.index % 2 == 0
        if self.kind == "bottom":
            return self.index % 2 == 1
        return self.kind == "Q"

    def to_double(self) -> DoubleState:
        if not self.is_even_class:
            raise ValueError(f"{self} is never occupied after an even number of steps")
        if self.kind == "top":
            return DoubleState("F", self.index // 2)
        if self.kind == "bottom":
            return DoubleState("G", self.index // 2)
        return DoubleState("Q")


def Top(i: int) -> State:
    return State("top", i)


def Bottom(i: int) -> State:
    return State("bottom", i)


ExtraP = State("P")
ExtraQ = State("Q")


@dataclass(frozen=True, order=True)
class DoubleState:
    kind: str  # "F", "G" or "Q"
    index: int = 0

    def to_single(self) -> State:
        if self.kind == "F":
            return Top(2 * self.index)
        if self.kind == "G":
            return Bottom(2 * self.index + 1)
        return ExtraQ

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"{self.kind}{self.index}"


def FState(n: int) -> DoubleState:
    return DoubleState("F", n)


def GState(n: int) -> DoubleState:
    return DoubleState("G", n)


QState = DoubleState("Q")


# ---------------------------------------------------------------------------
# distributions


def _pad(xs: tuple, n: int) -> list:
    return list(xs) + [Fraction(0)] * (n - len(xs))


@dataclass(frozen=True)
class StateDist:
    """Distribution after ``step`` single steps, stored densely per layer."""

    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...]
    p: Fraction
    q: Fraction
    step: int

    @classmethod
    def start(cls) -> StateDist:
        return cls((Fraction(1),), (Fraction(0),), Fraction(0), Fraction(0), 0)

    @classmethod
    def from_support(cls, support: dict[State, Rational], step: int) -> StateDist:
        n = max([s.index for s in support if s.kind in ("top", "bottom")], default=0)
        n = max(n, step) + 1
        top = [Fraction(0)] * n
        bottom = [Fraction(0)] * n
        p = q = Fraction(0)
        for s, m in support.items():
            m = Fraction(m)
            if s.kind == "top":
                top[s.index] += m
            elif s.kind == "bottom":
                bottom[s.index] += m
            elif s.kind == "P":
                p += m
            else:
                q += m
        return cls(tuple(top), tuple(bottom), p, q, step)

    def __getitem__(self, s: State) -> Fraction:
        if s.kind == "top":
            return self.top[s.index] if s.index < len(self.top) else Fraction(0)
        if s.kind == "bottom":
            return self.bottom[s.index] if s.index < len(self.bottom) else Fraction(0)
        return self.p if s.kind == "P" else self.q

    @property
    def support(self) -> dict[State, Fraction]:
        out = {Top(i): m for i, m in enumerate(self.top) if m}
        out.update({Bottom(i): m for i, m in enumerate(self.bottom) if m})
        if self.p:
            out[ExtraP] = self.p
        if self.q:
            out[ExtraQ] = self.q
        return out

    def total(self) -> Fraction:
        return sum(self.top) + sum(self.bottom) + self.p + self.q

    def same_as(self, other: StateDist) -> bool:
        return self.step == other.step and self.support == other.support


@dataclass(frozen=True)
class DoubleDist:
    """Distribution after ``step`` double steps on the F/G/Q graph."""

    f: tuple[Fraction, ...]
    g: tuple[Fraction, ...]
    q: Fraction
    step: int

    @classmethod
    def start(cls) -> DoubleDist:
        return cls((Fraction(1),), (Fraction(0),), Fraction(0), 0)

    def __getitem__(self, s: DoubleState) -> Fraction:
        if s.kind == "F":
            return self.f[s.index] if s.index < len(self.f) else Fraction(0)
        if s.kind == "G":
            return self.g[s.index] if s.index < len(self.g) else Fraction(0)
        return self.q

    @property
    def support(self) -> dict[DoubleState, Fraction]:
        out = {FState(i): m for i, m in enumerate(self.f) if m}
        out.update({GState(i): m for i, m in enumerate(self.g) if m})
        if self.q:
            out[QState] = self.q
        return out

    def total(self) -> Fraction:
        return sum(self.f) + sum(self.g) + self.q

    def to_single(self) -> StateDist:
        support = {s.to_single(): m for s, m in self.support.items()}
        return StateDist.from_support(support, 2 * self.step)


# ---------------------------------------------------------------------------
# transitions


def single_step(d: StateDist, p: WalkParams) -> StateDist:
    a, b = p.alpha, p.beta
    n = max(len(d.top), len(d.bottom)) + 1
    top = [Fraction(0)] * n
    bot = [Fraction(0)] * n
    newp = newq = Fraction(0)

    for i, m in enumerate(d.top):
        if not m:
            continue
        if i == 0:
            top[1] += a * m
            newp += b * m
        elif i % 2:
            top[i - 1] += a * m
            top[i + 1] += b * m
        else:
            top[i - 1] += b * m
            top[i + 1] += a * m

    for i, m in enumerate(d.bottom):
        if not m:
            continue
        if i == 0:
            newq += a * m
            bot[1] += b * m
        elif i % 2:
            bot[i - 1] += b * m
            bot[i + 1] += a * m
        else:
            bot[i - 1] += a * m
            bot[i + 1] += b * m

    if d.p:
        top[0] += b * d.p
        bot[1] += a * d.p
    if d.q:
        top[1] += b * d.q
        bot[0] += a * d.q

    return StateDist(tuple(top), tuple(bot), newp, newq, d.step + 1)


def double_step(d: DoubleDist, p: WalkParams) -> DoubleDist:
    a, b = p.alpha, p.beta
    ab = a * b
    stay = a * a + b * b
    n = max(len(d.f), len(d.g)) + 1
    f = [Fraction(0)] * n
    g = [Fraction(0)] * n
    q = Fraction(0)

    for i, m in enumerate(d.f):
        if not m:
            continue
        f[i] += stay * m
        f[i + 1] += ab * m
        if i == 0:
            g[0] += ab * m
        else:
            f[i - 1] += ab * m

    for i, m in enumerate(d.g):
        if not m:
            continue
        g[i] += stay * m
        g[i + 1] += ab * m
        if i == 0:
            q += ab * m
        else:
            g[i - 1] += ab * m

    if d.q:
        f[0] += ab * d.q
        f[1] += b * b * d.q
        g[0] += ab * d.q
        q += a * a * d.q

    return DoubleDist(tuple(f), tuple(g), q, d.step + 1)


@lru_cache(maxsize=64)
def trajectory(p: WalkParams, steps: int) -> tuple[StateDist, ...]:
    """Distributions after 0..steps single steps, starting at Top(0)."""
    out = [StateDist.start()]
    for _ in range(steps):
        out.append(single_step(out[-1], p))
    return tuple(out)


@lru_cache(maxsize=64)
def double_trajectory(p: WalkParams, steps: int) -> tuple[DoubleDist, ...]:
    out = [DoubleDist.start()]
    for _ in range(steps):
        out.append(double_step(out[-1], p))
    return tuple(out)


def state_series(target: State, max_steps: int, p: WalkParams) -> PowerSeries:
    """``[z^n]`` is the probability of sitting in ``target`` after ``n`` single steps."""
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    return PowerSeries(d[target] for d in trajectory(p, max_steps))


def double_state_series(target: DoubleState, max_steps: int, p: WalkParams) -> PowerSeries:
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    return PowerSeries(d[target] for d in double_trajectory(p, max_steps))


def expected_index(d: DoubleDist) -> Fraction:
    # Q carries index 0
    s = sum(2 * k * m for k, m in enumerate(d.f))
    s += sum((2 * k + 1) * m for k, m in enumerate(d.g))
    return Fraction(s)


def expected_end_series(max_steps: int, p: WalkParams) -> PowerSeries:
    """Mean end index after ``m`` double steps, as the ``z^m`` coefficient."""
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    return PowerSeries(expected_index(d) for d in double_trajectory(p, max_steps))
