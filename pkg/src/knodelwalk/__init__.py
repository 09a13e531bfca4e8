"""Exact occupation probabilities for Knödel walks with alternating step probabilities.

Three independent routes are provided and cross-checked: the exact walk
(:mod:`.walk`), kernel-method solutions of the functional equations
(:mod:`.brute` for single steps, :mod:`.double` for double steps) and
rational closed forms after a change of variable (:mod:`.vsubst`).
"""
from .series import PowerSeries, UPoly
from .walk import (
    Bottom,
    DoubleDist,
    DoubleState,
    ExtraP,
    ExtraQ,
    FState,
    GState,
    QState,
    State,
    StateDist,
    Top,
    WalkParams,
    double_state_series,
    double_step,
    double_trajectory,
    expected_end_series,
    single_step,
    state_series,
    trajectory,
)

__all__ = [
    "PowerSeries",
    "UPoly",
    "WalkParams",
    "State",
    "StateDist",
    "DoubleDist",
    "DoubleState",
    "Top",
    "Bottom",
    "ExtraP",
    "ExtraQ",
    "FState",
    "GState",
    "QState",
    "state_series",
    "double_state_series",
    "expected_end_series",
    "single_step",
    "double_step",
    "trajectory",
    "double_trajectory",
]
