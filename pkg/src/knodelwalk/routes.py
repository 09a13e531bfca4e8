"""Occupation probabilities by any of the four methods.

``dp``       exact walk
``kernel2``  four-function kernel method and forward recursion
``kernel3``  double-step kernel method, odd steps by the last-step relations
``closed``   closed forms in ``v`` and coefficient transfer
"""
from __future__ import annotations

from fractions import Fraction

from .brute import quadrant_states_from_boundary, solve_f0_g0_brute
from .double import double_states
from .oddsteps import odd_state_series
from .series import PowerSeries
from .vsubst import closed_forms, transfer_series
from .walk import State, WalkParams, double_state_series, state_series

METHODS = ("dp", "kernel2", "kernel3", "closed")


def _brute_single(state: State, order: int, p: WalkParams) -> PowerSeries:
    idx = state.index if state.kind in ("top", "bottom") else 0
    max_index = max(idx, 1)
    f0, g0 = solve_f0_g0_brute(p, max(order + max_index, 4))
    qs = quadrant_states_from_boundary(f0, g0, p, max_index)
    if state.kind == "top":
        s = qs.f[idx]
    elif state.kind == "bottom":
        s = qs.g[idx]
    elif state.kind == "P":
        s = qs.P
    else:
        s = qs.Q
    return s.truncate(order)


def double_layer_series(p: WalkParams, max_index: int, order: int, method: str):
    """Double-step series ``(F_0..F_k, G_0..G_k, Q)`` by ``kernel3`` or ``closed``."""
    if method == "kernel3":
        return double_states(p, max_index, order)
    if method == "closed":
        cf = closed_forms(p)
        F = tuple(transfer_series(cf.F_coeff(j), order, p) for j in range(max_index + 1))
        G = tuple(transfer_series(cf.G_coeff(j), order, p) for j in range(max_index + 1))
        return F, G, transfer_series(cf.fQ, order, p)
    raise ValueError(f"method {method!r} has no double-step layer")


def _pick_double(state: State, F, G, Q) -> PowerSeries:
    d = state.to_double()
    if d.kind == "F":
        return F[d.index]
    if d.kind == "G":
        return G[d.index]
    return Q


def probabilities(state: State, steps: int, p: WalkParams, method: str = "dp", double: bool = False) -> list[Fraction]:
    """Probability of ``state`` after 0..steps (single or double) steps."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if steps < 0:
        raise ValueError("steps must be nonnegative")

    if double:
        if not state.is_even_class:
            raise ValueError(f"{state} is never occupied after an even number of steps")
        if method == "dp":
            return list(double_state_series(state.to_double(), steps, p))
        if method == "kernel2":
            return list(_brute_single(state, 2 * steps, p).even_part())
        F, G, Q = double_layer_series(p, state.to_double().index, steps, method)
        return list(_pick_double(state, F, G, Q))

    if method == "dp":
        return list(state_series(state, steps, p))
    if method == "kernel2":
        return list(_brute_single(state, steps, p))

    half = steps // 2
    idx = state.index if state.kind in ("top", "bottom") else 0
    F, G, Q = double_layer_series(p, idx // 2 + 1, half, method)
    if state.is_even_class:
        even = _pick_double(state, F, G, Q)
        odd = PowerSeries.zero(half)
    else:
        even = PowerSeries.zero(half)
        odd = odd_state_series(state, F, G, Q, p)
    return [even[n // 2] if n % 2 == 0 else odd[n // 2] for n in range(steps + 1)]
