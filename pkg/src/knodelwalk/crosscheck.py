"""Cross-validation of all routes against the exact walk."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .asympt import expected_end_exact, expected_end_half_closed
from .brute import (
    kernel_denominator,
    quadrant_states_from_boundary,
    small_root_square,
    solve_f0_g0_brute,
    verify_functional_equations,
)
from .double import check_double_kernel, crosscheck_section2, double_states, kernel_root_r2
from .oddsteps import odd_from_even
from .series import PowerSeries, ps_compose
from .vsubst import closed_forms, transfer_coeff, transfer_series, v_of_z, z_of_v
from .walk import (
    Bottom,
    FState,
    GState,
    QState,
    Top,
    WalkParams,
    double_state_series,
    expected_end_series,
    state_series,
    trajectory,
)

MAX_INDEX = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    informational: bool = False

    def line(self) -> str:
        tag = "INFO" if self.informational else ("PASS" if self.ok else "FAIL")
        return f"{tag}  {self.name}" + (f": {self.detail}" if self.detail else "")


def _compare(name: str, got: PowerSeries, want: PowerSeries, order: int) -> CheckResult:
    got, want = got.truncate(order), want.truncate(order)
    k = got.first_difference(want)
    if k is None:
        return CheckResult(name, True)
    return CheckResult(name, False, f"first difference at z^{k}: {got[k]} != {want[k]}")


def _all(name: str, results: list[CheckResult]) -> CheckResult:
    for r in results:
        if not r.ok:
            return CheckResult(name, False, f"{r.name}: {r.detail}")
    return CheckResult(name, True)


def run_checks(p: WalkParams, order: int = 32, fault: Callable[[PowerSeries], PowerSeries] | None = None) -> list[CheckResult]:
    """Every exact identity at one ``alpha``.

    ``fault``, when given, is applied to the walk's ``Top(0)`` series before
    it is compared with the kernel solve (used to test failure reporting).
    """
    a, b = p.alpha, p.beta
    out: list[CheckResult] = []
    k = MAX_INDEX

    # four-function kernel method
    f0, g0 = solve_f0_g0_brute(p, order + k + 1)
    dp_top = [state_series(Top(i), order + k + 1, p) for i in range(k + 2)]
    dp_bot = [state_series(Bottom(i), order + k + 1, p) for i in range(k + 2)]
    top0 = dp_top[0] if fault is None else fault(dp_top[0])
    out.append(_compare("kernel2 f0 == walk Top(0)", f0, top0, order))
    out.append(_compare("kernel2 g0 == walk Bottom(0)", g0, dp_bot[0], order))
    qs = quadrant_states_from_boundary(f0, g0, p, k)
    out.append(_all(f"kernel2 states j<={k} == walk", [
        _compare(f"f{i}", qs.f[i], dp_top[i], order) for i in range(k + 1)
    ] + [_compare(f"g{i}", qs.g[i], dp_bot[i], order) for i in range(k + 1)]))
    eqs = verify_functional_equations(dp_top, dp_bot, dp_top[0], dp_bot[0], p, order, udeg=k)
    out.append(CheckResult(
        "functional equations and numerators",
        all(e.ok for e in eqs),
        "; ".join(str(e) for e in eqs if not e.ok),
    ))
    S = small_root_square(p, order)
    DS = kernel_denominator(p, 4, order).evaluate_u2(S)
    out.append(CheckResult("D(u^2 := S) == 0", DS.is_zero(), "" if DS.is_zero() else f"nonzero at z^{DS.valuation()}"))

    # double-step kernel method
    for c in check_double_kernel(p, order):
        out.append(CheckResult(c.name, c.ok, "" if c.ok else str(c)))
    F, G, Q = double_states(p, k, order)
    dF = [double_state_series(FState(j), order, p) for j in range(k + 1)]
    dG = [double_state_series(GState(j), order, p) for j in range(k + 1)]
    dQ = double_state_series(QState, order, p)
    out.append(_all(f"kernel3 states j<={k} == walk", [
        _compare(f"F{j}", F[j], dF[j], order) for j in range(k + 1)
    ] + [_compare(f"G{j}", G[j], dG[j], order) for j in range(k + 1)] + [_compare("Q", Q, dQ, order)]))
    out.append(CheckResult("kernel3 vs kernel2 even coefficients (j=0,1)",
                           all(crosscheck_section2(j, p, min(order, 16)) for j in (0, 1))))

    # closed forms in v
    cf = closed_forms(p)
    out.append(_all(f"closed forms j<={k} == walk", [
        _compare("f0", transfer_series(cf.f0, order, p), dF[0], order),
        _compare("g0", transfer_series(cf.g0, order, p), dG[0], order),
        _compare("fQ", transfer_series(cf.fQ, order, p), dQ, order),
    ] + [_compare(f"[u^{j}]F", transfer_series(cf.F_coeff(j), order, p), dF[j], order) for j in range(k + 1)]
      + [_compare(f"[u^{j}]G", transfer_series(cf.G_coeff(j), order, p), dG[j], order) for j in range(k + 1)]))
    ext = all(
        cf.extract_u(cf.bivariate_F_numerator(), j).equals(cf.F_coeff(j))
        and cf.extract_u(cf.bivariate_G_numerator(), j).equals(cf.G_coeff(j))
        for j in range(6)
    )
    out.append(CheckResult("bivariate F, G expand to [u^j] forms (j<=5)", ext))
    printed_ok = all(cf.F_coeff_as_printed(j).equals(cf.F_coeff(j)) for j in range(6))
    out.append(CheckResult(
        "printed [u^j]F form", True,
        "agrees" if printed_ok else "disagrees with the bivariate expansion (second term should be v^(j+2)(va+b)/(a(1-v^3)), j>=1)",
        informational=True,
    ))

    vorder = 2 * order
    r2 = kernel_root_r2(p, vorder)
    zv = z_of_v(p).series(vorder)
    comp = ps_compose(r2, zv)
    out.append(_compare("r2(z(v)) == v", comp, PowerSeries.variable(vorder), vorder))
    out.append(_compare("v(z) == r2", v_of_z(p, vorder), r2, vorder))
    t0 = transfer_coeff(cf.f0, 0, p)
    t0_printed = transfer_coeff(cf.f0, 0, p, printed_exponent=True)
    out.append(CheckResult(
        "transfer exponent N-1 gives [z^0]f0 = 1, exponent N gives ab",
        t0 == 1 and t0_printed == a * b and t0_printed != 1,
        f"N-1: {t0}, N: {t0_printed}",
    ))

    # expected end
    ee_dp = expected_end_series(vorder, p)
    ee_v = expected_end_exact(vorder, p)
    out.append(_compare("expected end: closed form == walk", ee_v, ee_dp, vorder))
    if a == Fraction(1, 2):
        out.append(_compare("expected end: z closed form (alpha=1/2) == walk", expected_end_half_closed(vorder), ee_dp, vorder))

    # odd steps
    tr = trajectory(p, 2 * order + 1)
    bad = next((m for m in range(order + 1) if not odd_from_even(tr[2 * m], p).same_as(tr[2 * m + 1])), None)
    out.append(CheckResult(f"odd steps from even (2m <= {2 * order})", bad is None, "" if bad is None else f"m = {bad}"))
    return out
