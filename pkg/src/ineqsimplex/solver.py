"""Pivot loop and the drivers built on it: threshold runs, bracketing
optimization, and the combined primal-dual system."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .model import InequalitySystem, LinearProgram, ThresholdSpec, primal_dual_system
from .rational import dot
from .tableau import DualTableau, FarkasRay, build_tableau

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PivotRecord:
    step: int
    entering_col: int
    leaving_row: int
    pivot_value: Fraction
    w_row_after: tuple
    snapshot: DualTableau | None = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class Feasible:
    x: tuple
    pivots: int
    trace: tuple = ()
    fallback_used: bool = False

    verdict = "feasible"


@dataclass(frozen=True)
class Infeasible:
    entering: int
    farkas: FarkasRay
    last_point: tuple
    violated: tuple  # 0-based rows of the extended system
    pivots: int
    trace: tuple = ()
    fallback_used: bool = False
    system: InequalitySystem | None = field(default=None, repr=False, compare=False)

    verdict = "infeasible"


@dataclass(frozen=True)
class LimitExceeded:
    pivots: int
    trace: tuple = ()
    fallback_used: bool = False

    verdict = "limit"


def default_max_pivots(tab: DualTableau) -> int:
    return 10 * tab.width


def solve(tab: DualTableau, max_pivots: int | None = None, trace: bool = False,
          snapshots: bool = False, debug: bool = False):
    """Pivot ``tab`` in place until the w-row has no eligible positive entry
    (feasible) or an entering column has no positive entry (infeasible).

    If a basis repeats, entering and leaving switch to lowest-index rules for
    the rest of the call. ``max_pivots`` counts pivots made by this call.
    """
    limit = default_max_pivots(tab) if max_pivots is None else max_pivots
    records = []
    seen = {frozenset(tab.basis)}
    bland = False
    made = 0

    def do_pivot(r, c):
        nonlocal made
        value = tab.rows[r][c]
        tab.pivot(r, c)
        made += 1
        if debug:
            tab.check_invariants()
        if trace or snapshots:
            records.append(PivotRecord(
                step=tab.pivot_count, entering_col=c, leaving_row=r, pivot_value=value,
                w_row_after=tuple(tab.w_row), snapshot=tab.copy() if snapshots else None))

    # an inactive bound left basic from an earlier run hands its row to the active one
    act = tab.active_threshold
    if act is not None and act not in tab.basis:
        for r, b in enumerate(tab.basis):
            if tab.cols[b].kind == "threshold":
                if made >= limit:
                    return LimitExceeded(made, tuple(records), bland)
                do_pivot(r, act)
                break

    while True:
        col = tab.select_entering_lowest() if bland else tab.select_entering()
        if col is None:
            return Feasible(tab.current_point(), made, tuple(records), bland)
        row = tab.select_leaving_lowest(col) if bland else tab.select_leaving(col)
        if row is None:
            ray = tab.extract_farkas_ray(col)
            ext = tab.extended_system()
            x = tab.current_point()
            violated = tuple(i for i in range(ext.m) if dot(ext.A[i], x) < ext.b[i])
            return Infeasible(col, ray, x, violated, made, tuple(records), bland, ext)
        if made >= limit:
            return LimitExceeded(made, tuple(records), bland)
        rebasing = tab.basis[row] != col  # a column re-pivoted on its own row leaves the basis alone
        do_pivot(row, col)
        if not rebasing:
            continue
        sig = frozenset(tab.basis)
        if sig in seen and not bland:
            log.warning("basis repeated after %d pivots; switching to lowest-index rule", made)
            bland = True
        seen.add(sig)


def solve_system(system, max_pivots=None, trace=False, snapshots=False):
    """Build a tableau for ``system`` and solve it."""
    return solve(build_tableau(system), max_pivots, trace, snapshots)


def solve_lp_thresholds(lp: LinearProgram, spec, max_pivots=None, trace=False, snapshots=False,
                        tableau: DualTableau | None = None) -> list:
    """Decide ``-c x >= t`` for every ``t`` in ascending order on one shared tableau.

    Stops after the first infeasible bound; larger bounds are infeasible too.
    """
    if not isinstance(spec, ThresholdSpec):
        spec = ThresholdSpec.of(spec)
    tab = tableau if tableau is not None else build_tableau(lp, thresholds=spec)
    results = []
    for t in spec.values:
        tab.set_active_threshold(tab.threshold_column_for(t))
        out = solve(tab, max_pivots, trace, snapshots)
        results.append((t, out))
        if not isinstance(out, Feasible):
            break
    return results


@dataclass(frozen=True)
class OptimizeResult:
    best_x: tuple
    z_upper: Fraction
    z_lower: Fraction | None  # None when unbounded
    unbounded: bool
    pivots: int
    probes: tuple = ()  # (t, verdict)
    bisection_steps: int = 0


def _certified_lower(out: Infeasible) -> Fraction | None:
    """Objective lower bound ``b y / u_t`` read off a certificate with bound weight ``u_t > 0``."""
    u = out.farkas.y
    if not u or u[0] == 0:
        return None
    return dot(u[1:], out.system.b[1:]) / u[0]


def optimize(lp: LinearProgram, eps, max_pivots: int | None = None, max_doublings: int = 64):
    """Bracket ``min c x`` by probing objective bounds on a single threshold column.

    Doubling search from ``t = 0`` finds a feasible and an infeasible bound,
    then bisection narrows the gap to ``eps``. Feasible probes are snapshotted
    and each new probe warm-starts from the last feasible snapshot. Lower
    bounds are also tightened by the dual values carried in the infeasibility
    certificates, and once the gap closes one last probe at that bound tries
    to certify it exactly.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    total = 0
    probes = []

    base = solve(build_tableau(lp.system), max_pivots)
    total += base.pivots
    if not isinstance(base, Feasible):
        return base
    best_x = base.x
    z_upper = lp.value(best_x)
    z_lower = None
    snap = None  # (t, tableau) of the last feasible probe

    def probe(t):
        nonlocal total, best_x, z_upper, z_lower, snap
        t = Fraction(t)
        if snap is None:
            tab = build_tableau(lp, thresholds=[t])
        else:
            tab = snap[1].copy()
            tab.adjust_threshold(t - snap[0])
        out = solve(tab, max_pivots)
        total += out.pivots
        probes.append((t, out.verdict))
        if isinstance(out, Feasible):
            snap = (t, tab)
            if lp.value(out.x) < z_upper:
                best_x, z_upper = out.x, lp.value(out.x)
        elif isinstance(out, Infeasible):
            bound = -t
            cert = _certified_lower(out)
            if cert is not None and cert > bound:
                bound = cert
            if z_lower is None or bound > z_lower:
                z_lower = bound
        return out

    # doubling phase
    out = probe(0)
    if isinstance(out, LimitExceeded):
        return out
    if isinstance(out, Feasible):
        step = Fraction(1)
        for _ in range(max_doublings):
            if z_lower is not None:
                break
            t = step
            step *= 2
            if t <= -z_upper:
                continue  # already known feasible
            res = probe(t)
            if isinstance(res, LimitExceeded):
                return res
        if z_lower is None:
            return OptimizeResult(best_x, z_upper, None, True, total, tuple(probes))
    else:
        step = Fraction(-1)
        while -z_upper < step:
            res = probe(step)
            if isinstance(res, Feasible):
                break
            if isinstance(res, LimitExceeded):
                return res
            step *= 2
        else:
            # the base point itself meets the bound
            res = probe(-z_upper)
            if isinstance(res, LimitExceeded):
                return res

    # bisection phase
    steps = 0
    while z_upper - z_lower > eps:
        mid = (-z_upper + -z_lower) / 2
        res = probe(mid)
        steps += 1
        if isinstance(res, LimitExceeded):
            return res
    if z_upper != z_lower:
        res = probe(-z_lower)
        if isinstance(res, LimitExceeded):
            return res
    return OptimizeResult(best_x, z_upper, z_lower, False, total, tuple(probes), steps)


@dataclass(frozen=True)
class PrimalDualSolution:
    x: tuple
    y: tuple
    z: Fraction
    pivots: int
    outcome: Feasible = field(repr=False, compare=False, default=None)


@dataclass(frozen=True)
class PrimalDualFailure:
    """The combined system has no solution: the LP is infeasible or unbounded."""

    reason: str  # "infeasible" | "unbounded" | "limit"
    outcome: object = field(repr=False, compare=False, default=None)
    primal_outcome: object = field(repr=False, compare=False, default=None)


def solve_primal_dual(lp: LinearProgram, max_pivots: int | None = None, trace=False, snapshots=False):
    """Solve the LP as one feasibility problem over ``(x, y)``.

    When the combined system is infeasible, the primal system is solved on
    its own to tell an infeasible LP from an unbounded one.
    """
    combined = primal_dual_system(lp)
    out = solve(build_tableau(combined), max_pivots, trace, snapshots)
    if isinstance(out, LimitExceeded):
        return PrimalDualFailure("limit", out)
    if isinstance(out, Infeasible):
        primal = solve(build_tableau(lp.system), max_pivots)
        reason = {Feasible: "unbounded", Infeasible: "infeasible"}.get(type(primal), "limit")
        return PrimalDualFailure(reason, out, primal)
    x, y = out.x[: lp.n], out.x[lp.n :]
    z = lp.value(x)
    dual_value = dot(lp.system.b, y)
    if z != dual_value:
        raise AssertionError(f"duality gap {z} vs {dual_value} on a feasible combined point")
    return PrimalDualSolution(x, y, z, out.pivots, out)
