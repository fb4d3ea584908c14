"""Independent exact checkers, a brute-force vertex oracle, and the
pivot-count statistics harness.

The checkers and the oracle share no code with the tableau: feasibility and
certificates are checked by direct evaluation, and ground truth comes from
solving every square subsystem of active constraints by plain Gaussian
elimination. Only the statistics harness calls the solver.
"""

from __future__ import annotations

import io
import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .model import InequalitySystem, LinearProgram, corpus, make_system, random_system
from .rational import dot, render_decimal
from .solver import solve_lp_thresholds, solve_system

MAX_VARS = 8
MAX_ROWS = 10


class OracleBudgetError(RuntimeError):
    """The instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class FeasibilityReport:
    feasible: bool
    violations: tuple  # (row, shortfall); row is 0-based, -(j+1) marks x_j < 0


def check_solution(system: InequalitySystem, x) -> FeasibilityReport:
    if len(x) != system.n:
        raise ValueError(f"point has {len(x)} entries, system has {system.n} variables")
    x = [Fraction(v) for v in x]
    bad = []
    for i, (row, rhs) in enumerate(zip(system.A, system.b)):
        lhs = dot(row, x)
        if lhs < rhs:
            bad.append((i, rhs - lhs))
    for j, v in enumerate(x):
        if v < 0:
            bad.append((-(j + 1), -v))
    return FeasibilityReport(not bad, tuple(bad))


def check_farkas(system: InequalitySystem, u) -> bool:
    """True iff ``u >= 0``, ``u A <= 0`` and ``u b > 0``: a proof that the system has no solution."""
    if len(u) != system.m:
        raise ValueError(f"certificate has {len(u)} entries, system has {system.m} rows")
    u = [Fraction(v) for v in u]
    if any(v < 0 for v in u):
        return False
    for j in range(system.n):
        if sum((u[i] * system.A[i][j] for i in range(system.m)), Fraction(0)) > 0:
            return False
    return dot(u, system.b) > 0


def _solve_square(M, rhs):
    """Solve ``M z = rhs`` exactly; None if singular."""
    size = len(M)
    aug = [list(M[i]) + [rhs[i]] for i in range(size)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(aug[i][size] for i in range(size))


def _check_budget(system, max_vars, max_rows):
    if system.n > max_vars or system.m > max_rows:
        raise OracleBudgetError(
            f"enumeration refused: n={system.n}, m={system.m} exceeds budget n<={max_vars}, m<={max_rows}")


def enumerate_vertices(system: InequalitySystem, max_vars: int = MAX_VARS, max_rows: int = MAX_ROWS) -> list:
    """All vertices of ``{A x >= b, x >= 0}``, deduplicated, in discovery order."""
    _check_budget(system, max_vars, max_rows)
    n = system.n
    zero, one = Fraction(0), Fraction(1)
    rows = list(system.A)
    rhs = list(system.b)
    for j in range(n):
        rows.append(tuple(one if k == j else zero for k in range(n)))
        rhs.append(zero)
    found = []
    seen = set()
    for subset in itertools.combinations(range(len(rows)), n):
        z = _solve_square([rows[i] for i in subset], [rhs[i] for i in subset])
        if z is None or z in seen:
            continue
        if check_solution(system, z).feasible:
            seen.add(z)
            found.append(z)
    return found


def oracle_feasible(system: InequalitySystem, **budget) -> bool:
    # the region lies in the nonnegative orthant, so it is pointed: nonempty iff it has a vertex
    return bool(enumerate_vertices(system, **budget))


@dataclass(frozen=True)
class OracleResult:
    status: str  # "infeasible" | "unbounded" | "optimal"
    value: Fraction | None = None
    vertex: tuple | None = None


def oracle_min(lp: LinearProgram, **budget) -> OracleResult:
    verts = enumerate_vertices(lp.system, **budget)
    if not verts:
        return OracleResult("infeasible")
    # a recession direction d >= 0 with A d >= 0 and c d <= -1
    recession = make_system(
        list(lp.system.A) + [[-ci for ci in lp.c]],
        [Fraction(0)] * lp.m + [Fraction(1)],
        lp.n,
    )
    if oracle_feasible(recession, **budget):
        return OracleResult("unbounded")
    best = min(verts, key=lp.value)
    return OracleResult("optimal", lp.value(best), best)


# -- pivot statistics -----------------------------------------------------

CSV_HEADER = "instance,seed,n,m,verdict,pivots"


@dataclass(frozen=True)
class StatRow:
    instance: str
    seed: str
    n: int
    m: int
    verdict: str
    pivots: int
    fallback_used: bool = False


@dataclass(frozen=True)
class StatsReport:
    rows: tuple
    seed: int | None = None

    @property
    def fraction_le_m(self) -> Fraction | None:
        if not self.rows:
            return None
        return Fraction(sum(1 for r in self.rows if r.pivots <= r.m), len(self.rows))

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write(CSV_HEADER + "\n")
        for r in self.rows:
            out.write(f"{r.instance},{r.seed},{r.n},{r.m},{r.verdict},{r.pivots}\n")
        frac = self.fraction_le_m
        if frac is not None:
            out.write(f"# fraction_pivots_le_m={render_decimal(frac, 6)}\n")
        return out.getvalue()


def instance_system(n: int, m: int, seed: int, vary_sizes: bool = False) -> InequalitySystem:
    """Random instance for one seed; with ``vary_sizes`` the shape is drawn from ``1..n`` x ``1..m``."""
    rng = random.Random(seed)
    if vary_sizes:
        n, m = rng.randint(1, n), rng.randint(1, m)
    return random_system(n, m, rng)


def _run_instance(args):
    i, n, m, seed, vary = args
    system = instance_system(n, m, seed, vary)
    out = solve_system(system)
    return StatRow(str(i), str(seed), system.n, system.m, out.verdict, out.pivots, out.fallback_used)


def pivot_stats(n: int, m: int, count: int, seed: int, vary_sizes: bool = False, jobs: int = 1) -> StatsReport:
    """Solve ``count`` seeded random systems; instance ``i`` uses seed ``seed + i``."""
    tasks = [(i, n, m, seed + i, vary_sizes) for i in range(count)]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            rows = list(pool.map(_run_instance, tasks))
    else:
        rows = [_run_instance(t) for t in tasks]
    return StatsReport(tuple(rows), seed)


def corpus_stats() -> StatsReport:
    """The worked instances as a fixed batch: two systems and the three-bound Klee-Minty run."""
    rows = []
    for name in ("example_3_1", "example_3_2_system"):
        system = corpus(name)
        out = solve_system(system)
        rows.append(StatRow(name, "-", system.n, system.m, out.verdict, out.pivots, out.fallback_used))
    lp = corpus("klee_minty_4")
    runs = solve_lp_thresholds(lp, [500, 600, 700])
    rows.append(StatRow(
        "klee_minty_4@500|600|700", "-", lp.n, lp.m,
        "|".join(out.verdict for _, out in runs),
        sum(out.pivots for _, out in runs),
        any(out.fallback_used for _, out in runs),
    ))
    return StatsReport(tuple(rows))
