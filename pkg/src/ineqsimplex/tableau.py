"""The dual tableau for ``max b y  s.t.  y A + I s = 0,  y, s >= 0``.

One row per primal variable, one column per dual variable. Columns come in
three blocks, left to right:

* threshold columns, one per objective bound ``-c x >= t`` (descending ``t``),
* dual columns, one per constraint row of ``A``,
* slack columns, one per variable (the starting unit basis).

All right-hand sides are zero and are not stored. The w-row carries the
reduced costs; negated in the slack block it is the current trial point.
Row and column indices are 0-based throughout the API; renderers and traces
print them 1-based.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from fractions import Fraction

from .model import InequalitySystem, LinearProgram, ModelError, ThresholdSpec
from .rational import Ordering, lex_compare

ZERO = Fraction(0)
ONE = Fraction(1)


class ContractError(ValueError):
    pass


@dataclass(frozen=True)
class ColumnMeta:
    kind: str  # "threshold" | "dual" | "slack"
    index: int = 0  # constraint index for dual, variable index for slack
    t: Fraction | None = None

    def label(self) -> str:
        if self.kind == "threshold":
            return f"t={self.t}"
        if self.kind == "dual":
            return f"y{self.index + 1}"
        return f"s{self.index + 1}"


@dataclass
class DualTableau:
    rows: list  # n lists of K Fractions
    w_row: list  # K Fractions
    cols: tuple  # K ColumnMeta
    basis: list  # basis[r] = column basic in row r
    system: InequalitySystem
    c: tuple | None = None
    active_threshold: int | None = None
    pivot_count: int = 0
    initial_rows: tuple = field(default=(), repr=False)
    initial_w: tuple = field(default=(), repr=False)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.cols)

    @property
    def k(self) -> int:
        return sum(1 for c in self.cols if c.kind == "threshold")

    def threshold_columns(self) -> list:
        return [j for j, c in enumerate(self.cols) if c.kind == "threshold"]

    def slack_column(self, j: int) -> int:
        return self.k + self.system.m + j

    def copy(self) -> DualTableau:
        return copy.deepcopy(self)

    # -- pivot rules -------------------------------------------------------

    def eligible(self, col: int) -> bool:
        meta = self.cols[col]
        return meta.kind != "threshold" or col == self.active_threshold

    def select_entering(self) -> int | None:
        """Largest positive w-row entry among eligible columns; ties go right."""
        best = None
        for j, v in enumerate(self.w_row):
            if v > 0 and self.eligible(j) and (best is None or v >= self.w_row[best]):
                best = j
        return best

    def select_entering_lowest(self) -> int | None:
        """Bland-style fallback: leftmost eligible column with positive w-row entry."""
        for j, v in enumerate(self.w_row):
            if v > 0 and self.eligible(j):
                return j
        return None

    def select_leaving(self, col: int) -> int | None:
        """Row with positive entry in ``col`` whose scaled row is lexicographically least."""
        best, best_key = None, None
        for r, row in enumerate(self.rows):
            a = row[col]
            if a > 0:
                key = [v / a for v in row]
                if best is None or lex_compare(key, best_key) is Ordering.LESS:
                    best, best_key = r, key
        return best

    def select_leaving_lowest(self, col: int) -> int | None:
        """Bland-style fallback: among rows with positive entry, the lowest basic column."""
        cands = [r for r, row in enumerate(self.rows) if row[col] > 0]
        if not cands:
            return None
        return min(cands, key=lambda r: self.basis[r])

    # -- mutation ----------------------------------------------------------

    def pivot(self, r: int, c: int) -> DualTableau:
        """Gauss-Jordan step on entry ``(r, c)``. Mutates and returns ``self``."""
        p = self.rows[r][c]
        if p == 0:
            raise ContractError(f"zero pivot entry at row {r}, column {c}")
        prow = [v / p for v in self.rows[r]] if p != 1 else list(self.rows[r])
        self.rows[r] = prow
        for i, row in enumerate(self.rows):
            f = row[c]
            if i != r and f != 0:
                self.rows[i] = [a - f * b for a, b in zip(row, prow)]
        f = self.w_row[c]
        if f != 0:
            self.w_row = [a - f * b for a, b in zip(self.w_row, prow)]
        self.basis[r] = c
        self.pivot_count += 1
        return self

    def set_active_threshold(self, col: int) -> DualTableau:
        if not 0 <= col < self.width or self.cols[col].kind != "threshold":
            raise ContractError(f"column {col} is not a threshold column")
        self.active_threshold = col
        return self

    def threshold_column_for(self, t) -> int:
        t = Fraction(t)
        for j in self.threshold_columns():
            if self.cols[j].t == t:
                return j
        raise ContractError(f"no threshold column for t={t}")

    def adjust_threshold(self, delta) -> DualTableau:
        """Raise the active bound by ``delta`` (negative relaxes it). Re-run ``solve`` afterwards."""
        if self.active_threshold is None:
            raise ContractError("tableau has no active threshold column")
        delta = Fraction(delta)
        if delta == 0:
            return self
        col = self.active_threshold
        self.w_row[col] += delta
        old = self.cols[col]
        self.cols = self.cols[:col] + (ColumnMeta("threshold", old.index, old.t + delta),) + self.cols[col + 1 :]
        self.initial_w = self.initial_w[:col] + (self.initial_w[col] + delta,) + self.initial_w[col + 1 :]
        return self

    # -- read-out ----------------------------------------------------------

    def current_point(self) -> tuple:
        base = self.k + self.system.m
        return tuple(-self.w_row[base + j] for j in range(self.n))

    def active_t(self) -> Fraction | None:
        if self.active_threshold is None:
            return None
        return self.cols[self.active_threshold].t

    def extended_system(self) -> InequalitySystem:
        """The system this tableau currently decides: the active bound row first, then ``A``."""
        if self.active_threshold is None:
            return self.system
        row = tuple(-ci for ci in self.c)
        return self.system.with_row(row, self.active_t(), first=True)

    def extract_farkas_ray(self, col: int) -> FarkasRay:
        """Unbounded dual direction along entering column ``col``."""
        if not self.w_row[col] > 0:
            raise ContractError(f"w-row entry of column {col} is not positive")
        if any(row[col] > 0 for row in self.rows):
            raise ContractError(f"column {col} has a positive entry; dual is not unbounded along it")
        ray = [ZERO] * self.width
        ray[col] = ONE
        for r, row in enumerate(self.rows):
            ray[self.basis[r]] = -row[col]
        k, m = self.k, self.system.m
        for j in self.threshold_columns():
            if j != self.active_threshold and ray[j] != 0:
                raise ContractError(f"inactive threshold column {j} carries ray weight")
        y = tuple(ray[k : k + m])
        if self.active_threshold is not None:
            y = (ray[self.active_threshold],) + y
        return FarkasRay(y=y, s=tuple(ray[k + m :]), by_column=tuple(ray))

    def check_invariants(self) -> None:
        """Assert the structural invariants; raises ``AssertionError``."""
        K = self.width
        assert len(self.w_row) == K and all(len(r) == K for r in self.rows)
        for r, c in enumerate(self.basis):
            col = [row[c] for row in self.rows]
            assert col == [ONE if i == r else ZERO for i in range(self.n)], f"basic column {c} not unit in row {r}"
            if not (self.cols[c].kind == "threshold" and c == self.active_threshold):
                assert self.w_row[c] == 0, f"basic column {c} has nonzero w-row entry"
        ths = self.threshold_columns()
        for a, b in zip(ths, ths[1:]):
            assert all(row[a] == row[b] for row in self.rows), "threshold columns diverged"
            ta, tb = self.cols[a].t, self.cols[b].t
            assert self.w_row[a] - self.w_row[b] == ta - tb, "threshold w-row gap drifted"
        # w = w0 - x M with x the trial point and M the starting rows
        x = self.current_point()
        for j in range(K):
            expected = self.initial_w[j] - sum((x[i] * self.initial_rows[i][j] for i in range(self.n)), ZERO)
            assert self.w_row[j] == expected, f"w-row entry {j} inconsistent with trial point"


@dataclass(frozen=True)
class FarkasRay:
    """Ray over the dual variables.

    ``y`` covers the rows of the tableau's extended system (active bound
    first, if any), ``s`` the variables, ``by_column`` the raw tableau columns.
    """

    y: tuple
    s: tuple
    by_column: tuple


def build_tableau(system, c=None, thresholds=None) -> DualTableau:
    """Build the starting tableau for ``system`` (or a ``LinearProgram``).

    With ``thresholds`` one column per bound ``-c x >= t`` is prepended in
    descending ``t`` order, and the smallest bound is made active.
    """
    if isinstance(system, LinearProgram):
        if c is None:
            c = system.c
        system = system.system
    if thresholds is not None and not isinstance(thresholds, ThresholdSpec):
        thresholds = ThresholdSpec.of(thresholds)
    if thresholds is not None and c is None:
        raise ModelError("thresholds require an objective")
    if c is not None:
        c = tuple(Fraction(v) for v in c)
        if len(c) != system.n:
            raise ModelError(f"objective has {len(c)} coefficients, system has {system.n} variables")
    n, m = system.n, system.m
    ts = tuple(sorted(thresholds.values, reverse=True)) if thresholds is not None else ()
    k = len(ts)
    cols = tuple(ColumnMeta("threshold", i, t) for i, t in enumerate(ts))
    cols += tuple(ColumnMeta("dual", i) for i in range(m))
    cols += tuple(ColumnMeta("slack", j) for j in range(n))
    rows = []
    for j in range(n):
        row = [-c[j]] * k if k else []
        row += [system.A[i][j] for i in range(m)]
        row += [ONE if jj == j else ZERO for jj in range(n)]
        rows.append(row)
    w_row = list(ts) + list(system.b) + [ZERO] * n
    tab = DualTableau(
        rows=rows,
        w_row=w_row,
        cols=cols,
        basis=[k + m + j for j in range(n)],
        system=system,
        c=c,
        active_threshold=(k - 1 if k else None),
        initial_rows=tuple(tuple(r) for r in rows),
        initial_w=tuple(w_row),
    )
    return tab
