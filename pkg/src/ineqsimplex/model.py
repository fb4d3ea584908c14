"""Problem data: inequality systems ``Ax >= b, x >= 0`` and linear programs.

Also holds the problem transformations (row scaling, objective thresholds,
the combined primal-dual system), the Klee-Minty generator, a seeded random
generator, and the built-in corpus of worked instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .rational import vector


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class InequalitySystem:
    """``A x >= b`` with ``x >= 0`` implicit. ``A`` has ``m`` rows of length ``n``."""

    A: tuple
    b: tuple
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ModelError(f"need at least one variable, got n={self.n}")
        if len(self.A) != len(self.b):
            raise ModelError(f"A has {len(self.A)} rows but b has {len(self.b)} entries")
        for i, row in enumerate(self.A):
            if len(row) != self.n:
                raise ModelError(f"row {i + 1} has {len(row)} entries, expected {self.n}")

    @property
    def m(self) -> int:
        return len(self.A)

    def with_row(self, row, rhs, first: bool = False) -> InequalitySystem:
        row, rhs = vector(row), Fraction(rhs)
        if first:
            return InequalitySystem(((row,) + self.A), (rhs,) + self.b, self.n)
        return InequalitySystem(self.A + (row,), self.b + (rhs,), self.n)


@dataclass(frozen=True)
class LinearProgram:
    """Minimize ``c x`` over ``system``."""

    c: tuple
    system: InequalitySystem

    def __post_init__(self):
        if len(self.c) != self.system.n:
            raise ModelError(f"objective has {len(self.c)} coefficients, system has {self.system.n} variables")

    @property
    def n(self) -> int:
        return self.system.n

    @property
    def m(self) -> int:
        return self.system.m

    def value(self, x) -> Fraction:
        return sum((ci * xi for ci, xi in zip(self.c, x)), Fraction(0))


@dataclass(frozen=True)
class ThresholdSpec:
    """Objective bounds ``-c x >= t`` for ``t`` in strictly increasing order."""

    values: tuple

    def __post_init__(self):
        if not self.values:
            raise ModelError("threshold list is empty")
        for a, b in zip(self.values, self.values[1:]):
            if not a < b:
                raise ModelError(f"thresholds must be strictly increasing ({a} then {b})")

    @classmethod
    def of(cls, values) -> ThresholdSpec:
        return cls(vector(values))


def make_system(A, b, n: int | None = None) -> InequalitySystem:
    """Build a validated system. ``n`` is required when ``A`` has no rows."""
    A = tuple(vector(row) for row in A)
    b = vector(b)
    if n is None:
        if not A:
            raise ModelError("cannot infer the variable count of an empty system; pass n")
        n = len(A[0])
    return InequalitySystem(A, b, n)


def make_lp(c, A, b, n: int | None = None) -> LinearProgram:
    c = vector(c)
    return LinearProgram(c, make_system(A, b, len(c) if n is None else n))


def scale_row(system: InequalitySystem, i: int, alpha) -> InequalitySystem:
    """Multiply row ``i`` (1-based) and its right-hand side by ``alpha > 0``."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ModelError(f"scale factor must be positive, got {alpha}")
    if not 1 <= i <= system.m:
        raise ModelError(f"row index {i} out of range 1..{system.m}")
    A = list(system.A)
    b = list(system.b)
    A[i - 1] = tuple(alpha * a for a in A[i - 1])
    b[i - 1] = alpha * b[i - 1]
    return InequalitySystem(tuple(A), tuple(b), system.n)


def objective_threshold_row(lp: LinearProgram, t) -> tuple:
    """The constraint ``-c x >= t`` as ``(row, rhs)``."""
    return tuple(-ci for ci in lp.c), Fraction(t)


def primal_dual_system(lp: LinearProgram) -> InequalitySystem:
    """Inequalities over ``(x, y)`` whose solutions are optimal primal-dual pairs.

    Rows, in order: ``-c x + b y >= 0``; ``A x >= b``; ``-A^T y >= -c``.
    """
    n, m = lp.n, lp.m
    A, b, c = lp.system.A, lp.system.b, lp.c
    zero = Fraction(0)
    rows = [tuple(-ci for ci in c) + tuple(b)]
    rhs = [zero]
    for i in range(m):
        rows.append(tuple(A[i]) + (zero,) * m)
        rhs.append(b[i])
    for j in range(n):
        rows.append((zero,) * n + tuple(-A[i][j] for i in range(m)))
        rhs.append(-c[j])
    return InequalitySystem(tuple(rows), tuple(rhs), n + m)


def klee_minty(d: int) -> LinearProgram:
    """The ``d``-dimensional Klee-Minty cube as a minimization.

    ``c_j = -2^(d-j)``; row ``i`` is ``-sum_{j<i} 2^(i-j+1) x_j - x_i >= -5^i``.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ModelError(f"Klee-Minty dimension must be a positive integer, got {d!r}")
    c = tuple(Fraction(-(2 ** (d - j))) for j in range(1, d + 1))
    A = []
    for i in range(1, d + 1):
        row = []
        for j in range(1, d + 1):
            if j < i:
                row.append(Fraction(-(2 ** (i - j + 1))))
            elif j == i:
                row.append(Fraction(-1))
            else:
                row.append(Fraction(0))
        A.append(tuple(row))
    b = tuple(Fraction(-(5**i)) for i in range(1, d + 1))
    return LinearProgram(c, InequalitySystem(tuple(A), b, d))


def random_system(n: int, m: int, rng: random.Random, lo: int = -9, hi: int = 9) -> InequalitySystem:
    """``m x n`` system with integer entries drawn uniformly from ``[lo, hi]``."""
    A = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(rng.randint(lo, hi)) for _ in range(m)]
    return make_system(A, b, n)


def random_lp(n: int, m: int, rng: random.Random, lo: int = -9, hi: int = 9) -> LinearProgram:
    system = random_system(n, m, rng, lo, hi)
    c = vector(rng.randint(lo, hi) for _ in range(n))
    return LinearProgram(c, system)


_EX32_C = ("-2", "-3", "1", "12")
_EX32_A = (("2", "9", "-1", "-9"), ("-1/3", "-1", "1/3", "2"), _EX32_C)
_EX32_B = ("0", "0", "18")


def _example_3_1():
    return make_system([[1, 3, 0], [0, 1, 0], [-1, 0, 1]], [2, 1, -2])


def _example_3_2_system():
    return make_system(_EX32_A, _EX32_B)


def _example_3_2_lp():
    return LinearProgram(vector(_EX32_C), _example_3_2_system())


_CORPUS = {
    "example_3_1": _example_3_1,
    "example_3_2_system": _example_3_2_system,
    "example_3_2_lp": _example_3_2_lp,
    "klee_minty_4": lambda: klee_minty(4),
}

CORPUS_NAMES = tuple(_CORPUS)


def corpus(name: str):
    """Look up a built-in instance by name (see ``CORPUS_NAMES``)."""
    try:
        return _CORPUS[name]()
    except KeyError:
        raise KeyError(f"unknown corpus instance {name!r}; known: {', '.join(CORPUS_NAMES)}") from None
