"""Exact dual-tableau simplex for non-negative solutions of ``A x >= b``."""

from .model import (InequalitySystem, LinearProgram, ModelError, ThresholdSpec, corpus, klee_minty,
                    make_lp, make_system, objective_threshold_row, primal_dual_system, scale_row)
from .oracle import check_farkas, check_solution, enumerate_vertices, oracle_feasible, oracle_min
from .rational import Ordering, Rational, lex_compare, rat_make, rat_parse, render
from .solver import (Feasible, Infeasible, LimitExceeded, optimize, solve, solve_lp_thresholds,
                     solve_primal_dual, solve_system)
from .tableau import ContractError, DualTableau, build_tableau

__all__ = [
    "InequalitySystem", "LinearProgram", "ModelError", "ThresholdSpec", "corpus", "klee_minty",
    "make_lp", "make_system", "objective_threshold_row", "primal_dual_system", "scale_row",
    "check_farkas", "check_solution", "enumerate_vertices", "oracle_feasible", "oracle_min",
    "Ordering", "Rational", "lex_compare", "rat_make", "rat_parse", "render",
    "Feasible", "Infeasible", "LimitExceeded", "optimize", "solve", "solve_lp_thresholds",
    "solve_primal_dual", "solve_system", "ContractError", "DualTableau", "build_tableau",
]
