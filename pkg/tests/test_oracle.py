from fractions import Fraction

import pytest

from ineqsimplex.model import corpus, klee_minty, make_lp, make_system
from ineqsimplex.oracle import (CSV_HEADER, OracleBudgetError, check_farkas, check_solution, corpus_stats,
                                enumerate_vertices, oracle_feasible, oracle_min, pivot_stats)
from ineqsimplex.rational import vector


def km4_with_bound(t):
    lp = klee_minty(4)
    return lp.system.with_row([8, 4, 2, 1], t, first=True)


def test_check_solution():
    s = corpus("example_3_1")
    assert check_solution(s, [0, 1, 0]).feasible
    rep = check_solution(s, [0, 0, 0])
    assert not rep.feasible
    assert rep.violations == ((0, 2), (1, 1))
    assert check_solution(klee_minty(4).system, [0, 0, 0, 625]).feasible
    assert check_solution(s, [0, 1, -1]).violations == ((-3, 1),)
    with pytest.raises(ValueError):
        check_solution(s, [0, 1])


def test_check_farkas():
    ext = km4_with_bound(700)
    u = vector([Fraction(1, 8), 0, 0, 0, Fraction(1, 8)])
    assert check_farkas(ext, u)
    assert not check_farkas(ext, [0] * 5)
    assert not check_farkas(km4_with_bound(625), u)  # u b = 0 there
    with pytest.raises(ValueError):
        check_farkas(ext, [1, 2])


def test_enumerate_vertices():
    verts = enumerate_vertices(corpus("example_3_1"))
    # active sets {x2 = 1, x1 = 0, x3 = 0} and {x2 = 1, x3 = 0, -x1 + x3 = -2}
    assert set(verts) == {vector([0, 1, 0]), vector([2, 1, 0])}
    assert enumerate_vertices(make_system([], [], 2)) == [vector([0, 0])]
    km2 = enumerate_vertices(klee_minty(2).system)
    assert vector([0, 25]) in km2 and vector([5, 5]) in km2
    for v in verts + km2:
        assert check_solution(corpus("example_3_1") if len(v) == 3 else klee_minty(2).system, v).feasible


def test_enumerate_budget_refusal():
    s = make_system([[1] * 9], [1])
    with pytest.raises(OracleBudgetError):
        enumerate_vertices(s)
    with pytest.raises(OracleBudgetError):
        oracle_feasible(make_system([[1]] * 11, [1] * 11))


def test_oracle_min():
    assert oracle_feasible(corpus("example_3_2_system"))
    r = oracle_min(corpus("example_3_2_lp"))
    assert r.status == "optimal" and r.value == 18
    r = oracle_min(klee_minty(4))
    assert (r.status, r.value, r.vertex) == ("optimal", -625, vector([0, 0, 0, 625]))
    assert oracle_min(make_lp([-1], [], [], 1)).status == "unbounded"
    assert oracle_min(make_lp([1], [[-1]], [1], 1)).status == "infeasible"


def test_mutual_exclusion_on_corpus():
    ext = km4_with_bound(700)
    assert not oracle_feasible(ext)
    assert check_farkas(ext, [Fraction(1, 8), 0, 0, 0, Fraction(1, 8)])
    ok = km4_with_bound(600)
    assert check_solution(ok, [Fraction(25, 8), 0, 0, 575]).feasible


def test_pivot_stats_empty():
    rep = pivot_stats(3, 3, 0, 1)
    assert rep.rows == () and rep.fraction_le_m is None
    assert rep.to_csv() == CSV_HEADER + "\n"


def test_pivot_stats_deterministic():
    a = pivot_stats(5, 5, 20, 42).to_csv()
    b = pivot_stats(5, 5, 20, 42, jobs=4).to_csv()
    assert a == b
    lines = a.splitlines()
    assert lines[0] == CSV_HEADER and len(lines) == 22
    assert lines[-1].startswith("# fraction_pivots_le_m=")
    assert lines[1].split(",")[:4] == ["0", "42", "5", "5"]


def test_corpus_stats():
    rep = corpus_stats()
    assert [r.pivots for r in rep.rows] == [3, 3, 8]
    assert [r.verdict for r in rep.rows] == ["feasible", "feasible", "feasible|feasible|infeasible"]
    assert not any(r.fallback_used for r in rep.rows)
