"""Acceptance criteria, each checked exactly and against its time budget."""

import math
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_RESULTS
from p1chambers.chambers import (
    ChamberSig,
    adjacent_pairs,
    chamber_poly,
    enumerate_chambers,
    resonances,
    totally_negative_poly,
    wall_crossing_poly,
)
from p1chambers.invariants import (
    LatticePoint,
    descendant_value,
    f_graph_oracle,
    f_value,
    lattice_points,
    r_i_series_value,
    subsets_up_to,
)
from p1chambers.poly import MultiPoly
from p1chambers.series import (
    QSeries,
    W_MONOMIAL,
    comb_coeff,
    exp_alpha_w_over_pow,
    q_d_dq,
    q_poly,
    series_exp,
    tree_series,
    w_rational_to_qseries,
)


def judge(number, title, budget, check):
    """Run check() -> (ok, detail); record and assert both exactness and time."""
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    in_time = elapsed < budget
    line = f"{title}: {detail}; {elapsed:.2f}s (budget {budget}s)"
    ACCEPTANCE_RESULTS[number] = (ok and in_time, line)
    assert ok, line
    assert in_time, line


def m3_table():
    nv = 4
    x1, x2, x3 = (MultiPoly.variable(nv, i) for i in range(3))
    y = MultiPoly.variable(nv, 3)
    tn = y * (x1 + x2 + x3 + 2 - y)
    h = [(y - x) * (y - x - 1) / 2 for x in (x1, x2, x3)]
    return {
        frozenset({(1,), (2,), (3,)}): tn,
        frozenset({(2,), (3,)}): tn + h[0],
        frozenset({(3,)}): tn + h[0] + h[1],
        frozenset(): tn + h[0] + h[1] + h[2],
    }


def test_criterion_01_m2_flat():
    def check():
        points = list(lattice_points(2, 10, 21))
        bad = [p for p in points if f_value(p) != 1]
        return not bad, f"{len(points)} points, {len(bad)} mismatches"

    judge(1, "m=2 table F = 1", 1, check)


def test_criterion_02_m3_table():
    def check():
        table = m3_table()
        found = {sig.below: sig for sig, _ in enumerate_chambers(3, 6)}
        same = set(found) == set(table) and all(chamber_poly(found[b]) == table[b] for b in table)
        checked = bad = 0
        for p in lattice_points(3, 5, 7):
            fv = f_value(p)
            for below, poly in table.items():
                if ChamberSig(3, below).closure_contains(p):
                    checked += 1
                    bad += poly.evaluate(p.as_tuple()) != fv
        return same and bad == 0 and checked > 0, (
            f"{len(found)} chambers, table match={same}, {checked} closure evaluations, {bad} mismatches"
        )

    judge(2, "m=3 chamber polynomials", 10, check)


def test_criterion_03_oracle():
    def check():
        checked = bad = 0
        for m in (2, 3, 4):
            for p in lattice_points(m, 4, 6):
                checked += 1
                bad += f_value(p) != f_graph_oracle(p)
        return bad == 0, f"{checked} points, {bad} mismatches"

    judge(3, "f_value equals graph oracle", 120, check)


def test_criterion_04_comb():
    def check():
        checked = bad = 0
        N = 12
        W = tree_series(N)
        for a in range(5):
            Wa = W**a
            for b in range(1, 8):
                for mu in range(13):
                    direct = Wa.coefficient_of_product(exp_alpha_w_over_pow(-mu, b, N), mu)
                    checked += 1
                    bad += comb_coeff(a, mu, b) != direct
        return bad == 0, f"{checked} coefficients, {bad} mismatches"

    judge(4, "comb coefficient lemma", 5, check)


def test_criterion_05_keyid_and_inversion():
    def check():
        bad = 0
        N = 25
        for x in range(-5, 6):
            s = exp_alpha_w_over_pow(x, 1, N)
            bad += sum(s[n] != Fraction((n + x) ** n, math.factorial(n)) for n in range(N + 1))
        W = tree_series(40)
        inverse_ok = W * series_exp(-W) == QSeries([0, 1] + [0] * 39)
        return bad == 0 and inverse_ok, f"{bad} identity mismatches, inversion ok={inverse_ok}"

    judge(5, "tree-function identities", 5, check)


def test_criterion_06_q_polynomials():
    def check():
        N = 20
        seed = w_rational_to_qseries(W_MONOMIAL, 0, 3, N)
        bad = []
        for k in range(7):
            if k:
                seed = q_d_dq(seed)
            rhs = w_rational_to_qseries(W_MONOMIAL * q_poly(k), 0, 2 * k + 3, N)
            if rhs != seed or q_poly(k).degree > k:
                bad.append(k)
        return not bad, f"k=0..6, failing k={bad}"

    judge(6, "operator iterates and Q_k", 5, check)


def test_criterion_07_degree_bound():
    def check():
        worst = []
        for m, bound in ((2, 4), (3, 6), (4, 10)):
            for sig, _ in enumerate_chambers(m, bound):
                deg = chamber_poly(sig).total_degree()
                if deg > 2 * m - 4:
                    worst.append((m, sig, deg))
        return not worst, f"{len(worst)} chambers over the bound 2m-4"

    judge(7, "chamber degree bound", 30, check)


def test_criterion_08_wall_crossing():
    def check():
        summary = []
        ok = True
        for m, bound in ((3, 6), (4, 10)):
            chambers = [sig for sig, _ in enumerate_chambers(m, bound)]
            pairs = adjacent_pairs(chambers, bound)
            bad = sum(chamber_poly(a) - chamber_poly(b) != wall_crossing_poly(m, I) for a, b, I, _ in pairs)
            ok = ok and bad == 0 and len(pairs) > 0
            summary.append(f"m={m}: {len(pairs)} pairs, {bad} mismatches")
        return ok, "; ".join(summary)

    judge(8, "wall crossing equals R_I", 60, check)


def test_criterion_09_totally_negative():
    def check():
        bad = [m for m in (2, 3, 4) if chamber_poly(ChamberSig(m, frozenset(resonances(m)))) != totally_negative_poly(m)]
        return not bad, f"m=2,3,4, failing m={bad}"

    judge(9, "totally negative closed form", 60, check)


def test_criterion_10_descendants():
    def check():
        checked = bad = 0
        for m in (2, 3, 4):
            for l in lattice_points(m, 4, 1):
                ls = l.x
                d = 1 + sum(ls)
                p = LatticePoint(ls, d)
                expected = Fraction(d) ** (m - 2)
                checked += 1
                bad += f_value(p) != expected
                bad += descendant_value(ls) != expected / math.prod(math.factorial(v) for v in ls)
        return bad == 0, f"{checked} tuples, {bad} mismatches"

    judge(10, "descendant corollary", 10, check)


def test_criterion_11_full_sum_vanishing():
    def check():
        checked = bad = 0
        for m in (2, 3):
            for p in lattice_points(m, 3, 12, inside=False):
                if p.y >= sum(v + 1 for v in p.x):
                    checked += 1
                    bad += sum(r_i_series_value(p, I) for I in subsets_up_to(m, m)) != 0
        return bad == 0 and checked > 0, f"{checked} points, {bad} nonzero sums"

    judge(11, "full sum vanishes beyond the space", 30, check)
