from fractions import Fraction

import pytest

from p1chambers.chambers import (
    ChamberSig,
    OnWall,
    adjacent_pairs,
    chamber_of,
    chamber_poly,
    enumerate_chambers,
    r_i_poly,
    resonances,
    totally_negative_poly,
    wall_crossing_poly,
)
from p1chambers.invariants import DomainError, LatticePoint, f_value, lattice_points
from p1chambers.poly import MultiPoly

P = LatticePoint


def ring(m):
    nv = m + 1
    xs = [MultiPoly.variable(nv, i) for i in range(m)]
    return xs, MultiPoly.variable(nv, m)


def half_strip(y, x):
    return (y - x) * (y - x - 1) / 2


def test_resonances_examples():
    assert resonances(2) == []
    assert resonances(3) == [(1,), (2,), (3,)]
    assert resonances(4) == [(1,), (2,), (3,), (4,), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    with pytest.raises(ValueError):
        resonances(1)


def test_chamber_of_examples():
    assert chamber_of(P((1, 1), 2)) == ChamberSig(2, frozenset())
    assert chamber_of(P((1, 1, 1), 2)) == ChamberSig(3, frozenset({(1,), (2,), (3,)}))
    assert chamber_of(P((3, 1, 0), 2)) == ChamberSig(3, frozenset({(2,), (3,)}))
    assert chamber_of(P((2, 1, 0), 2)) == OnWall(((1,),))
    with pytest.raises(DomainError):
        chamber_of(P((0, 0, 0), 5))


def test_r_i_poly_examples():
    assert r_i_poly(2, ()) == 1
    (x1, x2, x3), y = ring(3)
    assert r_i_poly(3, (1,)) == -half_strip(y, x1)
    assert r_i_poly(3, (2,)) == -half_strip(y, x2)
    tn = y * (x1 + x2 + x3 + 2 - y)
    assert r_i_poly(3, ()) == tn + half_strip(y, x1) + half_strip(y, x2) + half_strip(y, x3)


def m3_table():
    (x1, x2, x3), y = ring(3)
    tn = y * (x1 + x2 + x3 + 2 - y)
    h = [half_strip(y, x) for x in (x1, x2, x3)]
    return {
        frozenset({(1,), (2,), (3,)}): tn,
        frozenset({(2,), (3,)}): tn + h[0],
        frozenset({(3,)}): tn + h[0] + h[1],
        frozenset(): tn + h[0] + h[1] + h[2],
    }


def test_m3_table_coefficients():
    table = m3_table()
    found = enumerate_chambers(3, 6)
    assert {sig.below for sig, _ in found} == set(table)
    for sig, _ in found:
        assert chamber_poly(sig) == table[sig.below]
        assert chamber_poly(sig).sorted_terms() == table[sig.below].sorted_terms()


def test_m3_polys_agree_with_f_on_closures():
    table = m3_table()
    for p in lattice_points(3, 5, 7):
        for below, poly in table.items():
            if ChamberSig(3, below).closure_contains(p):
                assert poly.evaluate(p.as_tuple()) == f_value(p), (p, below)


def test_wall_crossing_examples_and_rejections():
    (x1, x2, x3), y = ring(3)
    assert wall_crossing_poly(3, [2]) == -half_strip(y, x2)
    assert wall_crossing_poly(4, (2, 1)) == r_i_poly(4, (1, 2))
    for bad in [(), (1, 2), (1, 2, 3)]:
        with pytest.raises(ValueError):
            wall_crossing_poly(3, bad)
    with pytest.raises(ValueError):
        wall_crossing_poly(3, (4,))


def test_totally_negative_examples():
    assert totally_negative_poly(2) == 1
    (x1, x2, x3), y = ring(3)
    assert totally_negative_poly(3) == y * (x1 + x2 + x3 + 2 - y)
    assert totally_negative_poly(4).evaluate((1, 1, 1, 1, 5)) == 25
    assert f_value(P((1, 1, 1, 1), 5)) == 25


@pytest.mark.parametrize("m", [2, 3, 4])
def test_totally_negative_chamber(m):
    tn = ChamberSig(m, frozenset(resonances(m)))
    assert chamber_poly(tn) == totally_negative_poly(m)


def test_chamber_counts():
    assert len(enumerate_chambers(2, 4)) == 1
    assert len(enumerate_chambers(3, 6)) == 4
    assert len(enumerate_chambers(4, 10)) == 16


@pytest.mark.parametrize("m,bound", [(3, 6), (4, 10)])
def test_signatures_are_monotone_and_degree_bounded(m, bound):
    for sig, witness in enumerate_chambers(m, bound):
        assert sig.is_monotone()
        assert sig.closure_contains(witness)
        assert chamber_poly(sig).total_degree() <= 2 * m - 4
        assert chamber_poly(sig).evaluate(witness.as_tuple()) == f_value(witness)


@pytest.mark.parametrize("m,bound,count", [(3, 6, 3), (4, 10, 20)])
def test_adjacent_pairs_wall_crossing(m, bound, count):
    chambers = [sig for sig, _ in enumerate_chambers(m, bound)]
    pairs = adjacent_pairs(chambers, bound)
    assert len(pairs) == count
    for c1, c2, I, witness in pairs:
        assert I in c1.below and I not in c2.below
        assert witness.subset_sum(I) == witness.y
        assert chamber_poly(c1) - chamber_poly(c2) == wall_crossing_poly(m, I)


@pytest.mark.parametrize("m", [3, 4])
def test_r_i_poly_vanishes_on_its_strip(m):
    # R_I is zero where sum_I x <= y < sum_I (x + 1), so crossing is continuous
    for I in resonances(m):
        poly = r_i_poly(m, I)
        for p in lattice_points(m, 5, 9):
            s = p.subset_sum(I)
            if s <= p.y < s + len(I):
                assert poly.evaluate(p.as_tuple()) == 0, (I, p)


def test_sort_key_orders_totally_negative_first():
    sigs = [sig for sig, _ in enumerate_chambers(3, 6)]
    assert sigs[0].is_totally_negative()
    assert [len(s.above) for s in sigs] == [0, 1, 2, 3]
    assert sigs[1].describe() == {"below": [[2], [3]], "above": [[1]]}


def test_r_i_poly_coefficients_are_rational():
    for I in [(), (1,), (1, 2)]:
        for _, c in r_i_poly(4, I).sorted_terms():
            assert isinstance(c, Fraction)
