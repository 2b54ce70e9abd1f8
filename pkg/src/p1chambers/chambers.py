"""Resonances, chambers and the polynomials attached to them.

Polynomials live in the ring Q[x_1, ..., x_m, y] (``y`` is variable ``m``).
``r_i_poly`` is built from the closed-form expansion (Stirling polynomials,
Q_k numerators, binomial polynomials); nothing here interpolates values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

from .arith import falling_product
from .combinatorics import partitions_ge2, stirling_poly
from .invariants import DomainError, LatticePoint, lattice_points, subsets_up_to
from .poly import MultiPoly
from .series import W_MONOMIAL, WPoly, q_poly

Subset = tuple[int, ...]


def resonances(m: int) -> list[Subset]:
    """Subsets I with 1 <= |I| <= m - 2, ordered by size then lexicographically."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    return list(subsets_up_to(m, m - 2, min_size=1))


def _normalize_subset(I, m: int) -> Subset:
    I = tuple(sorted(set(I)))
    if any(i < 1 or i > m for i in I):
        raise ValueError(f"subset {I} is not contained in 1..{m}")
    return I


@dataclass(frozen=True)
class ChamberSig:
    """Which resonance sums lie below y (``below``) in a chamber.

    The empty subset is implicitly below; everything in ``resonances(m)`` not
    in ``below`` lies above y.
    """

    m: int
    below: frozenset[Subset]

    @property
    def above(self) -> frozenset[Subset]:
        return frozenset(resonances(self.m)) - self.below

    def is_totally_negative(self) -> bool:
        return not self.above

    def is_monotone(self) -> bool:
        """Subsets of a below-set are below."""
        for I in self.below:
            for k in range(1, len(I)):
                for J in combinations(I, k):
                    if J not in self.below:
                        return False
        return True

    def closure_contains(self, p: LatticePoint) -> bool:
        if p.m != self.m or not p.in_parameter_space():
            return False
        for I in resonances(self.m):
            s = p.subset_sum(I)
            if I in self.below and s > p.y:
                return False
            if I not in self.below and s < p.y:
                return False
        return True

    def sort_key(self):
        return (len(self.above), sorted(self.above, key=lambda I: (len(I), I)))

    def describe(self) -> dict:
        return {
            "below": [list(I) for I in sorted(self.below, key=lambda I: (len(I), I))],
            "above": [list(I) for I in sorted(self.above, key=lambda I: (len(I), I))],
        }


@dataclass(frozen=True)
class OnWall:
    walls: tuple[Subset, ...]


def chamber_of(p: LatticePoint) -> ChamberSig | OnWall:
    if p.m < 2:
        raise DomainError(f"need at least two marked points, got m={p.m}")
    if not p.in_parameter_space():
        raise DomainError(f"{p} lies outside the parameter space")
    below = []
    walls = []
    for I in resonances(p.m):
        s = p.subset_sum(I)
        if s == p.y:
            walls.append(I)
        elif s < p.y:
            below.append(I)
    if walls:
        return OnWall(tuple(walls))
    return ChamberSig(p.m, frozenset(below))


# -- closed-form R_I ------------------------------------------------------------


def _block_tuples(block: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Exponent tuples a over a block with sum(a) <= |block| - 2."""
    budget = len(block) - 2
    for exps in product(range(budget + 1), repeat=len(block)):
        if sum(exps) <= budget:
            yield exps


def _block_weight(exps: Sequence[int], size: int) -> int:
    k = size - 2
    used = sum(exps)
    weight = math.factorial(k) // math.factorial(k - used)
    for a in exps:
        weight //= math.factorial(a)
    return weight


@lru_cache(maxsize=None)
def r_i_poly(m: int, I: Subset) -> MultiPoly:
    """The polynomial that agrees with R_I on the region sum_{i in I} x_i <= y."""
    I = _normalize_subset(I, m)
    if len(I) > m - 2:
        raise ValueError(f"|I| = {len(I)} exceeds m - 2 = {m - 2}")
    nv = m + 1
    y = MultiPoly.variable(nv, m)
    mu = y - sum((MultiPoly.variable(nv, i - 1) + 1 for i in I), MultiPoly(nv))
    complement = tuple(j for j in range(1, m + 1) if j not in I)
    stirling = {}

    def stir(j: int, a: int) -> MultiPoly:
        if (j, a) not in stirling:
            stirling[(j, a)] = stirling_poly(a).embed(nv, [j - 1])
        return stirling[(j, a)]

    total = MultiPoly(nv)
    for partition in partitions_ge2(complement):
        s = len(partition)
        sign = (-1) ** (s + len(I) - 1)
        y_power = s + len(I) - 2
        for choice in product(*(list(_block_tuples(b)) for b in partition)):
            coeff = Fraction(sign)
            stir_part = MultiPoly.constant(nv, 1)
            numer = WPoly([1])
            pole = len(I)
            for block, exps in zip(partition, choice):
                coeff *= _block_weight(exps, len(block))
                for j, a in zip(block, exps):
                    stir_part = stir_part * stir(j, a)
                left = len(block) - 2 - sum(exps)
                numer = numer * (W_MONOMIAL * q_poly(left))
                pole += 2 * len(block) - 1 - 2 * sum(exps)
            width = pole - 2
            inner = MultiPoly(nv)
            for D, C in numer.monomials():
                X = mu + (width - D)
                if y_power >= 0:
                    binom = falling_product(X, width)
                    inner = inner + binom * (y**y_power) * C
                else:
                    # s = 1, I empty: the factor X - (width - D) is exactly y and
                    # cancels the 1/y prefactor
                    skip = width - D
                    binom = MultiPoly.constant(nv, 1)
                    for i in range(width):
                        if i != skip:
                            binom = binom * (X - i)
                    inner = inner + binom * C
            total = total + stir_part * inner * (coeff / math.factorial(width))
    return total


def chamber_poly(sig: ChamberSig) -> MultiPoly:
    """Sum of r_i_poly over the below-subsets, the empty subset included."""
    total = r_i_poly(sig.m, ())
    for I in sorted(sig.below, key=lambda I: (len(I), I)):
        total = total + r_i_poly(sig.m, I)
    return total


def wall_crossing_poly(m: int, I: Sequence[int]) -> MultiPoly:
    """P_{c1} - P_{c2} across the wall sum_I x = y, with sum_I x < y on c1."""
    I = _normalize_subset(I, m)
    if not 1 <= len(I) <= m - 2:
        raise ValueError(f"wall subsets need 1 <= |I| <= m - 2, got {I} for m={m}")
    return r_i_poly(m, I)


def totally_negative_poly(m: int) -> MultiPoly:
    """y^{m-2} prod_{j=0}^{m-3} (1 + sum x - y + m - 2 - j) / (m-2)!."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    nv = m + 1
    y = MultiPoly.variable(nv, m)
    top = MultiPoly.linear(nv, [1] * m + [-1], const=1 + m - 2)
    return y ** (m - 2) * falling_product(top, m - 2) / math.factorial(m - 2)


def enumerate_chambers(m: int, bound: int) -> list[tuple[ChamberSig, LatticePoint]]:
    """Chamber signatures realized by lattice points with all coordinates <= bound."""
    if m < 2 or bound < 1:
        raise ValueError(f"need m >= 2 and bound >= 1, got m={m}, bound={bound}")
    found: dict[ChamberSig, LatticePoint] = {}
    for p in lattice_points(m, bound, bound):
        sig = chamber_of(p)
        if isinstance(sig, ChamberSig) and sig not in found:
            found[sig] = p
    return sorted(found.items(), key=lambda item: item[0].sort_key())


def single_wall_points(m: int, bound: int) -> dict[Subset, list[LatticePoint]]:
    """Lattice points (coordinates <= bound) lying on exactly one wall, by wall."""
    out: dict[Subset, list[LatticePoint]] = {}
    for p in lattice_points(m, bound, bound):
        here = chamber_of(p)
        if isinstance(here, OnWall) and len(here.walls) == 1:
            out.setdefault(here.walls[0], []).append(p)
    return out


def wall_witness(
    c1: ChamberSig,
    c2: ChamberSig,
    I: Subset,
    bound: int,
    candidates: dict[Subset, list[LatticePoint]] | None = None,
) -> LatticePoint | None:
    """A lattice point on the wall of I, on no other wall, in both closures."""
    if candidates is None:
        candidates = single_wall_points(c1.m, bound)
    for p in candidates.get(I, ()):
        if c1.closure_contains(p) and c2.closure_contains(p):
            return p
    return None


def adjacent_pairs(
    chambers: Sequence[ChamberSig], bound: int
) -> list[tuple[ChamberSig, ChamberSig, Subset, LatticePoint]]:
    """Chamber pairs whose signatures differ in one subset I, certified by a
    wall witness.  The first chamber of each pair has I below y."""
    if not chambers:
        return []
    candidates = single_wall_points(chambers[0].m, bound)
    pairs = []
    for a in chambers:
        for b in chambers:
            diff = a.below - b.below
            if len(diff) == 1 and b.below < a.below:
                (I,) = diff
                p = wall_witness(a, b, I, bound, candidates)
                if p is not None:
                    pairs.append((a, b, I, p))
    return pairs
