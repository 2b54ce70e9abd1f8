"""Pointwise evaluation of F(x_1, ..., x_m, y).

Two independent routes:

* :func:`f_value` sums the coefficient extractions ``r_i_series_value`` over
  subsets ``I`` with ``|I| <= m - 2``, working with exact q-series.
* :func:`f_graph_oracle` sums contributions of torus-fixed localization
  graphs directly (rubber and vertex integrals already evaluated).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .arith import int_pow
from .combinatorics import (
    partitions_ge2,
    rising_factorial_coeffs,
    set_partitions,
    unmarked_degree_multisets,
)
from .series import QSeries, exp_alpha_w_over_pow, tree_series, inv_one_minus_w


class DomainError(ValueError):
    """Point outside the parameter space where F is defined."""


@dataclass(frozen=True)
class LatticePoint:
    """Integer point (x_1 >= ... >= x_m >= 0; y >= 1)."""

    x: tuple[int, ...]
    y: int

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(int(v) for v in self.x))
        if any(v < 0 for v in self.x):
            raise ValueError(f"x entries must be nonnegative: {self.x}")
        if any(a < b for a, b in zip(self.x, self.x[1:])):
            raise ValueError(f"x must be non-increasing: {self.x}; use LatticePoint.canonical")
        if self.y < 1:
            raise ValueError(f"y must be positive, got {self.y}")

    @classmethod
    def canonical(cls, x: Iterable[int], y: int) -> LatticePoint:
        """Sort x descending; F is symmetric in the insertions."""
        return cls(tuple(sorted(x, reverse=True)), y)

    @property
    def m(self) -> int:
        return len(self.x)

    def in_parameter_space(self) -> bool:
        return 1 + sum(self.x) >= self.y

    @property
    def t_exponent(self) -> int:
        return 1 + sum(self.x) - self.y

    def subset_sum(self, I: Iterable[int]) -> int:
        return sum(self.x[i - 1] for i in I)

    def as_tuple(self) -> tuple[int, ...]:
        return self.x + (self.y,)


def lattice_points(m: int, xmax: int, ymax: int, inside: bool = True) -> Iterator[LatticePoint]:
    """All points with x_1 >= ... >= x_m in [0, xmax] and 1 <= y <= ymax.

    With ``inside`` only points of the parameter space (1 + sum x >= y).
    """
    for xs in _descending_tuples(m, xmax):
        top = min(ymax, 1 + sum(xs)) if inside else ymax
        for y in range(1, top + 1):
            yield LatticePoint(xs, y)


def _descending_tuples(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(largest, -1, -1):
        for rest in _descending_tuples(m - 1, first):
            yield (first,) + rest


def _check_subset(I: Iterable[int], m: int) -> tuple[int, ...]:
    I = tuple(sorted(set(I)))
    if any(i < 1 or i > m for i in I):
        raise ValueError(f"subset {I} is not contained in 1..{m}")
    return I


# -- series route -------------------------------------------------------------


@lru_cache(maxsize=None)
def _derived_seed(k: int, N: int) -> QSeries:
    """(q d/dq)^k applied to W/(1-W)^3."""
    seed = tree_series(N) * inv_one_minus_w(N) ** 3
    return QSeries(n**k * c for n, c in enumerate(seed.coeffs))


WSeriesPoly = dict[tuple[int, ...], QSeries]


def _block_operator(block: Sequence[int], caps: Sequence[int], N: int) -> WSeriesPoly:
    """O_z^{|block|-2}(W/(1-W)^3) with z = sum of the block's w's.

    Keys are exponent tuples over the block's own variables; exponents above
    ``caps`` are dropped since they cannot reach the extracted monomial.
    """
    k = len(block) - 2
    out: WSeriesPoly = {}
    for i in range(k + 1):
        series = _derived_seed(k - i, N) * math.comb(k, i)
        for exps in _compositions(i, len(block)):
            if any(e > c for e, c in zip(exps, caps)):
                continue
            mult = math.factorial(i)
            for e in exps:
                mult //= math.factorial(e)
            term = series * mult
            out[exps] = out[exps] + term if exps in out else term
    return out


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _extract_monomial(parts: list[tuple[Sequence[int], WSeriesPoly]], p: LatticePoint, N: int) -> QSeries:
    """[prod w_j^{x_j}] of prod_j (w_j+1)_{x_j} * prod of the block polynomials.

    Blocks involve disjoint variables so the extraction factorizes.
    """
    result = QSeries.constant(1, N)
    for block, poly in parts:
        acc = QSeries.constant(0, N)
        for exps, series in poly.items():
            weight = 1
            for j, e in zip(block, exps):
                xj = p.x[j - 1]
                weight *= rising_factorial_coeffs(xj)[xj - e]
                if not weight:
                    break
            if weight:
                acc = acc + series * weight
        result = result * acc
    return result


def r_i_series_value(p: LatticePoint, I: Iterable[int], order: int | None = None) -> Fraction:
    """R_I at p by explicit coefficient extraction from q-series.

    Returns 0 when the extracted power of q is negative.
    """
    m = p.m
    I = _check_subset(I, m)
    n = p.y - sum(p.x[i - 1] + 1 for i in I)
    if n < 0:
        return Fraction(0)
    N = n + 2 if order is None else order
    if N < n:
        raise ValueError(f"truncation order {N} is below the extracted power {n}")
    prefactor = exp_alpha_w_over_pow(-n, len(I), N)
    if len(I) == m:
        return (-1) ** (m - 1) * int_pow(p.y, m - 2) * prefactor[n]
    complement = tuple(j for j in range(1, m + 1) if j not in I)
    if len(complement) < 2:
        return Fraction(0)
    total = QSeries.constant(0, N)
    for partition in partitions_ge2(complement):
        s = len(partition)
        parts = []
        for block in partition:
            caps = [p.x[j - 1] for j in block]
            parts.append((block, _block_operator(block, caps, N)))
        scale = (-1) ** (s + len(I) - 1) * int_pow(p.y, s + len(I) - 2)
        total = total + _extract_monomial(parts, p, N) * scale
    return prefactor.coefficient_of_product(total, n)


def f_value(p: LatticePoint, order: int | None = None, allow_outside: bool = False) -> Fraction:
    """F at a lattice point via the sum of R_I over |I| <= m - 2.

    Off the parameter space (1 + sum x < y) the invariant vanishes for
    dimension reasons; that case raises unless ``allow_outside``.
    """
    if p.m < 2:
        raise DomainError(f"need at least two marked points, got m={p.m}")
    if not p.in_parameter_space():
        if allow_outside:
            return Fraction(0)
        raise DomainError(f"{p} lies outside the parameter space (1 + sum x < y)")
    return sum(
        (r_i_series_value(p, I, order) for I in subsets_up_to(p.m, p.m - 2)),
        Fraction(0),
    )


def subsets_up_to(m: int, size: int, min_size: int = 0) -> Iterator[tuple[int, ...]]:
    for k in range(min_size, size + 1):
        yield from combinations(range(1, m + 1), k)


# -- localization graphs ------------------------------------------------------


@dataclass(frozen=True)
class LocGraph:
    singletons: tuple[tuple[int, int], ...]  # (mark, degree)
    blocks: tuple[tuple[tuple[int, ...], int], ...]  # (marks, degree)
    unmarked: tuple[int, ...] = ()
    aut: int = field(default=1, compare=False)

    @property
    def k1(self) -> int:
        return len(self.blocks)

    @property
    def singleton_marks(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.singletons)

    @property
    def total_degree(self) -> int:
        return (
            sum(d for _, d in self.singletons)
            + sum(d for _, d in self.blocks)
            + sum(self.unmarked)
        )


def enumerate_loc_graphs(p: LatticePoint) -> Iterator[LocGraph]:
    """Every graph type with total degree y; singleton edges need degree > x_i."""
    for partition in set_partitions(range(1, p.m + 1)):
        singles = [b[0] for b in partition if len(b) == 1]
        blocks = [b for b in partition if len(b) >= 2]
        lows = [p.x[i - 1] + 1 for i in singles] + [1] * len(blocks)
        for degrees in _bounded_assignments(lows, p.y):
            rest = p.y - sum(degrees)
            s_deg = degrees[: len(singles)]
            b_deg = degrees[len(singles):]
            for unmarked, aut in unmarked_degree_multisets(rest):
                yield LocGraph(
                    tuple(zip(singles, s_deg)),
                    tuple(zip(blocks, b_deg)),
                    unmarked,
                    aut,
                )


def _bounded_assignments(lows: Sequence[int], budget: int) -> Iterator[tuple[int, ...]]:
    if not lows:
        yield ()
        return
    slack = budget - sum(lows)
    if slack < 0:
        return
    first, rest = lows[0], lows[1:]
    for d in range(first, first + slack + 1):
        for tail in _bounded_assignments(rest, budget - d):
            yield (d,) + tail


@lru_cache(maxsize=None)
def vertex_coefficient(xs: tuple[int, ...], degree: int) -> int:
    """[prod w^{x}] prod (w_j+1)_{x_j} (sum w_j + degree)^{n-2} for one block."""
    n = len(xs)
    k = n - 2
    total = 0
    # (sum w + D)^k = sum over exponents a with |a| <= k of multinomial * D^{k-|a|} * w^a
    for used in range(k + 1):
        for exps in _compositions(used, n):
            weight = 1
            for xj, e in zip(xs, exps):
                weight *= rising_factorial_coeffs(xj)[xj - e]
                if not weight:
                    break
            if not weight:
                continue
            mult = math.factorial(k) // math.factorial(k - used)
            for e in exps:
                mult //= math.factorial(e)
            total += weight * mult * degree ** (k - used)
    return total


def graph_contribution(g: LocGraph, p: LatticePoint) -> Fraction:
    """t-stripped contribution of one localization graph."""
    y = p.y
    n_single = len(g.singletons)
    value = (-1) ** (g.k1 + n_single - 1) * int_pow(y, g.k1 + n_single - 2)
    for i, d in g.singletons:
        e = d - p.x[i - 1] - 1
        if e < 0:
            return Fraction(0)
        value *= Fraction(d**e, math.factorial(e))
    for d in g.unmarked:
        value *= Fraction(-y * d ** (d - 1), math.factorial(d))
    value /= g.aut
    for block, d in g.blocks:
        xs = tuple(p.x[i - 1] for i in block)
        value *= Fraction(d ** (d + 1), math.factorial(d)) * vertex_coefficient(xs, d)
    return value


def f_graph_oracle(p: LatticePoint) -> Fraction:
    """Sum of all localization-graph contributions at p.

    Inside the parameter space this equals :func:`f_value`; in the region
    y >= sum(x_i + 1) it returns the full sum over all I, which vanishes.
    """
    if p.m < 2:
        raise DomainError(f"need at least two marked points, got m={p.m}")
    return sum((graph_contribution(g, p) for g in enumerate_loc_graphs(p)), Fraction(0))


def descendant_value(l: Sequence[int]) -> Fraction:
    """<d | prod tau_{l_i}(pt)> with d = 1 + sum l_i, i.e. d^{m-2} / prod l_i!."""
    if not l:
        raise ValueError("need at least one insertion")
    if any(v < 0 for v in l):
        raise ValueError(f"descendant orders must be nonnegative: {l}")
    d = 1 + sum(l)
    value = int_pow(d, len(l) - 2)
    for v in l:
        value /= math.factorial(v)
    return value
