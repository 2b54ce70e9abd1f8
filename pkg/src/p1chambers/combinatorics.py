"""Stirling numbers, restricted set partitions and degree multisets."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .arith import falling_product
from .poly import MultiPoly

Block = tuple[int, ...]
Partition2 = tuple[Block, ...]


@dataclass(frozen=True)
class RisingFactorialTable:
    """Coefficients A[b] of (w+1)(w+2)...(w+l) = sum_b A[b] w^b."""

    l: int
    coeffs: tuple[int, ...]

    def __getitem__(self, b: int) -> int:
        if 0 <= b <= self.l:
            return self.coeffs[b]
        return 0

    def evaluate(self, w: int | Fraction) -> int | Fraction:
        total = 0
        for c in reversed(self.coeffs):
            total = total * w + c
        return total


@lru_cache(maxsize=None)
def rising_factorial_coeffs(l: int) -> RisingFactorialTable:
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    coeffs = [1]
    for k in range(1, l + 1):
        # multiply by (w + k)
        nxt = [0] * (len(coeffs) + 1)
        for b, c in enumerate(coeffs):
            nxt[b] += k * c
            nxt[b + 1] += c
        coeffs = nxt
    return RisingFactorialTable(l, tuple(coeffs))


@lru_cache(maxsize=None)
def stirling_poly(a: int) -> MultiPoly:
    """Univariate polynomial p_a(x) with p_a(x) = A_x^{x-a} for integers x >= 0.

    Uses the double sum over e, f with binomials in x expanded as falling
    products, so the result is an honest polynomial of degree <= 2a.
    """
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    x = MultiPoly.variable(1, 0)
    total = MultiPoly(1)
    for e in range(a + 1):
        # the two x-dependent binomials do not depend on f
        shape = (
            falling_product(x + e, a + e)
            * falling_product(x + a + 1, a - e)
            / (math.factorial(a + e) * math.factorial(a - e) * math.factorial(e))
        )
        scalar = Fraction(0)
        for f in range(e + 1):
            power = 1 if a + e == 0 else f ** (a + e)
            scalar += (-1) ** (f + a) * math.comb(e, f) * power
        if scalar:
            total = total + shape * scalar
    return total


def partitions_ge2(J: Iterable[int]) -> Iterator[Partition2]:
    """Set partitions of J whose blocks all have at least two elements.

    Canonical order: the least remaining element anchors the next block;
    larger anchored blocks come first, companions in lexicographic order.
    """
    elems = tuple(sorted(set(J)))
    if not elems:
        raise ValueError("J must be nonempty")
    yield from _partitions_ge2(elems)


def _partitions_ge2(elems: tuple[int, ...]) -> Iterator[Partition2]:
    if not elems:
        yield ()
        return
    if len(elems) == 1:
        return
    anchor, rest = elems[0], elems[1:]
    for size in range(len(rest), 0, -1):
        if len(rest) - size == 1:
            continue  # would strand a single element
        for companions in combinations(rest, size):
            block = (anchor,) + companions
            remaining = tuple(e for e in rest if e not in companions)
            for tail in _partitions_ge2(remaining):
                yield (block,) + tail


def set_partitions(J: Iterable[int]) -> Iterator[tuple[Block, ...]]:
    """All set partitions of J (blocks of any size), anchored on least element."""
    elems = tuple(sorted(set(J)))
    yield from _set_partitions(elems)


def _set_partitions(elems: tuple[int, ...]) -> Iterator[tuple[Block, ...]]:
    if not elems:
        yield ()
        return
    anchor, rest = elems[0], elems[1:]
    for size in range(len(rest) + 1):
        for companions in combinations(rest, size):
            block = (anchor,) + companions
            remaining = tuple(e for e in rest if e not in companions)
            for tail in _set_partitions(remaining):
                yield (block,) + tail


def unmarked_degree_multisets(total: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Integer partitions of ``total`` (parts non-increasing) with their |Aut|.

    |Aut| is the product of multiplicity factorials.  ``total == 0`` yields
    the empty multiset once.
    """
    if total < 0:
        raise ValueError(f"total must be nonnegative, got {total}")
    for parts in _integer_partitions(total, total):
        aut = 1
        for mult in Counter(parts).values():
            aut *= math.factorial(mult)
        yield parts, aut


def _integer_partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for tail in _integer_partitions(n - first, first):
            yield (first,) + tail
