"""Exact scalars and the binomial / factorial conventions used throughout.

Scalars are :class:`fractions.Fraction`; ``Rat`` is an alias so signatures read
naturally.  Fractions are always normalized with a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import TypeVar, Union

Rat = Fraction
RatLike = Union[int, Fraction]

T = TypeVar("T")


def rat(value: RatLike | str) -> Rat:
    """Coerce an int, Fraction or ``"p/q"`` string to a Rat."""
    return Fraction(value)


def rat_to_str(value: RatLike) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(Fraction(value))


def rat_from_str(text: str) -> Rat:
    return Fraction(text.strip())


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binom_conv(alpha: int, beta: int) -> Rat:
    """Binomial coefficient with the integer-argument convention.

    0 if alpha < beta; 1 if alpha == beta; 0 if alpha > beta and beta < 0;
    otherwise alpha! / (beta! (alpha - beta)!).  Note alpha may be negative
    only in the first two branches.
    """
    if alpha < beta:
        return Fraction(0)
    if alpha == beta:
        return Fraction(1)
    if beta < 0:
        return Fraction(0)
    return Fraction(math.comb(alpha, beta))


def falling_product(start: T, count: int) -> T:
    """start * (start - 1) * ... * (start - count + 1); 1 when count == 0.

    ``start`` may be any ring element supporting ``- int`` and ``*``
    (ints, Fractions, :class:`~p1chambers.poly.MultiPoly`).
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    if isinstance(start, int):
        start = Fraction(start)
    result = start**0
    for i in range(count):
        result = result * (start - i)
    return result


def int_pow(base: RatLike, exponent: int) -> Rat:
    """Exact power, negative exponents allowed; 0**0 == 1."""
    if exponent == 0:
        return Fraction(1)
    return Fraction(base) ** exponent
