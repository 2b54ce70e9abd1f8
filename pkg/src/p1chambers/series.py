"""Truncated power series in q and the tree function W(q).

Everything is exact.  A :class:`QSeries` of order ``N`` carries the
coefficients of q^0..q^N; products and compositions are exact through q^N.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .arith import RatLike, binom_conv


class QSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike]):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @classmethod
    def constant(cls, value: RatLike, order: int) -> QSeries:
        return cls([value] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"q^{n} is beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[: order + 1])

    def _align(self, other: QSeries) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], int]:
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1], n

    def __add__(self, other) -> QSeries:
        if isinstance(other, (int, Fraction)):
            return QSeries((self.coeffs[0] + other,) + self.coeffs[1:])
        a, b, _ = self._align(other)
        return QSeries(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries(-c for c in self.coeffs)

    def __sub__(self, other) -> QSeries:
        return self + (-other)

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if isinstance(other, (int, Fraction)):
            return QSeries(c * other for c in self.coeffs)
        a, b, n = self._align(other)
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                if b[j]:
                    out[i + j] += ai * b[j]
        return QSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QSeries:
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> QSeries:
        c0 = self.coeffs[0]
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = [1 / c0]
        for n in range(1, self.order + 1):
            acc = sum((self.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-acc / c0)
        return QSeries(out)

    def coefficient_of_product(self, other: QSeries, n: int) -> Fraction:
        """[q^n](self * other) without forming the whole product."""
        return sum((self[k] * other[n - k] for k in range(n + 1)), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QSeries([{', '.join(str(c) for c in self.coeffs)}])"


def series_exp(g: QSeries) -> QSeries:
    """exp(g) for g with zero constant term, via n f_n = sum_k k g_k f_{n-k}."""
    if g.coeffs[0]:
        raise ValueError("exp needs a series without constant term")
    f = [Fraction(1)]
    for n in range(1, g.order + 1):
        acc = sum((k * g.coeffs[k] * f[n - k] for k in range(1, n + 1)), Fraction(0))
        f.append(acc / n)
    return QSeries(f)


def q_d_dq(f: QSeries) -> QSeries:
    return QSeries(n * c for n, c in enumerate(f.coeffs))


@lru_cache(maxsize=None)
def tree_series(N: int) -> QSeries:
    """W(q) = sum_{n>=1} n^{n-1} q^n / n!, through q^N."""
    if N < 0:
        raise ValueError(f"truncation order must be nonnegative, got {N}")
    return QSeries([0] + [Fraction(n ** (n - 1), math.factorial(n)) for n in range(1, N + 1)])


@lru_cache(maxsize=None)
def inv_one_minus_w(N: int) -> QSeries:
    return (1 - tree_series(N)).inverse()


@lru_cache(maxsize=None)
def exp_alpha_w_over_pow(alpha: int, b: int, N: int) -> QSeries:
    """q-expansion of exp(alpha W) / (1 - W)^b through q^N."""
    if b < 0:
        raise ValueError(f"b must be nonnegative, got {b}")
    result = series_exp(tree_series(N) * alpha) if alpha else QSeries.constant(1, N)
    geo = inv_one_minus_w(N)
    for _ in range(b):
        result = result * geo
    return result


class WPoly:
    """Polynomial in the symbol W with rational coefficients (ascending)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike]):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def derivative(self) -> WPoly:
        return WPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __add__(self, other: WPoly) -> WPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return WPoly(x + y for x, y in zip(a, b))

    def __mul__(self, other) -> WPoly:
        if isinstance(other, (int, Fraction)):
            return WPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return WPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return WPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, WPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def monomials(self) -> list[tuple[int, Fraction]]:
        return [(d, c) for d, c in enumerate(self.coeffs) if c]

    def substitute(self, w: QSeries) -> QSeries:
        """Horner evaluation at a series."""
        result = QSeries.constant(0, w.order)
        for c in reversed(self.coeffs):
            result = result * w + c
        return result

    def __repr__(self) -> str:
        return f"WPoly({[str(c) for c in self.coeffs]})"


W_MONOMIAL = WPoly([0, 1])
ONE_MINUS_W = WPoly([1, -1])


@lru_cache(maxsize=None)
def q_poly(k: int) -> WPoly:
    """Q_k with ((W/(1-W)) d/dW)^k (W/(1-W)^3) = W Q_k(W) / (1-W)^{2k+3}."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k == 0:
        return WPoly([1])
    # D(W Q / (1-W)^{2j+3}) with D = (W/(1-W)) d/dW, j = k - 1
    prev = q_poly(k - 1)
    return ONE_MINUS_W * (prev + W_MONOMIAL * prev.derivative()) + W_MONOMIAL * prev * (2 * k + 1)


def comb_coeff(a: int, mu: int, b: int) -> Fraction:
    """[q^mu] W^a exp(-mu W) / (1-W)^b in closed form."""
    if a < 0 or mu < 0 or b < 1:
        raise ValueError(f"need a >= 0, mu >= 0, b >= 1; got {(a, mu, b)}")
    return binom_conv(b - 2 + mu - a, b - 2)


def w_rational_to_qseries(numerator: WPoly, exp_alpha: int, pow_b: int, N: int) -> QSeries:
    """q-expansion of numerator(W) * exp(exp_alpha W) / (1-W)^pow_b."""
    return numerator.substitute(tree_series(N)) * exp_alpha_w_over_pow(exp_alpha, pow_b, N)

