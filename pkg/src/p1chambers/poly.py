"""Sparse multivariate polynomials over the rationals.

Variables are positional.  For an evaluation point with ``m`` marks the ring
has ``m + 1`` variables ``x1, ..., xm, y`` with ``y`` last.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import RatLike, rat_to_str

Exponents = tuple[int, ...]


class MultiPoly:
    """Immutable sparse polynomial: a map from exponent tuples to Fractions.

    Zero coefficients are never stored.  Arithmetic with ints and Fractions
    is supported on both sides.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, RatLike] | None = None):
        self.nvars = nvars
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError(f"exponent {exps} does not match {nvars} variables")
                if coeff:
                    clean[tuple(exps)] = Fraction(coeff)
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponents, Fraction]) -> MultiPoly:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, nvars: int, value: RatLike) -> MultiPoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> MultiPoly:
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def linear(cls, nvars: int, coeffs: Sequence[RatLike], const: RatLike = 0) -> MultiPoly:
        """sum_i coeffs[i] * v_i + const."""
        terms: dict[Exponents, RatLike] = {(0,) * nvars: const}
        for i, c in enumerate(coeffs):
            exps = [0] * nvars
            exps[i] = 1
            terms[tuple(exps)] = c
        return cls(nvars, terms)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exps: Exponents) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, index: int) -> int:
        return max((e[index] for e in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    def __call__(self, *point: RatLike) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[RatLike]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(point)}")
        vals = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(vals, exps):
                if e:
                    term *= v**e
            total += term
        return total

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> MultiPoly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def embed(self, nvars: int, index_map: Sequence[int]) -> MultiPoly:
        """Move variable ``k`` of ``self`` to position ``index_map[k]`` of a larger ring."""
        out: dict[Exponents, Fraction] = {}
        for exps, c in self._terms.items():
            new = [0] * nvars
            for k, e in enumerate(exps):
                new[index_map[k]] += e
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return MultiPoly(nvars, out)

    # -- output -----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Graded lexicographic order, highest first; y (last variable) ranks lowest."""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(exps), "coeff": rat_to_str(c)}
            for exps, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, nvars: int, data: Iterable[Mapping]) -> MultiPoly:
        return cls(nvars, {tuple(d["exponents"]): Fraction(d["coeff"]) for d in data})

    def to_text(self, names: Sequence[str] | None = None) -> str:
        """Expanded monomial form, e.g. ``-1/2*x1^2 + x1*y + 3``."""
        if names is None:
            names = default_names(self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e
            )
            mag = abs(c)
            if not mono:
                body = rat_to_str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{rat_to_str(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"


def default_names(nvars: int) -> list[str]:
    """``x1..x{n-1}, y`` for an ``n``-variable ring."""
    return [f"x{i + 1}" for i in range(nvars - 1)] + ["y"]
