"""Cross-path verification sweeps used by the ``verify`` command and the tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chambers import chamber_poly, enumerate_chambers, r_i_poly
from .invariants import (
    LatticePoint,
    f_graph_oracle,
    f_value,
    lattice_points,
    r_i_series_value,
    subsets_up_to,
)


@dataclass
class CheckSummary:
    name: str
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    def record(self, ok: bool, **detail) -> None:
        self.checked += 1
        if not ok:
            self.mismatches.append({k: _plain(v) for k, v in detail.items()})

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"name": self.name, "checked": self.checked, "mismatches": self.mismatches}


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, LatticePoint):
        return {"x": list(value.x), "y": value.y}
    if isinstance(value, tuple):
        return list(value)
    return value


def check_oracle(m: int, xmax: int, ymax: int, order: int | None = None) -> CheckSummary:
    out = CheckSummary("f_value == f_graph_oracle")
    for p in lattice_points(m, xmax, ymax):
        a, c = f_value(p, order), f_graph_oracle(p)
        out.record(a == c, point=p, series=a, graphs=c)
    return out


def check_series_vs_poly(m: int, xmax: int, ymax: int, order: int | None = None) -> CheckSummary:
    out = CheckSummary("r_i_series_value == r_i_poly on sum_I x <= y")
    for p in lattice_points(m, xmax, ymax):
        for I in subsets_up_to(m, m - 2):
            if p.subset_sum(I) > p.y:
                continue
            a = r_i_series_value(p, I, order)
            b = r_i_poly(m, I).evaluate(p.as_tuple())
            out.record(a == b, point=p, I=I, series=a, poly=b)
    return out


def check_chamber_polys(m: int, xmax: int, ymax: int, order: int | None = None) -> CheckSummary:
    """Every chamber polynomial matches F on every closure point in range."""
    out = CheckSummary("chamber_poly == f_value on chamber closures")
    chambers = [sig for sig, _ in enumerate_chambers(m, max(xmax, ymax, 1))]
    polys = {sig: chamber_poly(sig) for sig in chambers}
    for p in lattice_points(m, xmax, ymax):
        value = f_value(p, order)
        for sig in chambers:
            if sig.closure_contains(p):
                got = polys[sig].evaluate(p.as_tuple())
                out.record(got == value, point=p, chamber=sig.describe(), poly=got, f=value)
    return out


def check_full_sum_vanishing(m: int, xmax: int, ymax: int, order: int | None = None) -> CheckSummary:
    """Sum over all subsets of R_I vanishes when y >= sum (x_i + 1)."""
    out = CheckSummary("sum over all I of R_I == 0 on y >= sum(x_i + 1)")
    for p in lattice_points(m, xmax, ymax, inside=False):
        if p.y < sum(v + 1 for v in p.x):
            continue
        total = sum((r_i_series_value(p, I, order) for I in subsets_up_to(m, m)), Fraction(0))
        out.record(total == 0, point=p, total=total)
    return out


def run_all(m: int, xmax: int, ymax: int, order: int | None = None) -> list[CheckSummary]:
    return [
        check_oracle(m, xmax, ymax, order),
        check_series_vs_poly(m, xmax, ymax, order),
        check_chamber_polys(m, xmax, ymax, order),
        check_full_sum_vanishing(m, xmax, ymax, order),
    ]

