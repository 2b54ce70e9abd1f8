"""Exact genus-0 equivariant relative invariants of P^1 with total ramification.

F(x_1, ..., x_m, y) is piecewise polynomial on the parameter space; this
package evaluates it pointwise by two independent routes, builds the chamber
and wall-crossing polynomials in closed form, and cross-checks them.
"""

from .arith import Rat, binom_conv, factorial, falling_product
from .chambers import (
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
from .invariants import (
    DomainError,
    LatticePoint,
    LocGraph,
    descendant_value,
    enumerate_loc_graphs,
    f_graph_oracle,
    f_value,
    graph_contribution,
    r_i_series_value,
)
from .poly import MultiPoly

__all__ = [
    "Rat", "binom_conv", "factorial", "falling_product",
    "ChamberSig", "OnWall", "adjacent_pairs", "chamber_of", "chamber_poly",
    "enumerate_chambers", "r_i_poly", "resonances", "totally_negative_poly",
    "wall_crossing_poly",
    "DomainError", "LatticePoint", "LocGraph", "descendant_value",
    "enumerate_loc_graphs", "f_graph_oracle", "f_value", "graph_contribution",
    "r_i_series_value",
    "MultiPoly",
]
