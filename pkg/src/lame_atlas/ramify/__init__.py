"""Riemann-Hurwitz bookkeeping for Galois covers of the projective line."""

from .hurwitz import (
    LAME_TARGET,
    RamPoint,
    RamType,
    brute_force_solutions,
    rh_term,
    solve_rh,
    tame_order,
    three_point_explore,
)

__all__ = [
    "LAME_TARGET", "RamPoint", "RamType", "brute_force_solutions", "rh_term", "solve_rh",
    "tame_order", "three_point_explore",
]
