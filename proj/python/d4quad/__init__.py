"""Regularity pipeline for D(4)-quadruples containing a pair {a, ka}."""

from ._d4quad import (
    Error,
    c_family,
    check_tuple,
    d_pm,
    extend_triple,
    fibonacci_check,
    fundamental_pair,
    is_regular,
    k4_check,
    p_bound,
    pair_at,
    trivial_solution,
    verify_family,
)

__all__ = [
    "Error",
    "c_family",
    "check_tuple",
    "d_pm",
    "extend_triple",
    "fibonacci_check",
    "fundamental_pair",
    "is_regular",
    "k4_check",
    "p_bound",
    "pair_at",
    "trivial_solution",
    "verify_family",
]
