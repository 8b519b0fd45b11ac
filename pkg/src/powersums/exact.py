"""Exact scalar arithmetic: arbitrary-precision rationals and combinatorics.

The universal scalar is ``fractions.Fraction``: always in lowest terms,
denominator positive, zero stored as 0/1. Nothing in this package ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

__all__ = [
    "Rational",
    "rat_add",
    "rat_mul",
    "rat_div",
    "binomial",
    "factorial",
]

Rational = Fraction


def rat_add(a: Rational, b: Rational) -> Rational:
    """Exact sum, in lowest terms."""
    return a + b


def rat_mul(a: Rational, b: Rational) -> Rational:
    """Exact product, in lowest terms."""
    return a * b


def rat_div(a: Rational, b: Rational) -> Rational:
    """Exact quotient a/b; raises ZeroDivisionError when b is zero."""
    return a / b


def binomial(n: int, r: int) -> int:
    """C(n, r) for n, r >= 0, with C(n, r) = 0 whenever r > n."""
    return comb(n, r)
