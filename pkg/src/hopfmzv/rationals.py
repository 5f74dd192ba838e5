"""Exact rationals and their one canonical text form.

The coefficient field is plain `fractions.Fraction`: always in lowest terms
with positive denominator, arbitrary precision, exact.  The text form used in
every JSON interface is "p/q" with q > 1, plain "p" when q == 1, and the sign
on the numerator — which is exactly what Fraction's constructor parses and
str() produces, so the helpers below are thin and exist to pin the contract.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Fraction", "rat_from_str", "rat_to_str"]


def rat_from_str(text: str) -> Fraction:
    """Parse "p/q", "p" or "-p/q" (whitespace tolerated by Fraction)."""
    return Fraction(text)


def rat_to_str(value: Fraction) -> str:
    """Render a rational in the canonical "p/q" / "p" form.

    >>> rat_to_str(Fraction(-1, 2))
    '-1/2'
    >>> rat_to_str(Fraction(6, 2))
    '3'
    """
    return str(Fraction(value))
