"""Shared text rendering for exact rationals.

Rationals cross every external surface as ``p/q`` strings with a
12-digit decimal companion.  Decimals are display-only: computed from
the exact value at output time with round-half-even, never fed back
into any computation.
"""

from __future__ import annotations

from fractions import Fraction

DECIMAL_PLACES = 12


def rational_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction | int, places: int = DECIMAL_PLACES) -> str:
    """Fixed-point decimal with banker's rounding, exact integer arithmetic."""
    x = Fraction(x)
    negative = x < 0
    if negative:
        x = -x
    scaled = x * 10**places
    whole, rem = divmod(scaled.numerator, scaled.denominator)
    double = 2 * rem
    if double > scaled.denominator or (double == scaled.denominator and whole % 2):
        whole += 1
    digits = str(whole).rjust(places + 1, "0")
    out = f"{digits[:-places]}.{digits[-places:]}"
    return "-" + out if negative and whole else out


def rational_fields(key: str, value: Fraction | int | None) -> dict:
    """JSON-ready pair of fields for one rational (or its absence)."""
    if value is None:
        return {key: None, f"{key}_decimal": None}
    return {key: rational_str(value), f"{key}_decimal": decimal_str(value)}
