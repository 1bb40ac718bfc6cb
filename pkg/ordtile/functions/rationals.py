"""
Exact rational helpers: rendering, parsing and truncated decimal expansion.

Everything here works on fractions.Fraction; no floats are produced.
"""

import re
from fractions import Fraction

from ordtile.datatypes.errors import InputError

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def qstr(q):
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    q = Fraction(q)
    return str(q)


def parse_rational(text):
    """
    Parse "p/q" or an integer literal into a Fraction.

    Parameters
    ----------
    text : str
        The literal. Decimal points and exponents are rejected.

    Returns
    -------
    Fraction
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = _RATIONAL.match(str(text))
    if match is None:
        raise InputError(f"not an exact rational literal: {text!r} (expected p/q)")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def is_rational_literal(text):
    return isinstance(text, str) and _RATIONAL.match(text) is not None


def approx_str(q, places=6):
    """
    Decimal expansion of `q` by long division, rounded half-up to `places` digits.

    Trailing zeros are dropped, so 15/4 renders as "3.75".
    """
    q = Fraction(q)
    sign = '-' if q < 0 else ''
    scaled = abs(q) * 10 ** places
    digits = int(scaled)
    if scaled - digits >= Fraction(1, 2):
        digits += 1
    int_part, frac_part = divmod(digits, 10 ** places)
    if frac_part == 0:
        return f"{sign}{int_part}"
    frac = str(frac_part).rjust(places, '0').rstrip('0')
    return f"{sign}{int_part}.{frac}"


def human_rational(q):
    """Render as "p/q (≈ d.dddddd)" for reports read by people."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q} (≈ {approx_str(q)})"


def ceil_fraction(q):
    q = Fraction(q)
    return -((-q.numerator) // q.denominator)


def floor_fraction(q):
    q = Fraction(q)
    return q.numerator // q.denominator
