"""Exact rational scalars shared by every module.

The single scalar type of the library is ``gmpy2.mpq``: an arbitrary-precision
rational, always normalized (reduced, positive denominator).  GMP arithmetic
keeps the exact-equality test suites and the benchmark oracle fast enough to
be pleasant; nothing in the library ever rounds.

Floats are rejected everywhere on purpose.  A float that "looks like" 0.1 is
really 3602879701896397/36028797018963968, and silently adopting that value
would poison every exact comparison downstream.  Callers hold ints,
``fractions.Fraction``, strings like ``"3/4"``, or ``mpq`` values.
"""

from __future__ import annotations

import re
from fractions import Fraction

from gmpy2 import mpq, mpz

# Canonical exact scalar; re-exported so other modules need not import gmpy2.
Rational = mpq

# Dense matrices are immutable tuples of row tuples of Rational.
Matrix = tuple

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def as_rational(value) -> mpq:
    """Coerce ``value`` to an exact rational.

    Accepts ``mpq``, ``mpz``, ``int``, ``fractions.Fraction``, and strings of
    the form ``"p"`` or ``"p/q"``.  Rejects floats (and anything else) with
    ``TypeError``, and malformed strings or zero denominators with
    ``ValueError``.
    """
    if isinstance(value, mpq):
        return value
    if isinstance(value, (int, mpz)):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not a rational literal: {value!r}")
        num, _, den = text.partition("/")
        if den:
            if int(den) == 0:
                raise ValueError(f"zero denominator: {value!r}")
            return mpq(int(num), int(den))
        return mpq(int(num))
    if isinstance(value, float):
        raise TypeError(
            "refusing float input: floats are not exact, pass an int, "
            "Fraction, 'p/q' string, or mpq"
        )
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rational_vector(values) -> tuple[mpq, ...]:
    """Coerce an iterable of scalars to a tuple of exact rationals."""
    return tuple(as_rational(v) for v in values)
