"""Exact rational scalars.

Every coefficient in this package is an exact rational number in canonical
reduced form (gcd(num, den) = 1, den > 0).  Two interchangeable backends are
supported:

* ``gmpy2.mpq`` -- measurably faster, used by default when gmpy2 is installed;
* ``fractions.Fraction`` -- pure stdlib fallback.

The backend is chosen at import time and can be forced with the environment
variable ``CHEREDNIK_EXACT_BACKEND=gmpy2|fraction``.  Both backends print
identically (``3/2``, ``-5``), hash consistently with ints, and interoperate
with Python ints in arithmetic, so the rest of the package never needs to know
which one is active.
"""

import os
from fractions import Fraction

__all__ = ["QQ", "BACKEND", "parse_rational", "format_rational", "rational_sqrt"]


def _select_backend():
    choice = os.environ.get("CHEREDNIK_EXACT_BACKEND", "").strip().lower()
    if choice in ("fraction", "fractions"):
        return Fraction, "fraction"
    try:
        from gmpy2 import mpq
    except ImportError:
        if choice in ("gmpy2", "mpq"):
            raise ImportError(
                "CHEREDNIK_EXACT_BACKEND=gmpy2 requested but gmpy2 is not installed"
            )
        return Fraction, "fraction"
    if choice in ("", "gmpy2", "mpq"):
        return mpq, "gmpy2"
    raise ValueError(f"unknown CHEREDNIK_EXACT_BACKEND value: {choice!r}")


#: Constructor for exact rationals: QQ(3, 2), QQ(7), QQ("5/3").
QQ, BACKEND = _select_backend()

_ZERO = QQ(0)
_ONE = QQ(1)


def parse_rational(text):
    """Parse an exact fraction string like ``-5/3`` or ``7``.

    Floats are rejected on purpose: every interface of this package is exact.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if any(c in s for c in ".eE") and not s.lstrip("+-").isdigit():
        raise ValueError(f"not an exact rational literal: {text!r}")
    if "/" in s:
        num, _, den = s.partition("/")
        n, d = int(num), int(den)
        if d == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return QQ(n, d)
    return QQ(int(s))


def format_rational(q):
    """Canonical string form: ``num/den`` or plain ``num`` for integers."""
    return str(q)


def rational_sqrt(q):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn = _isqrt_exact(num)
    if rn is None:
        return None
    rd = _isqrt_exact(den)
    if rd is None:
        return None
    return QQ(rn, rd)


def _isqrt_exact(k):
    from math import isqrt

    r = isqrt(int(k))
    return r if r * r == k else None
