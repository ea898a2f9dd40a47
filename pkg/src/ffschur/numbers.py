"""Exact rational coefficients: gmpy2.mpq when available, fractions otherwise."""

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


def rational(value) -> "QQ":
    """Coerce ints, strings like '3/2' and rationals to the coefficient type."""
    if isinstance(value, str):
        return QQ(value)
    return QQ(value)


def rational_str(c) -> str:
    return str(c)
