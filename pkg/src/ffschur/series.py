"""Formal power-series truncation in a chosen set of grading families.

The expansion variable set is a set of families (e.g. {Z, W}); all other
indeterminates ride along inside the coefficients.  Used for the degree-
truncated Cauchy identity check.
"""

from .kernels import mono_mul
from .numbers import QQ
from .poly import Polynomial
from .ratfun import RationalFunction, RF_ONE, rf, rf_sum
from .symbols import FAMILY_RANK


class SeriesError(ValueError):
    pass


def _split_families(families):
    return {FAMILY_RANK[f] if isinstance(f, str) else f for f in families}


def _gdeg(mono, fams) -> int:
    return sum(e for f, _, e in mono if f in fams)


class _Series:
    """dict: grading monomial -> RationalFunction coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {m: c for m, c in coeffs.items() if not c.is_zero()}

    @classmethod
    def from_poly(cls, p: Polynomial, fams, degree: int) -> "_Series":
        buckets: dict = {}
        for m, c in p.terms.items():
            g = []
            rest = []
            for t in m:
                (g if t[0] in fams else rest).append(t)
            g = tuple(g)
            if sum(e for _, _, e in g) > degree:
                continue
            bucket = buckets.setdefault(g, {})
            rest = tuple(rest)
            prev = bucket.get(rest)
            bucket[rest] = c if prev is None else prev + c
        return cls({g: rf(Polynomial(b)) for g, b in buckets.items()})

    def mul(self, other: "_Series", fams, degree: int) -> "_Series":
        out: dict = {}
        for m1, c1 in self.coeffs.items():
            d1 = sum(e for _, _, e in m1)
            for m2, c2 in other.coeffs.items():
                if d1 + sum(e for _, _, e in m2) > degree:
                    continue
                m = mono_mul(m1, m2)
                c = c1 * c2
                prev = out.get(m)
                out[m] = c if prev is None else prev + c
        return _Series(out)

    def add(self, other: "_Series") -> "_Series":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return _Series(out)

    def scale(self, c) -> "_Series":
        return _Series({m: c * v for m, v in self.coeffs.items()})


def _invert_factor(f: Polynomial, fams, degree: int) -> _Series:
    s = _Series.from_poly(f, fams, degree)
    c0 = s.coeffs.get((), None)
    if c0 is None or c0.is_zero():
        raise SeriesError(
            f"denominator factor ({f.text()}) has zero constant term in the "
            "grading variables"
        )
    c0_inv = c0.inverse()
    tail = _Series({m: c for m, c in s.coeffs.items() if m != ()})
    u = tail.scale(-c0_inv)
    out = _Series({(): RF_ONE})
    power = _Series({(): RF_ONE})
    for _ in range(degree):
        power = power.mul(u, fams, degree)
        if not power.coeffs:
            break
        out = out.add(power)
    return out.scale(c0_inv)


def series_truncate(expr, families, degree: int) -> Polynomial:
    """Power-series expansion of expr in the grading families, degree <= D.

    The result must be a genuine polynomial (our callers' coefficients stay
    polynomial); a non-polynomial coefficient raises SeriesError.
    """
    expr = rf(expr)
    fams = _split_families(families)
    out = _Series.from_poly(expr.num, fams, degree)
    for f, e in expr.factors:
        inv = _invert_factor(f, fams, degree)
        for _ in range(e):
            out = out.mul(inv, fams, degree)
    total = rf_sum(
        c * Polynomial({g: 1}).scale(1) if g else c
        for g, c in out.coeffs.items()
    )
    try:
        return total.as_polynomial()
    except ValueError as exc:
        raise SeriesError(f"truncated series is not polynomial: {exc}") from exc
