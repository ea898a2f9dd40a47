"""Exact rational functions with factored denominators.

A value is num / prod(f_i^e_i) where num is a canonical Polynomial and the
denominator is kept as a multiset of monic polynomial factors.  Keeping the
factors unexpanded is what makes desk-scale identity checking feasible: the
denominators that arise here are products of many distinct binomials like
(1 - b_j*x_i), whose expanded form has exponentially many terms.

Canonical form: factors are monic (leading coefficient +1 under the graded
term order), at most one factor is a bare monomial, the numerator shares no
monomial content with it, and every multi-term factor has been removed from
the numerator by exact trial division as far as possible.  Equality is
decided by cross-multiplication, so this reduction is an optimization, not a
correctness requirement.
"""

from .numbers import QQ, rational
from .poly import Polynomial
from . import kernels as K


class RationalFunction:
    __slots__ = ("num", "factors", "_den")

    def __init__(self, num: Polynomial, factors=(), _trusted=False):
        if not _trusted:
            num, factors = _canonicalize(num, factors)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "_den", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, ())

    @classmethod
    def zero(cls) -> "RationalFunction":
        return RF_ZERO

    @classmethod
    def one(cls) -> "RationalFunction":
        return RF_ONE

    @classmethod
    def const(cls, value) -> "RationalFunction":
        return cls(Polynomial.const(value), ())

    @classmethod
    def variable(cls, family, index: int) -> "RationalFunction":
        return cls(Polynomial.variable(family, index), ())

    # -- structure ---------------------------------------------------------
    @property
    def den(self) -> Polynomial:
        """The denominator as an expanded Polynomial (cached)."""
        d = self._den
        if d is None:
            d = Polynomial.one()
            for f, e in self.factors:
                d = d * f**e
            object.__setattr__(self, "_den", d)
        return d

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return not self.factors and self.num.is_one()

    def is_polynomial(self) -> bool:
        return not self.factors

    def as_polynomial(self) -> Polynomial:
        if self.factors:
            raise ValueError(f"not a polynomial: {self!r}")
        return self.num

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        fa = {f.key(): (f, e) for f, e in self.factors}
        fb = {f.key(): (f, e) for f, e in other.factors}
        missing_a = _factor_product(
            (f, e - (fa.get(k, (None, 0))[1])) for k, (f, e) in fb.items()
        )
        missing_b = _factor_product(
            (f, e - (fb.get(k, (None, 0))[1])) for k, (f, e) in fa.items()
        )
        num = self.num * missing_a + other.num * missing_b
        merged = dict(fa)
        for k, (f, e) in fb.items():
            if k in merged:
                merged[k] = (f, max(merged[k][1], e))
            else:
                merged[k] = (f, e)
        return RationalFunction(num, tuple(merged.values()))

    __radd__ = __add__

    def __sub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return RationalFunction(-self.num, self.factors, _trusted=True)

    def __mul__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        return RationalFunction(
            self.num * other.num, tuple(self.factors) + tuple(other.factors)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.is_zero():
                raise ZeroDivisionError("division by zero polynomial")
            return RationalFunction(self.num, tuple(self.factors) + ((other, 1),))
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.den, ((self.num, 1),))

    def __pow__(self, n: int):
        if n == 0:
            return RF_ONE
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(
            self.num**n, tuple((f, e * n) for f, e in self.factors)
        )

    # -- equality ----------------------------------------------------------
    def __eq__(self, other):
        """Mathematical equality via cross-multiplication."""
        other = coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.num.is_zero():
            return other.num.is_zero()
        if other.num.is_zero():
            return False
        fa = {f.key(): (f, e) for f, e in self.factors}
        fb = {f.key(): (f, e) for f, e in other.factors}
        res_a = _factor_product(
            (f, e - fb.get(k, (None, 0))[1]) for k, (f, e) in fa.items()
        )
        res_b = _factor_product(
            (f, e - fa.get(k, (None, 0))[1]) for k, (f, e) in fb.items()
        )
        return self.num * res_b == other.num * res_a

    __hash__ = None  # equality is mathematical, not structural

    def key(self):
        """Hashable canonical structural key (num and factor multiset)."""
        return (self.num.key(), tuple(sorted((f.key(), e) for f, e in self.factors)))

    # -- display -----------------------------------------------------------
    def text(self) -> str:
        if not self.factors:
            return self.num.text()
        num = self.num.text()
        parts = []
        for f, e in sorted(self.factors, key=lambda fe: fe[0].key()):
            body = f"({f.text()})"
            parts.append(body if e == 1 else f"{body}^{e}")
        return f"({num}) / ({'*'.join(parts)})"

    def __repr__(self):
        return f"RationalFunction({self.text()})"


def _factor_product(pairs) -> Polynomial:
    out = Polynomial.one()
    for f, e in pairs:
        if e > 0:
            out = out * f**e
    return out


def _canonicalize(num: Polynomial, factors):
    if not isinstance(num, Polynomial):
        raise TypeError("numerator must be a Polynomial")
    merged: dict = {}
    scale = QQ(1)
    for f, e in factors:
        if e == 0:
            continue
        if e < 0:
            raise ValueError("factor exponents must be positive")
        if f.is_zero():
            raise ZeroDivisionError("zero factor in denominator")
        if f.is_constant():
            scale = scale * f.constant_value() ** e
            continue
        _, lc = f.leading()
        if lc != 1:
            scale = scale * lc**e
            f = f.scale(1 / lc)
        k = f.key()
        if k in merged:
            merged[k] = (f, merged[k][1] + e)
        else:
            merged[k] = (f, e)
    if scale != 1:
        num = num.scale(1 / scale)
    if num.is_zero():
        return num, ()
    # split off bare monomial factors and cancel them against the numerator
    mono_exps: dict = {}
    multi = []
    for f, e in merged.values():
        if len(f) == 1:
            m, _ = f.leading()
            for fam, idx, ex in m:
                mono_exps[(fam, idx)] = mono_exps.get((fam, idx), 0) + ex * e
        else:
            multi.append((f, e))
    if mono_exps:
        content = {(fam, idx): ex for fam, idx, ex in num.monomial_content()}
        cancel = []
        for k, ex in mono_exps.items():
            c = min(ex, content.get(k, 0))
            if c:
                cancel.append((k[0], k[1], c))
                mono_exps[k] -= c
        if cancel:
            cancel.sort()
            num = num.divexact_monomial(tuple(cancel))
    # exact trial division by the multi-term factors
    out = []
    for f, e in multi:
        fdeg = f.total_degree()
        while e > 0 and num.total_degree() >= fdeg and not num.is_constant():
            q = num.divexact(f)
            if q is None:
                break
            num = q
            e -= 1
        if e:
            out.append((f, e))
    mono = tuple(
        (fam, idx, ex) for (fam, idx), ex in sorted(mono_exps.items()) if ex > 0
    )
    if mono:
        out.append((Polynomial({mono: QQ(1)}), 1))
    out.sort(key=lambda fe: fe[0].key())
    return num, tuple(out)


def coerce(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value, (), _trusted=True)
    if isinstance(value, int):
        return RationalFunction.const(value)
    if type(value) is type(QQ(1)) or value.__class__.__name__ == "Fraction":
        return RationalFunction.const(value)
    return NotImplemented


def rf(value) -> RationalFunction:
    """Coerce a Polynomial / int / rational / string like '3/2'."""
    if isinstance(value, str):
        return RationalFunction.const(rational(value))
    out = coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {value!r} to RationalFunction")
    return out


def rf_sum(values) -> RationalFunction:
    """Balanced pairwise sum; cancels early and keeps intermediates small."""
    items = list(values)
    if not items:
        return RF_ZERO
    while len(items) > 1:
        nxt = []
        for i in range(0, len(items) - 1, 2):
            nxt.append(items[i] + items[i + 1])
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    out = items[0]
    return out if isinstance(out, RationalFunction) else rf(out)


def rf_prod(values) -> RationalFunction:
    out = RF_ONE
    for v in values:
        out = out * v
    return out


RF_ZERO = RationalFunction(Polynomial.zero(), (), _trusted=True)
RF_ONE = RationalFunction(Polynomial.one(), (), _trusted=True)
