"""Canonical sparse multivariate polynomials over exact rationals.

Terms live in a dict keyed by monomials (tuples of (family, index, exponent)
triples, see ffschur._purekernel).  The dict is always built in the canonical
term order (graded by total degree, then lex in the fixed indeterminate
order), so printing and serialization are byte-stable.
"""

from . import kernels as K
from .numbers import QQ, rational, rational_str
from .symbols import Indeterminate, check_index, key_name

Mono = tuple


def _canonical_dict(terms: dict) -> dict:
    items = [(m, c) for m, c in terms.items() if c]
    items.sort(key=lambda mc: K.mono_sort_key(mc[0]))
    return dict(items)


class Polynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        object.__setattr__(self, "terms", _canonical_dict(terms or {}))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls) -> "Polynomial":
        return _P_ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _P_ONE

    @classmethod
    def const(cls, value) -> "Polynomial":
        c = rational(value)
        if not c:
            return _P_ZERO
        return cls({(): c})

    @classmethod
    def variable(cls, family, index: int) -> "Polynomial":
        v = Indeterminate(family, index)
        return cls({((v.family, v.index, 1),): QQ(1)})

    @classmethod
    def from_indeterminate(cls, v: Indeterminate) -> "Polynomial":
        return cls({((v.family, v.index, 1),): QQ(1)})

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): QQ(1)}

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        if not self.terms:
            return QQ(0)
        if self.is_constant():
            return self.terms[()]
        raise ValueError("not a constant polynomial")

    def __len__(self):
        return len(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, _, e in m) for m in self.terms)

    def leading(self):
        """(monomial, coefficient) of the leading term; error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = next(iter(self.terms))
        return m, self.terms[m]

    def monomial_content(self) -> Mono:
        """Largest monomial dividing every term (the empty tuple if none)."""
        if not self.terms:
            return ()
        it = iter(self.terms)
        common = {(f, i): e for f, i, e in next(it)}
        for m in it:
            if not common:
                return ()
            here = {(f, i): e for f, i, e in m}
            for k in list(common):
                e = here.get(k)
                if e is None:
                    del common[k]
                else:
                    common[k] = min(common[k], e)
        return tuple((f, i, e) for (f, i), e in sorted(common.items()))

    def indeterminates(self) -> set[tuple[int, int]]:
        out = set()
        for m in self.terms:
            for f, i, _ in m:
                out.add((f, i))
        return out

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(K.poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(K.poly_sub(self.terms, other.terms))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(K.poly_sub(other.terms, self.terms))

    def __neg__(self):
        return Polynomial(K.poly_neg(self.terms))

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(K.poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Polynomial; use RationalFunction")
        result = _P_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        return Polynomial(K.poly_scale(self.terms, rational(c)))

    def mul_monomial(self, mono: Mono, c=QQ(1)) -> "Polynomial":
        return Polynomial(K.poly_mul_mono(self.terms, mono, rational(c)))

    def divexact(self, other: "Polynomial"):
        """Exact polynomial quotient, or None when not divisible."""
        q = K.poly_divexact(self.terms, other.terms)
        if q is None:
            return None
        return Polynomial(q)

    def divexact_monomial(self, mono: Mono):
        out = {}
        for m, c in self.terms.items():
            d = K.mono_div(m, mono)
            if d is None:
                return None
            out[d] = c
        return Polynomial(out)

    # -- symbol rewiring ---------------------------------------------------
    def rename(self, fn) -> "Polynomial":
        """Apply (family, index) -> (sign, family, index) to every variable.

        fn must be injective on the variables present; sign flips multiply
        into the coefficient once per unit of exponent.
        """
        out = {}
        for m, c in self.terms.items():
            parts = []
            sign = 1
            for f, i, e in m:
                s, nf, ni = fn(f, i)
                check_index(nf, ni)
                if s < 0 and e % 2:
                    sign = -sign
                parts.append((nf, ni, e))
            parts.sort(key=lambda t: (t[0], t[1]))
            mono = tuple(parts)
            cc = c if sign > 0 else -c
            prev = out.get(mono)
            out[mono] = cc if prev is None else prev + cc
        return Polynomial(out)

    # -- equality / hashing / display --------------------------------------
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.key())
            object.__setattr__(self, "_hash", h)
        return h

    def key(self):
        """Hashable canonical form (terms in canonical order)."""
        return tuple(
            (m, int(c.numerator), int(c.denominator)) for m, c in self.terms.items()
        )

    def text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for n, (m, c) in enumerate(self.terms.items()):
            neg = c < 0
            mag = -c if neg else c
            factors = []
            if mag != 1 or not m:
                factors.append(rational_str(mag))
            for f, i, e in m:
                name = key_name((f, i))
                factors.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(factors)
            if n == 0:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"Polynomial({self.text()})"


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int) or type(value) is type(QQ(1)):
        return Polynomial.const(value)
    return NotImplemented


_P_ZERO = Polynomial.__new__(Polynomial)
object.__setattr__(_P_ZERO, "terms", {})
object.__setattr__(_P_ZERO, "_hash", None)
_P_ONE = Polynomial.__new__(Polynomial)
object.__setattr__(_P_ONE, "terms", {(): QQ(1)})
object.__setattr__(_P_ONE, "_hash", None)
