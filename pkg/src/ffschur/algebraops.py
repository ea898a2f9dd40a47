"""Index shifts, dual sequences and the shifted-power products.

A Sequence is an affine view j -> sign * fam_{eps*j + offset} of one of the
doubly infinite parameter families, closed under the index shift tau and the
dual-sequence involution a'_j = -a_{-j+1}.
"""

from .poly import Polynomial
from .ratfun import RationalFunction, RF_ONE, rf, rf_prod
from .symbols import A, B, FAMILY_RANK


class Sequence:
    """j -> sign * family_{eps*j + offset}."""

    __slots__ = ("family", "sign", "eps", "offset")

    def __init__(self, family, sign: int = 1, eps: int = 1, offset: int = 0):
        if isinstance(family, str):
            family = FAMILY_RANK[family]
        self.family = family
        self.sign = sign
        self.eps = eps
        self.offset = offset

    def term(self, j: int) -> RationalFunction:
        v = RationalFunction.variable(self.family, self.eps * j + self.offset)
        return v if self.sign > 0 else -v

    def tau(self, r: int) -> "Sequence":
        """The shifted sequence (tau^r s)_j = s_{j+r}."""
        return Sequence(self.family, self.sign, self.eps, self.offset + self.eps * r)

    def dual(self) -> "Sequence":
        """The dual sequence s'_j = -s_{-j+1}; an involution."""
        return Sequence(self.family, -self.sign, -self.eps, self.eps + self.offset)


SEQ_A = Sequence(A)
SEQ_B = Sequence(B)


def shift_tau(expr: RationalFunction, r: int) -> RationalFunction:
    """Rename a_i -> a_{i+r} and b_i -> b_{i+r}; x, y, z, w untouched."""
    if r == 0:
        return expr

    def fn(f, i):
        if f in (A, B):
            return (1, f, i + r)
        return (1, f, i)

    return _map_symbols(expr, fn)


def dual_sequence(expr: RationalFunction) -> RationalFunction:
    """Replace a_i by -a_{-i+1} and b_i by -b_{-i+1} (a -> a', b -> b')."""

    def fn(f, i):
        if f in (A, B):
            return (-1, f, -i + 1)
        return (1, f, i)

    return _map_symbols(expr, fn)


def _map_symbols(expr: RationalFunction, fn) -> RationalFunction:
    num = expr.num.rename(fn)
    factors = tuple((f.rename(fn), e) for f, e in expr.factors)
    return RationalFunction(num, factors)


def power_bar(x, seq: Sequence, k: int) -> RationalFunction:
    """(x | s)^k = (x-s_1)...(x-s_k); negative k per the standard convention."""
    x = rf(x)
    if k >= 0:
        return rf_prod(x - seq.term(j) for j in range(1, k + 1))
    return rf_prod(x - seq.term(j) for j in range(0, k, -1)).inverse()


def power_semi(x, seq: Sequence, k: int) -> RationalFunction:
    """(x ; s)^k = (1-s_1 x)...(1-s_k x); negative k per the convention."""
    x = rf(x)
    if k >= 0:
        return rf_prod(1 - seq.term(j) * x for j in range(1, k + 1))
    return rf_prod(1 - seq.term(j) * x for j in range(0, k, -1)).inverse()


def power_double(x, aseq: Sequence, bseq: Sequence, k: int) -> RationalFunction:
    """(x | a,b)^k = (x|a)^k / (x;b)^k for any integer k."""
    return power_bar(x, aseq, k) / power_semi(x, bseq, k)


def shifted_power(x, kind: str, k: int, aseq: Sequence = SEQ_A, bseq: Sequence = SEQ_B):
    """Spec-facing dispatcher over the three shifted-power kinds."""
    if kind == "bar":
        return power_bar(x, aseq, k)
    if kind == "semicolon":
        return power_semi(x, bseq, k)
    if kind == "double":
        return power_double(x, aseq, bseq, k)
    raise ValueError(f"unknown shifted power kind: {kind!r}")


def ratfun_ops(lhs, rhs, op: str):
    """Uniform entry point for the field operations and equality."""
    lhs = rf(lhs)
    if op == "neg":
        return -lhs
    rhs = rf(rhs)
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        if rhs.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return lhs / rhs
    if op == "eq":
        return lhs == rhs
    raise ValueError(f"unknown op: {op!r}")
