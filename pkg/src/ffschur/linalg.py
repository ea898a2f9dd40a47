"""Exact determinants and small matrix helpers over RationalFunction."""

from .poly import Polynomial
from .ratfun import RationalFunction, RF_ONE, RF_ZERO, rf, rf_sum
from itertools import permutations


def determinant(mat) -> RationalFunction:
    """Exact determinant; division-free expansion up to 6x6, Bareiss above."""
    n = _check_square(mat)
    if n == 0:
        raise ValueError("empty matrix")
    if n <= 6:
        return _det_expansion(mat, n)
    return _det_bareiss(mat, n)


def det_leibniz(mat) -> RationalFunction:
    """Plain Leibniz sum; the independent oracle used by the tests."""
    n = _check_square(mat)
    terms = []
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        prod = RF_ONE
        for i in range(n):
            prod = prod * rf(mat[i][perm[i]])
        terms.append(prod if sign > 0 else -prod)
    return rf_sum(terms)


def _check_square(mat) -> int:
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ValueError("determinant requires a square matrix")
    return n


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def _det_expansion(mat, n) -> RationalFunction:
    """Expansion by minors memoized over column subsets (division-free)."""
    memo = {(): RF_ONE}

    def minor(cols: tuple) -> RationalFunction:
        got = memo.get(cols)
        if got is not None:
            return got
        row = n - len(cols)
        parts = []
        for j, c in enumerate(cols):
            entry = rf(mat[row][c])
            if entry.is_zero():
                continue
            sub = minor(cols[:j] + cols[j + 1 :])
            term = entry * sub
            parts.append(term if j % 2 == 0 else -term)
        out = rf_sum(parts)
        memo[cols] = out
        return out

    return minor(tuple(range(n)))


def _det_bareiss(mat, n) -> RationalFunction:
    """Fraction-free Bareiss over the polynomial ring.

    Each row is cleared of denominators first; the tracked multiplier is
    divided out at the end.
    """
    rows = []
    multiplier = RF_ONE
    for row in mat:
        entries = [rf(x) for x in row]
        clear = {}
        for x in entries:
            for f, e in x.factors:
                k = f.key()
                if k not in clear or clear[k][1] < e:
                    clear[k] = (f, e)
        m = Polynomial.one()
        for f, e in clear.values():
            m = m * f**e
        multiplier = multiplier * m
        cleared = []
        for x in entries:
            v = x * m
            cleared.append(v.as_polynomial())
        rows.append(cleared)

    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        if rows[k][k].is_zero():
            pivot = next(
                (i for i in range(k + 1, n) if not rows[i][k].is_zero()), None
            )
            if pivot is None:
                return RF_ZERO
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                q = num.divexact(prev)
                if q is None:
                    raise ArithmeticError("Bareiss exact division failed")
                rows[i][j] = q
            rows[i][k] = Polynomial.zero()
        prev = rows[k][k]
    det_poly = rows[n - 1][n - 1]
    if sign < 0:
        det_poly = -det_poly
    return RationalFunction(det_poly, ()) / multiplier


def mat_mul(A, B):
    rows, mid, cols = len(A), len(B), len(B[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            row.append(rf_sum(A[i][k] * B[k][j] for k in range(mid) if A[i][k]))
        out.append(row)
    return out


def mat_sub(A, B):
    return [[A[i][j] - B[i][j] for j in range(len(A[0]))] for i in range(len(A))]


def mat_scale(A, c):
    return [[c * x for x in row] for row in A]


def mat_eq(A, B) -> bool:
    if len(A) != len(B) or len(A[0]) != len(B[0]):
        return False
    return all(A[i][j] == B[i][j] for i in range(len(A)) for j in range(len(A[0])))


def mat_identity(n):
    return [[RF_ONE if i == j else RF_ZERO for j in range(n)] for i in range(n)]


def first_difference(A, B):
    """First (i, j, lhs, rhs) where the matrices differ, or None."""
    for i in range(len(A)):
        for j in range(len(A[0])):
            if not A[i][j] == B[i][j]:
                return (i, j, A[i][j], B[i][j])
    return None
