"""Pure-Python kernel for sparse polynomial dictionaries.

A monomial is a tuple of (family, index, exponent) triples sorted by
(family, index) with every exponent positive; the empty tuple is the
constant monomial.  A polynomial is a dict mapping monomials to nonzero
exact rational coefficients.  These functions are the hot inner loops;
``ffschur._speedups`` is the compiled twin with the same signatures.
"""

import heapq

BACKEND = "pure"


def mono_sort_key(mono):
    """Graded key: total degree first, then lex in the fixed variable order.

    Smaller key = earlier (leading) term, so sorting ascending lists the
    leading term first.
    """
    deg = 0
    flat = []
    for f, i, e in mono:
        deg += e
        flat.append(f)
        flat.append(i)
        flat.append(-e)
    return (-deg, tuple(flat))


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        f1, x1, e1 = m1[i]
        f2, x2, e2 = m2[j]
        if (f1, x1) == (f2, x2):
            out.append((f1, x1, e1 + e2))
            i += 1
            j += 1
        elif (f1, x1) < (f2, x2):
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def mono_div(m1, m2):
    """m1 / m2, or None when m2 does not divide m1."""
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while j < n2:
        if i >= n1:
            return None
        f1, x1, e1 = m1[i]
        f2, x2, e2 = m2[j]
        if (f1, x1) == (f2, x2):
            if e1 < e2:
                return None
            if e1 > e2:
                out.append((f1, x1, e1 - e2))
            i += 1
            j += 1
        elif (f1, x1) < (f2, x2):
            out.append(m1[i])
            i += 1
        else:
            return None
    out.extend(m1[i:])
    return tuple(out)


def poly_add(A, B):
    out = dict(A)
    for m, c in B.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def poly_sub(A, B):
    out = dict(A)
    for m, c in B.items():
        s = out.get(m)
        if s is None:
            out[m] = -c
        else:
            s = s - c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def poly_neg(A):
    return {m: -c for m, c in A.items()}


def poly_scale(A, c):
    if not c:
        return {}
    return {m: c * v for m, v in A.items()}


def poly_mul_mono(A, mono, c):
    """A * (c * mono)."""
    if not c:
        return {}
    if not mono:
        return poly_scale(A, c)
    return {mono_mul(m, mono): c * v for m, v in A.items()}


def poly_mul(A, B):
    if not A or not B:
        return {}
    if len(A) > len(B):
        A, B = B, A
    out = {}
    for m1, c1 in A.items():
        for m2, c2 in B.items():
            m = mono_mul(m1, m2)
            c = c1 * c2
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def poly_divexact(A, B):
    """Exact quotient A / B under the graded-lex term order, or None."""
    if not A:
        return {}
    if not B:
        raise ZeroDivisionError("polynomial division by zero")
    items = sorted(B, key=mono_sort_key)
    mb = items[0]
    cb = B[mb]
    btail = [(m, B[m]) for m in items[1:]]
    rem = dict(A)
    heap = [(mono_sort_key(m), m) for m in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        while heap:
            _, lead = heap[0]
            if lead in rem:
                break
            heapq.heappop(heap)
        if not heap:
            break
        qm = mono_div(lead, mb)
        if qm is None:
            return None
        qc = rem[lead] / cb
        quot[qm] = qc
        del rem[lead]
        for m, c in btail:
            mm = mono_mul(qm, m)
            s = rem.get(mm)
            if s is None:
                rem[mm] = -qc * c
                heapq.heappush(heap, (mono_sort_key(mm), mm))
            else:
                s = s - qc * c
                if s:
                    rem[mm] = s
                else:
                    del rem[mm]
    if rem:
        return None
    return quot
