"""Text and JSON forms of polynomials and rational functions.

JSON schema: {"num": [{"coeff": "3/2", "mono": {"x1": 2, "a-1": 1}}, ...],
"den": [...]} with terms listed in the canonical order.
"""

from .numbers import rational, rational_str
from .poly import Polynomial
from .ratfun import RationalFunction
from .symbols import Indeterminate, key_name


def poly_to_terms(p: Polynomial) -> list:
    out = []
    for m, c in p.terms.items():
        mono = {key_name((f, i)): e for f, i, e in m}
        out.append({"coeff": rational_str(c), "mono": mono})
    return out


def poly_from_terms(terms) -> Polynomial:
    acc = {}
    for t in terms:
        c = rational(t["coeff"])
        mono = []
        for name, e in t["mono"].items():
            v = Indeterminate.parse(name)
            mono.append((v.family, v.index, int(e)))
        mono.sort()
        m = tuple(mono)
        acc[m] = acc.get(m, 0) + c
    return Polynomial(acc)


def rf_to_json(x: RationalFunction) -> dict:
    return {"num": poly_to_terms(x.num), "den": poly_to_terms(x.den)}


def rf_from_json(obj) -> RationalFunction:
    num = poly_from_terms(obj["num"])
    den = poly_from_terms(obj["den"])
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in JSON input")
    return RationalFunction(num, ((den, 1),))


def rf_text(x: RationalFunction) -> str:
    return x.text()
