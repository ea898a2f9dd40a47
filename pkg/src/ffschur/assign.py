"""Parameter assignments and the substitution homomorphism."""

from .numbers import rational
from .poly import Polynomial
from .ratfun import RationalFunction, RF_ONE, rf, rf_sum
from .symbols import FAMILY_RANK, FAMILIES, Indeterminate
from .algebraops import Sequence


class PoleError(ZeroDivisionError):
    """A substitution made a denominator factor identically zero."""


class ParameterAssignment:
    """Overrides for single symbols plus per-family rules.

    Family rules: "symbolic" (leave alone), "zero" (every member to 0), or a
    Sequence (member i maps to seq.term(i), e.g. y = a or y = a').
    """

    def __init__(self, overrides=None, families=None):
        self.overrides = {}
        for k, v in (overrides or {}).items():
            if isinstance(k, str):
                k = Indeterminate.parse(k)
            self.overrides[k] = rf(v)
        self.families = {}
        for fam, rule in (families or {}).items():
            if isinstance(fam, str):
                fam = FAMILY_RANK[fam]
            if not (rule in ("symbolic", "zero") or isinstance(rule, Sequence)):
                raise ValueError(f"bad family rule: {rule!r}")
            self.families[fam] = rule
        self._ov_map = {(k.family, k.index): v for k, v in self.overrides.items()}

    def is_trivial(self) -> bool:
        return not self.overrides and all(
            r == "symbolic" for r in self.families.values()
        )

    def affects(self, family: int, index: int) -> bool:
        if (family, index) in self._ov_map:
            return True
        rule = self.families.get(family, "symbolic")
        return rule != "symbolic"

    def value(self, family: int, index: int) -> RationalFunction:
        v = self._ov_map.get((family, index))
        if v is not None:
            return v
        rule = self.families.get(family, "symbolic")
        if rule == "symbolic":
            return RationalFunction.variable(family, index)
        if rule == "zero":
            return RationalFunction.zero()
        return rule.term(index)

    def key(self):
        ov = tuple(
            sorted(((k.family, k.index), v.key()) for k, v in self.overrides.items())
        )
        fams = []
        for fam, rule in sorted(self.families.items()):
            if isinstance(rule, Sequence):
                fams.append((fam, ("seq", rule.family, rule.sign, rule.eps, rule.offset)))
            else:
                fams.append((fam, rule))
        return (ov, tuple(fams))

    @classmethod
    def parse_sets(cls, settings) -> "ParameterAssignment":
        """Build from CLI-style strings: a=0, y=a, y=a', x=a, a1=3/2."""
        overrides = {}
        families = {}
        for s in settings:
            lhs, _, rhs = s.partition("=")
            lhs = lhs.strip()
            rhs = rhs.strip()
            if not rhs:
                raise ValueError(f"bad --set option: {s!r}")
            if lhs in FAMILY_RANK:
                if rhs == "0":
                    families[lhs] = "zero"
                elif rhs in FAMILY_RANK:
                    families[lhs] = Sequence(rhs)
                elif rhs.endswith("'") and rhs[:-1] in FAMILY_RANK:
                    families[lhs] = Sequence(rhs[:-1]).dual()
                else:
                    raise ValueError(f"bad family rule in --set: {s!r}")
            else:
                overrides[Indeterminate.parse(lhs)] = RationalFunction.const(
                    rational(rhs)
                )
        return cls(overrides, families)


def substitute_poly(p: Polynomial, assign: ParameterAssignment) -> RationalFunction:
    cache: dict = {}

    def value_of(mono) -> RationalFunction:
        v = cache.get(mono)
        if v is None:
            v = RF_ONE
            for f, i, e in mono:
                v = v * assign.value(f, i) ** e
            cache[mono] = v
        return v

    groups: dict = {}
    for m, c in p.terms.items():
        aff = []
        un = []
        for t in m:
            (aff if assign.affects(t[0], t[1]) else un).append(t)
        bucket = groups.setdefault(tuple(aff), {})
        un = tuple(un)
        prev = bucket.get(un)
        bucket[un] = c if prev is None else prev + c
    parts = []
    for aff, terms in groups.items():
        coeff_poly = Polynomial(terms)
        if coeff_poly.is_zero():
            continue
        parts.append(value_of(aff) * coeff_poly)
    return rf_sum(parts)


def substitute(expr: RationalFunction, assign: ParameterAssignment) -> RationalFunction:
    """Apply the assignment as a ring homomorphism; poles raise PoleError."""
    expr = rf(expr)
    if assign.is_trivial():
        return expr
    out = substitute_poly(expr.num, assign)
    for f, e in expr.factors:
        fv = substitute_poly(f, assign)
        if fv.is_zero():
            raise PoleError(
                f"substitution sends denominator factor ({f.text()}) to zero"
            )
        out = out * fv ** (-e)
    return out
