"""Hypothesis strategies and a sympy bridge shared by the property tests."""

import sympy
from hypothesis import strategies as st

from lame_atlas.exactalg import QI, QOMEGA, QQ, QSQRT5, FieldElem, MultiPoly

FIELDS = (QQ, QOMEGA, QSQRT5, QI)

rationals = st.fractions(min_value=-12, max_value=12, max_denominator=5)


def elems(field):
    if field.is_rational:
        return rationals.map(lambda a: FieldElem(field, a))
    return st.builds(lambda a, b: FieldElem(field, a, b), rationals, rationals)


def polys(field=QQ, nvars=2, max_deg=3, max_terms=5, min_terms=0):
    exps = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(exps, elems(field), min_size=min_terms, max_size=max_terms).map(
        lambda d: MultiPoly(nvars, d, field))


def nonzero_polys(field=QQ, nvars=2, max_deg=3, max_terms=4):
    return polys(field, nvars, max_deg, max_terms, min_terms=1).filter(lambda p: not p.is_zero())


def univariate(field=QQ, max_deg=4, nvars=1):
    return st.lists(elems(field), min_size=1, max_size=max_deg + 1).map(
        lambda cs: MultiPoly.from_univariate(cs, 0, nvars, field))


def to_sympy(p: MultiPoly):
    """Rational polynomial -> sympy expression in the same variable names."""
    syms = sympy.symbols(p.names)
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.a.numerator, c.a.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        out += term
    return sympy.expand(out)
