from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from strategies import FIELDS, elems, nonzero_polys, polys, rationals, to_sympy, univariate
from lame_atlas.exactalg import (
    QI,
    QOMEGA,
    QQ,
    QSQRT5,
    QSQRTM3,
    FieldElem,
    MultiPoly,
    discriminant,
    format_poly,
    gcd_univariate,
    omega,
    parse_poly,
    perfect_square_form,
    primitive_part,
    quadratic_field,
    rational_roots,
    rational_sqrt,
    resultant,
    roots_in_field,
    solve_quadratic,
    squarefree_part,
)

fields = st.sampled_from(FIELDS)
quadratic_fields = st.sampled_from(FIELDS[1:])


def P(text, names=("x", "y"), field=QQ):
    return MultiPoly.parse(text, names, field)


# -- number fields


def test_omega_is_a_primitive_cube_root():
    w = omega()
    assert w * w * w == 1
    assert w * w + w + 1 == 0
    assert w.conjugate() == w * w


def test_named_fields():
    assert quadratic_field(-3) is QSQRTM3
    assert quadratic_field(5) is QSQRT5
    assert quadratic_field(-1) is QI
    assert quadratic_field(Fraction(-12)) is QSQRTM3
    assert quadratic_field(20) is QSQRT5
    with pytest.raises(ValueError):
        quadratic_field(9)
    assert QSQRTM3.discriminant == -12
    assert QOMEGA.discriminant == -3


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-4)) is None
    assert rational_sqrt(0) == 0


def test_rational_roots_examples():
    # (2x - 1)(x + 3)x^2 = 2x^4 + 5x^3 - 3x^2
    assert rational_roots([0, 0, -3, 5, 2]) == [Fraction(-3), Fraction(0), Fraction(1, 2)]
    assert rational_roots([1, 0, 1]) == []
    assert rational_roots([5]) == []
    assert rational_roots([Fraction(1, 3), Fraction(1, 2)]) == [Fraction(-2, 3)]


def test_solve_quadratic_in_omega_field():
    one = QOMEGA.one()
    roots = solve_quadratic(one, one, one)
    assert set(map(repr, roots)) == {repr(omega()), repr(omega() * omega())}
    assert solve_quadratic(QQ.one(), QQ.zero(), FieldElem(QQ, -2)) is None


def test_mixed_field_arithmetic_rejected():
    with pytest.raises(ValueError):
        QI.gen + QOMEGA.gen
    assert (QI.gen + 1).field is QI


@settings(max_examples=300)
@given(quadratic_fields.flatmap(lambda K: st.tuples(elems(K), elems(K), elems(K))))
def test_field_axioms(abc):
    a, b, c = abc
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.trace() == (a + a.conjugate()).a


@settings(max_examples=300)
@given(fields.flatmap(elems))
def test_sqrt_of_squares(a):
    r = (a * a).sqrt()
    assert r is not None and r * r == a * a


def _times(f, g):
    return [sum(f[i] * g[k - i] for i in range(len(f)) if 0 <= k - i < len(g)) for k in range(len(f) + len(g) - 1)]


@settings(max_examples=150)
@given(st.lists(rationals, min_size=1, max_size=4), st.lists(rationals, min_size=1, max_size=3))
def test_rational_roots_recovers_planted_roots(roots, cofactor):
    assume(any(cofactor))
    f = cofactor
    for r in roots:
        f = _times(f, [-r, Fraction(1)])
    found = rational_roots(f)
    assert set(roots) <= set(found)
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(f))
    want = sorted(Fraction(int(r.p), int(r.q)) for r in sympy.roots(sympy.Poly(expr, x), filter="Q"))
    assert found == want


# -- polynomials


def test_parse_and_print():
    p = P("3/4*x^2*y - 2*x + y^3 - 5/3")
    assert str(p) == "3/4*x^2*y - 2*x + y^3 - 5/3"
    assert parse_poly(format_poly(p)) == p
    q = MultiPoly.parse("(x+t)^2", ("x",), QOMEGA)
    assert parse_poly(format_poly(q)) == q


@pytest.mark.parametrize("text", ["poly 2 Q\n1 : 1\n", "poly 1 Q\n1/2+1*t : 1\n", "poly 1 Q\n1 : 2\n1 : 2\n",
                                  "junk\n", "poly 1 Q\n1 : -1\n"])
def test_parse_poly_rejects(text):
    with pytest.raises(ValueError):
        parse_poly(text)


def test_substitute_is_simultaneous():
    f = P("x^2 - y")
    x, y = MultiPoly.gens(2)
    assert f.substitute({0: y, 1: x}) == P("y^2 - x")


def test_resultant_small_cases():
    x_minus = P("x - y")
    assert resultant(x_minus, P("x^2 - 2"), 0) == P("y^2 - 2")
    assert resultant(P("x + 1"), P("x^3"), 0) == P("-1")
    with pytest.raises(ValueError):
        resultant(P("0"), P("x"), 0)


def test_discriminant_of_quadratic():
    f = MultiPoly.parse("x^2 + b*x + c", ("x", "b", "c"))
    # Res(f, f') = -(b^2 - 4c) for monic quadratics
    assert discriminant(f, 0) == MultiPoly.parse("-b^2 + 4*c", ("x", "b", "c"))


def test_gcd_and_squarefree():
    f = P("(x-1)^2*(x+2)", ("x",))
    g = P("(x-1)*(x+3)", ("x",))
    assert gcd_univariate(f, g) == P("x - 1", ("x",))
    assert squarefree_part(f, 0) == P("(x-1)*(x+2)", ("x",))


def test_roots_in_field():
    f = MultiPoly.parse("x^2 + x + 1", ("x",), QOMEGA)
    assert {repr(r) for r in roots_in_field(f, 0)} == {repr(omega()), repr(omega() * omega())}
    assert [r.a for r in roots_in_field(P("(x-2)*(2*x+1)*(x^2+1)", ("x",)), 0)] == [Fraction(-1, 2), 2]


def test_perfect_square_form():
    f = MultiPoly.parse("a*(x^2 + 3*x*y + y^2)^2", ("x", "y", "a"))
    c, q = perfect_square_form(f)
    assert c == MultiPoly.parse("a", ("x", "y", "a"))
    assert q * q * c == f
    assert perfect_square_form(MultiPoly.parse("x^2 + y^2", ("x", "y"))) is None
    with pytest.raises(ValueError):
        perfect_square_form(MultiPoly.parse("x^3", ("x", "y")))


def test_primitive_part_drops_monomials_and_content():
    f = MultiPoly.parse("y*x^2*(a-1) + y*x*(a-1)", ("x", "y", "a"))
    p = primitive_part(f, 0)
    assert p.divides(f) and p.degree(2) == 0


@settings(max_examples=200)
@given(fields.flatmap(lambda K: st.tuples(polys(K, max_deg=2, max_terms=4), polys(K, max_deg=2, max_terms=4))),
       st.tuples(rationals, rationals))
def test_evaluation_is_a_ring_map(fg, pt):
    f, g = fg
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@settings(max_examples=150)
@given(nonzero_polys(max_deg=2), nonzero_polys(max_deg=2), nonzero_polys(max_deg=2))
def test_resultant_is_multiplicative(f, g, h):
    assume(f.degree(0) > 0 and g.degree(0) > 0 and h.degree(0) > 0)
    assert resultant(f * h, g, 0) == resultant(f, g, 0) * resultant(h, g, 0)


@settings(max_examples=150)
@given(univariate(QQ, 3, nvars=2), univariate(QQ, 3, nvars=2))
def test_common_factor_kills_resultant(a, b):
    assume(not a.is_zero() and not b.is_zero())
    c = MultiPoly.parse("x - y", ("x", "y"))
    assert resultant(a * c, b * c, 0).is_zero()


@settings(max_examples=150)
@given(polys(QQ, nvars=2, max_deg=3, max_terms=5))
def test_derivative_matches_oracle(f):
    x = sympy.Symbol("x")
    assert sympy.expand(to_sympy(f.diff(0)) - sympy.diff(to_sympy(f), x)) == 0


@settings(max_examples=150)
@given(quadratic_fields.flatmap(lambda K: st.tuples(univariate(K, 3), univariate(K, 2))))
def test_gcd_over_quadratic_fields(fc):
    f, c = fc
    assume(not f.is_zero() and not c.is_zero())
    g = f * c
    d = gcd_univariate(f, g, 0)
    assert d.divides(f) and d.divides(g)
    assert d.degree(0) == f.degree(0)
