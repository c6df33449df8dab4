"""Parameter values with singular fibers, explicit singular points, and the special fibers of the quartic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exactalg import (
    QQ,
    FieldElem,
    MultiPoly,
    gcd_univariate,
    primitive_part,
    rational_roots,
    resultant,
    roots_in_field,
    solve_quadratic,
    squarefree_part,
)
from ..exactalg.elim import poly_divmod, poly_gcd_coeffs
from .families import A, X, Y, Z, CurveFamily, ProjPoint, elem_text, gradient, is_singular_at, poly, quartic_family, splitting_field

INFINITY = "inf"

# lines of the coordinate reflections, each given by two spanning points
MIRROR_LINES = (
    ((0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 1, 0)),
    ((1, 1, 0), (0, 0, 1)),
    ((1, -1, 0), (0, 0, 1)),
    ((0, 1, 1), (1, 0, 0)),
    ((0, 1, -1), (1, 0, 0)),
    ((1, 0, 1), (0, 1, 0)),
    ((1, 0, -1), (0, 1, 0)),
)


# -- univariate roots over Q or a quadratic field


def _trim(c):
    c = list(c)
    while c and c[-1].is_zero():
        c.pop()
    return c


def _roots(coeffs: list[FieldElem]) -> tuple[list[FieldElem], bool]:
    """Roots of a univariate polynomial, allowing one quadratic extension of Q.

    The flag says whether every root was found (the squarefree degree is
    fully accounted for).
    """
    coeffs = _trim(coeffs)
    if len(coeffs) <= 1:
        return [], True
    field = coeffs[0].field
    deriv = [c * i for i, c in enumerate(coeffs)][1:]
    g = poly_gcd_coeffs(coeffs, deriv)
    sq = poly_divmod(coeffs, g)[0] if len(g) > 1 else coeffs
    if all(c.is_rational() for c in sq):
        found = [FieldElem(field, r) for r in rational_roots([c.a for c in sq])]
        rest = sq
        for r in found:
            rest = poly_divmod(rest, [-r, field.one()])[0]
        if len(rest) == 3:
            a2, a1, a0 = rest[2], rest[1], rest[0]
            quad = solve_quadratic(a2, a1, a0)
            if quad is None and field.is_rational:
                K = splitting_field((a1 * a1 - 4 * a2 * a0).a)
                quad = solve_quadratic(*(FieldElem(K, c.a) for c in (a2, a1, a0)))
            if quad is not None:
                return found + quad, True
        return found, len(rest) <= 1
    found = []
    if len(sq) == 2:
        found = [-sq[0] / sq[1]]
    elif len(sq) == 3:
        found = solve_quadratic(sq[2], sq[1], sq[0]) or []
    return found, len(found) == len(sq) - 1


def _coeffs(p: MultiPoly, var: int) -> list[FieldElem]:
    return p.univariate_coeffs(var) if not p.is_zero() else []


def _gcd_all(polys: list[MultiPoly], var: int) -> list[FieldElem]:
    g: list[FieldElem] = []
    for p in polys:
        g = poly_gcd_coeffs(g, _coeffs(p, var)) if g else _trim(_coeffs(p, var))
    return g


# -- singular points of a single plane curve


def _on_line_singular(f: MultiPoly, p0, p1) -> tuple[list[ProjPoint], bool]:
    """Singular points of f on the line spanned by p0 and p1.

    Returns (points, complete); complete is False when f vanishes on the line
    or some roots lie outside reach.
    """
    field = f.field
    polys = [f] + gradient(f)
    u = MultiPoly.var(X, f.nvars, field, f.names)
    sub = {i: u.scale(FieldElem(field, p0[i])) + MultiPoly.const(p1[i], f.nvars, field, f.names) for i in range(3)}
    restricted = [g.substitute(sub) for g in polys]
    if restricted[0].is_zero():
        return [p for p in (ProjPoint(p0),) if is_singular_at(f, p)], False
    g = _gcd_all(restricted, X)
    pts = []
    if is_singular_at(f, ProjPoint(p0)):
        pts.append(ProjPoint(p0))
    if len(g) == 0:
        return pts, False
    roots, complete = _roots(g)
    for r in roots:
        pts.append(ProjPoint([r * p0[i] + p1[i] for i in range(3)]))
    return [p for p in pts if is_singular_at(f, p)], complete


def mirror_line_singular_points(f: MultiPoly) -> list[ProjPoint]:
    """Singular points of f lying on the nine reflection lines."""
    out: list[ProjPoint] = []
    for p0, p1 in MIRROR_LINES:
        pts, _ = _on_line_singular(f, p0, p1)
        out += [p for p in pts if p not in out]
    return out


def singular_points(f: MultiPoly) -> tuple[list[ProjPoint], bool]:
    """All singular points of a plane curve f(x, y, z) = 0, with a completeness flag.

    The affine chart z = 1 is handled by a resultant in x and a gcd per root in
    y; the line z = 0 by a binary-form gcd.  The flag is True only if every
    root of every univariate polynomial on the way was found, so that the list
    is provably the full singular locus.
    """
    if f.degree(A) > 0:
        raise ValueError("specialize the parameter first")
    pts, complete = _on_line_singular(f, (1, 0, 0), (0, 1, 0))
    pts = list(pts)
    fz = [g.substitute({Z: 1}) for g in [f] + gradient(f)]
    R = resultant(fz[1], fz[2], X)
    if R.is_zero():
        return pts, False
    ys, ok = _roots(_coeffs(R, Y))
    complete &= ok
    for y0 in ys:
        at = []
        for g in fz:
            if not y0.field.is_rational and not g.field.is_rational and g.field != y0.field:
                return pts, False
            at.append(g.substitute({Y: y0}))
        gx = _gcd_all(at, X)
        if not gx:
            return pts, False
        xs, ok = _roots(gx)
        complete &= ok
        for x0 in xs:
            if not x0.field.is_rational and not y0.field.is_rational and x0.field != y0.field:
                complete = False
                continue
            p = ProjPoint([x0, y0, 1])
            if is_singular_at(f, p) and p not in pts:
                pts.append(p)
    return pts, complete


# -- parameter values with singular fibers


@dataclass
class SingularFiber:
    value: FieldElem | str
    points: list[ProjPoint]
    complete: bool
    source: str

    @property
    def confirmed(self) -> bool:
        return bool(self.points)

    def label(self) -> str:
        return INFINITY if self.value == INFINITY else elem_text(self.value)

    def to_json(self) -> dict:
        return {"value": self.label(), "singular_points": [str(p) for p in self.points],
                "complete": self.complete, "source": self.source, "confirmed": self.confirmed}


@dataclass
class SingularReport:
    family: str
    mode: str
    chart_polys: dict[str, MultiPoly] = field(default_factory=dict)
    charts_agree: bool = True
    universal_points: list[ProjPoint] = field(default_factory=list)
    fibers: list[SingularFiber] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def values(self) -> list:
        return [f.value for f in self.fibers if f.confirmed]

    def fiber(self, value) -> SingularFiber:
        if not isinstance(value, (str, FieldElem)):
            value = FieldElem(QQ, value)
        return next(f for f in self.fibers if f.value == value)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "mode": self.mode,
            "chart_polys": {k: str(v) for k, v in self.chart_polys.items()},
            "charts_agree": self.charts_agree,
            "universal_singular_points": [str(p) for p in self.universal_points],
            "fibers": [f.to_json() for f in self.fibers],
            "notes": self.notes,
        }


def _halve(p: MultiPoly, var: int) -> MultiPoly:
    """Replace var^2 by var when only even powers occur; roots in the other variables are unchanged."""
    if any(e[var] % 2 for e in p.terms):
        return p
    terms = {tuple(k // 2 if i == var else k for i, k in enumerate(e)): c for e, c in p.terms.items()}
    return MultiPoly(p.nvars, terms, p.field, p.names)


def _chart_pair(f: MultiPoly, chart: int):
    u, v = [i for i in range(3) if i != chart]
    fc = f.substitute({chart: 1})
    fu = f.diff(u).substitute({chart: 1})
    fv = f.diff(v).substitute({chart: 1})
    R1 = primitive_part(resultant(fu, fv, u), v)
    R2 = primitive_part(resultant(fu, fc, u), v)
    return _halve(R1, v), _halve(R2, v), v


def _degenerate(R1: MultiPoly, R2: MultiPoly, v: int) -> bool:
    """R1 and R2 share a factor in v for generic parameter values (checked at two specializations)."""
    for val in (3, 7):
        a, b = R1.substitute({A: val}), R2.substitute({A: val})
        if a.is_zero() or b.is_zero() or gcd_univariate(a, b, v).degree(v) > 0:
            continue
        return False
    return True


def chart_eliminant(f: MultiPoly, chart: int) -> MultiPoly | None:
    """Univariate polynomial in the parameter vanishing where the chart has a singular point.

    None when the elimination degenerates (the resultant chain vanishes identically).
    """
    R1, R2, v = _chart_pair(f, chart)
    if R1.is_zero() or R2.is_zero() or _degenerate(R1, R2, v):
        return None
    R = resultant(R1, R2, v)
    if R.is_zero():
        return None
    return squarefree_part(R, A)


def universal_singular_points(family: CurveFamily) -> list[ProjPoint]:
    """Points on the reflection lines that are singular on every fiber."""
    base = mirror_line_singular_points(family.base_form())
    return [p for p in base if is_singular_at(family.poly, p)]


def fiber_evidence(family: CurveFamily, value, exclude=()) -> SingularFiber:
    """Singular points of one fiber: the complete search when it succeeds, reflection lines otherwise."""
    f = family.infinity_form() if value == INFINITY else family.fiber(value)
    pts, complete = singular_points(f)
    source = "complete"
    if not complete:
        extra = mirror_line_singular_points(f)
        pts = pts + [p for p in extra if p not in pts]
        source = "reflection lines"
    pts = [p for p in pts if p not in exclude]
    if value != INFINITY and not isinstance(value, FieldElem):
        value = FieldElem(QQ, value)
    return SingularFiber(value, pts, complete and not exclude, source)


def singular_parameters(family: CurveFamily, candidates=None) -> SingularReport:
    """Parameter values a (including infinity) whose fiber is singular.

    Elimination mode: per chart, resultants remove the two chart coordinates;
    the roots of the gcd of the chart polynomials are the candidates.  When
    every fiber shares singular points the chain degenerates and only the given
    candidates are tested, discounting the shared points.
    """
    rep = SingularReport(family.name, "elimination")
    rep.universal_points = universal_singular_points(family)
    f = family.poly
    polys = {}
    if not rep.universal_points:
        for chart, name in ((Z, "z=1"), (Y, "y=1"), (X, "x=1")):
            R = chart_eliminant(f, chart)
            if R is None:
                polys = None
                break
            polys[name] = R
    if rep.universal_points or polys is None:
        rep.mode = "per-candidate"
        rep.notes.append("elimination degenerates: some points are singular on every fiber "
                         f"({', '.join(map(str, rep.universal_points)) or 'not located'})")
        for c in candidates or []:
            rep.fibers.append(fiber_evidence(family, c, exclude=rep.universal_points))
        return rep
    rep.chart_polys = polys
    first = next(iter(polys.values()))
    rep.charts_agree = all(p == first for p in polys.values())
    g = first
    for p in polys.values():
        g = gcd_univariate(g, p, A)
    roots = roots_in_field(g, A) if g.degree(A) > 0 else []
    roots.sort(key=lambda r: (r.a, r.b))
    values = list(roots)
    if family.infinity_form() != 0:
        values.append(INFINITY)
    for c in candidates or []:
        c = c if isinstance(c, (str, FieldElem)) else FieldElem(QQ, c)
        if c not in values:
            values.append(c)
    for val in values:
        rep.fibers.append(fiber_evidence(family, val))
    return rep


# -- special fibers of the quartic


def invariant_conic() -> MultiPoly:
    return poly("x^2+y^2+z^2")


def four_lines_product() -> MultiPoly:
    return poly("(x+y+z)*(-x+y+z)*(x-y+z)*(x+y-z)")


def pencil_parameter(alpha) -> Fraction | str:
    """t with F_a proportional to Q^2 + t * (product of the four lines): t = (a-2)/(a+2)."""
    if alpha == INFINITY:
        return Fraction(1)
    alpha = Fraction(alpha)
    if alpha == -2:
        return INFINITY
    return (alpha - 2) / (alpha + 2)


@dataclass
class SpecialFibers:
    double_conic: bool
    four_lines: bool
    infinity_points: list[ProjPoint]
    infinity_complete: bool
    pencil_identity: bool
    t_values: dict[str, Fraction | str]

    def to_json(self) -> dict:
        return {
            "double_conic": self.double_conic,
            "four_lines": self.four_lines,
            "infinity_singular_points": [str(p) for p in self.infinity_points],
            "infinity_complete": self.infinity_complete,
            "pencil_identity": self.pencil_identity,
            "t_values": {k: str(v) for k, v in self.t_values.items()},
        }


def special_fiber_factorizations() -> SpecialFibers:
    fam = quartic_family()
    Q = invariant_conic()
    P = four_lines_product()
    double = fam.fiber(2) == Q * Q
    lines = fam.fiber(-2) == -P
    pts, complete = singular_points(fam.infinity_form())
    a = MultiPoly.var(A, 4, QQ, fam.poly.names)
    # 4 F = (a + 2) Q^2 + (a - 2) P
    identity = fam.poly.scale(FieldElem(QQ, 4)) == (a + 2) * Q * Q + (a - 2) * P
    tv = {str(v): pencil_parameter(v) for v in (2, -2, 0, INFINITY)}
    return SpecialFibers(double, lines, sorted(pts, key=str), complete, identity, tv)
