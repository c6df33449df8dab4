"""Bitangent lines, their tangency points, and the conic pencils through those points."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exactalg import QOMEGA, QQ, FieldElem, MultiPoly, omega, perfect_square_form, roots_in_field, solve_quadratic
from ..exactalg import squarefree_part
from .families import NAMES, A, CurveFamily, ProjPoint, X, Y, Z, quartic_family, splitting_field
from .monomial import all_monomial_maps, even_maps, point_orbits


class NotBitangent(ValueError):
    pass


class LineIsComponent(ValueError):
    pass


@dataclass
class Bitangency:
    line: MultiPoly
    scalar: MultiPoly
    quadratic: MultiPoly
    points: list[ProjPoint]


def _line_coeffs(line: MultiPoly) -> list[FieldElem]:
    if line.degree(A) > 0 or not line.is_homogeneous([X, Y, Z]) or line.degree() != 1:
        raise ValueError("expected a linear form in x, y, z")
    out = []
    for k in (X, Y, Z):
        e = tuple(1 if i == k else 0 for i in range(line.nvars))
        out.append(line.terms.get(e, line.field.zero()))
    return out


def restrict_to_line(f: MultiPoly, line: MultiPoly) -> tuple[MultiPoly, int, tuple[int, int]]:
    """Eliminate the last variable with a nonzero coefficient in the line.

    Returns the restricted form and the eliminated variable, and the two remaining ones.
    """
    c = _line_coeffs(line)
    k = max(i for i in range(3) if not c[i].is_zero())
    u, v = [i for i in range(3) if i != k]
    field = line.field if not line.field.is_rational else f.field
    gens = [MultiPoly.var(i, f.nvars, field, f.names) for i in range(f.nvars)]
    expr = (gens[u].scale(c[u]) + gens[v].scale(c[v])).scale(-c[k].inverse())
    return f.over(field).substitute({k: expr}), k, (u, v)


def bitangency(family, line: MultiPoly) -> Bitangency:
    """Check that the restriction of the curve to the line is c * q^2 identically in a.

    The tangency points are the roots of q, computed over a quadratic extension
    when needed.
    """
    f = family.poly if isinstance(family, CurveFamily) else family
    r, k, (u, v) = restrict_to_line(f, line)
    if r.is_zero():
        raise LineIsComponent(f"{line} is a component of the curve")
    found = perfect_square_form(r, u, v)
    if found is None:
        raise NotBitangent(f"restriction to {line} is not a constant times a square")
    scalar, q = found
    points = _points_of(q, line, k, u, v) if q.degree(A) <= 0 else []
    return Bitangency(line, scalar, q, points)


def _points_of(q: MultiPoly, line: MultiPoly, k: int, u: int, v: int) -> list[ProjPoint]:
    """Roots of the binary form q(u, v) lifted to the line."""
    if q.degree(u) != 2:
        return []
    coeffs = {e[u]: c for e, c in q.terms.items()}
    a2, a1, a0 = (coeffs.get(i, q.field.zero()) for i in (2, 1, 0))
    roots = solve_quadratic(a2, a1, a0)
    field = q.field
    if roots is None:
        disc = a1 * a1 - 4 * a2 * a0
        if not disc.is_rational():
            return []
        field = splitting_field(disc.a)
        lift = lambda c: FieldElem(field, c.a, c.b)
        roots = solve_quadratic(lift(a2), lift(a1), lift(a0))
    c = [FieldElem(field, x.a, x.b) if x.field != field else x for x in _line_coeffs(line)]
    pts = []
    for r in roots:
        coords = [None] * 3
        coords[u], coords[v] = r, FieldElem(field, 1)
        coords[k] = -(c[u] * coords[u] + c[v] * coords[v]) / c[k]
        pts.append(ProjPoint(coords))
    return pts


def four_bitangent_lines() -> list[MultiPoly]:
    x, y, z = (MultiPoly.var(i, 4, QQ, NAMES) for i in (X, Y, Z))
    return [x + y + z, x + y - z, x - y + z, x - y - z]


def quartic_tangency_points() -> list[Bitangency]:
    fam = quartic_family()
    return [bitangency(fam, ln) for ln in four_bitangent_lines()]


def first_orbit() -> list[ProjPoint]:
    """(1:w:w^2), (1:w:-w^2), (1:-w:-w^2), (1:-w:w^2) with w a primitive cube root of 1."""
    w = omega()
    return [ProjPoint([1, s * w, t * w * w]) for s, t in ((1, 1), (1, -1), (-1, -1), (-1, 1))]


@dataclass
class OrbitReport:
    full_group_orbits: list[list[ProjPoint]]
    even_subgroup_orbits: list[list[ProjPoint]]
    galois_swaps_even_orbits: bool
    first_orbit_matches: bool


def tangency_orbits(points, maps=None) -> list[list[ProjPoint]]:
    """Orbit partition of the tangency points under the given monomial maps (default: all 24)."""
    return point_orbits(points, list(all_monomial_maps() if maps is None else maps))


def orbit_report(points) -> OrbitReport:
    full = tangency_orbits(points)
    even = tangency_orbits(points, even_maps())
    sets = [set(o) for o in even]
    swaps = len(sets) == 2 and {p.conjugate() for p in sets[0]} == sets[1]
    target = set(first_orbit())
    return OrbitReport(full, even, swaps, any(s == target for s in sets))


# -- the conic pencil through the first orbit


def line_through(p: ProjPoint, q: ProjPoint) -> MultiPoly:
    a, b = p.coords, q.coords
    cross = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
    field = QOMEGA
    gens = [MultiPoly.var(i, 4, field, ("x", "y", "z", "l")) for i in range(3)]
    out = MultiPoly.const(0, 4, field, ("x", "y", "z", "l"))
    for g, c in zip(gens, cross):
        out = out + g.scale(FieldElem(field, c.a, c.b))
    return out


@dataclass
class PencilReport:
    lines: list[MultiPoly]
    pencil: MultiPoly
    through_points: bool
    tangency_roots: dict[str, list[FieldElem]]
    tangency_discriminants: dict[str, MultiPoly]
    base_points: list[ProjPoint]
    base_points_expected: bool
    tangent_members: dict[str, bool]
    literal_members_equal: bool
    notes: list[str] = field(default_factory=list)


LAMBDA = 3


def _pencil(lines: list[MultiPoly]) -> MultiPoly:
    lam = MultiPoly.var(LAMBDA, 4, QOMEGA, ("x", "y", "z", "l"))
    return lines[0] * lines[1] + lam * lines[2] * lines[3]


def _at(p: MultiPoly, value) -> MultiPoly:
    return p.substitute({LAMBDA: value})


def _tangency_condition(conic: MultiPoly, line: MultiPoly) -> MultiPoly:
    """Discriminant of the conic restricted to the line, a polynomial in the pencil parameter."""
    r, k, (u, v) = restrict_to_line(conic, line.over(QOMEGA).rename(conic.names))
    coeff = {}
    for e, c in r.terms.items():
        key = (e[u], e[v])
        mono = [0] * 4
        mono[LAMBDA] = e[LAMBDA]
        coeff.setdefault(key, MultiPoly.const(0, 4, r.field, r.names))
        coeff[key] = coeff[key] + MultiPoly(4, {tuple(mono): c}, r.field, r.names)
    zero = MultiPoly.const(0, 4, r.field, r.names)
    a2, a1, a0 = coeff.get((2, 0), zero), coeff.get((1, 1), zero), coeff.get((0, 2), zero)
    return a1 * a1 - a2 * a0 * 4


def _conic_intersections(c1: MultiPoly, c2: MultiPoly, candidates) -> list[ProjPoint]:
    return [p for p in candidates if p.lies_on(c1) and p.lies_on(c2)]


def pencil_two_torsion() -> PencilReport:
    """The pencil L1 L2 + l L3 L4 through the first tangency orbit and its conjugate partner."""
    p = first_orbit()
    lines = [line_through(p[0], p[1]), line_through(p[2], p[3]), line_through(p[0], p[2]), line_through(p[1], p[3])]
    P = _pencil(lines)
    through = all(q.lies_on(P) for q in p)
    w = omega()
    roots, discs = {}, {}
    for ln in four_bitangent_lines():
        d = _tangency_condition(P, ln)
        discs[str(ln)] = d
        roots[str(ln)] = roots_in_field(squarefree_part(d, LAMBDA), LAMBDA) if d.degree(LAMBDA) > 0 else []
    conj_lines = [ln.conjugate() for ln in lines]
    Pc = _pencil(conj_lines)
    # members tangent to the bitangents: P at w^2 and its conjugate P' at w
    tangent = _at(P, w * w)
    tangent_c = _at(Pc, w)
    candidates = [ProjPoint([1, s, t]) for s in (1, -1) for t in (1, -1)]
    base = _conic_intersections(tangent, tangent_c, candidates)
    # two distinct conics without common component meet in at most four points
    distinct = not _proportional(tangent, tangent_c)
    base_ok = len(base) == 4 and distinct
    members = {
        "l=0 tangent at first orbit": _tangent_at(tangent, p),
        "l=inf tangent at conjugate orbit": _tangent_at(tangent_c, [q.conjugate() for q in p]),
    }
    literal = _at(P, w) == _at(Pc, w * w)
    notes = []
    if literal:
        notes.append("P at w and P' at w^2 coincide (both 4(x^2+y^2+z^2)), so that combination spans no pencil; "
                     "the tangent members P(w^2) and P'(w) are used instead")
    return PencilReport(lines, P, through, roots, discs, base, base_ok, members, literal, notes)


def _proportional(f: MultiPoly, g: MultiPoly) -> bool:
    e, lc = f.leading_term()
    if e not in g.terms:
        return False
    return g == f.scale(g.terms[e] / lc)


def _tangent_at(conic: MultiPoly, points) -> bool:
    """The conic meets each bitangent line only at the line's point from ``points`` (doubly)."""
    for ln in four_bitangent_lines():
        on = [q for q in points if q.lies_on(ln.over(QOMEGA))]
        if len(on) != 1:
            return False
        r, k, (u, v) = restrict_to_line(conic, ln.over(QOMEGA).rename(conic.names))
        found = perfect_square_form(r, u, v)
        if found is None:
            return False
        _, q = found
        if not on[0].lies_on(q):
            return False
    return True
