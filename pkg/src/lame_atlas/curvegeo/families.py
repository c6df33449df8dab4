"""Plane curve families in (x, y, z) with one parameter a, and projective points."""

from __future__ import annotations

from dataclasses import dataclass

from ..exactalg import QI, QOMEGA, QQ, QSQRT5, QSQRTM3, FieldElem, MultiPoly, NumberField, quadratic_field

NAMES = ("x", "y", "z", "a")
X, Y, Z, A = range(4)


def poly(text: str, field: NumberField = QQ) -> MultiPoly:
    return MultiPoly.parse(text, NAMES, field)


@dataclass
class CurveFamily:
    """f(x, y, z; a) homogeneous of ``degree`` in x, y, z and of degree <= 1 in a."""

    poly: MultiPoly
    degree: int
    name: str

    def __post_init__(self):
        if self.poly.nvars != 4:
            raise ValueError("family polynomials live in (x, y, z, a)")
        if not self.poly.is_homogeneous([X, Y, Z]):
            raise ValueError(f"{self.name} is not homogeneous in x, y, z")
        if any(sum(e[:3]) != self.degree for e in self.poly.terms):
            raise ValueError(f"{self.name} does not have degree {self.degree}")
        if self.poly.degree(A) > 1:
            raise ValueError(f"{self.name} has degree > 1 in the parameter")

    @property
    def field(self) -> NumberField:
        return self.poly.field

    def base_form(self) -> MultiPoly:
        """The a^0 part."""
        return self.poly.substitute({A: 0})

    def infinity_form(self) -> MultiPoly:
        """The coefficient of a: the fiber at a = infinity."""
        return self.poly.diff(A)

    def fiber(self, value) -> MultiPoly:
        """Specialize a to a rational number or field element (still 4 variables, a absent)."""
        return self.poly.substitute({A: value})


def quartic_family() -> CurveFamily:
    return CurveFamily(poly("x^4+y^4+z^4+a*(x^2*y^2+y^2*z^2+x^2*z^2)"), 4, "quartic")


def sextic_T() -> MultiPoly:
    return poly("x^6+y^6+z^6+(x^2+y^2+z^2)*(x^4+y^4+z^4)-12*x^2*y^2*z^2")


def sextic_S() -> MultiPoly:
    return poly("(y^2-z^2)*(z^2-x^2)*(x^2-y^2)")


def sextic_family() -> CurveFamily:
    A_ = MultiPoly.var(A, 4, QQ, NAMES)
    return CurveFamily(sextic_T() + A_ * sextic_S(), 6, "sextic")


def fermat_cubic() -> CurveFamily:
    return CurveFamily(poly("x^3+y^3+z^3"), 3, "Fermat cubic")


def splitting_field(d) -> NumberField:
    """Field containing sqrt(d); Q(omega) is preferred for discriminants with core -3."""
    K = quadratic_field(d)
    return QOMEGA if K == QSQRTM3 else K


class ProjPoint:
    """A point of the projective plane, stored normalized (first nonzero coordinate 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [c if isinstance(c, FieldElem) else FieldElem(QQ, c) for c in coords]
        if len(coords) != 3:
            raise ValueError("projective plane points have three coordinates")
        field = next((c.field for c in coords if not c.field.is_rational), QQ)
        coords = [FieldElem(field, c.a, c.b) if c.field != field else c for c in coords]
        lead = next((c for c in coords if not c.is_zero()), None)
        if lead is None:
            raise ValueError("all coordinates are zero")
        inv = lead.inverse()
        self.coords = tuple(c * inv for c in coords)

    @property
    def field(self) -> NumberField:
        return next((c.field for c in self.coords if not c.field.is_rational), QQ)

    def _key(self):
        return tuple((c.a, c.b) for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def over(self, field: NumberField) -> "ProjPoint":
        """Same point with coordinates in a larger field."""
        if field == self.field:
            return self
        if not self.field.is_rational:
            raise ValueError(f"cannot move {self.field} coordinates to {field}")
        out = ProjPoint.__new__(ProjPoint)
        out.coords = tuple(FieldElem(field, c.a) for c in self.coords)
        return out

    def conjugate(self) -> "ProjPoint":
        return ProjPoint([c.conjugate() for c in self.coords])

    def lies_on(self, f: MultiPoly) -> bool:
        """f vanishes at this point identically in any remaining variables."""
        return substitute_point(f, self).is_zero()

    def __str__(self):
        return "(" + ":".join(_short(c) for c in self.coords) + ")"

    __repr__ = __str__


GEN_NAMES = {QOMEGA: "w", QSQRT5: "sqrt5", QSQRTM3: "sqrt-3", QI: "i"}


def elem_text(c: FieldElem) -> str:
    """Short form with the generator written as w, sqrt5, sqrt-3 or i."""
    return _short(c)


def _short(c: FieldElem) -> str:
    if c.b == 0:
        return str(c.a)
    name = GEN_NAMES.get(c.field, "t")
    if c.field == QOMEGA and c.a == c.b:
        # a(1 + w) = -a w^2
        return _times(-c.a, "w^2")
    if c.a == 0:
        return _times(c.b, name)
    sign = "-" if c.b < 0 else "+"
    return f"{c.a}{sign}{_times(abs(c.b), name)}"


def _times(k, name: str) -> str:
    if k == 1:
        return name
    if k == -1:
        return "-" + name
    return f"{k}*{name}"


def substitute_point(f: MultiPoly, p: ProjPoint) -> MultiPoly:
    """Plug the point's coordinates into x, y, z."""
    return f.substitute({X: p.coords[0], Y: p.coords[1], Z: p.coords[2]})


def gradient(f: MultiPoly) -> list[MultiPoly]:
    return [f.diff(X), f.diff(Y), f.diff(Z)]


def is_singular_at(f: MultiPoly, p: ProjPoint) -> bool:
    """f and its three partials vanish at p (identically in any other variables)."""
    return all(substitute_point(g, p).is_zero() for g in [f] + gradient(f))
