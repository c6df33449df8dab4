"""Rationals and quadratic number fields Q(t) with t^2 = b*t + c."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Rational = Fraction


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None."""
    q = as_rational(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """Rational roots of a univariate polynomial given by coefficients, low degree first."""
    coeffs = [as_rational(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots = []
    while coeffs[0] == 0:
        roots.append(Fraction(0))
        coeffs = coeffs[1:]
        if len(coeffs) == 1:
            return sorted(set(roots))
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    content = 0
    for c in ints:
        content = _gcd(content, c)
    ints = [c // content for c in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    f1, fm1 = sum(ints), sum(c if i % 2 == 0 else -c for i, c in enumerate(ints))
    for p in _divisors(a0):
        for q in _divisors(an):
            if _gcd(p, q) != 1:
                continue
            for pp in (p, -p):
                # a root p/q forces (q - p) | f(1) and (q + p) | f(-1)
                if q != pp and f1 % (q - pp):
                    continue
                if q != -pp and fm1 % (q + pp):
                    continue
                if _int_eval(ints, pp, q) == 0:
                    roots.append(Fraction(pp, q))
    return sorted(set(roots))


def _int_eval(coeffs, p, q):
    """q^n f(p/q) for integer coefficients (low degree first)."""
    acc = 0
    qpow = 1
    for c in reversed(coeffs):
        acc = acc * p + c * qpow
        qpow *= q
    return acc


def _horner(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


class NumberField:
    """Q, or Q(t) with defining relation t^2 = b*t + c (t^2 - b*t - c irreducible)."""

    __slots__ = ("b", "c", "name", "_key")

    def __init__(self, b=None, c=None, name: str | None = None):
        if b is None and c is None:
            self.b = self.c = None
            self.name = name or "Q"
        else:
            self.b = as_rational(b)
            self.c = as_rational(c)
            disc = self.b * self.b + 4 * self.c
            if rational_sqrt(disc) is not None:
                raise ValueError(f"t^2 = {self.b}*t + {self.c} is reducible over Q")
            self.name = name or f"Q(t^2={self.b}*t+{self.c})"
        self._key = (self.b, self.c)

    @classmethod
    def rationals(cls) -> "NumberField":
        return QQ

    @property
    def is_rational(self) -> bool:
        return self.b is None

    @property
    def degree(self) -> int:
        return 1 if self.is_rational else 2

    @property
    def discriminant(self) -> Fraction | None:
        """d with t = (b + sqrt(d))/2."""
        if self.is_rational:
            return None
        return self.b * self.b + 4 * self.c

    def __eq__(self, other):
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return self.name

    def header(self) -> str:
        if self.is_rational:
            return "Q"
        return f"Q(t^2={self.b}*t+{self.c})"

    def __call__(self, a=0, b=0) -> "FieldElem":
        return FieldElem(self, a, b)

    @property
    def gen(self) -> "FieldElem":
        if self.is_rational:
            raise ValueError("Q has no generator")
        return FieldElem(self, 0, 1)

    def zero(self) -> "FieldElem":
        return FieldElem(self, 0, 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, 1, 0)


QQ = NumberField()
# omega^2 = -omega - 1
QOMEGA = NumberField(-1, -1, name="Q(omega)")
QSQRT5 = NumberField(0, 5, name="Q(sqrt5)")
QSQRTM3 = NumberField(0, -3, name="Q(sqrt-3)")
QI = NumberField(0, -1, name="Q(i)")


def quadratic_field(d) -> NumberField:
    """Q(sqrt(d)) for a non-square rational d, with t^2 = d' (d' the squarefree integer part)."""
    d = as_rational(d)
    n = d.numerator * d.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    core, k = 1, 2
    while k * k <= n:
        while n % (k * k) == 0:
            n //= k * k
        k += 1
    core = sign * n
    if core == 1:
        raise ValueError(f"{d} is a rational square")
    if core == -3:
        return QSQRTM3
    if core == 5:
        return QSQRT5
    if core == -1:
        return QI
    return NumberField(0, core, name=f"Q(sqrt{core})")


class FieldElem:
    """a + b*t in a NumberField."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: NumberField, a=0, b=0):
        self.field = field
        self.a = as_rational(a)
        self.b = as_rational(b)
        if field.is_rational and self.b != 0:
            raise ValueError("rational field element with a t-component")

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                if other.field.is_rational:
                    return FieldElem(self.field, other.a)
                if self.field.is_rational and other.b == 0:
                    return FieldElem(self.field, other.a)
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.field, other)
        return NotImplemented

    def _result_field(self, other: "FieldElem") -> NumberField:
        return self.field

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.field.is_rational:
            return FieldElem(self.field, self.a * o.a)
        # (a1 + b1 t)(a2 + b2 t) with t^2 = B t + C
        bb = self.b * o.b
        return FieldElem(
            self.field,
            self.a * o.a + bb * self.field.c,
            self.a * o.b + self.b * o.a + bb * self.field.b,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "FieldElem":
        """Image under t -> b - t (the nontrivial Galois automorphism)."""
        if self.field.is_rational:
            return self
        return FieldElem(self.field, self.a + self.b * self.field.b, -self.b)

    def norm(self) -> Fraction:
        p = self * self.conjugate()
        return p.a

    def trace(self) -> Fraction:
        return (self + self.conjugate()).a

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        if self.field.is_rational:
            return FieldElem(self.field, 1 / self.a)
        n = self.norm()
        c = self.conjugate()
        return FieldElem(self.field, c.a / n, c.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = FieldElem(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.field != self.field:
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.field))

    def sqrt(self) -> "FieldElem | None":
        """A square root inside the same field, or None."""
        if self.is_zero():
            return self
        if self.field.is_rational:
            r = rational_sqrt(self.a)
            return None if r is None else FieldElem(self.field, r)
        # write self = p + q*s with s = 2t - b, s^2 = d
        d = self.field.discriminant
        B = self.field.b
        p = self.a + self.b * B / 2
        q = self.b / 2
        if q == 0:
            r = rational_sqrt(p)
            if r is not None:
                return FieldElem(self.field, r)
            # p = d * u^2 -> sqrt = u*s
            u = rational_sqrt(p / d)
            if u is None:
                return None
            return self._from_ps(0, u)
        disc = rational_sqrt(p * p - d * q * q)
        if disc is None:
            return None
        for r2 in ((p + disc) / 2, (p - disc) / 2):
            r = rational_sqrt(r2)
            if r is None or r == 0:
                continue
            s = q / (2 * r)
            cand = self._from_ps(r, s)
            if cand * cand == self:
                return cand
        return None

    def _from_ps(self, r, s) -> "FieldElem":
        # r + s*(2t - b)
        return FieldElem(self.field, r - s * self.field.b, 2 * s)

    def to_text(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*t"

    def __repr__(self):
        if self.field.is_rational:
            return str(self.a)
        return f"({self.a} + {self.b}*t)"

    def __str__(self):
        return self.to_text()

    def __complex__(self):
        if self.field.is_rational:
            return complex(float(self.a))
        d = float(self.field.discriminant)
        s = complex(0, (-d) ** 0.5) if d < 0 else complex(d ** 0.5)
        t = (float(self.field.b) + s) / 2
        return float(self.a) + float(self.b) * t


def omega() -> FieldElem:
    """Primitive cube root of unity in Q(omega)."""
    return QOMEGA.gen


def solve_quadratic(a: FieldElem, b: FieldElem, c: FieldElem) -> list[FieldElem] | None:
    """Roots of a*x^2 + b*x + c within a's field; None if they lie outside it."""
    if a.is_zero():
        if b.is_zero():
            raise ValueError("degenerate quadratic")
        return [-c / b]
    disc = b * b - 4 * a * c
    r = disc.sqrt()
    if r is None:
        return None
    roots = [(-b + r) / (2 * a), (-b - r) / (2 * a)]
    out = []
    for x in roots:
        if x not in out:
            out.append(x)
    return out
