"""Resultants, univariate gcds and perfect-square detection for binary forms."""

from __future__ import annotations

from .numfield import FieldElem
from .poly import MultiPoly


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: int) -> list[list[MultiPoly]]:
    """Rows: deg_g shifted copies of f's coefficients, then deg_f copies of g's."""
    fc = f.coefficients_in(var)[::-1]
    gc = g.coefficients_in(var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = MultiPoly.const(0, f.nvars, f.field, f.names)
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: list[list[MultiPoly]]) -> MultiPoly:
    """Fraction-free determinant; every intermediate division is exact."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    M = [row[:] for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return M[k][k] * 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, n):
                v = row_i[j] * pivot - mik * row_k[j]
                if prev is not None and not v.is_zero():
                    v = v.divexact(prev)
                row_i[j] = v
            row_i[k] = pivot * 0
        prev = pivot
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f: MultiPoly, g: MultiPoly, var: int) -> MultiPoly:
    """Sylvester resultant of f and g with respect to ``var``.

    The result is zero exactly when f and g share a factor of positive degree in
    ``var`` over the fraction field of the other variables.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if not 0 <= var < f.nvars:
        raise ValueError(f"variable index {var} out of range")
    g = f._check(g)
    m, n = f.degree(var), g.degree(var)
    if m == 0 and n == 0:
        return MultiPoly.const(1, f.nvars, f.field, f.names)
    if n == 0:
        return g ** m
    if m == 0:
        return f ** n
    return bareiss_determinant(sylvester_matrix(f, g, var))


def discriminant(f: MultiPoly, var: int) -> MultiPoly:
    """Resultant of f and its derivative (no leading-coefficient normalisation)."""
    return resultant(f, f.diff(var), var)


# -- univariate arithmetic over the coefficient field, coefficient lists low-first


def _trim(c: list[FieldElem]) -> list[FieldElem]:
    while c and c[-1].is_zero():
        c.pop()
    return c


def poly_divmod(a: list[FieldElem], b: list[FieldElem]) -> tuple[list[FieldElem], list[FieldElem]]:
    a, b = _trim(list(a)), _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if len(a) < len(b):
        return [], a
    inv = b[-1].inverse()
    q = [b[0] * 0] * (len(a) - len(b) + 1)
    r = list(a)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv
        q[k] = c
        if c.is_zero():
            continue
        for i, bc in enumerate(b):
            r[k + i] = r[k + i] - c * bc
    return _trim(q), _trim(r[: len(b) - 1])


def poly_gcd_coeffs(a: list[FieldElem], b: list[FieldElem]) -> list[FieldElem]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def gcd_univariate(f: MultiPoly, g: MultiPoly, var: int | None = None) -> MultiPoly:
    """Monic gcd of two univariate polynomials over their coefficient field."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials")
    g = f._check(g)
    if var is None:
        vs = f.variables() | g.variables()
        if len(vs) > 1:
            raise ValueError("gcd_univariate needs univariate input")
        var = vs.pop() if vs else 0
    fc = f.univariate_coeffs(var) if not f.is_zero() else []
    gc = g.univariate_coeffs(var) if not g.is_zero() else []
    h = poly_gcd_coeffs(fc, gc)
    return MultiPoly.from_univariate(h, var, f.nvars, f.field, f.names)


def squarefree_part(f: MultiPoly, var: int) -> MultiPoly:
    """f / gcd(f, f') for a univariate f, made monic."""
    g = gcd_univariate(f, f.diff(var), var)
    q = f.divexact(g)
    return q.content_free_monic(var)


def roots_in_field(f: MultiPoly, var: int) -> list[FieldElem]:
    """Roots of a univariate polynomial lying in its coefficient field.

    Rational roots come from the rational-root test on the rational part;
    remaining quadratic factors are solved with the quadratic formula.  Roots
    of irreducible factors of degree > 2 are not reported.
    """
    from .numfield import rational_roots, solve_quadratic

    coeffs = f.univariate_coeffs(var)
    field = f.field
    roots: list[FieldElem] = []
    if all(c.b == 0 for c in coeffs):
        for r in rational_roots([c.a for c in coeffs]):
            roots.append(FieldElem(field, r))
        rest = coeffs
        for r in roots:
            rest, _ = poly_divmod(rest, [-r, field.one()])
            while True:
                q, rem = poly_divmod(rest, [-r, field.one()])
                if rem:
                    break
                rest = q
        if len(rest) == 3:
            extra = solve_quadratic(rest[2], rest[1], rest[0])
            if extra:
                roots.extend(x for x in extra if x not in roots)
        return roots
    sq = _trim(list(squarefree_part(f, var).univariate_coeffs(var)))
    if len(sq) == 2:
        return [-sq[0] / sq[1]]
    if len(sq) == 3:
        return solve_quadratic(sq[2], sq[1], sq[0]) or []
    return []


# -- perfect squares


def _sqrt_monic(g: MultiPoly, var: int) -> MultiPoly | None:
    coeffs = g.coefficients_in(var)
    d = len(coeffs) - 1
    if d % 2:
        return None
    k = d // 2
    # q = sum_{i<=k} q_i var^i with q_k = 1, found top-down
    q = [None] * (k + 1)
    q[k] = MultiPoly.const(1, g.nvars, g.field, g.names)
    for j in range(1, k + 1):
        acc = coeffs[d - j]
        for i in range(1, j):
            acc = acc - q[k - i] * q[k - j + i]
        q[k - j] = acc.scale(FieldElem(g.field, 1) / 2)
    xv = MultiPoly.var(var, g.nvars, g.field, g.names)
    root = MultiPoly.const(0, g.nvars, g.field, g.names)
    for i, c in enumerate(q):
        root = root + c * xv ** i
    return root if root * root == g else None


def perfect_square_form(f: MultiPoly, xvar: int = 0, yvar: int = 1) -> tuple[MultiPoly, MultiPoly] | None:
    """Write a binary form f(x, y) as c * q^2, or return None.

    Other variables act as parameters.  The scalar c is the leading
    coefficient in x after the largest even power of y is split off, and q is
    monic in x; if c does not divide f exactly no decomposition is reported.
    """
    if f.is_zero():
        raise ValueError("zero form")
    if not f.is_homogeneous([xvar, yvar]):
        raise ValueError("form is not homogeneous in the two variables")
    deg = next(iter(f.terms))[xvar] + next(iter(f.terms))[yvar]
    if deg % 2:
        raise ValueError("form has odd degree")
    m = min(e[yvar] for e in f.terms)
    if m % 2:
        return None
    yv = MultiPoly.var(yvar, f.nvars, f.field, f.names)
    h = f.divexact(yv ** m) if m else f
    c = h.leading_coefficient(xvar)
    if c.degree(yvar) > 0:
        return None
    try:
        g = h.divexact(c)
    except ArithmeticError:
        return None
    root = _sqrt_monic(g, xvar)
    if root is None:
        return None
    if m:
        root = root * yv ** (m // 2)
    return c, root


def primitive_part(f: MultiPoly, var: int) -> MultiPoly:
    """Divide out the monomial factor and, when the coefficients with respect to
    ``var`` are univariate in a common variable, their gcd."""
    if f.is_zero():
        return f
    low = [min(e[i] for e in f.terms) for i in range(f.nvars)]
    if any(low):
        mono = MultiPoly(f.nvars, {tuple(low): 1}, f.field, f.names)
        f = f.divexact(mono)
    coeffs = [c for c in f.coefficients_in(var) if not c.is_zero()]
    others = set().union(*(c.variables() for c in coeffs))
    if len(others) == 1:
        (w,) = others
        g = coeffs[0]
        for c in coeffs[1:]:
            g = gcd_univariate(g, c, w)
            if g.is_constant():
                break
        if not g.is_constant():
            f = f.divexact(g)
    lc = f.leading_term()[1]
    return f.scale(lc.inverse())
