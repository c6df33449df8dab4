"""Sparse multivariate polynomials over Q or a quadratic field."""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .numfield import QQ, FieldElem, NumberField, as_rational

DEFAULT_NAMES = ("x", "y", "z", "a", "b", "c", "d")


class MultiPoly:
    """Immutable polynomial: exponent tuple -> nonzero FieldElem."""

    __slots__ = ("nvars", "field", "terms", "names", "_hash")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[tuple[int, ...], object] | None = None,
        field: NumberField = QQ,
        names: Sequence[str] | None = None,
    ):
        self.nvars = nvars
        self.field = field
        self.names = tuple(names) if names else _default_names(nvars)
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has arity {len(exp)}, expected {nvars}")
            c = _to_elem(c, field)
            if not c.is_zero():
                clean[tuple(exp)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms, field, names) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.field = field
        p.names = names
        p.terms = terms
        p._hash = None
        return p

    # -- constructors

    @classmethod
    def const(cls, value, nvars: int, field: NumberField = QQ, names=None) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value}, field, names)

    @classmethod
    def var(cls, index: int, nvars: int, field: NumberField = QQ, names=None) -> "MultiPoly":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1}, field, names)

    @classmethod
    def gens(cls, nvars: int, field: NumberField = QQ, names=None) -> list["MultiPoly"]:
        return [cls.var(i, nvars, field, names) for i in range(nvars)]

    @classmethod
    def from_univariate(cls, coeffs: Sequence, var: int, nvars: int, field: NumberField = QQ, names=None):
        """Coefficients low degree first."""
        terms = {}
        for k, c in enumerate(coeffs):
            exp = [0] * nvars
            exp[var] = k
            terms[tuple(exp)] = c
        return cls(nvars, terms, field, names)

    @classmethod
    def parse(cls, text: str, names: Sequence[str], field: NumberField = QQ, gen: str = "t") -> "MultiPoly":
        """Parse a Python-style expression like 'x**4 + a*x**2*y**2 - 3/2' ('^' also accepted)."""
        return _ExprParser(tuple(names), field, gen).parse(text)

    # -- basics

    def _check(self, other: "MultiPoly"):
        if other.nvars != self.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars}")
        if other.field != self.field:
            if other.field.is_rational:
                return other.over(self.field)
            if self.field.is_rational:
                raise ValueError(f"field mismatch: {self.field} vs {other.field} (lift explicitly)")
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        return other

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return self._check(other)
        if isinstance(other, (int, Fraction, FieldElem)):
            return MultiPoly.const(other, self.nvars, self.field, self.names)
        return NotImplemented

    def over(self, field: NumberField) -> "MultiPoly":
        """Same polynomial viewed over a larger field (Q -> quadratic only)."""
        if field == self.field:
            return self
        if not self.field.is_rational:
            raise ValueError(f"cannot move {self.field} coefficients to {field}")
        return MultiPoly(self.nvars, {e: FieldElem(field, c.a) for e, c in self.terms.items()}, field, self.names)

    def rename(self, names: Sequence[str]) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, self.terms, self.field, tuple(names))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> FieldElem:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, self.field.zero())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            other = MultiPoly.const(other, self.nvars, self.field)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if self.field != other.field:
            if set(self.terms) != set(other.terms):
                return False
            return all(self.terms[e] == other.terms[e] for e in self.terms)
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly._raw(self.nvars, out, self.field, self.names)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()}, self.field, self.names)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not self.terms or not o.terms:
            return MultiPoly._raw(self.nvars, {}, self.field, self.names)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        out = {e: c for e, c in out.items() if not c.is_zero()}
        return MultiPoly._raw(self.nvars, out, self.field, self.names)

    __rmul__ = __mul__

    def scale(self, c) -> "MultiPoly":
        c = _to_elem(c, self.field)
        if c.is_zero():
            return MultiPoly._raw(self.nvars, {}, self.field, self.names)
        return MultiPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()}, self.field, self.names)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.nvars, self.field, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure

    def degree(self, var: int | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        return max(e[var] for e in self.terms)

    def is_homogeneous(self, variables: Iterable[int] | None = None) -> bool:
        vs = list(range(self.nvars)) if variables is None else list(variables)
        degs = {sum(e[v] for v in vs) for e in self.terms}
        return len(degs) <= 1

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def coefficients_in(self, var: int) -> list["MultiPoly"]:
        """[c_0, c_1, ...] with self = sum c_k * var^k (c_k free of var)."""
        d = self.degree(var)
        buckets: list[dict] = [dict() for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            k = e[var]
            e2 = e[:var] + (0,) + e[var + 1:]
            buckets[k][e2] = c
        return [MultiPoly._raw(self.nvars, b, self.field, self.names) for b in buckets] if d >= 0 else []

    def leading_coefficient(self, var: int) -> "MultiPoly":
        return self.coefficients_in(var)[-1]

    def leading_term(self) -> tuple[tuple[int, ...], FieldElem]:
        e = max(self.terms)
        return e, self.terms[e]

    def diff(self, var: int) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                e2 = e[:var] + (k - 1,) + e[var + 1:]
                out[e2] = c * k
        return MultiPoly._raw(self.nvars, out, self.field, self.names)

    def substitute(self, mapping: Mapping[int, object], nvars: int | None = None, names=None) -> "MultiPoly":
        """Replace variables by polynomials (or constants) and expand fully.

        Unmapped variables stay in place, so changing the arity requires
        mapping every variable.
        """
        target_n = self.nvars if nvars is None else nvars
        if target_n != self.nvars and len(mapping) != self.nvars:
            raise ValueError("changing arity requires substituting every variable")
        field = self.field
        for v in mapping.values():
            vf = v.field if isinstance(v, (MultiPoly, FieldElem)) else QQ
            if not vf.is_rational:
                if field.is_rational:
                    field = vf
                elif vf != field:
                    raise ValueError("field mismatch in substitution")
        if names is None:
            names = self.names if target_n == self.nvars else None
        names = tuple(names) if names else _default_names(target_n)
        images: dict[int, MultiPoly] = {}
        for i, v in mapping.items():
            if isinstance(v, MultiPoly):
                if v.nvars != target_n:
                    raise ValueError("substituted polynomial has wrong arity")
                images[i] = v.over(field).rename(names)
            else:
                images[i] = MultiPoly.const(v, target_n, field, names)
        powcache: dict[tuple[int, int], MultiPoly] = {}
        result = MultiPoly._raw(target_n, {}, field, names)
        for e, c in self.terms.items():
            kept = [0] * target_n
            term = None
            for i, k in enumerate(e):
                if not k:
                    continue
                if i in images:
                    key = (i, k)
                    if key not in powcache:
                        powcache[key] = images[i] ** k
                    term = powcache[key] if term is None else term * powcache[key]
                else:
                    kept[i] = k
            mono = MultiPoly._raw(target_n, {tuple(kept): _to_elem(c, field)}, field, names)
            result = result + (mono if term is None else mono * term)
        return result

    def evaluate(self, values: Sequence) -> FieldElem:
        """Evaluate at a full point (FieldElem, int or Fraction entries)."""
        if len(values) != self.nvars:
            raise ValueError("arity mismatch in evaluation")
        field = self.field
        for v in values:
            if isinstance(v, FieldElem) and not v.field.is_rational:
                if field.is_rational:
                    field = v.field
                elif v.field != field:
                    raise ValueError("field mismatch in evaluation")
        vals = [v if isinstance(v, FieldElem) else FieldElem(field, v) for v in values]
        vals = [FieldElem(field, v.a, v.b) if v.field != field else v for v in vals]
        total = field.zero()
        cache: dict = {}
        for e, c in self.terms.items():
            t = FieldElem(field, c.a, c.b) if c.field != field else c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = vals[i] ** k
                    t = t * cache[key]
            total = total + t
        return total

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()}, self.field, self.names)

    def conjugate(self) -> "MultiPoly":
        """Apply the Galois automorphism of the coefficient field."""
        return MultiPoly._raw(self.nvars, {e: c.conjugate() for e, c in self.terms.items()}, self.field, self.names)

    def divexact(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / other; raises ArithmeticError if other does not divide self."""
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_constant():
            return self.scale(other.constant_value().inverse())
        le, lc = other.leading_term()
        lc_inv = lc.inverse()
        rem = dict(self.terms)
        quot: dict = {}
        oterms = list(other.terms.items())
        while rem:
            e = max(rem)
            c = rem[e]
            if any(a < b for a, b in zip(e, le)):
                raise ArithmeticError("polynomial division is not exact")
            qe = tuple(a - b for a, b in zip(e, le))
            qc = c * lc_inv
            quot[qe] = qc
            for oe, oc in oterms:
                te = tuple(a + b for a, b in zip(qe, oe))
                s = rem.get(te)
                v = -(qc * oc) if s is None else s - qc * oc
                if v.is_zero():
                    rem.pop(te, None)
                else:
                    rem[te] = v
        return MultiPoly._raw(self.nvars, quot, self.field, self.names)

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.divexact(self)
        except ArithmeticError:
            return False
        return True

    def content_free_monic(self, var: int) -> "MultiPoly":
        """Scale so that the leading coefficient in ``var`` (if constant) is 1."""
        lc = self.leading_coefficient(var)
        if lc.is_constant():
            return self.scale(lc.constant_value().inverse())
        return self

    def univariate_coeffs(self, var: int) -> list[FieldElem]:
        """Field coefficients low degree first; the polynomial must involve only ``var``."""
        extra = self.variables() - {var}
        if extra:
            raise ValueError(f"polynomial is not univariate in variable {var}")
        d = self.degree(var)
        out = [self.field.zero() for _ in range(d + 1)]
        for e, c in self.terms.items():
            out[e[var]] = c
        return out

    # -- printing

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(self.names, e) if k
            )
            cs = _coeff_str(c, self.field)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coeff_str(c: FieldElem, field: NumberField) -> str:
    if c.b == 0:
        return str(c.a)
    return f"({c.a}+{c.b}*t)"


def _default_names(n: int) -> tuple[str, ...]:
    if n <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:n]
    return tuple(f"v{i}" for i in range(n))


def _to_elem(c, field: NumberField) -> FieldElem:
    if isinstance(c, FieldElem):
        if c.field == field:
            return c
        if c.field.is_rational or c.b == 0:
            return FieldElem(field, c.a)
        raise ValueError(f"field mismatch: {c.field} vs {field}")
    return FieldElem(field, as_rational(c))


class _ExprParser:
    """Tiny arithmetic-expression parser built on the Python AST (no eval)."""

    def __init__(self, names, field, gen):
        self.names = names
        self.field = field
        self.gen = gen
        self.n = len(names)

    def parse(self, text: str) -> MultiPoly:
        text = text.replace("^", "**")
        tree = ast.parse(text, mode="eval")
        return self._visit(tree.body)

    def _visit(self, node) -> MultiPoly:
        if isinstance(node, ast.BinOp):
            left, right = self._visit(node.left), node.right
            if isinstance(node.op, ast.Pow):
                if not isinstance(right, ast.Constant) or not isinstance(right.value, int):
                    raise ValueError("exponents must be integer literals")
                return left ** right.value
            r = self._visit(right)
            if isinstance(node.op, ast.Add):
                return left + r
            if isinstance(node.op, ast.Sub):
                return left - r
            if isinstance(node.op, ast.Mult):
                return left * r
            if isinstance(node.op, ast.Div):
                if not r.is_constant():
                    raise ValueError("division by a non-constant")
                return left.scale(r.constant_value().inverse())
            raise ValueError(f"unsupported operator {type(node.op).__name__}")
        if isinstance(node, ast.UnaryOp):
            v = self._visit(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
            raise ValueError("unsupported unary operator")
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MultiPoly.const(node.value, self.n, self.field, self.names)
        if isinstance(node, ast.Name):
            if node.id in self.names:
                return MultiPoly.var(self.names.index(node.id), self.n, self.field, self.names)
            if node.id == self.gen and not self.field.is_rational:
                return MultiPoly.const(self.field.gen, self.n, self.field, self.names)
            raise ValueError(f"unknown symbol {node.id!r}")
        raise ValueError(f"unsupported syntax: {ast.dump(node)}")


# -- fixture text format

_HEADER = re.compile(r"^poly\s+(\d+)\s+(Q|Q\(t\^2=(\S+)\*t\+(\S+)\))\s*$")
_RAT = r"-?\d+(?:/\d+)?"
_COEFF = re.compile(rf"^({_RAT})(?:\+({_RAT})\*t)?$")


def format_poly(p: MultiPoly) -> str:
    """Text form: header line then '<coeff> : e1 ... ek' per term (descending exponents)."""
    lines = [f"poly {p.nvars} {p.field.header()}"]
    for e in sorted(p.terms, reverse=True):
        lines.append(f"{p.terms[e].to_text()} : {' '.join(map(str, e))}")
    return "\n".join(lines) + "\n"


def parse_poly(text: str, names: Sequence[str] | None = None) -> MultiPoly:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError("empty polynomial text")
    m = _HEADER.match(lines[0])
    if not m:
        raise ValueError(f"line 1: bad header {lines[0]!r}")
    n = int(m.group(1))
    if m.group(2) == "Q":
        field = QQ
    else:
        b, c = as_rational(m.group(3)), as_rational(m.group(4))
        field = _known_field(b, c)
    terms = {}
    for lineno, ln in enumerate(lines[1:], start=2):
        if ":" not in ln:
            raise ValueError(f"line {lineno}: expected '<coeff> : exponents'")
        cs, es = ln.split(":", 1)
        cm = _COEFF.match(cs.strip())
        if not cm:
            raise ValueError(f"line {lineno}: bad coefficient {cs.strip()!r}")
        a = as_rational(cm.group(1))
        b = as_rational(cm.group(2)) if cm.group(2) else Fraction(0)
        if b and field.is_rational:
            raise ValueError(f"line {lineno}: t-coefficient over Q")
        try:
            exp = tuple(int(x) for x in es.split())
        except ValueError:
            raise ValueError(f"line {lineno}: bad exponent vector") from None
        if len(exp) != n or any(k < 0 for k in exp):
            raise ValueError(f"line {lineno}: exponent vector must have {n} nonnegative entries")
        if exp in terms:
            raise ValueError(f"line {lineno}: repeated exponent vector")
        terms[exp] = FieldElem(field, a, b)
    return MultiPoly(n, terms, field, names)


def _known_field(b, c) -> NumberField:
    from . import numfield

    for f in (numfield.QOMEGA, numfield.QSQRT5, numfield.QSQRTM3, numfield.QI):
        if f.b == b and f.c == c:
            return f
    return NumberField(b, c)
