"""Finite permutation groups held as fully enumerated element tables."""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from math import factorial

from .perm import MAX_DEGREE, Perm

DEFAULT_ORDER_CAP = 10_000


class OrderCapExceeded(RuntimeError):
    pass


class PermGroup:
    """Group generated by permutations of a common degree.

    Elements are enumerated breadth-first from the identity (generators applied
    on the right), which fixes a deterministic element order; index 0 is the
    identity.
    """

    def __init__(self, gens, degree: int | None = None, name: str | None = None,
                 order_cap: int = DEFAULT_ORDER_CAP, _elements=None):
        gens = list(gens)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = gens[0].degree
        if degree > MAX_DEGREE:
            raise ValueError(f"degree {degree} exceeds cap {MAX_DEGREE}")
        for g in gens:
            if g.degree != degree:
                raise ValueError("generators of different degrees")
        self.degree = degree
        self.gens = [g for g in gens if not g.is_identity()]
        self.name = name
        self.order_cap = order_cap
        if _elements is not None:
            self.__dict__["elements"] = tuple(_elements)

    @classmethod
    def from_elements(cls, elements, degree: int, name: str | None = None) -> "PermGroup":
        """Wrap a known closed element list (identity first), picking a small generating set."""
        elements = list(elements)
        ident = Perm.identity(degree)
        if elements[0] != ident:
            elements.remove(ident)
            elements.insert(0, ident)
        gens = _greedy_generators(elements, degree)
        return cls(gens, degree, name, _elements=elements)

    # -- enumeration

    @cached_property
    def elements(self) -> tuple[Perm, ...]:
        ident = Perm.identity(self.degree)
        seen = {ident}
        out = [ident]
        i = 0
        while i < len(out):
            x = out[i]
            for g in self.gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    if len(out) > self.order_cap:
                        raise OrderCapExceeded(f"group order exceeds cap {self.order_cap}")
            i += 1
        if factorial(self.degree) % len(out):
            raise AssertionError("group order does not divide n!")
        return tuple(out)

    @cached_property
    def index(self) -> dict[Perm, int]:
        return {p: i for i, p in enumerate(self.elements)}

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self.index

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} order={self.order()} degree={self.degree}>"

    @cached_property
    def table(self) -> list[list[int]]:
        """table[i][j] = index of elements[i] * elements[j]."""
        idx = self.index
        els = self.elements
        return [[idx[a * b] for b in els] for a in els]

    @cached_property
    def inv(self) -> list[int]:
        t = self.table
        return [row.index(0) for row in t]

    @cached_property
    def orders(self) -> list[int]:
        return [p.order() for p in self.elements]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def power(self, i: int, k: int) -> int:
        r = 0
        t = self.table
        for _ in range(k % self.orders[i]):
            r = t[r][i]
        return r

    def closure(self, idxs) -> frozenset[int]:
        """Indices of the subgroup generated by the given element indices."""
        gens = [g for g in set(idxs) if g != 0]
        seen = {0}
        frontier = [0]
        t = self.table
        while frontier:
            nxt = []
            for x in frontier:
                row = t[x]
                for g in gens:
                    y = row[g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def subgroup(self, idxs, name: str | None = None) -> "PermGroup":
        """PermGroup on the given closed index set (kept in this group's element order)."""
        idxs = sorted(idxs)
        return PermGroup.from_elements([self.elements[i] for i in idxs], self.degree, name)

    def subgroup_generated(self, perms, name: str | None = None) -> "PermGroup":
        return self.subgroup(self.closure(self.index[p] for p in perms), name)

    def indices_of(self, H: "PermGroup") -> frozenset[int]:
        try:
            return frozenset(self.index[p] for p in H.elements)
        except KeyError:
            raise ValueError("H is not contained in G") from None

    def is_abelian(self) -> bool:
        t = self.table
        gi = [self.index[g] for g in self.gens]
        return all(t[a][b] == t[b][a] for a in gi for b in gi)

    @cached_property
    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.orders).items()))

    @cached_property
    def conjugacy_classes(self) -> list[frozenset[int]]:
        n = len(self)
        t, inv = self.table, self.inv
        seen = [False] * n
        classes = []
        for x in range(n):
            if seen[x]:
                continue
            cls = {t[t[g][x]][inv[g]] for g in range(n)}
            for y in cls:
                seen[y] = True
            classes.append(frozenset(cls))
        return classes

    def small_generators(self) -> list[Perm]:
        return _greedy_generators(list(self.elements), self.degree)


def _greedy_generators(elements: list[Perm], degree: int) -> list[Perm]:
    """Greedy generating set: scan by descending element order, keep what enlarges the span."""
    ident = Perm.identity(degree)
    if len(elements) <= 1:
        return []
    order = sorted(range(len(elements)), key=lambda i: (-elements[i].order(), i))
    gens: list[Perm] = []
    span = {ident}
    target = len(elements)
    for i in order:
        p = elements[i]
        if p in span:
            continue
        gens.append(p)
        span = _span(gens, ident)
        if len(span) == target:
            break
    return gens


def _span(gens, ident) -> set:
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# -- constructors


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    _check_degree(n)
    if n == 1:
        return PermGroup([], 1, name="Z1")
    return PermGroup([Perm.from_cycles([list(range(n))], n)], n, name=f"Z{n}")


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n: rotation then reflection; D2 acts on 4 points."""
    if n < 2:
        raise ValueError("dihedral group needs n >= 2")
    if n == 2:
        return PermGroup([Perm.from_cycles([[0, 1]], 4), Perm.from_cycles([[2, 3]], 4)], 4, name="D2")
    _check_degree(n)
    rot = Perm([(i + 1) % n for i in range(n)])
    refl = Perm([(-i) % n for i in range(n)])
    return PermGroup([rot, refl], n, name=f"D{n}")


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("symmetric group needs n >= 1")
    _check_degree(n)
    if n == 1:
        return PermGroup([], 1, name="S1")
    if n == 2:
        return PermGroup([Perm([1, 0])], 2, name="S2")
    return PermGroup([Perm.from_cycles([list(range(n))], n), Perm.from_cycles([[0, 1]], n)], n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("alternating group needs n >= 1")
    _check_degree(n)
    if n < 3:
        return PermGroup([], n, name=f"A{n}")
    gens = [Perm.from_cycles([[0, 1, 2]], n)]
    if n > 3:
        long = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(Perm.from_cycles([long], n))
    return PermGroup(gens, n, name=f"A{n}")


def direct_product(A: PermGroup, B: PermGroup, name: str | None = None) -> PermGroup:
    n = A.degree + B.degree
    _check_degree(n)
    gens = [g.extend(n, 0) for g in A.gens] + [g.extend(n, A.degree) for g in B.gens]
    label = name or (f"{A.name}x{B.name}" if A.name and B.name else None)
    return PermGroup(gens, n, name=label)


def make_group(kind: str, *args) -> PermGroup:
    """Dispatch by name: 'cyclic', 'dihedral', 'alternating', 'symmetric', 'direct_product'."""
    table = {
        "cyclic": cyclic,
        "dihedral": dihedral,
        "alternating": alternating,
        "symmetric": symmetric,
        "direct_product": direct_product,
    }
    try:
        return table[kind](*args)
    except KeyError:
        raise ValueError(f"unknown group kind {kind!r}") from None


def _check_degree(n: int):
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds cap {MAX_DEGREE}")
