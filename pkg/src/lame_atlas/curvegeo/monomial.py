"""The 24 signed coordinate permutations of the plane, modulo the global sign."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from ..exactalg import MultiPoly
from ..permgrp import Perm, PermGroup
from .families import ProjPoint, X, Y, Z


@dataclass(frozen=True)
class MonomialMap:
    """v -> M v with (M v)_i = signs[i] * v[perm[i]]; normalized so signs[0] = 1."""

    perm: tuple[int, int, int]
    signs: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2] or any(s not in (1, -1) for s in self.signs):
            raise ValueError("bad monomial map")
        if self.signs[0] == -1:
            object.__setattr__(self, "signs", tuple(-s for s in self.signs))

    def matrix(self) -> list[list[int]]:
        m = [[0] * 3 for _ in range(3)]
        for i in range(3):
            m[i][self.perm[i]] = self.signs[i]
        return m

    def compose(self, other: "MonomialMap") -> "MonomialMap":
        """self after other: v -> self(other(v))."""
        # (self(other v))_i = s_i * (other v)[p_i] = s_i * t_{p_i} * v[q[p_i]]
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(3))
        return MonomialMap(perm, signs)

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        c = p.coords
        return ProjPoint([c[self.perm[i]] * self.signs[i] for i in range(3)])

    def apply_poly(self, f: MultiPoly) -> MultiPoly:
        """f(M v); other variables untouched."""
        v = [MultiPoly.var(k, f.nvars, f.field, f.names) for k in (X, Y, Z)]
        return f.substitute({i: v[self.perm[i]].scale(self.signs[i]) for i in range(3)})

    def is_even(self) -> bool:
        return Perm(self.perm).sign() == 1

    def __str__(self):
        names = "xyz"
        return "(" + ",".join(("-" if s < 0 else "") + names[p] for p, s in zip(self.perm, self.signs)) + ")"


@lru_cache(maxsize=None)
def all_monomial_maps() -> tuple[MonomialMap, ...]:
    out = []
    for perm in permutations(range(3)):
        for s1, s2 in product((1, -1), repeat=2):
            out.append(MonomialMap(perm, (1, s1, s2)))
    return tuple(out)


def as_perm(m: MonomialMap) -> Perm:
    """Left multiplication on the 24 classes: a faithful permutation representation."""
    maps = all_monomial_maps()
    pos = {mm: i for i, mm in enumerate(maps)}
    return Perm([pos[m.compose(other)] for other in maps])


@lru_cache(maxsize=None)
def _perm_table() -> dict[Perm, MonomialMap]:
    return {as_perm(m): m for m in all_monomial_maps()}


def as_map(p: Perm) -> MonomialMap:
    return _perm_table()[p]


def monomial_group() -> PermGroup:
    """All 24 classes as a permutation group on 24 points (isomorphic to S4)."""
    maps = all_monomial_maps()
    return PermGroup.from_elements([as_perm(m) for m in maps], len(maps), name="monomial")


def preserves(m: MonomialMap, f: MultiPoly) -> bool:
    """f(M v) = c f(v) for a constant c."""
    g = m.apply_poly(f)
    e, lc = f.leading_term()
    if e not in g.terms:
        return False
    return g == f.scale(g.terms[e] / lc)


def stabilizer_maps(f: MultiPoly) -> list[MonomialMap]:
    return [m for m in all_monomial_maps() if preserves(m, f)]


def monomial_stabilizer(f) -> PermGroup:
    """Monomial classes fixing f up to a constant, as a permutation group on the 24 classes."""
    f = getattr(f, "poly", f)
    maps = stabilizer_maps(f)
    return PermGroup.from_elements([as_perm(m) for m in maps], 24, name="stabilizer")


def even_maps() -> list[MonomialMap]:
    return [m for m in all_monomial_maps() if m.is_even()]


def point_orbits(points, maps) -> list[list[ProjPoint]]:
    """Orbit partition of a finite point set; raises if the maps do not preserve the set."""
    points = list(points)
    pset = set(points)
    seen: set[ProjPoint] = set()
    out = []
    for p in points:
        if p in seen:
            continue
        orbit = [p]
        seen.add(p)
        for q in orbit:
            for m in maps:
                r = m.apply_point(q)
                if r not in pset:
                    raise ValueError(f"{m} sends {q} outside the point set")
                if r not in seen:
                    seen.add(r)
                    orbit.append(r)
        out.append(orbit)
    return out
