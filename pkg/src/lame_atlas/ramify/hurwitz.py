"""Ramification terms, the four-point equation for 12(g-1) automorphisms, and triples."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

# sum of the four terms for a cover with 12(g-1) automorphisms
LAME_TARGET = Fraction(-11, 6)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True, order=True)
class RamPoint:
    """Ramification group Z_p^t semidirect Z_n at one branch point."""

    n: int
    t: int = 0
    p: int = 0

    def __post_init__(self):
        if self.n < 1 or self.t < 0:
            raise ValueError("need n >= 1 and t >= 0")
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.t > 0:
            if not self.p:
                raise ValueError("wild ramification needs a prime p")
            if (self.p ** self.t - 1) % self.n:
                raise ValueError(f"n={self.n} does not divide p^t-1={self.p ** self.t - 1}")
        elif self.p and gcd(self.n, self.p) != 1:
            raise ValueError(f"tame index {self.n} is divisible by p={self.p}")
        if self.t == 0 and self.n == 1:
            raise ValueError("a branch point needs n >= 2 or t >= 1")

    @property
    def tame(self) -> bool:
        return self.t == 0

    def __str__(self):
        return f"{self.n}" if self.tame else f"{self.p}^{self.t}:{self.n}"


@dataclass(frozen=True)
class RamType:
    points: tuple[RamPoint, ...]
    p: int = 0

    @property
    def tame(self) -> bool:
        return all(pt.tame for pt in self.points)

    def indices(self) -> tuple[int, ...]:
        return tuple(pt.n for pt in self.points)

    def __str__(self):
        kind = "tame" if self.tame else "wild"
        return f"{kind} (" + ",".join(str(pt) for pt in self.points) + ")"


def rh_term(pt: RamPoint) -> Fraction:
    """(1/n)(1 - 2/p^t); tame points give -1/n."""
    q = pt.p ** pt.t if pt.t else 1
    return Fraction(1, pt.n) * (1 - Fraction(2, q))


def solve_rh(p: int, target: Fraction = LAME_TARGET, npoints: int = 4) -> list[RamType]:
    """All ramification types with ``npoints`` branch points whose terms sum to ``target``.

    Every term is at least -1/2 (tame needs n >= 2, wild terms are >= 0).  So
    each term is at most target + (npoints-1)/2, which for the default target
    is -1/3 < 0: all points are tame with n <= 3 and the search is finite.
    """
    if p and not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    bound = target + Fraction(npoints - 1, 2)
    if bound >= 0:
        raise ValueError("pruning bound needs target + (npoints-1)/2 < 0")
    n_max = int(-1 / bound)
    allowed = [n for n in range(2, n_max + 1) if not p or n % p]
    out = []
    for combo in combinations_with_replacement(allowed, npoints):
        pts = tuple(RamPoint(n, 0, p) for n in combo)
        if sum(rh_term(pt) for pt in pts) == target:
            out.append(RamType(pts, p))
    return out


def _all_points(p: int, n_max: int, t_max: int) -> list[RamPoint]:
    pts = [RamPoint(n, 0, p) for n in range(2, n_max + 1) if not p or n % p]
    if p:
        for t in range(1, t_max + 1):
            q = p ** t - 1
            pts += [RamPoint(n, t, p) for n in range(1, min(q, n_max) + 1) if q % n == 0]
    return pts


def brute_force_solutions(p: int, n_max: int = 1000, t_max: int = 6,
                          target: Fraction = LAME_TARGET) -> list[RamType]:
    """Unpruned check of solve_rh over n <= n_max and t <= t_max (meet in the middle).

    Pair sums are bucketed by a rounded float; every candidate quadruple is
    then confirmed in exact arithmetic, so rounding can only cost speed.
    """
    pts = sorted(_all_points(p, n_max, t_max))
    terms = [rh_term(pt) for pt in pts]
    approx = [float(x) for x in terms]
    scale = 1e7
    buckets: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i in range(len(pts)):
        ai = approx[i]
        for j in range(i, len(pts)):
            buckets[round((ai + approx[j]) * scale)].append((i, j))
    goal = float(target)
    out = set()
    for key, pairs in buckets.items():
        want = round(goal * scale) - key
        for near in (want - 1, want, want + 1):
            for k, m in buckets.get(near, ()):
                for i, j in pairs:
                    if j <= k and terms[i] + terms[j] + terms[k] + terms[m] == target:
                        out.add((pts[i], pts[j], pts[k], pts[m]))
    return [RamType(c, p) for c in sorted(out)]


def tame_order(g: int, indices) -> Fraction:
    """|G| from 2g-2 = |G|(-2 + sum(1 - 1/n_i)) for a genus-0 quotient."""
    if any(n < 2 for n in indices):
        raise ValueError("branch indices must be at least 2")
    denom = -2 + sum(1 - Fraction(1, n) for n in indices)
    if denom <= 0:
        raise ValueError(f"type {tuple(indices)} is not hyperbolic (curvature term {denom})")
    return (2 * g - 2) / denom


def three_point_explore(g: int, n_max: int = 100) -> list[tuple[tuple[int, int, int], Fraction]]:
    """All hyperbolic triples a <= b <= c <= n_max with the group order they force."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    out = []
    for a in range(2, n_max + 1):
        for b in range(a, n_max + 1):
            for c in range(b, n_max + 1):
                if a * b + b * c + a * c < a * b * c:
                    out.append(((a, b, c), Fraction((2 * g - 2) * a * b * c, a * b * c - a * b - b * c - a * c)))
    return out
