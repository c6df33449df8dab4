"""Homomorphisms, monomorphism enumeration, coset actions and isomorphism tests."""

from __future__ import annotations

import logging
from collections import Counter

from .group import PermGroup
from .perm import Perm
from .structure import centralizer_idx, derived_idx, prime_divisors, sylow_idx

log = logging.getLogger(__name__)


class Hom:
    """Homomorphism given by generator images, with the full element table."""

    __slots__ = ("source", "target", "gen_images", "table")

    def __init__(self, source: PermGroup, target: PermGroup, gen_images: dict[Perm, Perm], table: list[int]):
        self.source = source
        self.target = target
        self.gen_images = gen_images
        self.table = table

    @classmethod
    def from_images(cls, source: PermGroup, target: PermGroup, images: dict[Perm, Perm]) -> "Hom":
        gens = [(source.index[s], target.index[t]) for s, t in images.items()]
        table = _extend(source, target, gens, injective=False)
        if table is None:
            raise ValueError("generator images do not define a homomorphism")
        if source.closure(s for s, _ in gens) != frozenset(range(len(source))):
            raise ValueError("images are not given on a generating set")
        return cls(source, target, dict(images), table)

    def __call__(self, p: Perm) -> Perm:
        return self.target.elements[self.table[self.source.index[p]]]

    def image_idx(self) -> frozenset[int]:
        return frozenset(self.table)

    def image(self, name: str | None = None) -> PermGroup:
        return self.target.subgroup(self.image_idx(), name=name)

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def verify(self) -> bool:
        """Check the homomorphism property on the full multiplication table."""
        st, tt, tab = self.source.table, self.target.table, self.table
        n = len(tab)
        return all(tab[st[i][j]] == tt[tab[i]][tab[j]] for i in range(n) for j in range(n))

    def gen_image_key(self) -> tuple:
        return tuple(self.table[self.source.index[g]] for g in self.gen_images)

    def __repr__(self):
        pairs = ", ".join(f"{s}->{t}" for s, t in self.gen_images.items())
        return f"Hom({pairs})"


def _extend(U: PermGroup, G: PermGroup, gens: list[tuple[int, int]], injective: bool) -> list[int] | None:
    """Table of the map on <gens> determined by generator images, or None if inconsistent.

    Entries outside the generated subgroup are -1.
    """
    ut, gt = U.table, G.table
    table = [-1] * len(U)
    table[0] = 0
    used = {0} if injective else None
    queue = [0]
    for x in queue:
        fx = table[x]
        row_u, row_g = ut[x], gt[fx]
        for s, t in gens:
            y = row_u[s]
            img = row_g[t]
            cur = table[y]
            if cur == -1:
                if injective:
                    if img in used:
                        return None
                    used.add(img)
                table[y] = img
                queue.append(y)
            elif cur != img:
                return None
    return table


def _source_generators(U: PermGroup, first: Perm | None = None) -> list[int]:
    """Irredundant generators of U by descending element order, optionally led by ``first``."""
    cand = sorted((U.index[g] for g in (U.gens or [])), key=lambda i: (-U.orders[i], i))
    if first is not None:
        cand = [U.index[first]] + [c for c in cand if c != U.index[first]]
    gens: list[int] = []
    span = frozenset([0])
    for c in cand:
        if c in span:
            continue
        gens.append(c)
        span = U.closure(gens)
    if len(span) != len(U):
        raise AssertionError("generator list does not generate U")
    return gens


def monomorphisms(U: PermGroup, G: PermGroup, anchor: tuple[Perm, Perm] | None = None,
                  limit: int | None = None) -> list[Hom]:
    """All injective homomorphisms U -> G, optionally with ``anchor[0] -> anchor[1]`` pinned.

    Backtracks over generator images (generators by descending order), keeping
    only candidates of the right element order and extending the partial map
    over the subgroup generated so far, which checks every relation.
    """
    if len(G) % len(U):
        return []
    if len(U) == 1:
        return [Hom(U, G, {}, [0])]
    fixed = None
    if anchor is not None:
        u, g = anchor
        if u.order() != g.order():
            log.warning("anchor orders differ: %s has order %d, %s has order %d", u, u.order(), g, g.order())
            return []
        fixed = G.index[g]
    gens = _source_generators(U, anchor[0] if anchor else None)
    by_order: dict[int, list[int]] = {}
    for i, o in enumerate(G.orders):
        by_order.setdefault(o, []).append(i)
    cands = [by_order.get(U.orders[s], []) for s in gens]
    if fixed is not None:
        cands[0] = [fixed]
    results: list[Hom] = []
    assigned: list[tuple[int, int]] = []
    src_perms = [U.elements[s] for s in gens]

    def rec(k: int) -> bool:
        if k == len(gens):
            table = _extend(U, G, assigned, injective=True)
            images = {src_perms[i]: G.elements[t] for i, (_, t) in enumerate(assigned)}
            results.append(Hom(U, G, images, table))
            return limit is not None and len(results) >= limit
        s = gens[k]
        for t in cands[k]:
            assigned.append((s, t))
            if _extend(U, G, assigned, injective=True) is not None:
                if rec(k + 1):
                    return True
            assigned.pop()
        return False

    rec(0)
    return results


def coset_action(G: PermGroup, H: PermGroup) -> Hom:
    """Action of G on the left cosets gH; the target is the image permutation group."""
    hs = G.indices_of(H)
    if G.closure(hs) != hs:
        raise ValueError("H is not a subgroup of G")
    t = G.table
    coset_of = [-1] * len(G)
    reps = []
    for g in range(len(G)):
        if coset_of[g] == -1:
            c = len(reps)
            reps.append(g)
            for h in hs:
                coset_of[t[g][h]] = c
    k = len(reps)
    gen_imgs = {}
    for gp in G.gens or []:
        gi = G.index[gp]
        gen_imgs[gp] = Perm([coset_of[t[gi][r]] for r in reps])
    target = PermGroup(list(gen_imgs.values()), k, name=f"image on {k} cosets")
    gens = [(G.index[s], target.index[p]) for s, p in gen_imgs.items()]
    table = _extend(G, target, gens, injective=False)
    if table is None or -1 in table:
        raise AssertionError("coset action is not a homomorphism")
    return Hom(G, target, gen_imgs, table)


# -- isomorphism


def abelian_invariants_of_quotient(G: PermGroup, N: frozenset[int]) -> tuple:
    """Histogram of coset orders in G/N (determines an abelian quotient up to isomorphism)."""
    t = G.table
    hist = Counter()
    for g in range(len(G)):
        k, x = 1, g
        while x not in N:
            x = t[x][g]
            k += 1
        hist[k] += 1
    return tuple(sorted((o, c // len(N)) for o, c in hist.items()))


def fingerprint(G: PermGroup) -> tuple:
    """Isomorphism invariants, computed once per group object."""
    fp = G.__dict__.get("_fingerprint")
    if fp is not None:
        return fp
    n = len(G)
    t = G.table
    orders = G.orders
    classes = G.conjugacy_classes
    class_of = {}
    for ci, cls in enumerate(classes):
        for x in cls:
            class_of[x] = ci
    class_data = []
    for cls in classes:
        x = min(cls)
        sq = t[x][x]
        cube = t[sq][x]
        class_data.append((orders[x], len(cls), orders[sq], len(classes[class_of[sq]]),
                           orders[cube], len(classes[class_of[cube]])))
    roots = Counter(t[x][x] for x in range(n))
    root_profile = tuple(sorted(Counter((orders[y], roots.get(y, 0)) for y in range(n)).items()))
    D = derived_idx(G)
    D2 = derived_idx(G.subgroup(D)) if len(D) > 1 else frozenset([0])
    Z = centralizer_idx(G, range(n))
    sylows = tuple((p, sylow_idx(G, p)[1]) for p in prime_divisors(n))
    fp = (
        n,
        tuple(G.order_histogram.items()),
        len(Z),
        len(D),
        len(D2),
        abelian_invariants_of_quotient(G, D),
        sylows,
        tuple(sorted(class_data)),
        root_profile,
    )
    G.__dict__["_fingerprint"] = fp
    return fp


def is_isomorphic(G: PermGroup, H: PermGroup) -> bool:
    """Invariant comparison, then a backtracking search for an isomorphism."""
    if len(G) != len(H):
        return False
    if fingerprint(G) != fingerprint(H):
        return False
    return find_isomorphism(G, H) is not None


def find_isomorphism(G: PermGroup, H: PermGroup) -> Hom | None:
    if len(G) != len(H):
        return None
    found = monomorphisms(G, H, limit=1)
    return found[0] if found else None
