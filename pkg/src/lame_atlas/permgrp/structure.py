"""Subgroup queries by filtering the closed element set."""

from __future__ import annotations

from .group import PermGroup


def _idx(G: PermGroup, H: PermGroup) -> frozenset[int]:
    hs = G.indices_of(H)
    if G.closure(hs) != hs:
        raise ValueError("H is not a subgroup of G")
    return hs


def normalizer_idx(G: PermGroup, hs: frozenset[int]) -> frozenset[int]:
    t, inv = G.table, G.inv
    hgens = [G.index[g] for g in G.subgroup(hs).gens] if len(hs) > 1 else []
    out = []
    for g in range(len(G)):
        gi = inv[g]
        if all(t[t[g][h]][gi] in hs for h in hgens):
            out.append(g)
    return frozenset(out)


def centralizer_idx(G: PermGroup, hs) -> frozenset[int]:
    t = G.table
    hs = list(hs)
    return frozenset(g for g in range(len(G)) if all(t[g][h] == t[h][g] for h in hs))


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    hs = _idx(G, H)
    return len(normalizer_idx(G, hs)) == len(G)


def normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    return G.subgroup(normalizer_idx(G, _idx(G, H)), name=f"N({H.name or 'H'})")


def centralizer(G: PermGroup, H: PermGroup) -> PermGroup:
    return G.subgroup(centralizer_idx(G, _idx(G, H)), name=f"C({H.name or 'H'})")


def center(G: PermGroup) -> PermGroup:
    gens = [G.index[g] for g in G.gens]
    return G.subgroup(centralizer_idx(G, gens), name="Z")


def derived_idx(G: PermGroup) -> frozenset[int]:
    t, inv = G.table, G.inv
    n = len(G)
    comms = {t[t[inv[a]][inv[b]]][t[a][b]] for a in range(n) for b in range(a + 1, n)}
    return G.closure(comms)


def derived_subgroup(G: PermGroup) -> PermGroup:
    return G.subgroup(derived_idx(G), name="G'")


def kernel(hom) -> PermGroup:
    """Kernel of a Hom as a subgroup of its source."""
    src = hom.source
    return src.subgroup([i for i, j in enumerate(hom.table) if j == 0], name="ker")


def core_idx(G: PermGroup, hs: frozenset[int]) -> frozenset[int]:
    """Largest normal subgroup of G inside H (intersection of conjugates)."""
    t, inv = G.table, G.inv
    core = set(hs)
    for g in range(len(G)):
        gi = inv[g]
        core &= {t[t[g][h]][gi] for h in hs}
    return frozenset(core)


def _prime_part(n: int, p: int) -> int:
    k = 1
    while n % p == 0:
        n //= p
        k *= p
    return k


def sylow_idx(G: PermGroup, p: int) -> tuple[frozenset[int], int]:
    """One Sylow p-subgroup (as indices) and the number of them.

    Climbs from a cyclic p-subgroup: while P is not Sylow, some x in N(P)
    outside P has x^p in P, and <P, x> is a larger p-group.
    """
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    target = _prime_part(len(G), p)
    if target == 1:
        return frozenset([0]), 1
    orders = G.orders
    start = max((i for i in range(len(G)) if orders[i] > 1 and _prime_part(orders[i], p) == orders[i]),
                key=lambda i: (orders[i], -i))
    P = G.closure([start])
    while len(P) < target:
        N = normalizer_idx(G, P)
        for x in sorted(N):
            if x in P:
                continue
            if G.power(x, p) in P:
                P = G.closure(set(P) | {x})
                break
        else:
            raise AssertionError("normalizer climbing stalled")
    count = len(G) // len(normalizer_idx(G, P))
    return P, count


def sylow(G: PermGroup, p: int) -> tuple[PermGroup, int]:
    P, count = sylow_idx(G, p)
    return G.subgroup(P, name=f"P{p}"), count


def sylow_subgroups_idx(G: PermGroup, p: int) -> list[frozenset[int]]:
    """All Sylow p-subgroups as the conjugates of one of them (deterministic order)."""
    P, _ = sylow_idx(G, p)
    t, inv = G.table, G.inv
    seen = []
    for g in range(len(G)):
        gi = inv[g]
        Q = frozenset(t[t[g][h]][gi] for h in P)
        if Q not in seen:
            seen.append(Q)
    return seen


def prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out

