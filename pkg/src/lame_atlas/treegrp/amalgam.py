"""Concrete amalgams U *_Z V of permutation groups realizing two-vertex trees."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..permgrp import Perm, PermGroup, alternating, cyclic, dihedral, symmetric
from .trees import TreeOfGroups, VertexLabel


@dataclass
class AmalgamSpec:
    """U and V glued along the cyclic groups generated by z_U and z_V."""

    U: PermGroup
    V: PermGroup
    z_U: Perm
    z_V: Perm
    name: str
    labels: tuple[VertexLabel, VertexLabel] | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.z_U not in self.U or self.z_V not in self.V:
            raise ValueError("amalgamating elements must lie in their groups")
        if self.z_U.order() != self.z_V.order():
            raise ValueError("amalgamating elements have different orders")

    @property
    def edge_order(self) -> int:
        return self.z_U.order()


def vertex_group(label: VertexLabel) -> PermGroup:
    if label.kind == "Z":
        return cyclic(label.n)
    if label.kind == "D":
        return dihedral(label.n)
    return {"A4": lambda: alternating(4), "S4": lambda: symmetric(4), "A5": lambda: alternating(5)}[label.kind]()


def _pinned_element(label: VertexLabel, G: PermGroup, order: int) -> Perm:
    """The fixed choice of an element of the given order generating the edge group."""
    deg = G.degree
    if label.kind == "Z":
        z = G.gens[0] ** (label.n // order) if label.n % order == 0 else None
    elif label.kind == "D":
        rot, refl = G.gens
        if order == 2 and label.n > 2:
            z = refl
        elif label.n % order == 0:
            z = rot ** (label.n // order)
        else:
            z = None
    else:
        cycles = {
            ("S4", 4): [[0, 1, 2, 3]], ("S4", 3): [[0, 1, 2]], ("S4", 2): [[0, 1]],
            ("A4", 3): [[0, 1, 2]], ("A4", 2): [[0, 1], [2, 3]],
            ("A5", 5): [[0, 1, 2, 3, 4]], ("A5", 3): [[0, 1, 2]], ("A5", 2): [[0, 1], [2, 3]],
        }.get((label.kind, order))
        z = Perm.from_cycles(cycles, deg) if cycles else None
    if z is None or z.order() != order or z not in G:
        raise ValueError(f"{label} has no pinned element of order {order}")
    return z


def is_maximal_cyclic(G: PermGroup, z: Perm) -> bool:
    """True if no cyclic subgroup of G properly contains <z>."""
    target = z.order()
    for u in G:
        k = u.order()
        if k > target and k % target == 0 and u ** (k // target) in _generators_of_cyclic(z):
            return False
    return True


def _generators_of_cyclic(z: Perm) -> set[Perm]:
    from math import gcd
    n = z.order()
    return {z ** j for j in range(1, n + 1) if gcd(j, n) == 1}


def realize_amalgam(tree: TreeOfGroups) -> AmalgamSpec:
    """Permutation groups and pinned edge generators for a two-vertex tree."""
    if len(tree.vertices) != 2 or len(tree.edges) != 1:
        raise ValueError("realize_amalgam needs a tree with two vertices and one edge")
    u, v, n = tree.edges[0]
    lu, lv = tree.vertices[u], tree.vertices[v]
    U, V = vertex_group(lu), vertex_group(lv)
    zu, zv = _pinned_element(lu, U, n), _pinned_element(lv, V, n)
    for G, z, lab in ((U, zu, lu), (V, zv, lv)):
        if not is_maximal_cyclic(G, z):
            raise ValueError(f"Z{n} is not maximal cyclic in {lab}")
    U.name, V.name = str(lu), str(lv)
    notes = tuple(sorted(set(lu.notes) | set(lv.notes)))
    return AmalgamSpec(U, V, zu, zv, tree.short_name(), (lu, lv), notes)
