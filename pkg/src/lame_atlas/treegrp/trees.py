"""Finite trees of finite groups over the Dickson vertex alphabet."""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

_KIND_RANK = {"Z": 0, "D": 1, "A4": 2, "S4": 3, "A5": 4}
_FIXED = {"A4": 12, "S4": 24, "A5": 60}
# branching of the quotient map P^1 -> P^1 / G for each vertex type
_FIXED_BRANCHING = {"A4": (2, 3, 3), "S4": (2, 3, 4), "A5": (2, 3, 5)}


@dataclass(frozen=True)
class VertexLabel:
    """A vertex group: cyclic Z_n, dihedral D_n (order 2n), A4, S4 or A5."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind in ("Z", "D"):
            if self.n < 2:
                raise ValueError(f"{self.kind}{self.n}: parameter must be at least 2")
        elif self.kind in _FIXED:
            object.__setattr__(self, "n", 0)
        else:
            raise ValueError(f"unknown vertex kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        text = text.strip()
        if text in _FIXED:
            return cls(text)
        m = re.fullmatch(r"([ZD])(\d+)", text)
        if not m:
            raise ValueError(f"bad vertex label {text!r}")
        return cls(m.group(1), int(m.group(2)))

    @property
    def order(self) -> int:
        if self.kind == "Z":
            return self.n
        if self.kind == "D":
            return 2 * self.n
        return _FIXED[self.kind]

    @property
    def is_cyclic(self) -> bool:
        return self.kind == "Z"

    @property
    def notes(self) -> tuple[str, ...]:
        return ("requires p>5",) if self.kind == "A5" else ()

    def sort_key(self) -> tuple[int, int]:
        return _KIND_RANK[self.kind], self.n

    def __str__(self):
        return self.kind if self.kind in _FIXED else f"{self.kind}{self.n}"


def branching_indices(v: VertexLabel) -> tuple[int, ...]:
    """Sorted branching multiset of the vertex group's quotient map."""
    if v.kind == "Z":
        return (v.n, v.n)
    if v.kind == "D":
        return tuple(sorted((2, 2, v.n)))
    return _FIXED_BRANCHING[v.kind]


@dataclass
class TreeOfGroups:
    """Vertices with group labels, cyclic edge groups given by their order, labelled ends."""

    vertices: list[VertexLabel]
    edges: list[tuple[int, int, int]] = field(default_factory=list)  # (u, v, order)
    ends: list[tuple[int, int]] = field(default_factory=list)  # (vertex, order)

    def check(self):
        """Raise ValueError unless this is a tree whose slots exactly use each branching multiset."""
        k = len(self.vertices)
        if k == 0:
            raise ValueError("empty tree")
        if len(self.edges) != k - 1:
            raise ValueError("edge count does not match a tree")
        parent = list(range(k))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v, n in self.edges:
            if not (0 <= u < k and 0 <= v < k) or u == v:
                raise ValueError(f"bad edge ({u},{v})")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError("edges contain a cycle")
            parent[ru] = rv
        slots = [Counter() for _ in range(k)]
        for u, v, n in self.edges:
            for w in (u, v):
                if self.vertices[w].order % n:
                    raise ValueError(f"edge order {n} does not divide |{self.vertices[w]}|")
                slots[w][n] += 1
        for w, n in self.ends:
            if not 0 <= w < k:
                raise ValueError(f"end on missing vertex {w}")
            if self.vertices[w].order % n:
                raise ValueError(f"end order {n} does not divide |{self.vertices[w]}|")
            slots[w][n] += 1
        for w, v in enumerate(self.vertices):
            if slots[w] != Counter(branching_indices(v)):
                raise ValueError(f"slots at {v} are {sorted(slots[w].elements())}, "
                                 f"expected {list(branching_indices(v))}")
        return self

    def end_labels(self) -> tuple[int, ...]:
        return tuple(sorted(n for _, n in self.ends))

    def to_text(self) -> str:
        parts = [f"v{i}: {v}" for i, v in enumerate(self.vertices)]
        parts += [f"e(v{u},v{v}): Z{n}" for u, v, n in self.edges]
        parts += [f"end(v{w}): {n}" for w, n in self.ends]
        return "tree { " + "; ".join(parts) + " }"

    def short_name(self) -> str:
        """e.g. 'D4 *_Z4 S4' for a single edge, or a vertex list otherwise."""
        if len(self.vertices) == 1:
            return str(self.vertices[0])
        if len(self.vertices) == 2:
            u, v, n = self.edges[0]
            return f"{self.vertices[u]} *_Z{n} {self.vertices[v]}"
        return " - ".join(str(v) for v in self.vertices)

    def canonical(self) -> "TreeOfGroups":
        """Relabel vertices so the serialization is minimal (vertices sorted by label)."""
        best = None
        k = len(self.vertices)
        for perm in itertools.permutations(range(k)):
            # perm[new] = old
            verts = [self.vertices[o] for o in perm]
            if any(verts[i].sort_key() > verts[i + 1].sort_key() for i in range(k - 1)):
                continue
            new_of = {o: i for i, o in enumerate(perm)}
            edges = sorted(tuple(sorted((new_of[u], new_of[v]))) + (n,) for u, v, n in self.edges)
            ends = sorted((new_of[w], n) for w, n in self.ends)
            key = ([v.sort_key() for v in verts], edges, ends)
            if best is None or key < best[0]:
                best = (key, TreeOfGroups(verts, edges, ends))
        return best[1]

    def sort_key(self):
        c = self.canonical()
        return ([v.sort_key() for v in c.vertices], c.edges, c.ends)


_ITEM_VERTEX = re.compile(r"v(\d+)\s*:\s*(\S+)")
_ITEM_EDGE = re.compile(r"e\(\s*v(\d+)\s*,\s*v(\d+)\s*\)\s*:\s*Z(\d+)")
_ITEM_END = re.compile(r"end\(\s*v(\d+)\s*\)\s*:\s*(\d+)")


def parse_tree(text: str) -> TreeOfGroups:
    """Inverse of TreeOfGroups.to_text; the result is validated with check()."""
    m = re.fullmatch(r"\s*tree\s*\{(.*)\}\s*", text, re.S)
    if not m:
        raise ValueError("expected 'tree { ... }'")
    verts: dict[int, VertexLabel] = {}
    edges, ends = [], []
    for item in m.group(1).split(";"):
        item = item.strip()
        if not item:
            continue
        if mm := _ITEM_EDGE.fullmatch(item):
            edges.append((int(mm.group(1)), int(mm.group(2)), int(mm.group(3))))
        elif mm := _ITEM_END.fullmatch(item):
            ends.append((int(mm.group(1)), int(mm.group(2))))
        elif mm := _ITEM_VERTEX.fullmatch(item):
            i = int(mm.group(1))
            if i in verts:
                raise ValueError(f"vertex v{i} declared twice")
            verts[i] = VertexLabel.parse(mm.group(2))
        else:
            raise ValueError(f"cannot parse tree item {item!r}")
    if sorted(verts) != list(range(len(verts))):
        raise ValueError("vertices must be numbered v0..v(k-1)")
    return TreeOfGroups([verts[i] for i in range(len(verts))], edges, ends).check()


def euler_characteristic(obj) -> Fraction:
    """Sum of 1/|vertex group| minus sum of 1/|edge group|; ends do not count."""
    if isinstance(obj, TreeOfGroups):
        return (sum((Fraction(1, v.order) for v in obj.vertices), Fraction(0))
                - sum((Fraction(1, n) for _, _, n in obj.edges), Fraction(0)))
    return Fraction(1, len(obj.U)) + Fraction(1, len(obj.V)) - Fraction(1, obj.z_U.order())


def expected_genus(amalgam, group_order: int) -> int:
    """Rank of a free kernel of index ``group_order``: 1 - |G| * chi."""
    g = 1 - group_order * euler_characteristic(amalgam)
    if g.denominator != 1:
        raise ValueError(f"1 - {group_order}*chi = {g} is not an integer")
    if g < 2:
        raise ValueError(f"genus {g} < 2 for group order {group_order}")
    return int(g)


# -- enumeration


def _alphabet(n_cap: int, with_cyclic: bool) -> list[VertexLabel]:
    out = []
    if with_cyclic:
        out += [VertexLabel("Z", n) for n in range(2, n_cap + 1)]
    out += [VertexLabel("D", n) for n in range(2, n_cap + 1)]
    out += [VertexLabel(k) for k in ("A4", "S4", "A5")]
    return out


def _labelled_trees(k: int):
    """All edge lists of trees on vertices 0..k-1 (via Pruefer sequences)."""
    if k == 1:
        yield []
        return
    if k == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(k), repeat=k - 2):
        degree = [1] * k
        for s in seq:
            degree[s] += 1
        edges = []
        for s in seq:
            leaf = min(i for i in range(k) if degree[i] == 1)
            edges.append((min(leaf, s), max(leaf, s)))
            degree[leaf] -= 1
            degree[s] -= 1
        u, v = [i for i in range(k) if degree[i] == 1]
        edges.append((u, v))
        yield edges


def _assign_edges(verts, shape, target_ends: Counter):
    """Yield trees for one vertex multiset and tree shape, choosing edge orders."""
    slots = [Counter(branching_indices(v)) for v in verts]

    def rec(i, edges):
        if i == len(shape):
            rest = sum(slots, Counter())
            if rest == target_ends:
                ends = [(w, n) for w, s in enumerate(slots) for n in sorted(s.elements())]
                yield TreeOfGroups(list(verts), list(edges), ends)
            return
        u, v = shape[i]
        for n in sorted(n for n in slots[u] if slots[u][n] > 0 and slots[v][n] > 0):
            slots[u][n] -= 1
            slots[v][n] -= 1
            yield from rec(i + 1, edges + [(u, v, n)])
            slots[u][n] += 1
            slots[v][n] += 1

    yield from rec(0, [])


def enumerate_normalizer_trees(end_labels, shape_cap: int = 2, n_cap: int = 30) -> list[TreeOfGroups]:
    """All trees of Dickson groups (up to relabelling) whose free slots are the given ends.

    Each vertex's branching multiset is split between incident edges and ends;
    an edge uses one slot of the same order at both endpoints.  Cyclic vertices
    only occur alone: next to any edge their whole group is the edge group and
    the vertex would be contracted away.
    """
    ends = Counter(end_labels)
    if not ends:
        raise ValueError("need at least one end label")
    if min(ends) < 2:
        raise ValueError("end labels must be at least 2")
    if shape_cap < 1:
        raise ValueError("shape_cap must be at least 1")
    if n_cap < max(ends):
        raise ValueError(f"n_cap={n_cap} is below the largest end label {max(ends)}; the search would miss vertices")
    found: dict[str, TreeOfGroups] = {}
    m = sum(ends.values())
    for k in range(1, shape_cap + 1):
        alphabet = _alphabet(n_cap, with_cyclic=(k == 1))
        shapes = list(_labelled_trees(k))
        branch = [Counter(branching_indices(v)) for v in alphabet]
        slots = [len(branching_indices(v)) for v in alphabet]
        for pick in itertools.combinations_with_replacement(range(len(alphabet)), k):
            if sum(slots[i] for i in pick) - 2 * (k - 1) != m:
                continue
            verts = tuple(alphabet[i] for i in pick)
            total = Counter()
            for i in pick:
                total += branch[i]
            inner = total - ends
            if total != inner + ends or any(c % 2 for c in inner.values()):
                continue
            for shape in shapes:
                for t in _assign_edges(verts, shape, ends):
                    c = t.canonical().check()
                    found.setdefault(c.to_text(), c)
    return sorted(found.values(), key=TreeOfGroups.sort_key)
