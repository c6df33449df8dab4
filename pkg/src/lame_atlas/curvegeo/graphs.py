"""Dual graphs of degenerate fibers, group actions on them, double covers and quotient graphs of groups."""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field

from ..exactalg import QI, FieldElem, MultiPoly
from ..permgrp import (
    Hom,
    Perm,
    PermGroup,
    alternating,
    dihedral,
    is_isomorphic,
    symmetric,
)
from ..treegrp import AmalgamSpec, TreeOfGroups, VertexLabel
from .families import ProjPoint, quartic_family
from .monomial import as_map, monomial_group
from .singular import _roots


@dataclass
class DualGraph:
    """Finite connected multigraph; edges are (u, w) index pairs, repeated for parallel edges."""

    vertices: list[str]
    edges: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        n = len(self.vertices)
        for u, w in self.edges:
            if not (0 <= u < n and 0 <= w < n):
                raise ValueError(f"edge ({u},{w}) has a missing endpoint")
        if n and not self.is_connected():
            raise ValueError("dual graph is not connected")

    def is_connected(self) -> bool:
        adj = {i: set() for i in range(len(self.vertices))}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        seen = {0}
        todo = [0]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def vertex(self, name: str) -> int:
        return self.vertices.index(name)

    def to_text(self) -> str:
        es = ", ".join(f"{self.vertices[u]}-{self.vertices[w]}" for u, w in self.edges)
        return f"graph {{ v: {','.join(self.vertices)}; e: {es} }}"


def parse_graph(text: str) -> DualGraph:
    m = re.fullmatch(r"\s*graph\s*\{\s*v:\s*([^;]*);\s*e:\s*([^}]*)\}\s*", text)
    if not m:
        raise ValueError(f"bad graph text: {text!r}")
    names = [s.strip() for s in m.group(1).split(",") if s.strip()]
    pos = {nm: i for i, nm in enumerate(names)}
    edges = []
    for item in m.group(2).split(","):
        item = item.strip()
        if not item:
            continue
        # vertex names may contain '-' (cover sheets), so try every split
        splits = [(item[:i].strip(), item[i + 1:].strip()) for i, ch in enumerate(item) if ch == "-"]
        ends = [(a, b) for a, b in splits if a in pos and b in pos]
        if len(ends) != 1:
            raise ValueError(f"edge {item!r} does not name two known vertices")
        a, b = ends[0]
        edges.append((pos[a], pos[b]))
    return DualGraph(names, edges)


def betti_genus(g: DualGraph) -> int:
    """First Betti number E - V + 1 of a connected graph."""
    if not g.is_connected():
        raise ValueError("graph is not connected")
    return len(g.edges) - len(g.vertices) + 1


def combined_perm(g: DualGraph, vimg: list[int], eimg: list[int]) -> Perm:
    """One permutation on vertices followed by edges."""
    nv = len(g.vertices)
    return Perm(list(vimg) + [nv + e for e in eimg])


@dataclass
class GraphAction:
    """A group acting on a dual graph through a homomorphism into permutations of V and E."""

    graph: DualGraph
    group: PermGroup
    hom: Hom

    def __post_init__(self):
        nv = len(self.graph.vertices)
        for gen, img in self.hom.gen_images.items():
            for e, (u, w) in enumerate(self.graph.edges):
                u2, w2 = self.graph.edges[img(nv + e) - nv]
                if sorted((u2, w2)) != sorted((img(u), img(w))):
                    raise ValueError(f"generator {gen} moves edge {e} off its endpoints")
        bad = self.inversions()
        if bad:
            raise ValueError(f"action inverts edges {bad}; subdivide first")

    @classmethod
    def from_generators(cls, graph: DualGraph, gens: list[tuple[list[int], list[int]]]) -> "GraphAction":
        perms = [combined_perm(graph, v, e) for v, e in gens]
        deg = len(graph.vertices) + len(graph.edges)
        G = PermGroup(perms, deg, name="graph automorphisms")
        return cls(graph, G, Hom.from_images(G, G, {p: p for p in perms}))

    def vertex_perm(self, idx: int) -> list[int]:
        p = self.hom.target.elements[self.hom.table[idx]]
        return [p(v) for v in range(len(self.graph.vertices))]

    def edge_perm(self, idx: int) -> list[int]:
        nv = len(self.graph.vertices)
        p = self.hom.target.elements[self.hom.table[idx]]
        return [p(nv + e) - nv for e in range(len(self.graph.edges))]

    def inversions(self) -> list[int]:
        out = []
        for idx in range(len(self.group)):
            vp, ep = self.vertex_perm(idx), self.edge_perm(idx)
            for e, (u, w) in enumerate(self.graph.edges):
                if ep[e] == e and u != w and vp[u] == w:
                    out.append(e)
        return sorted(set(out))

    def stabilizer(self, kind: str, i: int) -> frozenset[int]:
        perm = self.vertex_perm if kind == "v" else self.edge_perm
        return frozenset(g for g in range(len(self.group)) if perm(g)[i] == i)

    def orbit(self, kind: str, i: int) -> list[int]:
        perm = self.vertex_perm if kind == "v" else self.edge_perm
        return sorted({perm(g)[i] for g in range(len(self.group))})


def parse_action(graph: DualGraph, text: str) -> GraphAction:
    """`action { gen v=(1,2)(3,4) e=(1,2); ... }` with 1-based cycles on vertex and edge indices."""
    m = re.fullmatch(r"\s*action\s*\{(.*)\}\s*", text, re.S)
    if not m:
        raise ValueError(f"bad action text: {text!r}")
    nv, ne = len(graph.vertices), len(graph.edges)
    gens = []
    for item in m.group(1).split(";"):
        item = item.strip()
        if not item:
            continue
        gm = re.fullmatch(r"gen\s+v=(\S*)\s+e=(\S*)", item)
        if not gm:
            raise ValueError(f"bad generator {item!r}")
        vp = Perm.parse(gm.group(1), nv) if gm.group(1) not in ("", "()") else Perm.identity(nv)
        ep = Perm.parse(gm.group(2), ne) if gm.group(2) not in ("", "()") else Perm.identity(ne)
        gens.append(([vp(i) for i in range(nv)], [ep(i) for i in range(ne)]))
    if not gens:
        gens = [(list(range(nv)), list(range(ne)))]
    return GraphAction.from_generators(graph, gens)


# -- naming small groups


def group_label(G: PermGroup) -> str:
    """Z_n, D_n, A4, S4 or A5 when G is one of these, otherwise 'order-N'."""
    n = len(G)
    if n == 1:
        return "1"
    if G.is_abelian() and max(G.orders) == n:
        return f"Z{n}"
    if n % 2 == 0 and n >= 4 and is_isomorphic(G, dihedral(n // 2)):
        return f"D{n // 2}"
    for name, H in (("A4", alternating(4)), ("S4", symmetric(4)), ("A5", alternating(5))):
        if n == len(H) and is_isomorphic(G, H):
            return name
    return f"order-{n}"


@dataclass
class QuotientGraph:
    """Orbits of vertices and edges with stabilizer subgroups of the acting group."""

    vertex_reps: list[int]
    vertex_stabilizers: list[PermGroup]
    edges: list[tuple[int, int, int]]  # (vertex orbit, vertex orbit, edge representative)
    edge_stabilizers: list[PermGroup]
    orbit_sizes_ok: bool
    names: list[str]

    @property
    def vertex_labels(self) -> list[str]:
        return [group_label(S) for S in self.vertex_stabilizers]

    @property
    def edge_labels(self) -> list[str]:
        return [group_label(S) for S in self.edge_stabilizers]

    def is_single_edge(self) -> bool:
        return len(self.vertex_reps) == 2 and len(self.edges) == 1 and self.edges[0][0] != self.edges[0][1]

    def amalgam_name(self) -> str | None:
        """'S4 *_Z4 D4' style name when the quotient is one edge between two vertices."""
        if not self.is_single_edge():
            return None
        a, b, _ = self.edges[0]
        return f"{self.vertex_labels[a]} *_{self.edge_labels[0]} {self.vertex_labels[b]}"

    def as_tree(self) -> TreeOfGroups | None:
        """Tree of groups with Dickson labels (no ends), if every label is one."""
        try:
            verts = [VertexLabel.parse(s) for s in self.vertex_labels]
        except ValueError:
            return None
        if len(self.edges) != len(verts) - 1:
            return None
        edges = []
        for (a, b, _), lab in zip(self.edges, self.edge_labels):
            if not lab.startswith("Z"):
                return None
            edges.append((a, b, int(lab[1:])))
        return TreeOfGroups(verts, edges, [])

    def matches_amalgam(self, spec: AmalgamSpec) -> bool:
        """Same vertex groups (up to isomorphism, either order) and edge groups of the same cyclic order."""
        if not self.is_single_edge():
            return False
        a, b, _ = self.edges[0]
        Ga, Gb = self.vertex_stabilizers[a], self.vertex_stabilizers[b]
        E = self.edge_stabilizers[0]
        if self.edge_labels[0] != f"Z{spec.edge_order}" or len(E) != spec.edge_order:
            return False
        return any(is_isomorphic(P, spec.U) and is_isomorphic(Q, spec.V) for P, Q in ((Ga, Gb), (Gb, Ga)))

    def to_json(self) -> dict:
        return {
            "vertices": [{"representative": self.names[v], "stabilizer": lab, "order": len(S)}
                         for v, lab, S in zip(self.vertex_reps, self.vertex_labels, self.vertex_stabilizers)],
            "edges": [{"ends": [a, b], "stabilizer": lab, "order": len(S)}
                      for (a, b, _), lab, S in zip(self.edges, self.edge_labels, self.edge_stabilizers)],
            "amalgam": self.amalgam_name(),
            "orbit_stabilizer_ok": self.orbit_sizes_ok,
        }


def graph_quotient(g: DualGraph, a: GraphAction) -> QuotientGraph:
    """Quotient multigraph with vertex and edge stabilizers.

    The edge stabilizer is computed at a representative edge, and the vertex
    stabilizers at that edge's own endpoints, so the inclusions are literal.
    """
    if a.graph is not g:
        raise ValueError("action belongs to a different graph")
    n = len(a.group)
    vorbit_of: dict[int, int] = {}
    vreps: list[int] = []
    for v in range(len(g.vertices)):
        if v not in vorbit_of:
            for w in a.orbit("v", v):
                vorbit_of[w] = len(vreps)
            vreps.append(v)
    eseen: set[int] = set()
    edges, estabs = [], []
    ok = True
    vstab_at: dict[int, frozenset[int]] = {}
    for e, (u, w) in enumerate(g.edges):
        if e in eseen:
            continue
        orb = a.orbit("e", e)
        eseen.update(orb)
        st = a.stabilizer("e", e)
        ok &= len(orb) * len(st) == n
        edges.append((vorbit_of[u], vorbit_of[w], e))
        estabs.append(a.group.subgroup(st, name=f"stab e{e}"))
        for x in (u, w):
            vstab_at.setdefault(vorbit_of[x], a.stabilizer("v", x))
    vstabs = []
    for i, v in enumerate(vreps):
        st = vstab_at.get(i, a.stabilizer("v", v))
        ok &= len(a.orbit("v", v)) * len(st) == n
        vstabs.append(a.group.subgroup(st, name=f"stab {g.vertices[v]}"))
    # vertex representatives are reported at the chosen edge endpoints
    reps = list(vreps)
    for i in range(len(vreps)):
        for ua, wa, e in edges:
            u, w = g.edges[e]
            if ua == i:
                reps[i] = u
                break
            if wa == i:
                reps[i] = w
                break
    return QuotientGraph(reps, vstabs, edges, estabs, ok, list(g.vertices))


# -- covers


@dataclass
class VoltageCover:
    graph: DualGraph
    action: GraphAction
    deck: Perm


def _lift_offsets(g: DualGraph, vp: list[int], ep: list[int], volt: list[int]) -> list[int] | None:
    """Sheet offsets f with f(w) = f(u) + volt(e) + volt(ge) along every edge, or None."""
    f = [None] * len(g.vertices)
    f[0] = 0
    adj = {i: [] for i in range(len(g.vertices))}
    for e, (u, w) in enumerate(g.edges):
        adj[u].append((e, w))
        adj[w].append((e, u))
    todo = deque([0])
    while todo:
        u = todo.popleft()
        for e, w in adj[u]:
            want = (f[u] + volt[e] + volt[ep[e]]) % 2
            if f[w] is None:
                f[w] = want
                todo.append(w)
            elif f[w] != want:
                return None
    return f


def double_cover(a: GraphAction, volt: list[int]) -> VoltageCover:
    """Z/2 voltage cover of the graph, with the lifted group action and the sheet swap."""
    g = a.graph
    nv, ne = len(g.vertices), len(g.edges)
    names = [f"{v}{s}" for s in ("+", "-") for v in g.vertices]
    edges = []
    for s in (0, 1):
        for u, w in g.edges:
            edges.append((u + s * nv, w + ((s + volt[len(edges) % ne]) % 2) * nv))
    cover = DualGraph(names, edges)

    def lift(vp, ep, f) -> Perm:
        vimg = [vp[v] + ((s + f[v]) % 2) * nv for s in (0, 1) for v in range(nv)]
        eimg = []
        for s in (0, 1):
            for e, (u, w) in enumerate(g.edges):
                ge = ep[e]
                gu = vp[u]
                su = (s + f[u]) % 2
                if g.edges[ge][0] == gu:
                    t = su
                else:
                    t = (su + volt[ge]) % 2
                eimg.append(ge + t * ne)
        return combined_perm(cover, vimg, eimg)

    gens = []
    for gen in a.hom.gen_images:
        idx = a.group.index[gen]
        vp, ep = a.vertex_perm(idx), a.edge_perm(idx)
        f = _lift_offsets(g, vp, ep, volt)
        if f is None:
            raise ValueError(f"generator {gen} does not lift to the cover")
        gens.append(lift(vp, ep, f))
    deck = lift(list(range(nv)), list(range(ne)), [1] * nv)
    gens.append(deck)
    deg = 2 * nv + 2 * ne
    G = PermGroup(gens, deg, name="lifted action")
    act = GraphAction(cover, G, Hom.from_images(G, G, {p: p for p in gens}))
    return VoltageCover(cover, act, deck)


# -- the configurations of the special fibers


def _line_key(p: ProjPoint, q: ProjPoint) -> ProjPoint:
    """The line through p and q as a point of the dual plane."""
    K = q.field if p.field.is_rational else p.field
    a, b = p.over(K).coords, q.over(K).coords
    return ProjPoint([a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]])


def _coordinate_point(k: int) -> ProjPoint:
    return ProjPoint([1 if i == k else 0 for i in range(3)])


def node_branches(f: MultiPoly, k: int) -> list[ProjPoint]:
    """Direction points of the branches of f at the k-th coordinate point (tangent cone roots)."""
    u, v = [i for i in range(3) if i != k]
    chart = f.substitute({k: 1})
    low = min(e[u] + e[v] for e in chart.terms)
    cone = [c for e, c in chart.terms.items() if e[u] + e[v] == low]
    coeffs = [FieldElem(f.field, 0)] * (low + 1)
    for e, c in chart.terms.items():
        if e[u] + e[v] == low:
            coeffs[e[v]] = c
    # roots t of cone(1, t): direction (u, v) = (1, t)
    if not cone or coeffs[low].is_zero():
        raise ValueError("tangent cone contains the u = 0 direction; not handled")
    roots, complete = _roots(coeffs)
    if not complete or len(roots) != low:
        raise ValueError("tangent cone does not split into distinct lines")
    out = []
    for t in roots:
        d = [FieldElem(t.field, 0)] * 3
        d[u], d[v] = FieldElem(t.field, 1), t
        out.append(ProjPoint(d))
    return out


def _build_action(graph: DualGraph, vertex_key, edge_key, move_vertex, move_edge) -> GraphAction:
    """The monomial group acting on a configuration through its action on keyed vertices and edges."""
    G = monomial_group()
    vpos = {k: i for i, k in enumerate(vertex_key)}
    epos = {k: i for i, k in enumerate(edge_key)}
    images = {}
    targets = []
    for gen in G.gens:
        m = as_map(gen)
        vimg = [vpos[move_vertex(m, k)] for k in vertex_key]
        eimg = [epos[move_edge(m, k)] for k in edge_key]
        p = combined_perm(graph, vimg, eimg)
        images[gen] = p
        targets.append(p)
    T = PermGroup(targets, len(vertex_key) + len(edge_key), name="configuration automorphisms")
    return GraphAction(graph, G, Hom.from_images(G, T, images))


@dataclass
class Configuration:
    name: str
    graph: DualGraph
    action: GraphAction
    voltages: list[int]
    edge_keys: list = field(default_factory=list)

    def cover(self) -> VoltageCover:
        return double_cover(self.action, self.voltages)


def infinity_configuration() -> Configuration:
    """Rational curve with three nodes at the coordinate points, nodes blown up.

    Vertices: the curve c and exceptional curves e1, e2, e3; one edge per
    branch through each node.  Voltage 1 sits on the branch whose tangent
    direction has negative i-part.
    """
    f = quartic_family().infinity_form().over(QI)
    nodes = [_coordinate_point(k) for k in range(3)]
    names = ["c", "e1", "e2", "e3"]
    edges, keys, volts = [], [], []
    for k, P in enumerate(nodes):
        for d in sorted(node_branches(f, k), key=lambda d: -max(c.b for c in d.coords)):
            edges.append((0, k + 1))
            keys.append((P, _line_key(P, d)))
            volts.append(0 if max(c.b for c in d.coords) > 0 else 1)
    graph = DualGraph(names, edges)
    vkeys = ["c"] + nodes

    def move_vertex(m, key):
        return key if key == "c" else m.apply_point(key)

    def move_edge(m, key):
        P, L = key
        return m.apply_point(P), m.apply_point(L)

    action = _build_action(graph, vkeys, keys, move_vertex, move_edge)
    return Configuration("alpha=inf", graph, action, volts, keys)


def four_lines_configuration() -> Configuration:
    """Four lines x +- y +- z = 0 with their six meeting points blown up.

    Lines L1..L4 are x+y+z, -x+y+z, x-y+z, x+y-z; vertex Pjk is the exceptional
    curve over L_j meet L_k.  Voltage 1 on (L_j, Pjk) for j < k.
    """
    lines = [ProjPoint(c) for c in ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))]
    pairs = [(j, k) for j in range(4) for k in range(j + 1, 4)]
    names = [f"L{j + 1}" for j in range(4)] + [f"P{j + 1}{k + 1}" for j, k in pairs]
    meet = [_line_key(lines[j], lines[k]) for j, k in pairs]
    edges, keys, volts = [], [], []
    for i, (j, k) in enumerate(pairs):
        for side, vol in ((j, 1), (k, 0)):
            edges.append((side, 4 + i))
            keys.append((lines[side], meet[i]))
            volts.append(vol)
    graph = DualGraph(names, edges)
    vkeys = [("L", ln) for ln in lines] + [("P", p) for p in meet]

    def move_vertex(m, key):
        return key[0], m.apply_point(key[1])

    def move_edge(m, key):
        return m.apply_point(key[0]), m.apply_point(key[1])

    action = _build_action(graph, vkeys, keys, move_vertex, move_edge)
    return Configuration("alpha=-2", graph, action, volts, keys)


def single_edge_fixture() -> tuple[DualGraph, GraphAction]:
    g = parse_graph("graph { v: a,b; e: a-b }")
    return g, parse_action(g, "action { }")
