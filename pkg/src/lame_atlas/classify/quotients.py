"""Finite quotients of amalgams with free kernel, and the genus 5-8 classification run."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..permgrp import (
    Hom,
    PermGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    is_isomorphic,
    monomorphisms,
    parse_gens,
    symmetric,
)
from ..treegrp import AmalgamSpec, enumerate_normalizer_trees, expected_genus, realize_amalgam
from .catalog import Catalog, CatalogRecord

ROMAN = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")
GENERA = (5, 6, 7, 8)


@dataclass
class QuotientWitness:
    """Embeddings of both factors agreeing on the edge group and generating G.

    The kernel of the induced map U *_Z V -> G is then free: torsion in an
    amalgam is conjugate into U or V, and both restrictions are injective.
    Its rank is 1 - |G| * chi.
    """

    amalgam: AmalgamSpec
    group_name: str
    group: PermGroup
    hom_U: Hom
    hom_V: Hom
    genus: int

    def revalidate(self) -> list[str]:
        """Independent re-check of all witness invariants; returns the failures."""
        bad = []
        a, G = self.amalgam, self.group
        for label, h in (("U", self.hom_U), ("V", self.hom_V)):
            if not h.verify():
                bad.append(f"hom_{label} is not a homomorphism")
            if not h.is_injective():
                bad.append(f"hom_{label} is not injective")
        if self.hom_U(a.z_U) != self.hom_V(a.z_V):
            bad.append("edge generators have different images")
        if G.closure(self.hom_U.image_idx() | self.hom_V.image_idx()) != frozenset(range(len(G))):
            bad.append("images do not generate G")
        if expected_genus(a, len(G)) != self.genus:
            bad.append("genus does not match 1 - |G| chi")
        return bad

    def key(self) -> tuple:
        return tuple(self.hom_U.table[self.hom_U.source.index[g]] for g in self.hom_U.gen_images) + \
            tuple(self.hom_V.table[self.hom_V.source.index[g]] for g in self.hom_V.gen_images)

    def to_json(self) -> dict:
        return {
            "U_images": {str(s): str(t) for s, t in self.hom_U.gen_images.items()},
            "V_images": {str(s): str(t) for s, t in self.hom_V.gen_images.items()},
            "edge_image": str(self.hom_U(self.amalgam.z_U)),
        }


def find_quotients(a: AmalgamSpec, G: PermGroup, group_name: str | None = None,
                   require_exact_intersection: bool = False) -> list[QuotientWitness]:
    """All pairs of embeddings U -> G, V -> G that agree on z and generate G.

    With ``require_exact_intersection`` only pairs whose images meet exactly
    in the image of <z> are kept.
    """
    n = len(G)
    if n % len(a.U) or n % len(a.V):
        return []
    try:
        genus = expected_genus(a, n)
    except ValueError:
        return []
    everything = frozenset(range(n))
    name = group_name or G.name or "G"
    anchored: dict = {}
    out = []
    for hU in monomorphisms(a.U, G):
        target = hU(a.z_U)
        if target not in anchored:
            anchored[target] = monomorphisms(a.V, G, anchor=(a.z_V, target))
        imgU = hU.image_idx()
        gensU = [G.index[p] for p in hU.gen_images.values()]
        for hV in anchored[target]:
            gensV = [G.index[p] for p in hV.gen_images.values()]
            if G.closure(gensU + gensV) != everything:
                continue
            if require_exact_intersection:
                shared = G.closure([G.index[target]])
                if imgU & hV.image_idx() != shared:
                    continue
            out.append(QuotientWitness(a, name, G, hU, hV, genus))
    return out


def standard_amalgams(n_cap: int = 30, shape_cap: int = 2) -> list[tuple[str, AmalgamSpec]]:
    """The four normalizer amalgams for end labels (2,2,2,3), labelled i..iv."""
    trees = enumerate_normalizer_trees([2, 2, 2, 3], shape_cap=shape_cap, n_cap=n_cap)
    return [(ROMAN[i], realize_amalgam(t)) for i, t in enumerate(trees)]


def reference_groups() -> dict[str, PermGroup]:
    return {
        "S4xZ2": direct_product(symmetric(4), cyclic(2)),
        "A5": alternating(5),
        "Z2xA5": direct_product(cyclic(2), alternating(5)),
        "D24": dihedral(24),
        "Z48": cyclic(48),
    }


def iso_type(G: PermGroup, fallback: str) -> str:
    for name, R in reference_groups().items():
        if is_isomorphic(G, R):
            return name
    return fallback


@dataclass
class ReportEntry:
    genus: int
    amalgam: str
    amalgam_name: str
    group_name: str
    iso_type: str
    witness_count: int
    witness: dict

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "amalgam": self.amalgam,
            "amalgam_name": self.amalgam_name,
            "group_name": self.group_name,
            "iso_type": self.iso_type,
            "witness_count": self.witness_count,
            "witness": self.witness,
        }


@dataclass
class ClassificationReport:
    entries: list[ReportEntry] = field(default_factory=list)
    searched: dict[int, int] = field(default_factory=dict)  # genus -> groups searched
    conditional: list[int] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def pairs(self, genus: int) -> set[tuple[str, str]]:
        return {(e.amalgam, e.iso_type) for e in self.entries if e.genus == genus}

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "groups_searched": {str(g): n for g, n in sorted(self.searched.items())},
            "conditional_genera": self.conditional,
            "notes": self.notes,
            "flags": self.flags,
            "failures": self.failures,
        }

    def to_text(self) -> str:
        lines = []
        for g in sorted(self.searched):
            tag = " (conditional: catalog incomplete)" if g in self.conditional else ""
            found = [e for e in self.entries if e.genus == g]
            lines.append(f"genus {g}: {self.searched[g]} groups of order {12 * (g - 1)} searched{tag}")
            if not found:
                lines.append("  no quotients")
            for e in found:
                lines.append(f"  ({e.amalgam}) {e.amalgam_name} -> {e.iso_type} [{e.group_name}], "
                             f"{e.witness_count} witness pairs")
        lines += [f"note: {n}" for n in self.notes]
        lines += [f"flag: {f}" for f in self.flags]
        lines += [f"FAILURE: {f}" for f in self.failures]
        return "\n".join(lines)


def _search_one(label: str, a: AmalgamSpec, rec_name: str, G: PermGroup, genus: int):
    ws = find_quotients(a, G, rec_name)
    if not ws:
        return None
    bad = [f"({label}) {rec_name}: {msg}" for w in ws for msg in w.revalidate()]
    best = min(ws, key=QuotientWitness.key)
    return genus, label, a.name, rec_name, G, len(ws), best.to_json(), bad


def _worker(args):
    label, tree_index, n_cap, name, degree, gens = args
    a = standard_amalgams(n_cap)[tree_index][1]
    G = PermGroup(parse_gens(gens, degree), degree, name=name)
    res = _search_one(label, a, name, G, expected_genus(a, len(G)))
    if res is None:
        return None
    genus, label, aname, rname, _, count, witness, bad = res
    return genus, label, aname, rname, (degree, gens), count, witness, bad


def classify_all(catalog: Catalog, amalgams: list[tuple[str, AmalgamSpec]] | None = None,
                 genera=GENERA, jobs: int = 1, n_cap: int = 30) -> ClassificationReport:
    """Search every (amalgam, catalog group) pair of matching genus and aggregate the witnesses."""
    if amalgams is None:
        amalgams = standard_amalgams(n_cap)
    report = ClassificationReport()
    tasks = []
    for g in genera:
        order = 12 * (g - 1)
        recs = catalog.of_order(order)
        report.searched[g] = len(recs)
        if not catalog.complete_for(order):
            report.conditional.append(g)
        for i, (label, a) in enumerate(amalgams):
            if expected_genus(a, order) != g:
                continue
            for r in recs:
                tasks.append((g, i, label, a, r))
    results = []
    if jobs > 1:
        payload = [(label, i, n_cap, r.name, r.degree, r.gens_text) for _, i, label, _, r in tasks]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for (g, i, label, a, r), res in zip(tasks, pool.map(_worker, payload, chunksize=4)):
                if res is not None:
                    results.append((g, label, a.name, r, res[5], res[6], res[7]))
    else:
        for g, i, label, a, r in tasks:
            res = _search_one(label, a, r.name, r.group, g)
            if res is not None:
                results.append((g, label, a.name, r, res[5], res[6], res[7]))
    for g, label, aname, r, count, witness, bad in sorted(results, key=lambda x: (x[0], ROMAN.index(x[1]), x[3].name)):
        report.entries.append(ReportEntry(g, label, aname, r.name, iso_type(r.group, r.structure), count, witness))
        report.failures += bad
    by_amalgam: dict[str, set[int]] = {}
    for e in report.entries:
        by_amalgam.setdefault(e.amalgam, set()).add(e.genus)
    for label, gs in sorted(by_amalgam.items(), key=lambda kv: ROMAN.index(kv[0])):
        if len(gs) > 1:
            kinds = ", ".join(f"g={e.genus}: {e.iso_type}" for e in report.entries if e.amalgam == label)
            report.flags.append(f"amalgam ({label}) has quotients in more than one genus ({kinds})")
    report.notes.append("A5 vertex groups need residue characteristic p > 5; all vertex orders must be prime to p")
    return report
