"""Group-by-group checks of the order 48/60/72 structure theorems over the catalog."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..permgrp import Perm, PermGroup, alternating, coset_action, dihedral, is_isomorphic, kernel, normalizer, sylow
from ..treegrp import AmalgamSpec
from .catalog import Catalog
from .quotients import QuotientWitness, find_quotients, iso_type, reference_groups


@dataclass
class Check:
    id: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "passed": self.passed, "detail": self.detail}


@dataclass
class AppendixReport:
    checks: list[Check] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, cid: str) -> Check:
        return next(c for c in self.checks if c.id == cid)

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks], "rows": self.rows}


def configuration(case: str) -> AmalgamSpec:
    """Case 'a': D3 and D2 sharing an involution; case 'b': D3 and A4 sharing an element of order 3."""
    D3 = dihedral(3)
    rot, refl = D3.gens
    if case == "a":
        D2 = dihedral(2)
        return AmalgamSpec(D3, D2, refl, D2.gens[0], "D3 & D2 over Z2")
    if case == "b":
        A4 = alternating(4)
        return AmalgamSpec(D3, A4, rot, Perm.from_cycles([[0, 1, 2]], 4), "D3 & A4 over Z3")
    raise ValueError(f"unknown configuration {case!r}")


def configuration_witnesses(case: str, G: PermGroup, name: str | None = None) -> list[QuotientWitness]:
    """Generating pairs U, V inside G with U meeting V exactly in the shared cyclic group."""
    return find_quotients(configuration(case), G, name, require_exact_intersection=True)


def order_three_element(w: QuotientWitness):
    """The element x of order 3 in the configuration: the image of the D3 rotation."""
    rot = w.amalgam.U.gens[0]
    return w.hom_U(rot)


def verify_appendix_lemmas(G: PermGroup, witness: QuotientWitness) -> list[Check]:
    """Sylow and transitive-action facts for a group carrying a configuration."""
    n = len(G)
    out = []
    P2, c2 = sylow(G, 2)
    out.append(Check("sylow2-not-normal", c2 > 1, f"{c2} Sylow 2-subgroups"))
    P3, c3 = sylow(G, 3)
    out.append(Check("sylow3-not-normal", c3 > 1, f"{c3} Sylow 3-subgroups"))
    out.append(Check("four-sylow3", c3 == 4, f"{c3} Sylow 3-subgroups"))
    rho = coset_action(G, normalizer(G, P3))
    K = kernel(rho)
    out.append(Check("kernel-without-sylow3", len(K) % len(P3) != 0 if len(P3) > 1 else True,
                     f"|K| = {len(K)}, |P3| = {len(P3)}"))
    x = order_three_element(witness)
    out.append(Check("x-outside-kernel", x not in K, f"x = {x}"))
    want_k = {48: 2, 72: 3}.get(n)
    image = len(rho.image_idx())
    out.append(Check("image-order-24", image == 24 and len(K) == want_k,
                     f"|rho(G)| = {image}, |K| = {len(K)} (expected 24 and {want_k})"))
    return out


def verify_appendix_A1(catalog: Catalog) -> AppendixReport:
    """Configurations (a) and (b) over all catalog groups of order 48 and 72."""
    rep = AppendixReport()
    hits: dict[tuple[int, str], list[str]] = {}
    S4xZ2 = reference_groups()["S4xZ2"]
    for order in (48, 72):
        for rec in catalog.of_order(order):
            for case in ("a", "b"):
                ws = configuration_witnesses(case, rec.group, rec.name)
                if not ws:
                    continue
                hits.setdefault((order, case), []).append(rec.name)
                row = {"order": order, "case": case, "group": rec.name,
                       "iso_type": iso_type(rec.group, rec.structure), "witness_count": len(ws)}
                best = min(ws, key=QuotientWitness.key)
                row["witness"] = best.to_json()
                lemmas = verify_appendix_lemmas(rec.group, best)
                row["lemmas"] = [c.to_json() for c in lemmas]
                rep.rows.append(row)
                for c in lemmas:
                    rep.checks.append(Check(f"lemma-{c.id}@{rec.name}", c.passed, c.detail))
    hit48a = hits.get((48, "a"), [])
    ok48a = bool(hit48a) and all(is_isomorphic(catalog.by_name(nm).group, S4xZ2) for nm in hit48a)
    rep.checks.insert(0, Check("order48-case-a-only-S4xZ2", ok48a, f"groups: {hit48a}"))
    rep.checks.insert(1, Check("order48-case-b-none", not hits.get((48, "b")), f"groups: {hits.get((48, 'b'), [])}"))
    rep.checks.insert(2, Check("order72-case-a-none", not hits.get((72, "a")), f"groups: {hits.get((72, 'a'), [])}"))
    rep.checks.insert(3, Check("order72-case-b-none", not hits.get((72, "b")), f"groups: {hits.get((72, 'b'), [])}"))
    return rep


def verify_appendix_A2(catalog: Catalog) -> AppendixReport:
    """Order 60: more than one Sylow 5-subgroup forces A5."""
    rep = AppendixReport()
    A5 = alternating(5)
    many = []
    for rec in catalog.of_order(60):
        _, count = sylow(rec.group, 5)
        row = {"group": rec.name, "sylow5_count": count}
        if count > 1:
            iso = is_isomorphic(rec.group, A5)
            row["is_A5"] = iso
            many.append((rec.name, count, iso))
            rep.checks.append(Check(f"sylow5-implies-A5@{rec.name}", iso, f"{count} Sylow 5-subgroups"))
        rep.rows.append(row)
    ok = len(many) == 1 and many[0][1] == 6 and many[0][2]
    rep.checks.insert(0, Check("unique-group-with-six-sylow5", ok, f"groups with >1 Sylow 5: {many}"))
    return rep
