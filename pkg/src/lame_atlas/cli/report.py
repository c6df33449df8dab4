"""Check records and the consolidated verification report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

STATUSES = ("pass", "fail", "flagged-discrepancy", "conditional")

# anchor slug -> the claim a check is tied to (mirrored in the README table)
ANCHORS = {
    "normalizer-list": "the four normalizer tree products with end labels (2,2,2,3)",
    "euler-characteristic": "Euler characteristic -1/12 and genus 1 - |G| chi for orders 48, 60, 72, 84",
    "rh-type": "the only ramification type with total -11/6 is tame (2,2,2,3), and none exists for p = 2, 3",
    "lame-order": "a (2,2,2,3) cover of genus g has 12(g-1) automorphisms",
    "three-point-bound": "three-point covers have at least 15(g-1) automorphisms",
    "catalog-counts": "numbers of groups of order 48, 60, 72, 84 (52, 13, 50, 15)",
    "classification": "quotients of the four amalgams with free kernel in genus 5 to 8",
    "genus-of-amalgam-i": "the amalgam D2 *_Z2 D3 has quotients in genus 5 only",
    "configurations-48-72": "configurations of D3 with D2 or A4 in groups of order 48 and 72",
    "sylow5-order-60": "a group of order 60 with more than one Sylow 5-subgroup is A5",
    "transitive-sylow3-action": "Sylow and coset-action lemmas for groups carrying a configuration",
    "quartic-bitangents": "the lines x +- y +- z = 0 are bitangent to the quartic family",
    "tangency-orbits": "the eight tangency points form two orbits of four under the monomial S4",
    "monomial-stabilizers": "monomial symmetry groups S4 of the quartic and A4 of the sextic",
    "special-fibers": "double conic at 2, four lines at -2, three nodes at infinity, t = (a-2)/(a+2)",
    "singular-parameters": "the quartic fiber is singular exactly for a in {2, -2, infinity}",
    "conic-pencil": "the conic pencil through one tangency orbit and its base points (1:+-1:+-1)",
    "sextic-degenerations": "sextic fibers degenerate near a = +-5 sqrt5 and a = +-sqrt(-3)",
    "reduction-graphs": "dual graphs of the special fibers and their quotients S4 *_Z4 D4 and D3 *_Z2 D2",
}


@dataclass
class CheckRecord:
    id: str
    anchor: str
    status: str
    summary: str
    payload: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.anchor not in ANCHORS:
            raise ValueError(f"undocumented anchor {self.anchor!r}")

    def to_json(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status,
                "summary": self.summary, "payload": self.payload}


@dataclass
class VerificationReport:
    command: str
    records: list[CheckRecord] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def add(self, rec: CheckRecord):
        if any(r.id == rec.id for r in self.records):
            raise ValueError(f"duplicate check id {rec.id}")
        self.records.append(rec)

    def extend(self, recs):
        for r in recs:
            self.add(r)

    def get(self, cid: str) -> CheckRecord:
        return next(r for r in self.records if r.id == cid)

    def ordered(self) -> list[CheckRecord]:
        return sorted(self.records, key=lambda r: r.id)

    @property
    def exit_code(self) -> int:
        return 1 if any(r.status == "fail" for r in self.records) else 0

    def counts(self) -> dict[str, int]:
        return {s: sum(r.status == s for r in self.records) for s in STATUSES}

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "counts": self.counts(),
            "warnings": self.warnings,
            "checks": [r.to_json() for r in self.ordered()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        tag = {"pass": "PASS", "fail": "FAIL", "flagged-discrepancy": "FLAG", "conditional": "COND"}
        lines = [f"{tag[r.status]:4}  {r.id}  [{r.anchor}]  {r.summary}" for r in self.ordered()]
        lines += [f"warning: {w}" for w in self.warnings]
        c = self.counts()
        lines.append(f"{len(self.records)} checks: " + ", ".join(f"{v} {k}" for k, v in c.items() if v))
        return "\n".join(lines)
