"""Small-groups catalog: parsing and integrity checks."""

from __future__ import annotations

import os
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from ..permgrp import PermGroup, fingerprint, is_isomorphic, parse_gens

EXPECTED_COUNTS = {48: 52, 60: 13, 72: 50, 84: 15}
CATALOG_ENV = "LAME_ATLAS_CATALOG"

_FIELD = re.compile(r"(\w+)=(\S+)")


class CatalogParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CatalogIntegrityError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("catalog integrity failure:\n  " + "\n  ".join(problems))
        self.problems = problems


@dataclass
class CatalogRecord:
    order: int
    name: str
    degree: int
    gens_text: str
    lineno: int
    group: PermGroup

    @property
    def structure(self) -> str:
        """Structure description part of the name (after 'order.index/')."""
        return self.name.split("/", 1)[-1]


@dataclass
class Catalog:
    records: list[CatalogRecord]
    path: str
    problems: list[str] = field(default_factory=list)
    extras: list[str] = field(default_factory=list)
    expected: dict[int, int] = field(default_factory=lambda: dict(EXPECTED_COUNTS))

    def of_order(self, n: int) -> list[CatalogRecord]:
        return [r for r in self.records if r.order == n]

    def counts(self) -> dict[int, int]:
        return dict(sorted(Counter(r.order for r in self.records).items()))

    def complete_for(self, n: int) -> bool:
        return self.counts().get(n, 0) == self.expected.get(n) and not self.problems

    @property
    def ok(self) -> bool:
        return not self.problems

    def summary(self) -> str:
        counts = self.counts()
        parts = " ".join(f"{n}:{counts.get(n, 0)}" for n in sorted(self.expected))
        return f"{parts} {'OK' if self.ok else 'FAILED'}"

    def by_name(self, name: str) -> CatalogRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)


def default_catalog_path() -> str:
    env = os.environ.get(CATALOG_ENV)
    if env:
        return env
    return str(resources.files("lame_atlas") / "data" / "groups.txt")


def parse_catalog_text(text: str) -> list[tuple[int, str, int, str, int]]:
    """Parse catalog lines into (order, name, degree, gens, lineno); no group computations."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.startswith("group "):
            raise CatalogParseError(lineno, "expected a 'group' record")
        fields = dict(_FIELD.findall(line[len("group "):]))
        leftover = _FIELD.sub("", line[len("group "):]).strip()
        if leftover:
            raise CatalogParseError(lineno, f"unexpected text {leftover!r}")
        missing = {"order", "name", "degree", "gens"} - fields.keys()
        if missing:
            raise CatalogParseError(lineno, f"missing fields {sorted(missing)}")
        try:
            order, degree = int(fields["order"]), int(fields["degree"])
        except ValueError:
            raise CatalogParseError(lineno, "order and degree must be integers") from None
        out.append((order, fields["name"], degree, fields["gens"], lineno))
    return out


def load_catalog(path: str | os.PathLike | None = None, strict: bool = True,
                 expected: dict[int, int] | None = None) -> Catalog:
    """Read and verify a catalog.

    Checks: every record's generated order equals its declared order, records
    of equal order are pairwise non-isomorphic, and the per-order counts match
    ``expected``.  With ``strict`` any failure raises CatalogIntegrityError;
    otherwise the problems are listed on the returned Catalog.
    """
    path = str(path or default_catalog_path())
    text = Path(path).read_text()
    expected = dict(EXPECTED_COUNTS if expected is None else expected)
    records: list[CatalogRecord] = []
    problems: list[str] = []
    extras: list[str] = []
    names = set()
    for order, name, degree, gens, lineno in parse_catalog_text(text):
        if name in names:
            problems.append(f"line {lineno}: duplicate name {name}")
        names.add(name)
        try:
            G = PermGroup(parse_gens(gens, degree), degree, name=name)
        except ValueError as exc:
            raise CatalogParseError(lineno, str(exc)) from None
        if len(G) != order:
            problems.append(f"line {lineno}: {name} declares order {order} but generates {len(G)}")
            continue
        if order not in expected:
            extras.append(f"line {lineno}: {name} has order {order} outside the checked orders")
        records.append(CatalogRecord(order, name, degree, gens, lineno, G))
    problems += _isomorphic_pairs(records)
    counts = Counter(r.order for r in records)
    for n, want in sorted(expected.items()):
        if counts.get(n, 0) != want:
            problems.append(f"{n}:{counts.get(n, 0)} != {want}")
    cat = Catalog(records, path, problems, extras, expected)
    if strict and problems:
        raise CatalogIntegrityError(problems)
    return cat


def _isomorphic_pairs(records: list[CatalogRecord]) -> list[str]:
    buckets: dict[tuple, list[CatalogRecord]] = defaultdict(list)
    for r in records:
        buckets[fingerprint(r.group)].append(r)
    out = []
    for bucket in buckets.values():
        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                a, b = bucket[i], bucket[j]
                if is_isomorphic(a.group, b.group):
                    out.append(f"lines {a.lineno},{b.lineno}: {a.name} and {b.name} are isomorphic")
    return out
