"""Command line driver: `lame-atlas <command> [options]`."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field

from . import checks
from .report import ANCHORS, CheckRecord, VerificationReport

log = logging.getLogger("lame_atlas")

COMMANDS = {
    "normalizers": ("list the normalizer trees with four ends (2,2,2,3) and their Euler characteristics",
                    ["normalizer-list", "euler-characteristic"]),
    "rh": ("solve the ramification equation per residue characteristic", ["rh-type", "lame-order",
                                                                           "three-point-bound"]),
    "classify": ("search all catalog groups of order 12(g-1) for amalgam quotients", ["classification",
                                                                                      "genus-of-amalgam-i"]),
    "appendix": ("configuration and Sylow checks over the catalog groups of order 48, 60, 72",
                 ["configurations-48-72", "sylow5-order-60", "transitive-sylow3-action"]),
    "quartic": ("bitangents, orbits, special fibers, singular parameters and the conic pencil",
                ["quartic-bitangents", "tangency-orbits", "monomial-stabilizers", "special-fibers",
                 "singular-parameters", "conic-pencil"]),
    "sextic": ("monomial symmetry and candidate degenerations of the sextic family",
               ["monomial-stabilizers", "sextic-degenerations"]),
    "reduction": ("dual graphs of special fibers, their double covers and quotient graphs of groups",
                  ["reduction-graphs"]),
    "catalog": ("catalog maintenance; `catalog verify` checks orders, isomorphism classes and counts",
                ["catalog-counts"]),
    "all": ("every check above", sorted(ANCHORS)),
}


@dataclass
class RunConfig:
    command: str
    catalog: str | None = None
    fmt: str = "text"
    primes: tuple[int, ...] = checks.DEFAULT_PRIMES
    genera: tuple[int, ...] = (5, 6, 7, 8)
    jobs: int = 1
    n_cap: int = 30
    shape_cap: int = 2
    action: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.extra:
            raise ValueError(f"unknown options {sorted(self.extra)}")
        if self.fmt not in ("text", "json"):
            raise ValueError("format must be text or json")
        if self.jobs < 1 or self.n_cap < 1 or self.shape_cap < 1:
            raise ValueError("caps and job counts must be positive")
        if self.n_cap < 3:
            raise ValueError("n_cap must be at least 3 to hold the end labels")
        for p in self.primes:
            if p != 0 and not (p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))):
                raise ValueError(f"{p} is neither 0 nor a prime")
        for g in self.genera:
            if g not in (5, 6, 7, 8):
                raise ValueError(f"genus {g} is outside 5..8")
        if self.command == "catalog" and self.action != "verify":
            raise ValueError("catalog needs the action 'verify'")


def _parser() -> argparse.ArgumentParser:
    lines = [f"  {name:12} {desc}\n{'':15}anchors: {', '.join(anchors)}" for name, (desc, anchors) in COMMANDS.items()]
    ap = argparse.ArgumentParser(
        prog="lame-atlas",
        description="Exact verification of the genus 5-8 Mumford curves with 12(g-1) automorphisms.",
        epilog="commands:\n" + "\n".join(lines) + "\n\nexit status: 0 no failed check, 1 a check failed, 2 usage error",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    common.add_argument("--catalog", help="group catalog file (default: $LAME_ATLAS_CATALOG or the bundled file)")
    common.add_argument("--p", dest="primes", type=int, action="append",
                        help="residue characteristic for rh (repeatable; 0 allowed)")
    common.add_argument("--genus", dest="genera", type=int, action="append", choices=(5, 6, 7, 8),
                        help="genus for classify (repeatable)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for classify")
    common.add_argument("--n-cap", type=int, default=30, help="largest Z_n / D_n parameter in tree enumeration")
    common.add_argument("--shape-cap", type=int, default=2, help="largest number of tree vertices")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")
    for name, (desc, anchors) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=desc,
                            description=f"{desc}\nanchors: {', '.join(anchors)}",
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        if name == "catalog":
            sp.add_argument("action", choices=("verify",))
    return ap


def parse_args(argv=None) -> RunConfig:
    ns = _parser().parse_args(argv)
    if ns.verbose:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    try:
        return RunConfig(
            command=ns.command,
            catalog=ns.catalog,
            fmt=ns.fmt,
            primes=tuple(ns.primes) if ns.primes else checks.DEFAULT_PRIMES,
            genera=tuple(sorted(set(ns.genera))) if ns.genera else (5, 6, 7, 8),
            jobs=ns.jobs,
            n_cap=ns.n_cap,
            shape_cap=ns.shape_cap,
            action=getattr(ns, "action", None),
        )
    except ValueError as exc:
        _parser().error(str(exc))


def _guarded(cid: str, anchor: str, fn, *args) -> list[CheckRecord]:
    """Run a check builder; an exception becomes a failed record instead of a crash."""
    try:
        return fn(*args)
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        log.exception("check %s crashed", cid)
        return [CheckRecord(f"{cid}.error", anchor, "fail", f"{type(exc).__name__}: {exc}")]


def run(config: RunConfig) -> VerificationReport:
    cmd = config.command
    report = VerificationReport(cmd if cmd != "catalog" else "catalog verify")
    want = (lambda c: True) if cmd == "all" else (lambda c: c == cmd)
    if want("normalizers"):
        report.extend(_guarded("normalizers", "normalizer-list", checks.normalizer_checks,
                               config.n_cap, config.shape_cap))
    if want("rh"):
        report.extend(_guarded("rh", "rh-type", checks.rh_checks, config.primes))
    if cmd in ("classify", "appendix", "catalog", "all"):
        log.info("loading catalog")
        cat, warning = checks.open_catalog(config.catalog)
        if warning:
            report.warnings.append(warning)
        elif not cat.ok:
            report.warnings.append("catalog problems: " + "; ".join(cat.problems))
        if want("catalog"):
            report.extend(checks.catalog_checks(cat, warning))
        if want("classify"):
            report.extend(_guarded("classify", "classification", checks.classify_checks,
                                   cat, warning, config.genera, config.jobs, config.n_cap))
        if want("appendix"):
            report.extend(_guarded("appendix", "configurations-48-72", checks.appendix_checks, cat, warning))
    if want("quartic"):
        report.extend(_guarded("quartic", "quartic-bitangents", checks.quartic_checks))
    if want("sextic"):
        report.extend(_guarded("sextic", "sextic-degenerations", checks.sextic_checks))
    if want("reduction"):
        report.extend(_guarded("reduction", "reduction-graphs", checks.reduction_checks, config.n_cap))
    return report


def main(argv=None) -> int:
    config = parse_args(argv)
    report = run(config)
    out = report.dumps() if config.fmt == "json" else report.to_text()
    sys.stdout.write(out + "\n")
    for w in report.warnings:
        log.warning(w)
    return report.exit_code
