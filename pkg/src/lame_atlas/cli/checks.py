"""Check builders for each subcommand; each returns a list of CheckRecords."""

from __future__ import annotations

import os
from fractions import Fraction

from ..classify import (
    CatalogIntegrityError,
    CatalogParseError,
    classify_all,
    load_catalog,
    standard_amalgams,
    verify_appendix_A1,
    verify_appendix_A2,
)
from ..curvegeo import (
    INFINITY,
    ProjPoint,
    betti_genus,
    bitangency,
    elem_text,
    fermat_cubic,
    first_orbit,
    four_bitangent_lines,
    four_lines_configuration,
    graph_quotient,
    group_label,
    infinity_configuration,
    is_singular_at,
    monomial_stabilizer,
    orbit_report,
    pencil_two_torsion,
    quartic_family,
    sextic_family,
    singular_parameters,
    special_fiber_factorizations,
)
from ..classify.quotients import ROMAN
from ..curvegeo.families import gradient, substitute_point
from ..exactalg import QSQRT5, QSQRTM3
from ..permgrp import alternating, cyclic, direct_product, is_isomorphic, symmetric
from ..ramify import LAME_TARGET, solve_rh, tame_order, three_point_explore
from ..treegrp import enumerate_normalizer_trees, euler_characteristic, expected_genus
from .report import CheckRecord

DEFAULT_PRIMES = (0, 2, 3) + tuple(p for p in range(5, 98) if all(p % q for q in range(2, p)))

EXPECTED_PAIRS = {
    5: {("i", "S4xZ2"), ("iii", "S4xZ2")},
    6: {("i", "A5"), ("ii", "A5"), ("iv", "A5")},
    7: set(),
    8: set(),
}


def _rec(cid, anchor, ok, summary, payload=None, status=None):
    return CheckRecord(cid, anchor, status or ("pass" if ok else "fail"), summary, payload or {})


# -- normalizer trees


def normalizer_checks(n_cap: int = 30, shape_cap: int = 2) -> list[CheckRecord]:
    labels = [2, 2, 2, 3]
    runs = {}
    for cap in sorted({6, 12, 30, n_cap}):
        runs[cap] = [t.short_name() for t in enumerate_normalizer_trees(labels, shape_cap, cap)]
    main = runs[n_cap]
    stable = all(r == main for r in runs.values())
    out = [_rec("normalizers.trees", "normalizer-list", stable and len(main) == 4,
                f"{len(main)} trees: " + "; ".join(f"({ROMAN[i]}) {s}" for i, s in enumerate(main)),
                {"trees": main, "by_n_cap": {str(k): v for k, v in runs.items()}, "shape_cap": shape_cap})]
    wider = [t.short_name() for t in enumerate_normalizer_trees(labels, 3, n_cap)]
    out.append(_rec("normalizers.shape-cap-3", "normalizer-list", True,
                    f"with three-vertex shapes allowed: {len(wider)} trees"
                    + (" (same list)" if wider == main else " (differs)"),
                    {"trees": wider}))
    amalgams = standard_amalgams(n_cap, shape_cap)
    chis = {lab: euler_characteristic(a) for lab, a in amalgams}
    genera = {lab: {str(n): expected_genus(a, n) for n in (48, 60, 72, 84)} for lab, a in amalgams}
    want = {"48": 5, "60": 6, "72": 7, "84": 8}
    ok = all(c == Fraction(-1, 12) for c in chis.values()) and all(g == want for g in genera.values())
    out.append(_rec("normalizers.euler", "euler-characteristic", ok,
                    "chi = " + ", ".join(f"({k}) {v}" for k, v in chis.items()) + "; genus 48,60,72,84 -> 5,6,7,8",
                    {"chi": {k: str(v) for k, v in chis.items()}, "genus": genera}))
    return out


# -- ramification


def rh_checks(primes=DEFAULT_PRIMES) -> list[CheckRecord]:
    out = []
    for p in primes:
        sols = solve_rh(p, LAME_TARGET)
        want = [] if p in (2, 3) else ["tame (2,2,2,3)"]
        got = [str(s) for s in sols]
        out.append(_rec(f"rh.p={p:03d}", "rh-type", got == want,
                        f"p={p}: " + (", ".join(got) if got else "no solutions"), {"p": p, "solutions": got}))
    orders = {g: tame_order(g, (2, 2, 2, 3)) for g in range(2, 9)}
    out.append(_rec("rh.lame-order", "lame-order", all(v == 12 * (g - 1) for g, v in orders.items()),
                    "tame (2,2,2,3) gives |G| = 12(g-1) for g = 2..8", {str(g): str(v) for g, v in orders.items()}))
    out.append(three_point_check())
    return out


def three_point_check(g: int = 2, n_max: int = 60) -> CheckRecord:
    triples = three_point_explore(g, n_max)
    bound = 15 * (g - 1)
    low = [(t, o) for t, o in triples if o.numerator < bound * o.denominator]
    exact12 = [t for t, o in triples if o == 12 * (g - 1)]
    small = sorted(t for t, _ in low if max(t) <= 12)
    with_trees = [t for t in small if enumerate_normalizer_trees(list(t), 2, max(30, max(t)))]
    payload = {"genus": g, "n_max": n_max, "triples": len(triples), "below_15(g-1)": len(low),
               "exactly_12(g-1)": [list(t) for t in exact12],
               "below_with_max_index_12": [list(t) for t in small],
               "of_those_with_normalizer_trees": [list(t) for t in with_trees]}
    summary = (f"{len(low)} of {len(triples)} hyperbolic triples force fewer than 15(g-1) automorphisms; "
               f"none of the {len(small)} with indices <= 12 admits a normalizer tree" if not with_trees else
               f"{len(with_trees)} small triples below 15(g-1) admit normalizer trees")
    return CheckRecord("rh.three-point", "three-point-bound", "flagged-discrepancy", summary, payload)


# -- catalog and classification


def open_catalog(path):
    """(catalog or None, warning or None)."""
    try:
        return load_catalog(path, strict=False), None
    except FileNotFoundError:
        return None, f"catalog not found at {path or os.environ.get('LAME_ATLAS_CATALOG') or 'default location'}"
    except (CatalogParseError, CatalogIntegrityError, OSError) as exc:
        return None, f"catalog unreadable: {exc}"


def catalog_checks(cat, warning) -> list[CheckRecord]:
    if cat is None:
        return [CheckRecord("catalog.verify", "catalog-counts", "conditional", warning or "no catalog")]
    return [_rec("catalog.verify", "catalog-counts", cat.ok, cat.summary(),
                 {"path": os.path.basename(cat.path), "counts": {str(k): v for k, v in sorted(cat.counts().items())},
                  "problems": cat.problems, "extras": cat.extras})]


def classify_checks(cat, warning, genera=(5, 6, 7, 8), jobs: int = 1, n_cap: int = 30) -> list[CheckRecord]:
    if cat is None:
        return [CheckRecord(f"classify.genus-{g}", "classification", "conditional", warning or "no catalog")
                for g in genera]
    rep = classify_all(cat, genera=genera, jobs=jobs, n_cap=n_cap)
    out = []
    for g in genera:
        got = rep.pairs(g)
        entries = [e.to_json() for e in rep.entries if e.genus == g]
        summary = f"{rep.searched[g]} groups of order {12 * (g - 1)}: " + (
            ", ".join(f"({a}) -> {t}" for a, t in sorted(got, key=lambda x: ROMAN.index(x[0]))) or "no quotients")
        if g in rep.conditional:
            status = "conditional"
            summary += " (catalog incomplete for this order)"
        else:
            status = "pass" if got == EXPECTED_PAIRS[g] else "fail"
        out.append(CheckRecord(f"classify.genus-{g}", "classification", status, summary, {"entries": entries}))
    out.append(_rec("classify.witnesses", "classification", not rep.failures,
                    "every witness pair re-verified" if not rep.failures else f"{len(rep.failures)} witness failures",
                    {"failures": rep.failures, "notes": rep.notes}))
    if rep.flags:
        out.append(CheckRecord("classify.genus-flag", "genus-of-amalgam-i", "flagged-discrepancy",
                               "; ".join(rep.flags), {"flags": rep.flags}))
    return out


def appendix_checks(cat, warning) -> list[CheckRecord]:
    if cat is None:
        return [CheckRecord(f"appendix.{k}", a, "conditional", warning or "no catalog")
                for k, a in (("configurations", "configurations-48-72"), ("sylow5", "sylow5-order-60"))]
    out = []
    a1 = verify_appendix_A1(cat)
    for c in a1.checks:
        anchor = "transitive-sylow3-action" if c.id.startswith("lemma-") else "configurations-48-72"
        out.append(_rec(f"appendix.{c.id}", anchor, c.passed, c.detail))
    a2 = verify_appendix_A2(cat)
    for c in a2.checks:
        out.append(_rec(f"appendix.{c.id}", "sylow5-order-60", c.passed, c.detail))
    status = lambda n: "conditional" if not cat.complete_for(n) else None
    for n, anchor in ((48, "configurations-48-72"), (72, "configurations-48-72"), (60, "sylow5-order-60")):
        if status(n):
            out.append(CheckRecord(f"appendix.catalog-{n}", anchor, "conditional",
                                   f"catalog incomplete for order {n}"))
    return out


# -- the quartic


def quartic_checks() -> list[CheckRecord]:
    fam = quartic_family()
    out = []
    bts = [bitangency(fam, ln) for ln in four_bitangent_lines()]
    scalars = {str(b.line): str(b.scalar) for b in bts}
    pts = [p for b in bts for p in b.points]
    on_curve = all(p.lies_on(fam.poly) for p in pts)
    ok = all(s == "a + 2" for s in scalars.values()) and len(set(pts)) == 8 and on_curve
    out.append(_rec("quartic.bitangents", "quartic-bitangents", ok,
                    "4 lines, restriction (a+2) q^2, 8 distinct points, F = 0 at all identically in a",
                    {"scalars": scalars, "points": {str(b.line): [str(p) for p in b.points] for b in bts}}))
    rep = orbit_report(pts)
    sizes = sorted(len(o) for o in rep.full_group_orbits)
    even = sorted(len(o) for o in rep.even_subgroup_orbits)
    payload = {"full_group_orbit_sizes": sizes, "even_subgroup_orbit_sizes": even,
               "even_subgroup_orbits": [[str(p) for p in o] for o in rep.even_subgroup_orbits],
               "conjugation_swaps_even_orbits": rep.galois_swaps_even_orbits,
               "first_orbit_is_an_even_orbit": rep.first_orbit_matches,
               "first_orbit": [str(p) for p in first_orbit()]}
    if sizes == [4, 4]:
        out.append(_rec("quartic.tangency-orbits", "tangency-orbits", rep.first_orbit_matches,
                        "two orbits of size 4", payload))
    else:
        out.append(CheckRecord(
            "quartic.tangency-orbits", "tangency-orbits", "flagged-discrepancy",
            f"all 24 monomial maps: orbit sizes {sizes}; the 12 even maps: {even}, "
            f"conjugation swaps the two, one of them is {{(1:w:w^2), ...}}: {rep.first_orbit_matches}",
            payload))
    out.append(stabilizer_check("quartic.monomial-stabilizer", fam, 24, symmetric(4), "S4"))
    sf = special_fiber_factorizations()
    coords = sorted(str(ProjPoint([1 if i == k else 0 for i in range(3)])) for k in range(3))
    ok = (sf.double_conic and sf.four_lines and sf.infinity_complete and sf.pencil_identity
          and sorted(map(str, sf.infinity_points)) == coords and sf.t_values["2"] == 0 and sf.t_values["-2"] == INFINITY)
    out.append(_rec("quartic.special-fibers", "special-fibers", ok,
                    "F_2 = Q^2, F_-2 = -(four lines), infinity form has exactly 3 nodes, 4F = (a+2)Q^2 + (a-2)L",
                    sf.to_json()))
    sp = singular_parameters(fam)
    vals = [f.label() for f in sp.fibers if f.confirmed]
    ok = {"2", "-2", INFINITY} <= set(vals) and sp.charts_agree
    out.append(_rec("quartic.singular-parameters", "singular-parameters", ok,
                    f"singular fibers at a in {{{', '.join(vals)}}} (charts agree: {sp.charts_agree})", sp.to_json()))
    f = fam.fiber(-1)
    p = ProjPoint([1, 1, 1])
    vanish = {name: str(substitute_point(g, p)) for name, g in zip(("f", "fx", "fy", "fz"), [f] + gradient(f))}
    if is_singular_at(f, p):
        out.append(CheckRecord("quartic.alpha=-1", "singular-parameters", "flagged-discrepancy",
                               "a = -1 is singular: f and its gradient vanish at (1:1:1) "
                               "(nodes at the four points (1:+-1:+-1))",
                               {"values_at_(1,1,1)": vanish,
                                "singular_points": [str(q) for q in sp.fiber(-1).points]}))
    else:
        out.append(_rec("quartic.alpha=-1", "singular-parameters", False, "a = -1 fiber not singular at (1:1:1)",
                        {"values_at_(1,1,1)": vanish}))
    out += pencil_checks()
    return out


def stabilizer_check(cid, fam, order, model, model_name) -> CheckRecord:
    S = monomial_stabilizer(fam)
    ok = len(S) == order and is_isomorphic(S, model)
    return _rec(cid, "monomial-stabilizers", ok, f"order {len(S)}, isomorphic to {model_name}: {ok}",
                {"order": len(S), "label": group_label(S)})


def pencil_checks() -> list[CheckRecord]:
    pr = pencil_two_torsion()
    roots = {k: [elem_text(r) for r in v] for k, v in pr.tangency_roots.items()}
    ok_roots = all(v == ["w^2"] for v in roots.values())
    base = sorted(str(p) for p in pr.base_points)
    ok = pr.through_points and ok_roots and pr.base_points_expected and all(pr.tangent_members.values())
    out = [_rec("quartic.pencil", "conic-pencil", ok,
                f"P_l tangent to the bitangents only at l = w^2; pencil P_(w^2) + l P'_(w) has base points {base}",
                {"lines": [str(ln) for ln in pr.lines], "tangency_roots": roots,
                 "tangency_discriminants": {k: str(v) for k, v in pr.tangency_discriminants.items()},
                 "base_points": base, "tangent_members": pr.tangent_members})]
    if pr.literal_members_equal:
        out.append(CheckRecord("quartic.pencil-literal", "conic-pencil", "flagged-discrepancy",
                               "the combination P_w + l P'_(w^2) is degenerate: both members equal 4(x^2+y^2+z^2)",
                               {"notes": pr.notes}))
    return out


# -- the sextic


SEXTIC_CANDIDATES = (("5*sqrt5", QSQRT5(0, 5)), ("-5*sqrt5", QSQRT5(0, -5)),
                     ("sqrt-3", QSQRTM3(0, 1)), ("-sqrt-3", QSQRTM3(0, -1)))


def sextic_checks() -> list[CheckRecord]:
    fam = sextic_family()
    out = [stabilizer_check("sextic.monomial-stabilizer", fam, 12, alternating(4), "A4")]
    out.append(stabilizer_check("sextic.fermat-control", fermat_cubic(), 6, symmetric(3), "S3"))
    rep = singular_parameters(fam, candidates=[v for _, v in SEXTIC_CANDIDATES] + [0, 1])
    for (name, val) in SEXTIC_CANDIDATES:
        fib = rep.fiber(val)
        out.append(_rec(f"sextic.candidate[{name}]", "sextic-degenerations", fib.confirmed,
                        f"a = {name}: {len(fib.points)} singular points besides the four common ones",
                        fib.to_json()))
    controls = {str(v): rep.fiber(v).to_json() for v in (0, 1)}
    out.append(_rec("sextic.controls", "sextic-degenerations",
                    not any(rep.fiber(v).confirmed for v in (0, 1)),
                    "a = 0, 1: no singular points on the reflection lines besides the common ones",
                    {"fibers": controls, "mode": rep.mode, "notes": rep.notes,
                     "common_singular_points": [str(p) for p in rep.universal_points]}))
    return out


# -- reduction graphs


def reduction_checks(n_cap: int = 30) -> list[CheckRecord]:
    amalgams = dict(standard_amalgams(n_cap))
    S4xZ2 = direct_product(symmetric(4), cyclic(2))
    out = []
    for conf, name, label, want in ((infinity_configuration(), "S4 *_Z4 D4", "iii", "alpha-inf"),
                                    (four_lines_configuration(), "D3 *_Z2 D2", "i", "alpha-minus-2")):
        q = graph_quotient(conf.graph, conf.action)
        b = betti_genus(conf.graph)
        ok = q.amalgam_name() == name and q.orbit_sizes_ok and b == 3 and q.matches_amalgam(amalgams[label])
        out.append(_rec(f"reduction.{want}", "reduction-graphs", ok,
                        f"{conf.graph.to_text()} -> {q.amalgam_name()}, betti {b}",
                        {"graph": conf.graph.to_text(), "quotient": q.to_json(), "betti": b,
                         "matches_amalgam": label if q.matches_amalgam(amalgams[label]) else None}))
        cv = conf.cover()
        qc = graph_quotient(cv.graph, cv.action)
        bc = betti_genus(cv.graph)
        iso = is_isomorphic(cv.action.group, S4xZ2)
        ok = (qc.amalgam_name() == name and qc.orbit_sizes_ok and bc == 5 and iso
              and qc.matches_amalgam(amalgams[label]))
        out.append(_rec(f"reduction.{want}-cover", "reduction-graphs", ok,
                        f"double cover V={len(cv.graph.vertices)} E={len(cv.graph.edges)}, betti {bc}, "
                        f"group of order {len(cv.action.group)} (S4xZ2: {iso}) -> {qc.amalgam_name()}",
                        {"graph": cv.graph.to_text(), "quotient": qc.to_json(), "betti": bc,
                         "group_order": len(cv.action.group), "is_S4xZ2": iso,
                         "voltages": conf.voltages}))
    return out
