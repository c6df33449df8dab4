"""Acceptance criteria 1-11.

Each test prints one PASS/FAIL line (visible with -s) and feeds the summary
printed at the end of the session.  Every comparison is exact; the only
tolerances are the wall-clock budgets pinned below.
"""

import time
from contextlib import contextmanager
from fractions import Fraction

import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ACCEPTANCE
from strategies import FIELDS, nonzero_polys, polys, to_sympy, univariate
from lame_atlas.classify import classify_all, standard_amalgams, verify_appendix_A1, verify_appendix_A2
from lame_atlas.cli.main import RunConfig, run
from lame_atlas.curvegeo import (
    INFINITY,
    ProjPoint,
    betti_genus,
    bitangency,
    four_bitangent_lines,
    four_lines_configuration,
    graph_quotient,
    infinity_configuration,
    is_singular_at,
    monomial_stabilizer,
    orbit_report,
    pencil_parameter,
    pencil_two_torsion,
    quartic_family,
    sextic_family,
    singular_parameters,
    special_fiber_factorizations,
)
from lame_atlas.curvegeo.families import poly
from lame_atlas.exactalg import QQ, QSQRT5, QSQRTM3, gcd_univariate, omega, resultant
from lame_atlas.permgrp import alternating, is_isomorphic, prime_divisors, symmetric, sylow
from lame_atlas.ramify import solve_rh
from lame_atlas.treegrp import enumerate_normalizer_trees, euler_characteristic, expected_genus

# wall-clock budgets in seconds
BUDGET_NORMALIZERS = 1.0
BUDGET_RH = 1.0
BUDGET_CLASSIFY = 600.0
BUDGET_SEXTIC = 300.0
# minimum number of generated cases across the exact-algebra properties
MIN_PROPERTY_CASES = 1000

FOUR_TREES = ["D2 *_Z2 D3", "D3 *_Z3 A4", "D4 *_Z4 S4", "D5 *_Z5 A5"]


@contextmanager
def criterion(n: int, title: str):
    ok = False
    try:
        yield
        ok = True
    finally:
        ACCEPTANCE.setdefault(n, []).append((title, ok))
        print(f"\ncriterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")


def test_criterion_01_normalizer_enumeration():
    with criterion(1, "four normalizer trees, stable under n_cap 6/12/30, under 1 s"):
        t0 = time.perf_counter()
        report = run(RunConfig("normalizers"))
        elapsed = time.perf_counter() - t0
        rec = report.get("normalizers.trees")
        assert rec.status == "pass"
        assert rec.payload["trees"] == FOUR_TREES
        for cap in (6, 12, 30):
            assert [t.short_name() for t in enumerate_normalizer_trees([2, 2, 2, 3], n_cap=cap)] == FOUR_TREES
        assert report.exit_code == 0
        assert elapsed < BUDGET_NORMALIZERS, elapsed


def test_criterion_02_ramification():
    with criterion(2, "tame (2,2,2,3) for p in {0} and 5..97, none for p = 2, 3, under 1 s"):
        t0 = time.perf_counter()
        report = run(RunConfig("rh"))
        elapsed = time.perf_counter() - t0
        primes = [0] + [p for p in range(5, 98) if sympy.isprime(p)]
        for p in primes:
            sols = solve_rh(p)
            assert [s.indices() for s in sols] == [(2, 2, 2, 3)] and sols[0].tame, p
            assert report.get(f"rh.p={p:03d}").payload["solutions"] == ["tame (2,2,2,3)"]
        for p in (2, 3):
            assert solve_rh(p) == []
            assert report.get(f"rh.p={p:03d}").payload["solutions"] == []
        assert report.exit_code == 0
        assert elapsed < BUDGET_RH, elapsed


def test_criterion_03_euler_characteristic():
    with criterion(3, "chi = -1/12 for all four amalgams; orders 48/60/72/84 give genus 5/6/7/8"):
        amalgams = standard_amalgams()
        assert len(amalgams) == 4
        for _, a in amalgams:
            assert euler_characteristic(a) == Fraction(-1, 12)
            assert [expected_genus(a, n) for n in (48, 60, 72, 84)] == [5, 6, 7, 8]
        for t in enumerate_normalizer_trees([2, 2, 2, 3]):
            assert euler_characteristic(t) == Fraction(-1, 12)


def test_criterion_04_classification(catalog):
    with criterion(4, "catalog 52/13/50/15 verified; witnesses exactly (i),(iii) in S4xZ2 at g=5 and (i),(ii),(iv) in A5 at g=6; under 10 min"):
        assert catalog.ok and catalog.counts() == {48: 52, 60: 13, 72: 50, 84: 15}
        t0 = time.perf_counter()
        rep = classify_all(catalog, jobs=1)
        elapsed = time.perf_counter() - t0
        assert not rep.conditional and not rep.failures
        assert rep.pairs(5) == {("iii", "S4xZ2"), ("i", "S4xZ2")}
        assert rep.pairs(6) == {("iv", "A5"), ("ii", "A5"), ("i", "A5")}
        assert rep.pairs(7) == set() and rep.pairs(8) == set()
        assert rep.searched == {5: 52, 6: 13, 7: 50, 8: 15}
        assert elapsed < BUDGET_CLASSIFY, elapsed


def test_criterion_05_appendix(catalog):
    with criterion(5, "configuration (a) only in S4xZ2 at order 48, (b) never, none at 72; unique A5 at 60"):
        a1 = verify_appendix_A1(catalog)
        for cid in ("order48-case-a-only-S4xZ2", "order48-case-b-none", "order72-case-a-none",
                    "order72-case-b-none"):
            assert a1.check(cid).passed, a1.check(cid).detail
        hits = [(r["order"], r["case"], r["iso_type"]) for r in a1.rows]
        assert hits == [(48, "a", "S4xZ2")]
        a2 = verify_appendix_A2(catalog)
        assert a2.check("unique-group-with-six-sylow5").passed
        many = [r for r in a2.rows if r["sylow5_count"] > 1]
        assert len(many) == 1 and many[0]["sylow5_count"] == 6 and many[0]["is_A5"]
        lemma_checks = [c for c in a1.checks if c.id.startswith("lemma-")]
        assert lemma_checks and all(c.passed for c in lemma_checks)
        assert a1.passed and a2.passed


def test_criterion_06_bitangents_and_points():
    with criterion(6, "x+-y+-z bitangent with scalar (a+2); 8 tangency points on F identically in a"):
        fam = quartic_family()
        points = []
        for line in four_bitangent_lines():
            b = bitangency(fam, line)
            assert b.scalar == poly("a+2")
            assert len(b.points) == 2
            points += b.points
        assert len(set(points)) == 8
        assert all(p.lies_on(fam.poly) for p in points)


def test_criterion_06_orbits_under_monomial_s4():
    with criterion(6, "tangency points split into two size-4 orbits of the monomial S4"):
        fam = quartic_family()
        points = [p for line in four_bitangent_lines() for p in bitangency(fam, line).points]
        rep = orbit_report(points)
        assert sorted(len(o) for o in rep.full_group_orbits) == [4, 4], \
            [[str(p) for p in o] for o in rep.full_group_orbits]
        w = omega()
        assert any(ProjPoint([1, w, w * w]) in o for o in rep.full_group_orbits)


def test_criterion_06_monomial_stabilizers():
    with criterion(6, "monomial stabilizers S4 (order 24) for the quartic and A4 (order 12) for the sextic"):
        Sq = monomial_stabilizer(quartic_family())
        Ss = monomial_stabilizer(sextic_family())
        assert len(Sq) == 24 and is_isomorphic(Sq, symmetric(4))
        assert len(Ss) == 12 and is_isomorphic(Ss, alternating(4))


def test_criterion_07_degenerate_fibers():
    with criterion(7, "F_2 = Q^2, F_-2 = -(lines), 3 nodes at infinity, t(a), {2,-2} singular, a=-1 flagged"):
        sf = special_fiber_factorizations()
        fam = quartic_family()
        assert fam.fiber(2) == poly("(x^2+y^2+z^2)^2")
        assert fam.fiber(-2) == -poly("(x+y+z)*(-x+y+z)*(x-y+z)*(x+y-z)")
        assert sf.infinity_complete and len(sf.infinity_points) == 3
        assert set(sf.infinity_points) == {ProjPoint([1, 0, 0]), ProjPoint([0, 1, 0]), ProjPoint([0, 0, 1])}
        for a in (0, 1, 3, Fraction(-7, 2), 10):
            assert pencil_parameter(a) == Fraction(a - 2) / (a + 2)
        assert pencil_parameter(2) == 0 and pencil_parameter(-2) == INFINITY
        sp = singular_parameters(fam)
        labels = {f.label() for f in sp.fibers if f.confirmed}
        assert {"2", "-2"} <= labels and sp.charts_agree
        report = run(RunConfig("quartic"))
        rec = report.get("quartic.alpha=-1")
        assert rec.status == "flagged-discrepancy"
        assert set(rec.payload["values_at_(1,1,1)"].values()) == {"0"}
        assert len(rec.payload["values_at_(1,1,1)"]) == 4


def test_criterion_08_pencil():
    with criterion(8, "P_l tangent to the bitangent lines exactly at l = w^2; base points (1:+-1:+-1)"):
        pr = pencil_two_torsion()
        w2 = omega() * omega()
        assert pr.tangency_roots and all(roots == [w2] for roots in pr.tangency_roots.values())
        want = {ProjPoint([1, s, t]) for s in (1, -1) for t in (1, -1)}
        assert {p.over(QQ) if p.field != QQ else p for p in pr.base_points} == want
        assert pr.base_points_expected and all(pr.tangent_members.values())


def test_criterion_09_reduction_graphs():
    with criterion(9, "S4 *_Z4 D4 at infinity and D3 *_Z2 D2 at -2, for base and cover; betti 3 and 5"):
        for conf, name in ((infinity_configuration(), "S4 *_Z4 D4"), (four_lines_configuration(), "D3 *_Z2 D2")):
            q = graph_quotient(conf.graph, conf.action)
            assert q.amalgam_name() == name and q.orbit_sizes_ok
            assert betti_genus(conf.graph) == 3
            cover = conf.cover()
            qc = graph_quotient(cover.graph, cover.action)
            assert qc.amalgam_name() == name and qc.orbit_sizes_ok
            assert betti_genus(cover.graph) == 5


def test_criterion_10_sextic_degenerations():
    with criterion(10, "sextic singular at a = +-5 sqrt5 and a = +-sqrt(-3), under 5 min"):
        t0 = time.perf_counter()
        cands = [QSQRT5(0, 5), QSQRT5(0, -5), QSQRTM3(0, 1), QSQRTM3(0, -1)]
        rep = singular_parameters(sextic_family(), candidates=cands)
        elapsed = time.perf_counter() - t0
        fam = sextic_family()
        for c in cands:
            fib = rep.fiber(c)
            assert fib.confirmed, c
            f = fam.fiber(c)
            assert all(is_singular_at(f, p) for p in fib.points)
        assert elapsed < BUDGET_SEXTIC, elapsed


def test_criterion_11_sylow_congruence(catalog):
    with criterion(11, "Sylow counts = 1 mod p and divide the index, on every catalog group"):
        assert len(catalog.records) == 130
        for rec in catalog.records:
            n = len(rec.group)
            for p in prime_divisors(n):
                P, count = sylow(rec.group, p)
                pk = 1
                while n % (pk * p) == 0:
                    pk *= p
                assert len(P) == pk, (rec.name, p)
                assert count % p == 1 and (n // pk) % count == 0, (rec.name, p, count)


CASES = {"n": 0}


def _count():
    CASES["n"] += 1


@settings(max_examples=400)
@given(st.sampled_from(FIELDS).flatmap(lambda K: st.tuples(*[polys(K, max_deg=2, max_terms=4)] * 3)))
def ring_axioms(fgh):
    _count()
    f, g, h = fgh
    assert (f + g) * h == f * h + g * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert (f - g) + g == f
    if not g.is_zero():
        assert (f * g).divexact(g) == f


@settings(max_examples=350)
@given(nonzero_polys(), nonzero_polys())
def resultant_matches_oracle(f, g):
    _count()
    x = sympy.Symbol("x")
    ours = resultant(f, g, 0)
    m, n = f.degree(0), g.degree(0)
    if m == 0 or n == 0:
        theirs = to_sympy(f) ** n * to_sympy(g) ** m
    else:
        # determinant of sympy's Sylvester matrix; sympy.resultant flips the sign when deg f < deg g
        theirs = sylvester(to_sympy(f), to_sympy(g), x, 1).det()
    assert sympy.expand(to_sympy(ours) - theirs) == 0
    assert resultant(g, f, 0) == ours.scale((-1) ** (m * n))


@settings(max_examples=300)
@given(univariate(QQ, 3), univariate(QQ, 3), univariate(QQ, 2))
def gcd_matches_oracle(a, b, c):
    _count()
    f, g = a * c, b * c
    if f.is_zero() and g.is_zero():
        return
    ours = gcd_univariate(f, g, 0)
    x = sympy.Symbol("x")
    theirs = sympy.Poly(sympy.gcd(to_sympy(f), to_sympy(g)), x, domain="QQ").monic()
    assert sympy.Poly(to_sympy(ours), x, domain="QQ") == theirs
    assert ours.divides(f) and ours.divides(g)
    if not c.is_zero():
        assert c.divides(ours)


def test_criterion_11_exact_algebra_properties():
    with criterion(11, f"ring, resultant and gcd properties over >= {MIN_PROPERTY_CASES} random cases"):
        CASES["n"] = 0
        ring_axioms()
        resultant_matches_oracle()
        gcd_matches_oracle()
        assert CASES["n"] >= MIN_PROPERTY_CASES, CASES["n"]
