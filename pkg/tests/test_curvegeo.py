from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lame_atlas.curvegeo import (
    INFINITY,
    CurveFamily,
    DualGraph,
    LineIsComponent,
    NotBitangent,
    ProjPoint,
    all_monomial_maps,
    as_map,
    as_perm,
    betti_genus,
    bitangency,
    double_cover,
    elem_text,
    even_maps,
    fermat_cubic,
    first_orbit,
    four_bitangent_lines,
    four_lines_configuration,
    graph_quotient,
    group_label,
    infinity_configuration,
    is_singular_at,
    monomial_group,
    monomial_stabilizer,
    orbit_report,
    parse_action,
    parse_graph,
    pencil_parameter,
    pencil_two_torsion,
    point_orbits,
    preserves,
    quartic_family,
    sextic_family,
    single_edge_fixture,
    singular_parameters,
    singular_points,
    special_fiber_factorizations,
    splitting_field,
)
from lame_atlas.curvegeo.families import poly
from lame_atlas.exactalg import QI, QOMEGA, QQ, QSQRT5, FieldElem, MultiPoly, omega
from lame_atlas.permgrp import alternating, cyclic, dihedral, direct_product, is_isomorphic, symmetric

w = omega()
SPEC_GRAPH = "graph { v: c,e1,e2,e3; e: c-e1, c-e1, c-e2, c-e2, c-e3, c-e3 }"

# -- families and points


def test_family_validation():
    with pytest.raises(ValueError):
        CurveFamily(poly("x^2 + y"), 2, "not homogeneous")
    with pytest.raises(ValueError):
        CurveFamily(poly("a^2*x^2"), 2, "quadratic in a")
    with pytest.raises(ValueError):
        CurveFamily(poly("x^3"), 2, "wrong degree")
    fam = quartic_family()
    assert fam.infinity_form() == poly("x^2*y^2+y^2*z^2+z^2*x^2")
    assert fam.base_form() == poly("x^4+y^4+z^4")


def test_projective_points():
    assert ProjPoint([2, 4, 6]) == ProjPoint([1, 2, 3])
    assert ProjPoint([0, -3, 3]) == ProjPoint([0, 1, -1])
    with pytest.raises(ValueError):
        ProjPoint([0, 0, 0])
    p = ProjPoint([w, w * w, 1])
    assert p == ProjPoint([1, w, w * w])
    assert p.conjugate() == ProjPoint([1, w * w, w])
    assert ProjPoint([1, 1, 1]).over(QI).field is QI
    with pytest.raises(ValueError):
        p.over(QI)


def test_field_names():
    assert splitting_field(-3) is QOMEGA
    assert splitting_field(20) is QSQRT5
    assert elem_text(w * w) == "w^2"
    assert elem_text(-(w * w)) == "-w^2"
    assert elem_text(QSQRT5(0, 5)) == "5*sqrt5"
    assert elem_text(FieldElem(QQ, Fraction(-1, 2))) == "-1/2"


def test_singular_point_test():
    nodal = poly("y^2*z - x^3 - x^2*z")
    assert is_singular_at(nodal, ProjPoint([0, 0, 1]))
    assert not is_singular_at(nodal, ProjPoint([0, 1, 0]))
    pts, complete = singular_points(nodal)
    assert pts == [ProjPoint([0, 0, 1])] and complete
    assert singular_points(poly("x^2+y^2-z^2")) == ([], True)


# -- bitangents and tangency points


def test_bitangent_scalars_are_a_plus_2():
    fam = quartic_family()
    for line in four_bitangent_lines():
        b = bitangency(fam, line)
        assert b.scalar == poly("a+2")
        assert all(p.field is QOMEGA and p.lies_on(fam.poly) for p in b.points)
        assert all(line.over(QOMEGA).evaluate(list(p.coords) + [0]) == 0 for p in b.points)


def test_non_bitangent_and_component_lines():
    fam = quartic_family()
    with pytest.raises(NotBitangent):
        bitangency(fam, poly("x"))
    with pytest.raises(NotBitangent):
        bitangency(fam, poly("x + 2*y + 3*z"))
    with pytest.raises(LineIsComponent):
        bitangency(fam.fiber(-2), poly("x+y+z"))


def test_tangency_orbits_derived():
    fam = quartic_family()
    points = [p for line in four_bitangent_lines() for p in bitangency(fam, line).points]
    rep = orbit_report(points)
    # all 24 monomial maps: one orbit; the 12 even ones: two conjugate orbits of 4
    assert [len(o) for o in rep.full_group_orbits] == [8]
    assert sorted(len(o) for o in rep.even_subgroup_orbits) == [4, 4]
    assert rep.galois_swaps_even_orbits and rep.first_orbit_matches
    assert set(first_orbit()) in [set(o) for o in rep.even_subgroup_orbits]


def test_points_from_different_lines_share_an_orbit():
    # (1:w:w^2) on x+y+z and (1:w:-w^2) on x+y-z are related by z -> -z, an even map
    flip = next(m for m in all_monomial_maps() if m.perm == (0, 1, 2) and m.signs == (1, 1, -1))
    assert flip.apply_point(ProjPoint([1, w, w * w])) == ProjPoint([1, w, -(w * w)])
    assert flip.is_even()


def test_point_orbits_rejects_unstable_sets():
    with pytest.raises(ValueError):
        point_orbits([ProjPoint([1, 2, 3])], all_monomial_maps())


# -- monomial symmetry


def test_monomial_group_is_s4():
    G = monomial_group()
    assert len(G) == 24 and is_isomorphic(G, symmetric(4))
    assert len(even_maps()) == 12


@settings(max_examples=100)
@given(st.sampled_from(all_monomial_maps()), st.sampled_from(all_monomial_maps()),
       st.tuples(*[st.integers(-5, 5)] * 3).filter(any))
def test_monomial_composition(m1, m2, coords):
    p = ProjPoint(list(coords))
    assert m1.compose(m2).apply_point(p) == m1.apply_point(m2.apply_point(p))
    assert as_map(as_perm(m1)) == m1
    assert as_perm(m1.compose(m2)) == as_perm(m1) * as_perm(m2)


def test_stabilizers():
    assert is_isomorphic(monomial_stabilizer(quartic_family()), symmetric(4))
    S = monomial_stabilizer(sextic_family())
    assert len(S) == 12 and is_isomorphic(S, alternating(4))
    F = monomial_stabilizer(fermat_cubic())
    assert len(F) == 6 and is_isomorphic(F, symmetric(3))
    odd = next(m for m in all_monomial_maps() if not m.is_even())
    assert not preserves(odd, sextic_family().poly)


# -- special fibers and singular parameters


def test_special_fibers():
    sf = special_fiber_factorizations()
    assert sf.double_conic and sf.four_lines and sf.pencil_identity and sf.infinity_complete
    assert len(sf.infinity_points) == 3
    assert sf.t_values == {"2": 0, "-2": INFINITY, "0": -1, "inf": 1}


@settings(max_examples=50)
@given(st.fractions(min_value=-50, max_value=50, max_denominator=7).filter(lambda a: a != -2))
def test_pencil_parameter_identity(alpha):
    # 4 F_a = (a + 2) Q^2 + (a - 2) L, so F_a is proportional to Q^2 + t L
    t = pencil_parameter(alpha)
    fam = quartic_family()
    Q2 = poly("(x^2+y^2+z^2)^2")
    L = poly("(x+y+z)*(-x+y+z)*(x-y+z)*(x+y-z)")
    assert fam.fiber(alpha).scale(FieldElem(QQ, 4) / (alpha + 2)) == Q2 + L.scale(FieldElem(QQ, t))


def test_quartic_singular_parameters():
    rep = singular_parameters(quartic_family())
    assert rep.mode == "elimination" and rep.charts_agree
    assert sorted(f.label() for f in rep.fibers if f.confirmed) == ["-1", "-2", "2", INFINITY]
    assert len(rep.fiber(-2).points) == 6 and rep.fiber(-2).complete
    assert set(rep.fiber(-1).points) == {ProjPoint([1, s, t]) for s in (1, -1) for t in (1, -1)}
    assert len(rep.fiber(INFINITY).points) == 3


def test_sextic_candidates_and_controls():
    cands = [QSQRT5(0, 5), QSQRT5(0, -5), FieldElem(splitting_field(-3), 1, 2)]
    rep = singular_parameters(sextic_family(), candidates=cands + [0, 1, 2])
    assert rep.mode == "per-candidate"
    assert set(rep.universal_points) == {ProjPoint([1, s, t]) for s in (1, -1) for t in (1, -1)}
    assert all(rep.fiber(c).confirmed for c in cands)
    assert not any(rep.fiber(c).confirmed for c in (0, 1, 2))


# -- pencil


def test_pencil_two_torsion():
    pr = pencil_two_torsion()
    assert pr.through_points and pr.base_points_expected
    assert all(r == [w * w] for r in pr.tangency_roots.values())
    assert pr.literal_members_equal


# -- graphs


def test_parse_graph_fixture():
    g = parse_graph(SPEC_GRAPH)
    assert g.vertices == ["c", "e1", "e2", "e3"] and len(g.edges) == 6
    assert betti_genus(g) == 3
    assert parse_graph(g.to_text()) == g
    with pytest.raises(ValueError):
        parse_graph("graph { v: a,b; e: a-c }")
    with pytest.raises(ValueError):
        parse_graph("graph { v: a,b; e: }")
    with pytest.raises(ValueError):
        DualGraph(["a", "a"], [])


def test_action_on_fixture():
    g = parse_graph(SPEC_GRAPH)
    a = parse_action(g, "action { gen v=(2,3,4) e=(1,3,5)(2,4,6); gen v=() e=(1,2)(3,4)(5,6) }")
    assert len(a.group) == 6
    q = graph_quotient(g, a)
    assert q.amalgam_name() == "Z6 *_1 Z2" and q.orbit_sizes_ok
    with pytest.raises(ValueError):
        parse_action(g, "action { gen v=(1,2) e=() }")


def test_edge_inversions_rejected():
    g = parse_graph("graph { v: a,b; e: a-b }")
    with pytest.raises(ValueError):
        parse_action(g, "action { gen v=(1,2) e=() }")


def test_trivial_fixture():
    g, a = single_edge_fixture()
    q = graph_quotient(g, a)
    assert q.is_single_edge and q.amalgam_name() == "1 *_1 1"


def test_group_labels():
    assert group_label(cyclic(4)) == "Z4"
    assert group_label(dihedral(2)) == "D2"
    assert group_label(symmetric(4)) == "S4"
    assert group_label(direct_product(symmetric(4), cyclic(2))) == "order-48"


@pytest.mark.parametrize("make,name,label", [(infinity_configuration, "S4 *_Z4 D4", "iii"),
                                             (four_lines_configuration, "D3 *_Z2 D2", "i")])
def test_reduction_configurations(make, name, label):
    from lame_atlas.classify import standard_amalgams
    conf = make()
    amalgam = dict(standard_amalgams())[label]
    S4xZ2 = direct_product(symmetric(4), cyclic(2))
    for g, act, betti, order in ((conf.graph, conf.action, 3, 24), (None, None, 5, 48)):
        if g is None:
            cover = conf.cover()
            g, act = cover.graph, cover.action
            assert is_isomorphic(act.group, S4xZ2)
            deck = act.group.index[cover.deck]
            assert all(act.group.mul(deck, x) == act.group.mul(x, deck) for x in range(len(act.group)))
        q = graph_quotient(g, act)
        assert betti_genus(g) == betti and len(act.group) == order
        assert q.amalgam_name() == name and q.matches_amalgam(amalgam)
        # orbit-stabilizer on every vertex and edge
        for kind, n in (("v", len(g.vertices)), ("e", len(g.edges))):
            for i in range(n):
                assert len(act.orbit(kind, i)) * len(act.stabilizer(kind, i)) == order


def test_double_cover_needs_compatible_voltages():
    conf = infinity_configuration()
    assert double_cover(conf.action, conf.voltages).graph.vertices[0] == "c+"
    with pytest.raises(ValueError):
        double_cover(conf.action, [1] + [0] * (len(conf.graph.edges) - 1))
