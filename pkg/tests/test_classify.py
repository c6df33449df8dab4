import json

import pytest

from lame_atlas.classify import (
    CATALOG_ENV,
    CatalogIntegrityError,
    CatalogParseError,
    classify_all,
    configuration,
    configuration_witnesses,
    default_catalog_path,
    find_quotients,
    iso_type,
    load_catalog,
    reference_groups,
    standard_amalgams,
    verify_appendix_lemmas,
)
from lame_atlas.permgrp import alternating, cyclic, dihedral, direct_product, symmetric

S4xZ2 = direct_product(symmetric(4), cyclic(2))


def write(tmp_path, text):
    p = tmp_path / "groups.txt"
    p.write_text(text)
    return p


def test_bundled_catalog_counts(catalog):
    assert catalog.counts() == {48: 52, 60: 13, 72: 50, 84: 15}
    assert catalog.ok and not catalog.extras
    assert catalog.summary() == "48:52 60:13 72:50 84:15 OK"
    assert catalog.by_name("48.48/C2xS4").group.name == "48.48/C2xS4"


def test_env_var_selects_catalog(tmp_path, monkeypatch):
    p = write(tmp_path, "group order=6 name=S3 degree=3 gens=(1,2,3);(1,2)\n")
    monkeypatch.setenv(CATALOG_ENV, str(p))
    assert default_catalog_path() == str(p)
    cat = load_catalog(strict=False, expected={6: 1})
    assert cat.ok and cat.counts() == {6: 1}


@pytest.mark.parametrize("line", [
    "grp order=6 name=S3 degree=3 gens=(1,2,3)",
    "group order=6 name=S3 degree=3",
    "group order=six name=S3 degree=3 gens=(1,2,3)",
    "group order=6 name=S3 degree=3 gens=(1,2,3) extra",
    "group order=6 name=S3 degree=3 gens=(1,2,7)",
])
def test_parse_errors_carry_line_numbers(tmp_path, line):
    p = write(tmp_path, "# header\n" + line + "\n")
    with pytest.raises(CatalogParseError) as exc:
        load_catalog(p, strict=False, expected={6: 1})
    assert "2" in str(exc.value)


def test_integrity_problems(tmp_path):
    text = ("group order=6 name=a degree=3 gens=(1,2,3);(1,2)\n"
            "group order=6 name=b degree=3 gens=(1,3,2);(2,3)\n"
            "group order=5 name=c degree=3 gens=(1,2,3)\n")
    p = write(tmp_path, text)
    with pytest.raises(CatalogIntegrityError):
        load_catalog(p, expected={6: 2})
    cat = load_catalog(p, strict=False, expected={6: 2})
    assert not cat.ok
    assert any("isomorphic" in msg for msg in cat.problems)
    assert any("declares order 5" in msg for msg in cat.problems)


def test_missing_catalog_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_catalog(tmp_path / "absent.txt")


def test_find_quotients_of_amalgam_i():
    amalgams = dict(standard_amalgams())
    ws = find_quotients(amalgams["i"], S4xZ2, "S4xZ2")
    assert ws and all(not w.revalidate() for w in ws)
    assert {w.genus for w in ws} == {5}
    assert find_quotients(amalgams["i"], alternating(5), "A5")
    assert find_quotients(amalgams["iii"], alternating(5)) == []
    assert find_quotients(amalgams["iv"], S4xZ2) == []
    assert {w.genus for w in find_quotients(amalgams["i"], symmetric(4))} == {3}
    # order not divisible by |D2|
    assert find_quotients(amalgams["i"], dihedral(9)) == []


def test_witness_revalidation_catches_tampering():
    a = dict(standard_amalgams())["iii"]
    w = find_quotients(a, S4xZ2)[0]
    w.genus = 6
    assert "genus does not match 1 - |G| chi" in w.revalidate()


def test_iso_types():
    assert iso_type(direct_product(cyclic(2), symmetric(4)), "?") == "S4xZ2"
    assert iso_type(dihedral(3), "fallback") == "fallback"
    assert set(reference_groups()) >= {"S4xZ2", "A5"}


def test_configurations():
    assert configuration("a").name == "D3 & D2 over Z2"
    with pytest.raises(ValueError):
        configuration("c")
    ws = configuration_witnesses("a", S4xZ2)
    assert ws
    assert configuration_witnesses("b", S4xZ2) == []
    checks = verify_appendix_lemmas(S4xZ2, ws[0])
    assert all(c.passed for c in checks), [c for c in checks if not c.passed]


def test_classification_is_independent_of_jobs(catalog):
    one = classify_all(catalog, genera=(5,), jobs=1)
    two = classify_all(catalog, genera=(5,), jobs=2)
    assert json.dumps(one.to_json(), sort_keys=True) == json.dumps(two.to_json(), sort_keys=True)
    assert one.pairs(5) == {("i", "S4xZ2"), ("iii", "S4xZ2")}


def test_incomplete_catalog_is_conditional(tmp_path, catalog):
    lines = [f"group order={r.order} name={r.name} degree={r.degree} gens={r.gens_text}"
             for r in catalog.of_order(48)[:-1]]
    p = write(tmp_path, "\n".join(lines) + "\n")
    cat = load_catalog(p, strict=False)
    assert not cat.complete_for(48)
    rep = classify_all(cat, genera=(5,))
    assert rep.conditional == [5]
