import json
import re
import subprocess
import sys
from pathlib import Path

import pytest

from lame_atlas.cli import checks
from lame_atlas.cli.main import COMMANDS, RunConfig, main, parse_args, run
from lame_atlas.cli.report import ANCHORS, SCHEMA_VERSION, CheckRecord, VerificationReport

README = Path(__file__).resolve().parents[1] / "README.md"


def run_json(argv, capsys):
    code = main(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_normalizers_command(capsys):
    code = main(["normalizers"])
    out = capsys.readouterr().out
    assert code == 0
    assert "(i) D2 *_Z2 D3; (ii) D3 *_Z3 A4; (iii) D4 *_Z4 S4; (iv) D5 *_Z5 A5" in out
    assert out.splitlines()[-1] == "3 checks: 3 pass"


def test_rh_primes(capsys):
    code, rep = run_json(["rh", "--p", "2", "--p", "3", "--p", "7"], capsys)
    assert code == 0
    sols = {c["id"]: c["payload"]["solutions"] for c in rep["checks"] if c["id"].startswith("rh.p=")}
    assert sols == {"rh.p=002": [], "rh.p=003": [], "rh.p=007": ["tame (2,2,2,3)"]}
    assert rep["schema_version"] == SCHEMA_VERSION == 1


def test_quartic_flags_alpha_minus_one(capsys):
    code, rep = run_json(["quartic"], capsys)
    assert code == 0
    by_id = {c["id"]: c for c in rep["checks"]}
    assert by_id["quartic.alpha=-1"]["status"] == "flagged-discrepancy"
    assert by_id["quartic.tangency-orbits"]["status"] == "flagged-discrepancy"
    assert by_id["quartic.bitangents"]["status"] == "pass"


def test_all_is_deterministic_across_jobs(capsys):
    main(["all", "--format", "json"])
    first = capsys.readouterr().out
    main(["all", "--format", "json", "--jobs", "2"])
    second = capsys.readouterr().out
    assert first == second
    rep = json.loads(first)
    assert rep["counts"]["fail"] == 0 and rep["counts"]["conditional"] == 0
    ids = [c["id"] for c in rep["checks"]]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)


def test_missing_catalog_is_conditional(tmp_path, capsys):
    code, rep = run_json(["classify", "--catalog", str(tmp_path / "none.txt")], capsys)
    assert code == 0
    assert rep["warnings"] and "not found" in rep["warnings"][0]
    assert {c["status"] for c in rep["checks"]} == {"conditional"}
    code, rep = run_json(["appendix", "--catalog", str(tmp_path / "none.txt")], capsys)
    assert code == 0 and {c["status"] for c in rep["checks"]} == {"conditional"}


def test_catalog_env_var(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LAME_ATLAS_CATALOG", str(tmp_path / "absent.txt"))
    code, rep = run_json(["catalog", "verify"], capsys)
    assert code == 0 and rep["checks"][0]["status"] == "conditional"


def test_catalog_verify(capsys):
    code, rep = run_json(["catalog", "verify"], capsys)
    assert code == 0
    assert rep["checks"][0]["status"] == "pass"
    assert "48:52 60:13 72:50 84:15 OK" in rep["checks"][0]["summary"]


@pytest.mark.parametrize("argv", [["bogus"], ["rh", "--p", "4"], ["classify", "--genus", "9"],
                                  ["normalizers", "--nope"], ["catalog"], ["normalizers", "--n-cap", "2"],
                                  ["classify", "--jobs", "0"], []])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_parse_args_builds_config():
    cfg = parse_args(["classify", "--genus", "6", "--catalog", "data/groups.txt"])
    assert cfg == RunConfig("classify", catalog="data/groups.txt", genera=(6,))
    cfg = parse_args(["all", "--format", "json"])
    assert cfg.command == "all" and cfg.fmt == "json"


def test_run_config_rejects_unknown_keys():
    with pytest.raises(ValueError):
        RunConfig("rh", extra={"colour": "blue"})
    with pytest.raises(ValueError):
        RunConfig("rh", shape_cap=0)


def test_crashing_check_fails_the_run(monkeypatch):
    def boom(*args):
        raise RuntimeError("invariant breached")

    monkeypatch.setattr(checks, "sextic_checks", boom)
    rep = run(RunConfig("sextic"))
    assert rep.exit_code == 1
    assert rep.records[0].status == "fail" and "invariant breached" in rep.records[0].summary


def test_help_lists_anchors(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    text = capsys.readouterr().out
    for name, (_, anchors) in COMMANDS.items():
        assert name in text
        for a in anchors:
            assert a in text
    with pytest.raises(SystemExit):
        main(["quartic", "--help"])
    assert "anchors: quartic-bitangents" in capsys.readouterr().out


def test_report_invariants():
    rep = VerificationReport("x")
    rep.add(CheckRecord("a", "rh-type", "pass", ""))
    with pytest.raises(ValueError):
        rep.add(CheckRecord("a", "rh-type", "pass", ""))
    with pytest.raises(ValueError):
        CheckRecord("b", "no-such-anchor", "pass", "")
    with pytest.raises(ValueError):
        CheckRecord("b", "rh-type", "maybe", "")
    rep.add(CheckRecord("b", "rh-type", "flagged-discrepancy", ""))
    assert rep.exit_code == 0
    rep.add(CheckRecord("c", "rh-type", "fail", ""))
    assert rep.exit_code == 1


def test_every_anchor_is_documented_in_readme():
    text = README.read_text()
    table = set(re.findall(r"^\| `([a-z0-9-]+)` \|", text, re.M))
    assert table == set(ANCHORS)
    used = {a for _, anchors in COMMANDS.values() for a in anchors}
    assert used <= table


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lame_atlas.cli", "normalizers", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "normalizers"
    proc = subprocess.run([sys.executable, "-m", "lame_atlas.cli", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
