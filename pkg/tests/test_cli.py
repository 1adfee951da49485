"""Command line contract: golden output, exit codes, determinism."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from shiftrigid.cli import main

FIXTURES = Path(__file__).parent / "fixtures"

EXPECTED_ALPHA_N1_TSV = """\
ninf..0o;ninf..0c\t0L:ninf
ninf..0o;ninf..0c\t0R:1o
ninf..0o;0o..1o\t0L:0o
ninf..0o;0o..1o\t0R:1o
ninf..0c;0c..0c\t0L:ninf
ninf..0c;0c..0c\t0R:1c
0o..pinf;0c..pinf\t0L:0o
0o..pinf;0c..pinf\t0R:pinf
0o..pinf;0o..1o\t0L:0o
0o..pinf;0o..1o\t0R:1o
0c..pinf;0c..0c\t0L:0c
0c..pinf;0c..0c\t0R:pinf
"""


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--period", "2")
    assert code == 0
    assert out == "6\n"
    code, out, _ = run(capsys, "count", "--period", "5")
    assert code == 0
    assert out == "252\n"


def test_count_rejects_bad_period(capsys):
    code, _, err = run(capsys, "count", "--period", "0")
    assert code == 2
    assert "error" in err


def test_enumerate_tsv(capsys):
    code, out, _ = run(capsys, "enumerate", "--period", "2", "--format", "tsv")
    assert code == 0
    assert out == (
        "lray:0\tlray:1\n"
        "lray:0\tfin:0:1\n"
        "lray:1\tfin:1:1\n"
        "rray:0\trray:1\n"
        "rray:0\tfin:0:1\n"
        "rray:1\tfin:1:1\n"
    )


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--period", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["m"] == 3
    assert payload["count"] == 20
    assert len(payload["sets"]) == 20
    assert all(len(s["orbits"]) == 3 for s in payload["sets"])


def test_enumerate_alpha_tsv_golden(capsys):
    code, out, _ = run(capsys, "enumerate-alpha", "--n", "1", "--format", "tsv")
    assert code == 0
    assert out == EXPECTED_ALPHA_N1_TSV


def test_enumerate_alpha_json_matches_frozen_census(capsys):
    code, out, _ = run(capsys, "enumerate-alpha", "--n", "1")
    assert code == 0
    payload = json.loads(out)
    with open(FIXTURES / "example_alpha_n1.json") as fh:
        assert payload["classes"] == json.load(fh)
    assert payload["count"] == payload["formula"] == 12


def test_ext_with_window(capsys):
    code, out, _ = run(capsys, "ext", "--i=0,2", "--j=1,3", "--window=-2,6")
    assert code == 0
    assert out == "ext 1\nwindow-hom 0\nwindow-ext 1\n"


def test_ext_window_too_tight_fails(capsys):
    # the window clips both intervals to [1,2]; the matrix answer for a pair
    # of equal intervals is 0, which contradicts the closed form, and the
    # disagreement must surface as a failure
    code, out, err = run(capsys, "ext", "--i=0,2", "--j=1,3", "--window=1,2")
    assert code == 1
    assert "ext 1" in out
    assert "disagrees" in err


def test_ext_rays(capsys):
    code, out, _ = run(capsys, "ext", "--i", "ninf,2", "--j", "1,pinf")
    assert code == 0 and out == "ext 1\n"
    code, out, _ = run(capsys, "ext", "--i", "1,pinf", "--j", "0,3")
    assert code == 0 and out == "ext 0\n"


def test_ext_rejects_bad_tokens(capsys):
    code, _, err = run(capsys, "ext", "--i", "foo,2", "--j", "0,1")
    assert code == 2 and "bad lo endpoint" in err
    code, _, err = run(capsys, "ext", "--i", "0,1,2", "--j", "0,1")
    assert code == 2 and "want LO,HI" in err
    code, _, err = run(capsys, "ext", "--i", "pinf,2", "--j", "0,1")
    assert code == 2


def test_check_rigid(tmp_path, capsys):
    with open(FIXTURES / "example_alpha_n1.json") as fh:
        rep = json.load(fh)[0]
    f = tmp_path / "rep.json"
    f.write_text(json.dumps(rep))
    code, out, _ = run(capsys, "check", "--file", str(f))
    assert code == 0
    assert out == "valid rigid\n"


def test_check_nonrigid(tmp_path, capsys):
    rep = {
        "n": 1,
        "orbits": [
            {"lo": "ninf", "hi": 0, "hi_closed": False},
            {"lo": 0, "lo_closed": False, "hi": 1, "hi_closed": False},
        ],
        "families": [{"gap": 0, "dir": "right", "far": 1, "far_closed": True}],
    }
    f = tmp_path / "rep.json"
    f.write_text(json.dumps(rep))
    code, out, err = run(capsys, "check", "--file", str(f))
    assert code == 1
    assert out == "valid nonrigid\n"
    assert "collide" in err


def test_check_invalid(tmp_path, capsys):
    rep = {"n": 1, "orbits": [], "families": [{"gap": 0, "dir": "right", "far": "3/2", "far_closed": False}]}
    f = tmp_path / "rep.json"
    f.write_text(json.dumps(rep))
    code, out, err = run(capsys, "check", "--file", str(f))
    assert code == 2
    assert out == "invalid\n"
    assert "not a grid point" in err


def test_check_lattice_payloads(tmp_path, capsys):
    f = tmp_path / "set.json"
    f.write_text(json.dumps({"m": 2, "orbits": [{"kind": "lray", "d": 0}, {"kind": "lray", "d": 1}]}))
    code, out, _ = run(capsys, "check", "--file", str(f))
    assert code == 0 and out == "valid rigid\n"
    f.write_text(json.dumps({"m": 2, "orbits": [{"kind": "fin", "a": 0, "len": 2}]}))
    code, out, err = run(capsys, "check", "--file", str(f))
    assert code == 1 and out == "valid nonrigid\n" and "translates" in err


def test_check_unusable_files(tmp_path, capsys):
    f = tmp_path / "junk.json"
    f.write_text("not json")
    code, out, _ = run(capsys, "check", "--file", str(f))
    assert code == 2 and out == "invalid\n"
    f.write_text(json.dumps({"what": "ever"}))
    code, out, _ = run(capsys, "check", "--file", str(f))
    assert code == 2 and out == "invalid\n"
    code, _, err = run(capsys, "check", "--file", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_verify_rows(capsys):
    code, out, _ = run(capsys, "verify", "--n-min", "1", "--n-max", "2")
    assert code == 0
    assert out == "1  12  12  PASS\n2  280  280  PASS\n"


def test_verify_rejects_bad_range(capsys):
    code, _, err = run(capsys, "verify", "--n-min", "2", "--n-max", "1")
    assert code == 2 and "n-min" in err


def test_jobs_do_not_change_output(capsys):
    _, seq, _ = run(capsys, "enumerate-alpha", "--n", "2")
    code, par, _ = run(capsys, "enumerate-alpha", "--n", "2", "--jobs", "2")
    assert code == 0
    assert par == seq


def test_environment_seed_is_ignored(capsys, monkeypatch):
    monkeypatch.setenv("TOOL_SEED", "12345")
    _, first, _ = run(capsys, "enumerate-alpha", "--n", "1")
    monkeypatch.setenv("TOOL_SEED", "99999")
    _, second, _ = run(capsys, "enumerate-alpha", "--n", "1")
    assert first == second


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--period", "two"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--period", "2", "--format", "xml"])
    assert exc.value.code == 2
