import json
import subprocess
import sys

import jsonschema
import pytest

from deltakoszul.cli import EXIT_HORIZON, EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_VALIDATION, main
from deltakoszul.delta import DELTA_KOSZUL, NOT_DETERMINED
from deltakoszul.dsl import parse_algebra
from deltakoszul.family import build_family_algebra
from deltakoszul.report import ReportDocument, validate_report


def _json(capsys, argv):
    assert main(argv + ["--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    validate_report(data)
    return data


def test_resolve_family_json(capsys, fixtures_dir):
    data = _json(capsys, ["resolve", str(fixtures_dir / "a3.alg"), "--steps", "6", "--cap", "10"])
    assert data["delta"]["values"] == [0, 1, 2, 4, 5, 6, 8]
    assert data["good_map"]["is_good"] and data["good_map"]["n0"] == 3
    assert data["classification"] == DELTA_KOSZUL
    assert all(data["checks"].values())
    assert ReportDocument.from_dict(data).to_dict() == data


def test_resolve_koszul_and_cube(capsys, fixtures_dir):
    data = _json(capsys, ["resolve", str(fixtures_dir / "koszul.alg")])
    assert data["good_map"]["n0"] == 1 and data["classification"] == DELTA_KOSZUL
    data = _json(capsys, ["resolve", str(fixtures_dir / "x3.alg"), "--steps", "6"])
    assert data["good_map"]["n0"] == 2 and data["good_map"]["delta_n0"] == 3


def test_resolve_mixed_degrees(capsys, fixtures_dir):
    data = _json(capsys, ["resolve", str(fixtures_dir / "two_loop.alg"), "--steps", "3"])
    assert data["delta"]["values"][2] is None
    assert data["delta"]["intervals"][2] == [2, 3]
    assert data["classification"] == NOT_DETERMINED


def test_resolve_text_lists_conventions(capsys, fixtures_dir):
    assert main(["resolve", str(fixtures_dir / "a3.alg"), "--steps", "4", "--cap", "8"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "classification: " + DELTA_KOSZUL in out
    assert "P_1: (1,1,1) (2,1,2) (3,1,1)" in out
    assert "conventions:" in out and "function-style" in out


def test_short_range_sees_only_the_identity(capsys, fixtures_dir):
    # three steps of A(3) cannot distinguish δ from the identity
    data = _json(capsys, ["resolve", str(fixtures_dir / "a3.alg"), "--steps", "2"])
    assert data["good_map"]["n0"] == 1 and data["good_map"]["checked_through"] == 2


def test_yoneda_json(capsys, fixtures_dir):
    data = _json(capsys, ["yoneda", str(fixtures_dir / "a3.alg"), "--nmax", "6", "--cap", "10"])
    assert [row["dim"] for row in data["ext"]] == [3, 4, 3, 3, 4, 3, 3]
    assert data["minimal_generator_degrees"] == [0, 1, 3]
    spans = {(p["a"], p["b"]): p["span_dim"] for p in data["products"]}
    assert spans[(1, 1)] == 3 and spans[(1, 2)] == 0


def test_family_output_parses(capsys):
    assert main(["family", "--n0", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "recommended cap" in out
    Q, rels = build_family_algebra(4)
    doc = parse_algebra(out)
    assert doc.quiver == Q and doc.relations == rels


def test_family_witnesses(capsys, tmp_path):
    target = tmp_path / "x4.alg"
    assert main(["family", "--d-koszul", "4", "-o", str(target)]) == EXIT_OK
    assert "a*a*a*a" in target.read_text()
    assert main(["family", "--koszul"]) == EXIT_OK
    assert "a*a" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [["family", "--n0", "2"], ["family", "--n0", "1"], ["family", "--d-koszul", "1"]])
def test_family_bad_parameters(capsys, argv):
    assert main(argv) == EXIT_VALIDATION
    assert "invalid input" in capsys.readouterr().err


def test_growth(capsys):
    data = _json(capsys, ["growth", "--n0-range", "3..5"])
    assert [(r["n0"], r["top_degree"]) for r in data["growth"]] == [(3, 3), (4, 4), (5, 5)]


def test_growth_empty_range(capsys):
    data = _json(capsys, ["growth", "--n0-range", "5..4"])
    assert data["growth"] == []


def test_growth_bounds(capsys):
    assert main(["growth", "--n0-range", "2..3"]) == EXIT_VALIDATION
    assert main(["growth", "--n0-range", "3..9"]) == EXIT_VALIDATION
    assert "--bound" in capsys.readouterr().err


def test_exit_codes(capsys, tmp_path, fixtures_dir):
    bad = tmp_path / "bad.alg"
    bad.write_text("vertices: v\narrows:\n  a v -> v\n")
    assert main(["resolve", str(bad)]) == EXIT_PARSE
    bad.write_text("vertices: v\narrows:\n  a: v -> w\n")
    assert main(["resolve", str(bad)]) == EXIT_VALIDATION
    assert main(["resolve", str(tmp_path / "missing.alg")]) == EXIT_USAGE
    assert main(["resolve", str(fixtures_dir / "a3.alg"), "--steps", "6", "--cap", "5"]) == EXIT_HORIZON
    err = capsys.readouterr().err
    assert "step" in err and "--cap" in err
    with pytest.raises(SystemExit) as info:
        main(["resolve"])
    assert info.value.code == EXIT_USAGE


def test_env_field(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("DELTAKOSZUL_FIELD", "prime 11")
    alg = tmp_path / "loop.alg"
    alg.write_text("vertices: v\narrows:\n  a: v -> v\nrelations:\n  a*a\n")
    data = _json(capsys, ["resolve", str(alg), "--steps", "3"])
    assert data["algebra"]["field"] == "prime 11"


def test_schema_rejects_unknown_keys():
    with pytest.raises(jsonschema.ValidationError):
        validate_report({"command": "resolve", "surprise": 1})
    with pytest.raises(ValueError):
        ReportDocument.from_dict({"command": "resolve", "surprise": 1})


def test_console_entry_point(fixtures_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "deltakoszul.cli", "resolve", str(fixtures_dir / "koszul.alg"), "--steps", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "classification" in proc.stdout
