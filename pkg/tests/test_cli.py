import json
import math
import os

import pytest

from sectorwb import catalog
from sectorwb.cli import main


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    for key in catalog.builtin_keys():
        assert key in out


def test_angle_cocommuting_json(capsys):
    assert main(["angle", "cocommuting", "--pn", "3", "--mp", "2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"command", "inputs", "results", "residuals"}
    assert doc["command"] == "angle cocommuting"
    assert doc["results"]["angle_radians"] == pytest.approx(math.pi / 3, abs=1e-10)
    assert "hypotheses assumed" in doc["results"]["note"]


def test_json_round_trips(capsys):
    assert main(["--json", "haagerup", "qsystem"]) == 0
    raw = capsys.readouterr().out
    doc = json.loads(raw)
    assert json.dumps(doc, indent=2, sort_keys=True) == raw.rstrip("\n")
    assert len(doc["results"]["solutions"]) == 2
    sol = doc["results"]["solutions"][0]
    assert set(sol["a"]) == {"re", "im"}
    assert doc["residuals"]["s0_component"] < 1e-9


def test_degrees_flag(capsys):
    assert main(["angle", "bound", "--pn", "4", "--degrees"]) == 0
    out = capsys.readouterr().out
    assert "deg" in out
    assert f"{math.degrees(math.acos(1 / 3)):.6f}"[:6] in out


def test_hom_command(capsys):
    assert main(["hom", "haagerup_even", "t2*r*r", "t2 + r"]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_validate_detects_corruption(tmp_path, capsys):
    doc = catalog.ring_to_dict(catalog.builtin("d6_even"))
    doc["tensor"]["r,r"]["r1"] = 5
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    assert main(["validate", "--file", str(p)]) == 1
    assert "error(s)" in capsys.readouterr().out


def test_validate_good_ring(capsys):
    assert main(["validate", "haagerup_even"]) == 0
    assert "ok" in capsys.readouterr().out


def test_parse_error_is_usage_error(capsys):
    assert main(["cuntz", "normalize", "T0*"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["decompose", "haagerup_even", "t*bogus"]) == 2
    assert main(["wzw", "ghj", "--graph", "D5"]) == 2
    assert main(["dims", "su2"]) == 2  # missing --k


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["angle", "cocommuting", "--pn", "3"])
    assert exc.value.code == 2


def test_classify_all(capsys):
    assert main(["classify", "--all"]) == 0
    out = capsys.readouterr().out
    assert "7/7 passing" in out
    assert main(["classify", "--case", "d6a4"]) == 0
    assert main(["classify", "--exclusions"]) == 0
    assert main(["classify", "--case", "zzz"]) == 2


def test_haagerup_verify(capsys):
    assert main(["haagerup", "verify"]) == 0
    out = capsys.readouterr().out
    assert "all relations hold" in out
    assert "isometry_relations" in out


def test_cuntz_normalize(capsys):
    assert main(["cuntz", "normalize", "T0^*T0 + S0^*T1"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["--json", "--out", str(target),
                 "wzw", "asymptotic", "--n", "7"]) == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(target.read_text())
    assert len(doc["results"]["angles_radians"]) == 2


def test_tolerance_flag_reaches_library(capsys):
    try:
        # |s| = 1.2 violates the default bound but passes at tolerance 0.5
        assert main(["angle", "candidates", "--d", "3", "--s", "1.2"]) == 2
        assert main(["--tolerance", "0.5",
                     "angle", "candidates", "--d", "3", "--s", "1.2"]) == 0
    finally:
        os.environ.pop("SWB_TOLERANCE", None)


def test_dims_su2(capsys):
    assert main(["dims", "su2", "--k", "2"]) == 0
    out = capsys.readouterr().out
    assert "l1" in out and "1.41421356237" in out
