"""CLI surface: grammars, exit codes, report schema."""

import json

import pytest

from singcat.cli import main, parse_module_arg, parse_mf_arg
from singcat.quotient import parse_ring


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_stable_hom_branch_modules(capsys):
    code, report = run_cli(capsys, "stable-hom", "--ring", "Q[z,w]/(z*w)",
                           "--M", "B/(w)", "--N", "B/(z)")
    assert code == 0
    assert report["dim"] == 0
    assert report["schema"] == "singcat-report/1"


def test_stable_hom_self(capsys):
    code, report = run_cli(capsys, "stable-hom", "--ring", "Q[z]/(z^2)",
                           "--M", "A/(z)", "--N", "A/(z)")
    assert code == 0
    assert report["dim"] == 1


def test_groebner_command(capsys):
    code, report = run_cli(capsys, "groebner", "--ring", "Q[x,y]",
                           "--gens", "x^2; x*y+y^2")
    assert code == 0
    assert "y^3" in report["basis"]


def test_toric_cohomology_command(capsys):
    code, report = run_cli(capsys, "toric-cohomology", "--fan", "P2",
                           "--divisor", "[-1,-1,-1]")
    assert code == 0
    assert report["h"] == [0, 0, 1]


def test_intersect_command(capsys):
    code, report = run_cli(capsys, "intersect", "--fan", "blowupP3_2pts",
                           "--divisor", "[0,0,0,-1,1,0]", "--curve", "l")
    assert code == 0
    assert report["intersection"] == 1


def test_mf_and_knorrer_commands(capsys):
    code, report = run_cli(capsys, "mf", "--ring", "Q[z]/(z^2)",
                           "--module", "A/(z)")
    assert code == 0
    assert report["A"] == [["z"]] and report["B"] == [["z"]]
    mf_text = "mf over Q[z] potential z^2 A=[[\"z\"]] B=[[\"z\"]]"
    code, report = run_cli(capsys, "knorrer", "--input", mf_text,
                           "--x", "x", "--y", "y")
    assert code == 0
    assert report["dims_preserved"]
    assert report["size"] == 2


def test_mf_check_invalid(capsys):
    bad = "mf over Q[z] potential z^3 A=[[\"z\"]] B=[[\"z\"]]"
    code, report = run_cli(capsys, "mf", "--input", bad)
    assert code == 1
    assert not report["valid"]


def test_input_error_exit_code(capsys):
    code = main(["stable-hom", "--ring", "Q[z,w]/(z*w", "--M", "B/(w)",
                 "--N", "B/(z)"])
    assert code == 2
    code = main(["toric-cohomology", "--fan", "NoSuchFan", "--divisor", "[1]"])
    assert code == 2


def test_module_grammar():
    ring = parse_ring("Q[z,w]/(z^2+z^3+w^2)")
    M = parse_module_arg(
        ring, 'module over C generators g1,g2 relations [["-w","z"],["z^2+z","w"]]')
    assert M.ngens == 2
    assert len(M.relations) == 2


def test_reproduce_single_claim(capsys):
    code, report = run_cli(capsys, "reproduce", "--claim", "remark-generators",
                           "--m", "3")
    assert code == 0
    claim = report["claims"][0]
    assert claim["verdict"] == "pass"
    assert claim["computed"]["m=3"] == 4


def test_reproduce_unknown_claim(capsys):
    code = main(["reproduce", "--claim", "no-such-claim"])
    assert code == 2


def test_sod_verify_manifest_file(capsys, tmp_path):
    manifest = {
        "fan": "blowupP3_2pts",
        "check": "strong",
        "objects": [
            {"name": "O(C4)", "combo": {"H": -1, "E1": 1, "E2": 0}},
            {"name": "O(C5)", "combo": {"H": 0, "E1": 0, "E2": 0}},
        ],
        "orthogonal_to": [
            {"name": "D1", "combo": {"H": -1, "E1": 1, "E2": 1}},
            {"name": "D2", "combo": {"H": 0, "E1": -1, "E2": 0}},
        ],
    }
    path = tmp_path / "collection.json"
    path.write_text(json.dumps(manifest))
    code, report = run_cli(capsys, "sod-verify", "--manifest", str(path))
    assert code == 0
    assert report["pass"]
    assert len(report["report"]["orthogonality"]["rows"]) == 4


def test_ncdef_command(capsys, tmp_path):
    out = tmp_path / "node.json"
    code = main(["ncdef", "--model", "node", "--max-iter", "3",
                 "--report", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["outcome"] == "non-terminated"
    assert report["dim_R_trajectory"] == [1, 3, 5]


def test_ncdef_from_module_file(capsys, tmp_path):
    mods = tmp_path / "modules.txt"
    mods.write_text("# the point module of the node\nk/(x, y)\n")
    out = tmp_path / "run.json"
    code = main(["ncdef", "--ring", "Q[x,y]/(x*y)", "--modules", str(mods),
                 "--max-iter", "2", "--report", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["dim_R_trajectory"] == [1, 3]


def test_user_fan_grammar(capsys):
    fan_text = "fan rank=2 rays=[[1,0],[0,1],[-1,-1]] cones=[[0,1],[1,2],[0,2]]"
    code, report = run_cli(capsys, "toric-cohomology", "--fan", fan_text,
                           "--divisor", "[-1,-1,-1]")
    assert code == 0
    assert report["h"] == [0, 0, 1]
