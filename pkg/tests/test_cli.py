import json
import subprocess
import sys

import pytest

from conftest import FIGURE_EIGHT_PD, HOPF_PD
from twistedtorsion import Presentation, cyclotomic_field, parse_laurent
from twistedtorsion.cli import main

TREFOIL = {"braid": {"strands": "2", "word": ["1", "1", "1"]}}
BRAID_RHO = {"dim": "2", "images": {"x1": [["1", "1"], ["0", "1"]], "x2": [["1", "0"], ["-1", "1"]]}}


def run(tmp_path, capsys, job, *args):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(job))
    code = main(["--input", str(path), *args])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(tmp_path, capsys, job, *args):
    code, out, _ = run(tmp_path, capsys, job, "--json", *args)
    return code, json.loads(out)


def test_compute_trefoil(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, TREFOIL)
    assert code == 0
    assert out.splitlines()[0] == "(t^2 - t + 1)/(t - 1)"


def test_compute_unknot_and_hopf(tmp_path, capsys):
    code, data = run_json(tmp_path, capsys, {"presentation": {"generators": ["a"], "relators": []}})
    assert code == 0 and data["torsion"] == "1/(t - 1)"
    code, data = run_json(tmp_path, capsys, {"pd": HOPF_PD})
    assert code == 0 and data["torsion"] == "1"
    assert data["unit_group"]["lattice"] == [["1", "0"], ["0", "1"]]


def test_json_output_reparses(tmp_path, capsys):
    code, data = run_json(tmp_path, capsys, {"pd": FIGURE_EIGHT_PD, "rho": {"dim": 1, "images": [
        [["zeta(3)"]], [["zeta(3)"]], [["zeta(3)"]], [["zeta(3)"]]]}})
    assert code == 0
    F = cyclotomic_field(int(data["conductor"]))
    for key in ("num", "den"):
        p = parse_laurent(data[key], F, 1)
        assert str(p) == data[key]


def test_verify_cover_exit_codes(tmp_path, capsys):
    for q in ("2", "3"):
        code, data = run_json(tmp_path, capsys, {**TREFOIL, "cover": {"group": [q], "pi_bar": [["1"]]}},
                              "--command", "verify-cover")
        assert code == 0 and data["equal"] is True and data["sublattice"] is True
        assert len(data["factors"]) == int(q)


def test_verify_cover_human_output(tmp_path, capsys):
    code, out, _ = run(tmp_path, capsys, {**TREFOIL, "rho": BRAID_RHO, "q": 2}, "--command", "verify-cover")
    assert code == 0
    assert "equal up to unit: True" in out
    assert "factor (1):" in out


def test_corrupted_rep_is_caught(tmp_path, capsys):
    bad = {"dim": 2, "images": {"x1": [["1", "1"], ["0", "1"]], "x2": [["1", "0"], ["1", "1"]]}}
    job = {**TREFOIL, "rho": bad, "q": 2}
    code, _ = run_json(tmp_path, capsys, job, "--command", "verify-cover")
    assert code == 2
    code, _ = run_json(tmp_path, capsys, job, "--command", "verify-cover", "--skip-rep-check")
    assert code in (1, 2)


def test_det_not_one_rejected(tmp_path, capsys):
    rho = {"dim": 2, "images": {"x1": [["2", "0"], ["0", "1"]], "x2": [["1", "0"], ["0", "1"]]}}
    code, data = run_json(tmp_path, capsys, {**TREFOIL, "rho": rho})
    assert code == 2 and "determinant" in data["message"]


def test_not_acyclic_names_character(tmp_path, capsys):
    job = {"presentation": {"generators": ["a", "b"], "relators": ["b a B b A B"]},
           "phi": {"a": ["1", "0"], "b": ["0", "1"]}, "cover": {"group": ["2"], "pi_bar": [["1", "0"]]}}
    code, data = run_json(tmp_path, capsys, job, "--command", "verify-cover")
    assert code == 3
    assert data["character"] == "(0)"


def test_unsupported_shape(tmp_path, capsys):
    job = {"presentation": {"generators": ["a", "b"], "relators": []}, "phi": {"a": [1, 0], "b": [0, 1]}}
    code, _ = run_json(tmp_path, capsys, job)
    assert code == 4


def test_validation_errors(tmp_path, capsys):
    code, data = run_json(tmp_path, capsys, {"presentation": {"generators": ["a"], "relators": ["a a"]}})
    assert code == 2 and "no free abelianization" in data["message"]
    code, _ = run_json(tmp_path, capsys, {**TREFOIL, "phi": {"x1": [1], "x2": [2]}})
    assert code == 2
    code, _ = run_json(tmp_path, capsys, {**TREFOIL, "rho": {"dim": 1, "images": [[["z"]], [["z"]]]}})
    assert code == 2
    path = tmp_path / "broken.json"
    path.write_text("{")
    assert main(["--input", str(path)]) == 2


def test_branched_and_homology_order(tmp_path, capsys):
    code, data = run_json(tmp_path, capsys, {**TREFOIL, "q": "2"}, "--command", "branched")
    assert code == 0 and data["product"] == "t^4 + t^2 + 1"
    code, data = run_json(tmp_path, capsys, {**TREFOIL, "q": "2"}, "--command", "homology-order")
    assert code == 0 and data["order"] == "3"
    code, data = run_json(tmp_path, capsys, {"alexander": "1", "q": "3"}, "--command", "branched")
    assert data["product"] == "1"
    code, data = run_json(tmp_path, capsys, {"alexander": "1", "q": "3"}, "--command", "homology-order")
    assert data["order"] == "1"


def test_characters_command(tmp_path, capsys):
    code, data = run_json(tmp_path, capsys, {"cover": {"group": ["2", "2"], "pi_bar": [["1", "0"], ["0", "1"]]}},
                          "--command", "characters")
    assert code == 0 and len(data["characters"]) == 4
    assert data["characters"][0] == ["0", "0"]


def test_rs_command_round_trip(tmp_path, capsys):
    code, data = run_json(tmp_path, capsys, {**TREFOIL, "q": "2"}, "--command", "rs")
    assert code == 0
    pres = data["presentation"]
    assert len(pres["generators"]) - len(pres["relators"]) == 1
    # the dumped presentation is itself valid input; its own abelianization
    # uses s = t^2 as variable, so the cover torsion appears in s
    code, out = run_json(tmp_path, capsys, {"presentation": pres})
    assert code == 0 and out["torsion"] == "(t^2 + t + 1)/(t - 1)"
    # trivial cover echoes the input
    code, data = run_json(tmp_path, capsys, {"presentation": {"generators": ["a", "b"], "relators": ["a b a B A B"]},
                                             "cover": {"group": [], "pi_bar": []}}, "--command", "rs")
    assert data["presentation"]["relators"] == ["a b a b^-1 a^-1 b^-1"]


def test_batch_mode(tmp_path, capsys):
    jobs = [TREFOIL, {"pd": HOPF_PD}, {"presentation": {"generators": ["a"], "relators": ["a a"]}}]
    path = tmp_path / "batch.json"
    path.write_text(json.dumps(jobs))
    code = main(["--input", str(path)])
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert [x["exit_code"] for x in lines] == [0, 0, 2]
    assert code == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(TREFOIL))
    res = subprocess.run([sys.executable, "-m", "twistedtorsion", "--input", str(path), "--json"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["torsion"] == "(t^2 - t + 1)/(t - 1)"
