import json

import pytest

from symquant.algebra_io import dump_system, preset
from symquant.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, (json.loads(out) if out else None), err


@pytest.fixture
def so3_file(tmp_path):
    path = tmp_path / "so3.json"
    dump_system(preset("so3"), path)
    return path


def test_verify_bernoulli_lists_coefficients(capsys):
    code, out, _ = run(capsys, "verify", "bernoulli", "--hmax", "5")
    assert code == 0
    assert out.split() == ["c_1", "=", "1/12", "c_2", "=", "-1/720", "c_3", "=", "1/30240",
                           "c_4", "=", "-1/1209600", "c_5", "=", "1/47900160"]


def test_report_schema_and_round_trip(capsys):
    code, report, _ = run_json(capsys, "verify", "bernoulli", "--hmax", "3")
    assert code == 0
    assert set(report) == {"command", "inputs", "results", "verdict", "seed"}
    assert json.loads(json.dumps(report)) == report
    assert report["results"][0]["c"] == "1/12"


def test_correspond_counterexample(capsys):
    code, out, _ = run(capsys, "correspond", "--preset", "canonical:1", "--h", "p^3", "--f", "x^3")
    assert code == 1
    assert "equal = false" in out and "discrepancy = -3/2" in out


def test_correspond_with_file(capsys, tmp_path):
    path = tmp_path / "canonical1.json"
    dump_system(preset("canonical:1"), path)
    code, report, _ = run_json(capsys, "correspond", "-a", str(path), "--h", "p^3", "--f", "x^3")
    assert code == 1
    assert report["results"][0]["discrepancy"] == "-3/2"
    assert report["results"][0]["equal"] is False


def test_casimir_command(capsys, so3_file):
    code, report, _ = run_json(capsys, "casimir", "-a", str(so3_file), "-e", "L1^2+L2^2+L3^2")
    assert code == 0
    assert report["results"][0]["is_casimir"] and report["results"][0]["commutes_with_all"]
    code, _, _ = run(capsys, "casimir", "--preset", "so3", "-e", "L3")
    assert code == 1


def test_counterexample_command(capsys):
    code, report, _ = run_json(capsys, "counterexample", "--case", "constant")
    assert code == 0
    assert report["verdict"] == "witness"
    assert report["results"][0]["discrepancy"] == "-3/2"


def test_validate_command(capsys, so3_file, tmp_path):
    assert run(capsys, "validate", str(so3_file))[0] == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "name": "bad", "case": "linear", "generators": ["a", "b", "c"],
        "brackets": [{"i": "a", "j": "b", "terms": [{"target": "c", "coeff": "1"}]},
                     {"i": "b", "j": "c", "terms": [{"target": "a", "coeff": "1"}]},
                     {"i": "c", "j": "a", "terms": [{"target": "a", "coeff": "1"}]}]}))
    code, report, _ = run_json(capsys, "validate", str(bad))
    assert code == 1 and report["verdict"] == "invalid"


def test_symmetrize_and_bracket(capsys):
    code, out, _ = run(capsys, "symmetrize", "--preset", "canonical:1", "-e", "x p")
    assert code == 0 and out.strip() == "1/2*x*p + 1/2*p*x"
    code, out, _ = run(capsys, "symmetrize", "--preset", "canonical:1", "-e", "x p",
                       "--normal-form")
    assert out.strip() == "1/2 + x*p"
    code, out, _ = run(capsys, "bracket", "--preset", "so3", "--h", "L1", "--f", "L2 L3")
    assert code == 0 and out.strip() == "{H, F}_N = -L2^2 + L3^2"


def test_quantize_check_command(capsys, tmp_path):
    set_path = tmp_path / "osc.json"
    set_path.write_text(json.dumps({"algebra": "preset:canonical:2",
                                    "centrals": ["(1/2)*(p1^2+p2^2+x1^2+x2^2)"],
                                    "others": ["x1 p2 - x2 p1"]}))
    code, report, _ = run_json(capsys, "quantize-check", "--set", str(set_path))
    assert code == 0
    res = report["results"][0]
    assert res["all_leibniz_zero"] and res["all_commutators_zero"]
    code, report, _ = run_json(capsys, "quantize-check", "--set", str(set_path),
                               "--assume-poly-independent")
    assert "on M" in report["results"][0]["claim"]
    neg = tmp_path / "neg.json"
    neg.write_text(json.dumps({"algebra": "preset:canonical:1", "centrals": ["p^3"],
                               "others": ["x^3"]}))
    code, report, _ = run_json(capsys, "quantize-check", "--set", str(neg))
    assert code == 1 and report["verdict"] == "non-involutive"


def test_verify_identities(capsys):
    for argv in (("pc1", "--k", "2"), ("lemma1", "--k", "2"), ("pc2", "--k", "2"), ("distr",),
                 ("cyclic", "--k", "2"), ("transp", "--trials", "5")):
        code, report, _ = run_json(capsys, "verify", *argv)
        assert code == 0 and report["verdict"] == "holds", argv


def test_seeded_runs_are_reproducible(capsys):
    argv = ("verify", "moyal", "--n", "1", "--deg", "3", "--trials", "5", "--seed", "7")
    first = run(capsys, *argv, "--json")
    second = run(capsys, *argv, "--json")
    assert first == second
    assert json.loads(first[1])["seed"] == 7
    argv = ("verify", "wick", "--l", "2", "--m", "2", "--trials", "3", "--seed", "1")
    assert run(capsys, *argv) == run(capsys, *argv)


@pytest.mark.parametrize("argv", [
    ("bracket", "--preset", "so3", "--h", "L1^-1", "--f", "L2"),
    ("bracket", "--preset", "so3", "--h", "Q", "--f", "L2"),
    ("bracket", "--h", "x", "--f", "p"),
    ("bracket", "--preset", "nope", "--h", "x", "--f", "p"),
    ("correspond", "--preset", "general", "--h", "u^2", "--f", "v"),
    ("symmetrize", "--preset", "general", "-e", "u v", "--normal-form"),
    ("verify", "lemma1", "--k", "9"),
    ("verify", "nothing"),
    ("quantize-check", "--set", "/nonexistent/set.json"),
    ("casimir", "--preset", "canonical:1", "-e", "x"),
])
def test_input_errors_exit_2_with_json(capsys, argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 2 and out == ""
    payload = json.loads(err)
    assert set(payload["error"]) >= {"type", "message"}


def test_parse_error_reports_position(capsys):
    code, _, err = run(capsys, "bracket", "--preset", "so3", "--h", "L1 +", "--f", "L2", "--json")
    assert code == 2
    error = json.loads(err)["error"]
    assert error["type"] == "ParseError" and error["line"] == 1 and error["column"] == 5


def test_plain_error_text(capsys):
    code, out, err = run(capsys, "bracket", "--preset", "so3", "--h", "Q", "--f", "L2")
    assert code == 2 and err.startswith("error:")
