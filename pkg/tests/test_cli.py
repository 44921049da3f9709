import json

import pytest

from k3tool.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--a", "4", "--b", "7")
    assert code == 0
    assert json.loads(out) == {"j1": "8", "j2": "8", "pi": "64", "sigma": "16"}


def test_invariants_surd(capsys):
    code, out, _ = run(capsys, "invariants", "--a", "2", "--b", "1")
    data = json.loads(out)
    assert code == 0 and data["sigma"] == "8"
    assert {data["j1"]["coeff"], data["j2"]["coeff"]} == {"2", "-2"}


@pytest.mark.parametrize(
    "argv,case,euler",
    [
        (["fibers", "theta2", "--a", "0", "--b", "0"], "generic", 24),
        (["fibers", "psi2", "--a", "1", "--b", "0"], "a3_1_b0", 24),
        (["fibers", "upsilon2", "--alpha", "2", "--beta", "3"], "a", 24),
    ],
)
def test_fibers(capsys, argv, case, euler):
    code, out, _ = run(capsys, *argv)
    data = json.loads(out)
    assert code == 0 and data["case"] == case and data["euler"] == euler


def test_match(capsys):
    code, out, _ = run(capsys, "match", "--alpha", "2", "--beta", "3")
    data = json.loads(out)
    assert code == 0
    assert (data["p"], data["q_cubed"], data["b"]) == ("2/3", "-1/9", "0")
    assert data["certificates"]["case_identity"]


def test_lattice(capsys):
    code, out, _ = run(capsys, "lattice", "--name", "e8", "--show", "roots")
    assert code == 0 and json.loads(out)["count"] == 240
    code, out, _ = run(capsys, "lattice", "--name", "H", "--show", "gram")
    assert json.loads(out)["gram"] == [[0, 1], [1, 0]]
    code, out, _ = run(capsys, "lattice", "--name", "kummer", "--show", "disc")
    assert json.loads(out)["invariant_factors"] == [2] * 6


def test_modj_and_periods(capsys):
    code, out, _ = run(capsys, "modj", "--tau", "0,1")
    assert code == 0 and json.loads(out)["J"].startswith("1.0")
    code, out, _ = run(capsys, "periods", "--tau", "0,1", "--u", "0,1")
    data = json.loads(out)
    assert code == 0 and data["sigma"].startswith("2.0") and data["omega_omega_zero"]


def test_negative_real_part(capsys):
    code, out, _ = run(capsys, "modj", "--tau=-0.5,0.8660254037844386")
    assert code == 0


def test_text_format(capsys):
    code, out, _ = run(capsys, "--format", "text", "invariants", "--a", "1", "--b", "0")
    assert code == 0 and "sigma: 2" in out


@pytest.mark.parametrize(
    "argv,code",
    [
        (["invariants", "--a", "x", "--b", "1"], 2),
        (["lattice", "--name", "E9"], 2),
        (["modj", "--tau", "0,1", "--prec", "5000"], 3),
        (["modj", "--tau", "0,-1"], 2),
        (["fibers", "upsilon2", "--alpha", "1", "--beta", "3"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_verify_suite_subset(capsys):
    code, out, err = run(capsys, "verify-suite", "--criteria", "3,8")
    data = json.loads(out)
    assert code == 0
    assert [c["number"] for c in data["criteria"]] == [3, 8]
    assert "criterion 3" in err
