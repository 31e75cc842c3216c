"""End-to-end tests of the command line surface."""

import pytest

from skewchar.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    return {
        "id2": write("id2.txt", "2\n1 0\n0 1\n"),
        "id3": write("id3.txt", "3\n1 0 0\n0 1 0\n0 0 1\n"),
        "id4": write("id4.txt", "4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"),
        "zero2": write("zero2.txt", "2\n0 0\n0 0\n"),
        "indef2": write("indef2.txt", "2\n1 0\n0 -1\n"),
        "rank1": write("rank1.txt", "2\n1 2\n2 4\n"),
        "skew3": write("skew3.txt", "3\n1 2 1\n1 3 2\n2 3 3\n"),
        "bad": write("bad.txt", "2\n1 2\n3 4\n"),
    }


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_identity_2(files, capsys):
    code, out, _ = run(capsys, ["expand", files["id2"]])
    assert code == 0
    assert out == "1 + l1_2^2\n"


def test_expand_identity_3(files, capsys):
    code, out, _ = run(capsys, ["expand", files["id3"]])
    assert code == 0
    assert out == "1 + l1_2^2 + l1_3^2 + l2_3^2\n"


def test_expand_zero_matrix(files, capsys):
    code, out, _ = run(capsys, ["expand", files["zero2"]])
    assert code == 0
    assert out == "l1_2^2\n"


def test_expand_parse_error(files, capsys):
    code, out, err = run(capsys, ["expand", files["bad"]])
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_expand_missing_file(capsys):
    code, _, err = run(capsys, ["expand", "/nonexistent/a.txt"])
    assert code == 2
    assert "error:" in err


def test_expand_dimension_cap(files, capsys):
    code, _, err = run(capsys, ["expand", files["id4"], "--max-dim", "3"])
    assert code == 3
    assert "cap" in err


def test_eval(files, capsys):
    code, out, _ = run(capsys, ["eval", files["id3"], files["skew3"]])
    assert code == 0
    assert out == "15\n"


def test_eval_dimension_mismatch(files, capsys):
    code, _, err = run(capsys, ["eval", files["id2"], files["skew3"]])
    assert code == 2
    assert "mismatch" in err


def test_classify_positive_definite(files, capsys):
    code, out, _ = run(capsys, ["classify", files["id4"]])
    assert code == 0
    assert out.splitlines()[0] == "verdict: PositiveDefinite"


def test_classify_indefinite_includes_witness(files, capsys):
    code, out, _ = run(capsys, ["classify", files["indef2"]])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "verdict: Indefinite"
    assert "witness lambda_zero: P = 0" in lines
    assert "witness lambda_plus: P = 3" in lines
    assert "witness lambda_minus: P = -1" in lines


def test_classify_degenerate(files, capsys):
    code, out, _ = run(capsys, ["classify", files["rank1"]])
    assert code == 0
    assert out.splitlines()[0] == "verdict: Degenerate"


def test_witness_indefinite(files, capsys):
    code, out, _ = run(capsys, ["witness", files["indef2"]])
    assert code == 0
    assert "witness lambda_zero: P = 0" in out


def test_witness_on_definite_is_input_error(files, capsys):
    code, _, err = run(capsys, ["witness", files["id2"]])
    assert code == 2
    assert "sign-definite" in err


def test_certify(files, capsys):
    code, out, _ = run(capsys, ["certify", files["id2"]])
    assert code == 0
    assert out == (
        "n: 2\n"
        "scale: 1\n"
        "weight: 1 ; sqroot: 1\n"
        "weight: 1 ; sqroot: l1_2\n"
    )


def test_certify_rejects_indefinite(files, capsys):
    code, _, err = run(capsys, ["certify", files["indef2"]])
    assert code == 2
    assert "not positive definite" in err


def test_probe_header_and_tallies(files, capsys):
    code, out, _ = run(capsys, ["probe", files["id2"],
                                "--trials", "40", "--seed", "7"])
    assert code == 0
    assert out == (
        "command: probe\n"
        "seed: 7\n"
        "trials: 40\n"
        "bound: 10\n"
        "positives: 40\n"
        "negatives: 0\n"
        "zeros: 0\n"
    )


def test_byte_identical_reruns(files, capsys):
    for argv in (
        ["expand", files["id3"]],
        ["classify", files["indef2"]],
        ["probe", files["id2"], "--trials", "25", "--seed", "3"],
        ["certify", files["id2"]],
    ):
        first = run(capsys, argv)
        second = run(capsys, argv)
        assert first == second


def test_selftest_passes(capsys):
    code, out, _ = run(capsys, ["selftest"])
    assert code == 0
    lines = out.splitlines()
    assert all(ln.endswith("PASS") for ln in lines[:-1])
    assert lines[-1].endswith("0 failed")
