import json

import pytest

from knotgenus.cli import main
from knotgenus.matrices import format_matrix_text
from knotgenus.two_bridge import KnotParams, qmn_gram, seifert_matrix


@pytest.fixture
def q00_file(tmp_path):
    path = tmp_path / "q00.txt"
    path.write_text(format_matrix_text(qmn_gram(KnotParams(0, 0)).gram))
    return str(path)


@pytest.fixture
def s00_file(tmp_path):
    path = tmp_path / "s00.txt"
    path.write_text(format_matrix_text(seifert_matrix(KnotParams(0, 0))))
    return str(path)


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.txt"
    path.write_text("# A2 chain\n2\n2 -1\n-1 2\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_human(capsys):
    code, out, _ = run(capsys, ["info", "--m", "0", "--n", "0"])
    assert code == 0
    assert "107/28" in out
    assert "sigma = -2" in out
    assert "det = 107" in out


def test_info_json(capsys):
    code, out, _ = run(capsys, ["info", "--m", "1", "--n", "2", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["fraction"] == "283/48"


def test_info_rejects_negative(capsys):
    code, _, err = run(capsys, ["info", "--m", "-1", "--n", "0"])
    assert code == 1
    assert "m must be >= 0" in err


def test_json_round_trip_byte_identical(capsys):
    from knotgenus.pipeline import render_json

    code, out, _ = run(capsys, ["info", "--m", "0", "--n", "0", "--format", "json"])
    assert code == 0
    assert render_json(json.loads(out)) == out


def test_verify_csv(capsys):
    code, out, _ = run(
        capsys, ["verify", "--m-max", "0", "--n-max", "0", "--format", "csv"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2
    assert lines[1].startswith("0,0,107/28")


def test_verify_exit_two_when_inconclusive(capsys):
    code, out, _ = run(
        capsys,
        [
            "verify",
            "--m-max",
            "0",
            "--n-max",
            "0",
            "--embed-cap-seconds",
            "0",
            "--format",
            "csv",
        ],
    )
    assert code == 2
    assert "inconclusive" in out


def test_lattice_not_embeddable(capsys, q00_file):
    code, out, _ = run(capsys, ["lattice", q00_file, "--dim", "10"])
    assert code == 0
    assert out.strip() == "NOT EMBEDDABLE dim=10"


def test_lattice_witness(capsys, q00_file):
    from knotgenus.lattice import Embedding, verify_embedding

    code, out, _ = run(capsys, ["lattice", q00_file, "--dim", "11"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "EMBEDDABLE dim=11"
    rows = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    assert len(rows) == 8 and all(len(r) == 11 for r in rows)
    assert verify_embedding(qmn_gram(KnotParams(0, 0)), Embedding(rows, 11))


def test_lattice_mindim(capsys, a2_file):
    code, out, _ = run(capsys, ["lattice", a2_file, "--mindim", "--cap", "5"])
    assert code == 0
    assert out.strip() == "MINDIM=3"


def test_lattice_rejects_indefinite(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n2 3\n3 2\n")
    code, _, err = run(capsys, ["lattice", str(path), "--dim", "4"])
    assert code == 1
    assert "minor 2" in err


def test_lattice_rejects_garbage(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2\n1 x\n0 1\n")
    code, _, err = run(capsys, ["lattice", str(path), "--dim", "4"])
    assert code == 1


def test_seifert_invariants(capsys, s00_file):
    code, out, _ = run(capsys, ["seifert", s00_file, "--sig"])
    assert code == 0 and out.strip() == "-2"
    code, out, _ = run(capsys, ["seifert", s00_file, "--det"])
    assert code == 0 and out.strip() == "107"
    code, out, _ = run(capsys, ["seifert", s00_file, "--alex"])
    assert code == 0 and out.strip() == "-2:6 -1:-27 0:41 1:-27 2:6"


def test_curve_family(capsys):
    code, out, _ = run(capsys, ["curve", "--m", "0", "--n", "0", "--bound", "3"])
    assert code == 0
    assert out.startswith("a = (")


def test_curve_restricted_form_case(capsys):
    from knotgenus.curve_search import parse_certificate, verify_certificate

    code, out, _ = run(capsys, ["curve", "--m", "2", "--n", "0"])
    assert code == 0
    cert = parse_certificate(out.strip())
    assert verify_certificate(seifert_matrix(KnotParams(2, 0)), cert)


def test_curve_bound_zero_is_usage_error(capsys):
    code, _, err = run(capsys, ["curve", "--m", "0", "--n", "0", "--bound", "0"])
    assert code == 1
    assert "bound" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["info", "--m", "zero", "--n", "0"])
    assert exc.value.code == 1
