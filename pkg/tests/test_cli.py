"""Command-line behavior: outputs, exit codes, and deterministic rendering."""

import json

import pytest

from galerob.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sequence_ones(capsys):
    code, out, _ = run(capsys, "sequence", "--spec", "1,2,4", "--n-max", "9", "--ones")
    assert code == 0
    assert out.strip() == "1,1,1,1,2,3,7,23,59"


def test_sequence_somos5_ones(capsys):
    code, out, _ = run(capsys, "sequence", "--spec", "1,2,5", "--n-max", "11", "--ones")
    assert code == 0
    assert out.strip().endswith("2,3,5,11,37,83")


def test_sequence_invalid_spec_exits_2(capsys):
    code, _, err = run(capsys, "sequence", "--spec", "2,4,6", "--n-max", "9", "--ones")
    assert code == 2
    assert "gcd" in err


def test_sequence_polynomials_are_json_lines(capsys):
    code, out, _ = run(capsys, "sequence", "--spec", "1,2,4", "--n-max", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    for line in lines:
        obj = json.loads(line)
        assert obj["schema"] == 1
        assert obj["n"] == 4


def test_cluster_var(capsys):
    code, out, _ = run(capsys, "cluster-var", "--spec", "1,2,4", "--n", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == 1
    assert len(obj["terms"]) == 2


def test_tiling_dump(capsys):
    code, out, _ = run(capsys, "tiling", "--spec", "2,3,7", "--rows", "0:1", "--cols", "0:2")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == 1
    assert all(f["shape"] in ("square", "hexagon") for f in obj["faces"])


def test_pinecone_dump(capsys):
    code, out, _ = run(capsys, "pinecone", "--spec", "1,2,4", "--n", "7")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == 1
    assert obj["vertices"] and obj["edges"] and obj["faces"]


def test_matchings_count(capsys):
    code, out, _ = run(capsys, "matchings", "--spec", "1,2,4", "--n", "7", "--count")
    assert code == 0
    assert out.strip() == "7"


def test_matchings_weights(capsys):
    code, out, _ = run(capsys, "matchings", "--spec", "1,2,4", "--n", "5", "--weights")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        obj = json.loads(line)
        assert "x" in obj and "y" in obj


def test_render_pinecone_is_byte_identical(tmp_path, capsys):
    first = tmp_path / "a.svg"
    second = tmp_path / "b.svg"
    for path in (first, second):
        code, _, _ = run(
            capsys,
            "render", "pinecone", "--spec", "1,2,4", "--n", "8",
            "--highlight-minimal", "--out", str(path),
        )
        assert code == 0
    assert first.read_bytes() == second.read_bytes()
    assert b"<svg" in first.read_bytes()


def test_render_tiling_with_negative_ranges(tmp_path, capsys):
    out = tmp_path / "t.svg"
    code, _, _ = run(
        capsys,
        "render", "tiling", "--spec", "1,2,5",
        "--rows", "-2:2", "--cols", "-3:3", "--out", str(out),
    )
    assert code == 0
    assert out.exists()


def test_render_pinecone_requires_n(capsys):
    code, _, err = run(capsys, "render", "pinecone", "--spec", "1,2,4")
    assert code == 2


def test_verify_theorem_small(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "--spec", "1,2,4", "--n-max", "7")
    assert code == 0
    assert out.count("PASS theorem") == 7
    assert "FAIL" not in out


def test_verify_kuo(capsys):
    code, out, _ = run(capsys, "verify", "kuo", "--spec", "1,2,5", "--n", "8")
    assert code == 0
    assert "FAIL" not in out


def test_verify_heights(capsys):
    code, out, _ = run(capsys, "verify", "heights", "--spec", "2,3,7", "--n", "11")
    assert code == 0
    assert "FAIL" not in out


def test_verify_borders(capsys):
    code, out, _ = run(capsys, "verify", "borders", "--spec", "1,2,4", "--n-max", "8")
    assert code == 0
    assert "FAIL" not in out


def test_verify_cvectors(capsys):
    code, out, _ = run(capsys, "verify", "cvectors", "--spec", "1,2,4")
    assert code == 0
    assert out.count("PASS") == 4


def test_verify_writes_figures(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GALEROB_OUTPUT_DIR", str(tmp_path))
    code, _, _ = run(capsys, "verify", "theorem", "--spec", "1,2,4", "--n-max", "6")
    assert code == 0
    figures = list(tmp_path.glob("*.svg"))
    assert figures  # report path drops figures next to the delimited lines
