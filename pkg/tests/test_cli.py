import json

import pytest

import run_dynn
from coords.coordinates import DynnikovCoords, TriangleCoords
from util.vector_parser import VectorParser

# payload shapes listed under "JSON output" in README.md
PA_REPORT_KEYS = {"word", "status", "lambda", "entropy", "eigenvector", "arc_measures", "matrices", "diagnostics"}
PA_DIAGNOSTIC_KEYS = {
    "tie_nodes",
    "variants_examined",
    "tie_cap",
    "tie_cap_exceeded",
    "eigen_residual",
    "eigen_iterations",
    "max_matrix_residual",
}
RESTART_KEYS = {"restart", "iterations", "stabilized", "outcome", "tie_nodes", "lambda"}


def _run(capsys, *argv):
    code = run_dynn.main(list(argv))
    captured = capsys.readouterr()
    return (code, captured.out, captured.err)


def test_coords_invert(capsys):
    (code, out, _) = _run(capsys, "coords", "invert", "-n", "5", "--ab", "-1,0,1;0,-1,0")
    assert code == 0
    assert out.strip() == "(2,0,2,2,1,3; 2,2,4,4)"


def test_coords_forward_json(capsys):
    (code, out, _) = _run(capsys, "coords", "forward", "-n", "5", "--triangle", "2,0,2,2,1,3;2,2,4,4", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 5, "a": [-1, 0, 1], "b": [0, -1, 0]}


def test_coords_counts(capsys):
    (code, out, _) = _run(capsys, "coords", "counts", "-n", "5", "--ab", "-1,0,1;0,-1,0")
    assert code == 0
    assert "left end loops: 1" in out
    assert "right end loops: 2" in out


def test_coords_validate_reports_failure(capsys):
    (code, out, _) = _run(capsys, "coords", "validate", "-n", "3", "--triangle", "1,1;2,4")
    assert code == 1
    assert "β2 > α1+α2" in out


def test_coords_validate_ok(capsys):
    (code, out, _) = _run(capsys, "coords", "validate", "-n", "5", "--triangle", "2,0,2,2,1,3;2,2,4,4")
    assert code == 0
    assert out.strip() == "ok"


def test_malformed_vector_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        run_dynn.main(["coords", "invert", "-n", "3", "--ab", "1,,2;3"])
    assert e.value.code == 2


def test_missing_vector_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        run_dynn.main(["coords", "invert", "-n", "3"])
    assert e.value.code == 2


def test_act(capsys):
    (code, out, _) = _run(capsys, "act", "-n", "3", "-w", "1 -2", "--ab", "-1;-1")
    assert code == 0
    assert out.strip() == "(-3; -2)"


@pytest.mark.parametrize(
    "word, ab, expected",
    [
        ("1 -2", "-1,-1", "(-3; -2)"),
        ("1 -1", "5,-3", "(5; -3)"),
    ],
)
def test_act_accepts_a_flat_vector(capsys, word, ab, expected):
    (code, out, _) = _run(capsys, "act", "-n", "3", "-w", word, "--ab", ab)
    assert code == 0
    assert out.strip() == expected


def test_flat_vector_splits_into_halves():
    assert VectorParser.parse_dynnikov("-1,0,1,0,-1,0", 5) == DynnikovCoords(5, (-1, 0, 1), (0, -1, 0))
    assert VectorParser.parse_triangle("2,0,2,2,1,3,2,2,4,4", 5) == TriangleCoords(5, (2, 0, 2, 2, 1, 3), (2, 2, 4, 4))
    assert VectorParser.parse_dynnikov("0.5,-1", 3) == DynnikovCoords(3, (0.5,), (-1.0,))


@pytest.mark.parametrize("text", ["1,2,3", "1", "1;2;3"])
def test_flat_vector_of_the_wrong_length(text):
    with pytest.raises(ValueError):
        VectorParser.parse_dynnikov(text, 3)


def test_flat_vector_of_the_wrong_length_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        run_dynn.main(["act", "-n", "3", "-w", "1", "--ab", "1,2,3"])
    assert e.value.code == 2


def test_act_json_word_and_iterations(capsys):
    (code, out, _) = _run(capsys, "act", "-n", "3", "-w", "[1, -2]", "--ab", "-1;-1", "--iters", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 3, "a": [-8], "b": [-5]}


def test_act_projective(capsys):
    (code, out, _) = _run(capsys, "act", "-n", "3", "-w", "1 -2", "--ab", "1;1", "--iters", "3", "--projective")
    assert code == 0
    assert len(out.strip().splitlines()) == 3


def test_bad_letter_is_reported(capsys):
    (code, _, err) = _run(capsys, "act", "-n", "3", "-w", "1 5", "--ab", "1;1")
    assert code == 1
    assert err.startswith("error:")


def test_pa_json(capsys):
    (code, out, _) = _run(capsys, "pa", "-n", "3", "-w", "1 -2", "--json", "--restarts", "2")
    assert code == 0
    j = json.loads(out)
    assert j["status"] == "pseudo-anosov-detected"
    assert j["lambda"] == pytest.approx(2.618033988749895, abs=1e-9)
    assert len(j["diagnostics"]["restarts"]) == 2


def test_pa_json_keys(capsys):
    (_, out, _) = _run(capsys, "pa", "-n", "3", "-w", "1 -2", "--json", "--restarts", "2")
    j = json.loads(out)
    assert set(j) == PA_REPORT_KEYS
    assert set(j["word"]) == {"n", "letters"}
    assert set(j["eigenvector"]) == {"n", "a", "b"}
    assert set(j["arc_measures"]) == {"n", "alpha", "beta"}
    assert all(set(m) == {"matrix", "halfspaces", "det"} for m in j["matrices"])
    assert set(j["diagnostics"]) == {"restarts"} | PA_DIAGNOSTIC_KEYS
    assert all(set(r) == RESTART_KEYS for r in j["diagnostics"]["restarts"])


def test_no_expansion_json_keys(capsys):
    (_, out, _) = _run(capsys, "pa", "-n", "3", "-w", "1", "--json", "--restarts", "2")
    j = json.loads(out)
    assert set(j) == PA_REPORT_KEYS
    assert j["status"] == "no-expansion-detected"
    assert j["lambda"] is None and j["arc_measures"] is None
    assert j["matrices"] == []
    assert set(j["diagnostics"]) == {"restarts"}


def test_coords_json_keys(capsys):
    (_, out, _) = _run(capsys, "coords", "counts", "-n", "5", "--ab", "-1,0,1;0,-1,0", "--json")
    j = json.loads(out)
    assert set(j) == {"n", "left_end_loops", "right_end_loops", "regions"}
    assert all(set(r) == {"region", "loops", "loop_side", "above", "below"} for r in j["regions"])
    (_, out, _) = _run(capsys, "coords", "validate", "-n", "3", "--triangle", "1,1;2,4", "--json")
    j = json.loads(out)
    assert set(j) == {"ok", "violations"}
    assert set(j["violations"][0]) == {"kind", "detail", "region", "arcs"}


def test_entropy_and_family_json_keys(capsys):
    (_, out, _) = _run(capsys, "entropy", "-n", "3", "-w", "1 -2", "--iters", "4", "--json")
    assert set(json.loads(out)) == {"word", "iters", "final", "final_sample", "samples", "rates"}
    (_, out, _) = _run(capsys, "family", "beta", "-m", "1", "-n", "1", "--json", "--restarts", "2")
    j = json.loads(out)
    assert set(j) == {
        "kind",
        "m",
        "n",
        "word",
        "closed_form_available",
        "consistent",
        "polynomial",
        "lambda_root",
        "lambda_pipeline",
        "lambda_error",
        "eigenvector_angle",
        "matrix_residuals",
        "report",
    }
    assert set(j["report"]) == PA_REPORT_KEYS


def test_pa_text(capsys):
    (code, out, _) = _run(capsys, "pa", "-n", "3", "-w", "1 -2")
    assert code == 0
    assert "status: pseudo-anosov-detected" in out
    assert "lambda: 2.618033988750" in out


def test_entropy_csv(capsys):
    (code, out, _) = _run(capsys, "entropy", "-n", "3", "-w", "1 -2", "--iters", "5", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,c_m,rate"
    assert len(lines) == 6


def test_entropy_needs_integer_start(capsys):
    (code, _, err) = _run(capsys, "entropy", "-n", "3", "-w", "1 -2", "--ab", "1.5;1")
    assert code == 1
    assert "error:" in err


def test_family(capsys):
    (code, out, _) = _run(capsys, "family", "beta", "-m", "1", "-n", "1")
    assert code == 0
    assert "consistent: yes" in out


def test_local_output_from_config(capsys, tmp_path):
    folder = tmp_path / "out"
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"output": {"type": "local", "folder": str(folder)}}))
    (code, out, _) = _run(capsys, "act", "-n", "3", "-w", "1 -2", "--ab", "-1;-1", "--config", str(config))
    assert code == 0
    assert out == ""
    assert (folder / "action.txt").read_text().strip() == "(-3; -2)"


def test_unreadable_config(capsys, tmp_path):
    (code, _, err) = _run(capsys, "act", "-n", "3", "-w", "1", "--ab", "1;1", "--config", str(tmp_path / "none.json"))
    assert code == 1
    assert "error:" in err
