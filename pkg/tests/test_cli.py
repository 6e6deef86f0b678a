import json

import pytest

from artinlink.cli import main

TRIANGLE_333 = """\
vertex a
vertex b
vertex c
edge a b 3 >
edge b c 3 >
edge c a 3 >
"""

TRIANGLE_245 = """\
vertex a
vertex b
vertex c
edge a b 2 ?
edge b c 4 >
edge c a 5 >
"""

UNORIENTED_SQUARE = """\
vertex a
vertex b
vertex c
vertex d
edge a b 3
edge b c 3
edge c d 3
edge a d 3
"""


@pytest.fixture
def gamma_file(tmp_path):
    def write(text, name="graph.gamma"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_certify_json_verdict(gamma_file, capsys):
    code, out, _ = run(capsys, ["certify", gamma_file(TRIANGLE_333), "--format", "json"])
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "NonPositivelyCurved"
    assert report["scheme"] == "A2"
    assert report["min_angle_over_pi"] == "2"
    assert report["small_cancellation"] == {"c": 3, "t": 6}


def test_certify_inconclusive_still_exits_zero(gamma_file, capsys):
    code, out, _ = run(capsys, ["certify", gamma_file(TRIANGLE_245)])
    assert code == 0
    assert "Inconclusive" in out


def test_certify_scheme_flag(gamma_file, capsys):
    code, out, _ = run(
        capsys, ["certify", gamma_file(TRIANGLE_245), "--scheme", "a2", "--format", "json"]
    )
    assert code == 0
    assert json.loads(out)["min_angle_over_pi"] == "4/3"


def test_loops_reports_the_two_paths(gamma_file, capsys):
    code, out, _ = run(capsys, ["loops", gamma_file(TRIANGLE_245), "--max", "4"])
    assert code == 0
    lines = set(out.strip().splitlines())
    assert lines == {
        "a_bar - b - c_bar - x_{c,a}_bar - a_bar",
        "a_bar - b - x_{b,c} - c - a_bar",
    }


def test_loops_json(gamma_file, capsys):
    code, out, _ = run(
        capsys, ["loops", gamma_file(TRIANGLE_245), "--max", "4", "--format", "json"]
    )
    assert code == 0
    assert len(json.loads(out)) == 2


def test_link_dot_output(gamma_file, capsys):
    code, out, _ = run(capsys, ["link", gamma_file(TRIANGLE_333)])
    assert code == 0
    assert out.startswith("graph link {")
    assert "rank=same" in out


def test_link_json_output(gamma_file, capsys):
    code, out, _ = run(capsys, ["link", gamma_file(TRIANGLE_333), "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 18
    assert len(data["edges"]) == 27


def test_orient_finds_assignment(gamma_file, capsys):
    code, out, _ = run(capsys, ["orient", gamma_file(UNORIENTED_SQUARE)])
    assert code == 0
    assert out.count("edge") == 4


def test_orient_reports_impossible(gamma_file, capsys):
    k4 = (
        "vertex a\nvertex b\nvertex c\nvertex d\n"
        "edge a b 3\nedge a c 3\nedge a d 3\n"
        "edge b c 3\nedge b d 3\nedge c d 3\n"
    )
    code, out, _ = run(capsys, ["orient", gamma_file(k4)])
    assert code == 0
    assert "no pattern-free orientation exists" in out


def test_pieces_text(gamma_file, capsys):
    code, out, _ = run(capsys, ["pieces", gamma_file(TRIANGLE_333)])
    assert code == 0
    assert out.startswith("max piece length: 1")


def test_pieces_json(gamma_file, capsys):
    code, out, _ = run(capsys, ["pieces", gamma_file(TRIANGLE_333), "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["max_piece_len"] == 1


def test_verify_lemmas_small(gamma_file, capsys):
    code, out, _ = run(
        capsys,
        [
            "verify-lemmas",
            "--max-label", "4",
            "--max-vertices", "4",
            "--tietze-max", "10",
            "--seed", "3",
        ],
    )
    assert code == 0
    assert "all batteries passed" in out
    assert out.count("PASS") == 4


def test_parse_error_exit_code(gamma_file, capsys):
    code, _, err = run(capsys, ["certify", gamma_file("vertex a\nflurb\n")])
    assert code == 1
    assert "parse error" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, ["certify", "/nonexistent/file.gamma"])
    assert code == 1
    assert "error" in err


def test_loops_on_unoriented_input_suggests_orient(gamma_file, capsys):
    code, _, err = run(capsys, ["loops", gamma_file(UNORIENTED_SQUARE)])
    assert code == 1
    assert "artinlink orient" in err


def test_json_input_accepted(gamma_file, capsys):
    obj = {
        "vertices": ["a", "b"],
        "edges": [{"u": "a", "v": "b", "label": 3, "orientation": "forward"}],
        "rotations": None,
    }
    code, out, _ = run(
        capsys,
        ["certify", gamma_file(json.dumps(obj), "graph.json"), "--format", "json"],
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "NonPositivelyCurved"


def test_cli_json_round_trips(gamma_file, capsys):
    _, out, _ = run(capsys, ["certify", gamma_file(TRIANGLE_245), "--format", "json"])
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_output_is_deterministic(gamma_file, capsys):
    path = gamma_file(TRIANGLE_245)
    _, out1, _ = run(capsys, ["certify", path, "--format", "json"])
    _, out2, _ = run(capsys, ["certify", path, "--format", "json"])
    assert out1 == out2
    _, dot1, _ = run(capsys, ["link", path])
    _, dot2, _ = run(capsys, ["link", path])
    assert dot1 == dot2
