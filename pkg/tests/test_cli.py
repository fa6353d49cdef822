"""End-to-end tests of the command-line interface.

Every test drives ``main`` with an argv list, which exercises the same code
path as the installed console script without subprocess overhead.
"""

import json

from quiverhh.cli import main, render_json, render_text

WRONG_SIGN = """\
vertices: 1 2
arrow: eps: 1 -> 1
arrow: alpha: 1 -> 2
arrow: beta: 2 -> 1
relation: eps*alpha
relation: beta*eps
relation: alpha*beta*alpha*beta + eps*eps
"""


def run_to_file(tmp_path, argv, name="out.txt"):
    path = tmp_path / name
    code = main(argv + ["--out", str(path)])
    return code, path.read_text(encoding="utf-8")


def test_hh_matches_everywhere_away_from_char_two(tmp_path):
    for field in ("q", "f3", "f5"):
        code, text = run_to_file(
            tmp_path, ["hh", "--field", field, "--max-degree", "7"])
        assert code == 0
        assert "all computed dimensions agree" in text
        values = [line.split()[1] for line in text.splitlines()[4:12]]
        assert values == ["5", "3", "3", "4", "5", "5", "5", "6"]


def test_hh_reports_char_two_mismatches(tmp_path):
    code, text = run_to_file(
        tmp_path, ["hh", "--field", "f2", "--max-degree", "7"])
    assert code == 1
    rows = [line.split() for line in text.splitlines()[4:12]]
    assert [r[1] for r in rows] == ["5", "4", "4", "5", "6", "6", "6", "7"]
    assert [r[-1] for r in rows] == ["match", "match", "unstated",
                                     "unstated", "MISMATCH", "unstated",
                                     "MISMATCH", "MISMATCH"]


def test_hh_oracle_method_agrees(tmp_path):
    code, text = run_to_file(
        tmp_path, ["hh", "--field", "f2", "--max-degree", "6",
                   "--method", "both", "--format", "json"])
    assert code == 1
    report = json.loads(text)
    assert report["oracle_ok"] is True
    assert all(row["oracle"] == row["value"] for row in report["rows"])

    code, text = run_to_file(
        tmp_path, ["hh", "--max-degree", "6", "--method", "oracle",
                   "--format", "json"])
    assert code == 0
    oracle_only = json.loads(text)
    assert [r["value"] for r in oracle_only["rows"]] == [5, 3, 3, 4, 5, 5, 5]


def test_verify_passes_over_every_field(tmp_path):
    for field in ("q", "f2", "f3"):
        code, text = run_to_file(
            tmp_path, ["verify", "--field", field, "--max-degree", "10"])
        assert code == 0, text
        assert "all structural checks pass" in text


def test_verify_json_is_byte_identical(tmp_path):
    argv = ["verify", "--max-degree", "24", "--format", "json"]
    code1, first = run_to_file(tmp_path, argv, "a.json")
    code2, second = run_to_file(tmp_path, argv, "b.json")
    assert code1 == code2 == 0
    assert first == second
    report = json.loads(first)
    assert report["checks"] == {"complex": True, "exactness": True,
                                "minimality": True, "simples": True,
                                "gsz": True}
    assert len(report["rows"]) == 25


def test_verify_names_the_failing_degree(tmp_path):
    bad = tmp_path / "wrong_sign.txt"
    bad.write_text(WRONG_SIGN, encoding="utf-8")
    code, text = run_to_file(
        tmp_path, ["verify", "--presentation", str(bad), "--max-degree", "6"])
    assert code == 1
    assert "complex first fails at degree 2" in text


def test_json_round_trips_to_identical_text(tmp_path):
    for argv in (["hh", "--field", "f2", "--max-degree", "8"],
                 ["verify", "--max-degree", "6"],
                 ["center"],
                 ["ext", "--max-degree", "6"],
                 ["gsz", "--degree", "2"],
                 ["homdims", "--field", "f2", "--max-degree", "6"]):
        _, text = run_to_file(tmp_path, argv + ["--format", "text"])
        _, blob = run_to_file(tmp_path, argv + ["--format", "json"])
        report = json.loads(blob)
        assert render_text(report) == text
        assert render_json(report) == blob


def test_center_output(tmp_path):
    code, text = run_to_file(tmp_path, ["center", "--field", "f2"])
    assert code == 0
    assert "dimension: 5" in text
    for element in ("e(1) + e(2)", "eps", "eps^2",
                    "alpha*beta + beta*alpha", "beta*alpha*beta*alpha"):
        assert element in text


def test_gsz_degree_two_elements(tmp_path):
    code, text = run_to_file(tmp_path, ["gsz", "--degree", "2"])
    assert code == 0
    assert "eps^2 - alpha*beta*alpha*beta" in text
    assert "eps*alpha" in text
    assert "beta*eps" in text


def test_ext_and_homdims_tables(tmp_path):
    code, text = run_to_file(
        tmp_path, ["ext", "--max-degree", "24", "--format", "csv"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "n,value,expected,status"
    assert lines[1] == "0,2,2,match"
    assert len(lines) == 26

    code, text = run_to_file(
        tmp_path, ["homdims", "--max-degree", "3", "--format", "csv"])
    assert code == 0
    assert text.splitlines()[1:] == [
        "0,7,7,match", "1,8,8,match", "2,8,8,match", "3,11,11,match",
        "1,5,5,match", "2,6,6,match", "3,6,6,match"]

    code, _ = run_to_file(
        tmp_path, ["homdims", "--field", "f2", "--max-degree", "6"])
    assert code == 1


def test_usage_errors(tmp_path, capsys):
    assert main(["hh", "--field", "f4"]) == 2
    assert "not prime" in capsys.readouterr().err
    assert main(["hh", "--field", "f1"]) == 2
    assert main(["hh", "--field", "r"]) == 2
    assert main(["hh", "--max-degree", "0"]) == 2
    assert main(["gsz", "--degree", "13"]) == 2
    assert main(["hh", "--preset", "nonsense"]) == 2
    assert main(["hh", "--presentation", str(tmp_path / "missing.txt")]) == 2
    assert main(["hh", "--method", "oracle", "--max-degree", "24"]) == 2
    unwritable = tmp_path / "no-such-dir" / "out.txt"
    assert main(["hh", "--max-degree", "2", "--out", str(unwritable)]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_command_exits_two(capsys):
    assert main(["not-a-command"]) == 2
    capsys.readouterr()


def test_stdout_when_no_out_flag(capsys):
    assert main(["hh", "--max-degree", "2"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("hochschild cohomology dimensions")
