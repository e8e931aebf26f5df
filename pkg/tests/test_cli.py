import json

import pytest

from narrowdots.cli import main


def test_solve_command(capsys):
    assert main(["solve", "--game", "triangles", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "value=5" in out and "Leg(2)" in out


def test_solve_from_encoded_state(capsys):
    state = "boxes:closed:2/top:0,top:1,vert:0,vert:2/-/A"
    assert main(["solve", "--game", "boxes", "--n", "2",
                 "--state", state]) == 0
    assert "value=-2" in capsys.readouterr().out


def test_table_command(capsys):
    assert main(["table", "--game", "boxes", "--n-max", "6"]) == 0
    assert capsys.readouterr().out == "1,1\n2,-2\n3,3\n4,0\n5,1\n6,0\n"


def test_table_to_file(tmp_path, capsys):
    out = tmp_path / "t.csv"
    assert main(["table", "--game", "triangles", "--n-max", "3",
                 "--out", str(out)]) == 0
    assert out.read_text() == "1,1\n2,-3\n3,5\n"


def test_table_memo_overflow_reported_per_row(capsys):
    assert main(["table", "--game", "boxes", "--n-max", "6",
                 "--max-memo", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 6
    assert any("error:memo-budget-exceeded" in line for line in lines)
    assert lines[0] == "1,1"


def test_verify_success(capsys, tmp_path):
    report = tmp_path / "r.json"
    code = main(["verify", "--theorem", "1", "--n", "1", "3",
                 "--out", str(report)])
    assert code == 0
    data = json.loads(report.read_text())
    assert data["all_hold"] is True
    assert all(r["worst_net"] >= 1 for r in data["results"])


def test_verify_refuses_uncovered_case(capsys):
    assert main(["verify", "--theorem", "1", "--n", "2"]) == 1
    out = capsys.readouterr().out
    entry = json.loads(out.splitlines()[-1])
    assert entry["supported"] is False
    assert entry["exact_value"] == -3


def test_verify_theorem_2(capsys):
    assert main(["verify", "--theorem", "2", "--n", "4",
                 "--boundary", "closed"]) == 0
    entry = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert entry["worst_net"] == 0


def test_scenario_command(capsys):
    assert main(["scenario", "fig9_unmirrorable"]) == 0
    assert main(["scenario", "fig10_zugzwang"]) == 0


def test_analyze_command(capsys):
    assert main(["analyze", "--game", "triangles", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "chain medium" in out and "value for A: 5" in out


def test_play_quits_cleanly(monkeypatch, capsys):
    feeds = iter(["q"])
    monkeypatch.setattr("builtins.input", lambda prompt="": next(feeds))
    assert main(["play", "--game", "triangles", "--n", "3",
                 "--engine", "first"]) == 1


def test_play_full_game(monkeypatch, capsys):
    # engine moves first; feed every remaining legal edge until the game ends
    answers = ["base:0", "slant:0", "base:1", "slant:1", "slant:2",
               "slant:3", "base:2"]
    feeds = iter(answers)
    monkeypatch.setattr("builtins.input", lambda prompt="": next(feeds))
    code = main(["play", "--game", "triangles", "--n", "3",
                 "--engine", "first"])
    assert code == 0
    out = capsys.readouterr().out
    assert "final net score" in out


def test_unknown_subcommand_rejected():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
