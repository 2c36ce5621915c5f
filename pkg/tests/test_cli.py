import json
import subprocess
import sys
from importlib import resources

import pytest

from stableskc.cli import main
from stableskc.fano import enumerate_assignments, format_assignment
from stableskc.schedule import parse_schedule, read_schedule

TABLE4 = ["0145-2367", "0426-5173", "0563-7214", "0257-6431", "0312-4756", "0671-3542", "0734-1625"]


def golden_path(name):
    return str(resources.files("stableskc.data").joinpath(f"{name}.txt"))


def seedings_of(text):
    return [line for line in text.splitlines() if line and not line.startswith("#")]


def test_generate_table4(capsys):
    assert main(["generate", "--players", "8", "--modulus", "0xB", "--team-map", "paper8"]) == 0
    assert seedings_of(capsys.readouterr().out) == TABLE4


def test_generate_polynomial_modulus(capsys):
    assert main(["generate", "--players", "8", "--modulus", "X^3+X+1", "--team-map", "paper8"]) == 0
    assert seedings_of(capsys.readouterr().out) == TABLE4


def test_generate_out_file(tmp_path):
    out = tmp_path / "s.txt"
    assert main(["generate", "--players", "16", "--out", str(out)]) == 0
    assert read_schedule(out) == read_schedule(golden_path("table5"))


def test_generate_fano_default_assignment(capsys):
    assert main(["generate", "--players", "8", "--method", "fano"]) == 0
    assert seedings_of(capsys.readouterr().out) == [str(s) for s in read_schedule(golden_path("table1"))]


def test_generate_fano_assignment_file(tmp_path, capsys):
    a = enumerate_assignments()[5]
    path = tmp_path / "a.txt"
    path.write_text(format_assignment(a))
    out = tmp_path / "s.txt"
    assert main(["generate", "--players", "8", "--method", "fano", "--assignment", str(path), "--out", str(out)]) == 0
    assert main(["verify", str(out)]) == 0


@pytest.mark.parametrize("argv, message", [
    (["generate", "--players", "12"], "power of 2"),
    (["generate", "--players", "2"], "power of 2"),
    (["generate", "--players", "2048"], "power of 2"),
    (["generate", "--players", "8", "--modulus", "0x9"], "reducible"),
    (["generate", "--players", "8", "--modulus", "0x13"], "degree"),
    (["generate", "--players", "8", "--modulus", "zz"], "bad --modulus"),
    (["generate", "--players", "16", "--team-map", "paper8"], "8 players"),
    (["generate", "--players", "8", "--method", "fano", "--modulus", "0xB"], "cannot be combined"),
    (["generate", "--players", "16", "--method", "fano"], "--players 8"),
    (["generate", "--players", "8", "--assignment", "x.txt"], "requires --method fano"),
])
def test_generate_rejects(argv, message, capsys):
    assert main(argv) == 2
    assert message in capsys.readouterr().err


def test_bad_assignment_file(tmp_path, capsys):
    path = tmp_path / "a.txt"
    path.write_text("1: 1,4,5\n4: 1,4,5\n")
    assert main(["generate", "--players", "8", "--method", "fano", "--assignment", str(path)]) == 2
    assert "assignment" in capsys.readouterr().err


def test_verify_table6(capsys):
    assert main(["verify", golden_path("table6")]) == 0
    assert capsys.readouterr().out.strip() == "stable, c = 1,2,4,8,16"


def test_verify_degenerate(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0145-2367\n" * 7)
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert out.startswith("unstable")
    assert "witness: round 1, pair (0,1): count 7, expected 1" in out


def test_verify_warns_on_non_skc_size(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text("0145-2367\n0426-5173\n")
    assert main(["verify", str(path)]) == 1
    assert "warning" in capsys.readouterr().err


def test_verify_malformed(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0145-2367\n0145-2?67\n")
    assert main(["verify", str(path)]) == 2
    assert f"{path}:2:7:" in capsys.readouterr().err
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing\n")
    assert main(["verify", str(empty)]) == 2
    assert main(["verify", str(tmp_path / "missing.txt")]) == 2


def test_verify_reports_and_figure(tmp_path):
    rep = tmp_path / "r.json"
    csvrep = tmp_path / "r.csv"
    fig = tmp_path / "r.png"
    assert main(["verify", golden_path("table5"), "--report", str(rep), "--figure", str(fig)]) == 0
    data = json.loads(rep.read_text())
    assert data["stable"] and data["c_values"] == {"1": 1, "2": 2, "3": 4, "4": 8}
    assert len(data["counts"]) == 4 and len(data["counts"][0]) == 16
    assert fig.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    assert main(["verify", golden_path("table1"), "--report", str(csvrep)]) == 0
    rows = csvrep.read_text().splitlines()
    assert rows[0] == "round,x,y,count"
    assert len(rows) == 1 + 3 * 28
    assert "1,0,1,1" in rows


def test_compare(tmp_path, capsys):
    path = tmp_path / "g.txt"
    assert main(["generate", "--players", "8", "--team-map", "paper8", "--out", str(path)]) == 0
    assert main(["compare", str(path), golden_path("table4")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == [f"{i} -> {i}" for i in range(1, 8)]


def test_compare_no_matching(tmp_path, capsys):
    path = tmp_path / "r.txt"
    assert main(["random", "--players", "8", "--seed", "1", "--out", str(path)]) == 0
    assert main(["compare", golden_path("table1"), str(path)]) == 1
    assert "no matching" in capsys.readouterr().out
    assert main(["compare", golden_path("table1"), golden_path("table5")]) == 2


def test_fano_enumerate(capsys):
    assert main(["fano-enumerate"]) == 0
    out = capsys.readouterr().out
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 24
    assert "1: 1,4,5" in out


def test_random(capsys):
    assert main(["random", "--players", "16", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["random", "--players", "16", "--seed", "3"]) == 0
    assert capsys.readouterr().out == first
    assert len(parse_schedule(first)) == 15


@pytest.mark.parametrize("players", [4, 8, 16, 32, 64, 128, 256])
def test_generate_then_verify(players, tmp_path):
    path = tmp_path / "s.txt"
    assert main(["generate", "--players", str(players), "--out", str(path)]) == 0
    assert main(["verify", str(path)]) == 0


def test_generate_1024_decimal_format(tmp_path):
    path = tmp_path / "s.txt"
    assert main(["generate", "--players", "1024", "--out", str(path)]) == 0
    s = read_schedule(path)
    assert len(s) == 1023 and s.n == 1024
    assert "," in seedings_of(path.read_text())[0]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stableskc", "verify", golden_path("table4")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "stable, c = 1,2,4"
