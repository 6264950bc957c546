import json
import subprocess
import sys

import pytest

from ppmod.cli import build_parser, execute, main


def run_cli(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    return execute(args)


def test_classify_table_sorted():
    code, lines = run_cli(["classify", "--N", "3", "--n", "1",
                           "--dim-cap", "8"])
    assert code == 0
    assert lines[0].startswith("# ppmod")
    rows = [l.split("\t")[0] for l in lines
            if l and not l.startswith("#") and "\t" in l][1:-1]
    assert rows == sorted(rows)


def test_pp_dual_example():
    code, lines = run_cli(["pp", "dual", "--algebra", "dvr:3",
                           "--formula", "x1*x = 0"])
    assert code == 0
    text = "\n".join(lines)
    assert "side left" in text
    assert "involution\tTrue" in text
    assert "x divides x1" in text


def test_ziegler_closure_example():
    code, lines = run_cli(["ziegler", "closure", "--n", "1",
                           "--set", "F0 Prufer"])
    assert code == 0
    assert any(l == "closure\t{F0 Prufer, F0 Q}" for l in lines)


def test_ziegler_header_carries_assumption_flag():
    code, lines = run_cli(["ziegler", "points", "--n", "1"])
    assert code == 0
    assert any("if-and-only-if" in l for l in lines)


def test_deterministic_output():
    a = run_cli(["suite", "ziegler"])
    b = run_cli(["suite", "ziegler"])
    assert a == b


def test_json_mode():
    code, lines = run_cli(["--json", "suite", "ziegler"])
    assert code == 0
    payload = json.loads("\n".join(lines))
    assert payload[0]["suite"] == "ziegler"
    assert payload[0]["passed"] is True


def test_tube_dot_output():
    code, lines = run_cli(["tube", "--tube", "m=1 n=[0] horizon=3", "--dot"])
    assert code == 0
    assert lines[0].startswith("digraph")


def test_scenario_file_run(tmp_path):
    scn = tmp_path / "scenario.txt"
    scn.write_text(
        "# demo scenario\n"
        "classify --N 2 --n 1 --dim-cap 6\n"
        "ziegler closure --n 0 --set \"Prufer\"\n"
        "pp implies --algebra dvr:2 --formula \"E y1 . (x1 - y1*x = 0)\" "
        "--formula2 \"x1*x = 0\"\n")
    rc = main(["run", str(scn)])
    assert rc == 0


def test_scenario_parallel_matches_serial(tmp_path, capsys):
    scn = tmp_path / "scenario.txt"
    scn.write_text("ziegler points --n 1\nziegler points --n 2\n")
    rc1 = main(["run", str(scn)])
    out1 = capsys.readouterr().out
    rc2 = main(["--parallel", "run", str(scn)])
    out2 = capsys.readouterr().out
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_scenario_parse_error_exit_code(tmp_path, capsys):
    scn = tmp_path / "bad.txt"
    scn.write_text("classify --N nope\n")
    rc = main(["run", str(scn)])
    capsys.readouterr()
    assert rc == 2


def test_horizon_exceeded_surfaces_verbatim(capsys):
    rc = main(["realize", "--N", "3", "--height", "1", "--stages", "5"])
    out = capsys.readouterr().out
    assert rc == 2
    assert "HORIZON_EXCEEDED" in out


def test_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ppmod.cli", "ziegler", "points", "--n", "0"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "FinLen(*)" in proc.stdout
