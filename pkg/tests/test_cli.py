"""Command-line behavior: outputs, exit codes, stream handling."""

import io
import json
import subprocess
import sys

from hopftower.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue().rstrip("\n"), err.getvalue()


def test_eval_text_and_json():
    assert run("eval", "e[1]^2 - e[2]") == (0, "e[1,1] - e[2]", "")
    code, out, _ = run("eval", "--json", "e[1]^2 - e[2]")
    assert code == 0
    assert json.loads(out)["basis"] == "e"


def test_antipode_structures():
    assert run("antipode", "Z[2]")[1] == "Z[1,1] - Z[2]"
    assert run("antipode", "--structure", "bfk", "Z[2]")[1] == "2*Z[1,1] - Z[2]"
    code, _, err = run("antipode", "--structure", "bfk", "e[2]")
    assert code == 1 and "bfk" in err


def test_convert_paths():
    assert run("convert", "h[2]", "--to", "e")[1] == "e[1,1] - e[2]"
    assert run("convert", "Z[1,2]", "--to", "t")[1] == "t[2,1]"
    assert run("convert", "m[2,1]", "--to", "M")[1] == "M[1,2] + M[2,1]"
    code, _, err = run("convert", "e[2]", "--to", "p", "--integral")
    assert code == 1 and "error" in err


def test_coproduct_json_default_and_text():
    code, out, _ = run("coproduct", "Z[2]")
    assert code == 0
    doc = json.loads(out)
    assert doc["structure"] == "binomial"
    code, out, _ = run("coproduct", "--text", "e[2]")
    assert code == 0 and "(x)" in out
    code, _, err = run("coproduct", "1")
    assert code == 1 and "--algebra" in err
    assert run("coproduct", "1", "--algebra", "qsym")[0] == 0


def test_coaction_through_coproduct_flag():
    code, out, _ = run("coproduct", "--structure", "fdb", "e[3]")
    assert code == 0
    doc = json.loads(out)
    assert doc["factors"] == ["sym", "fdb"]
    assert {"left": [2], "right": [1], "coeff": "2"} in doc["terms"]


def test_series_commands_text_suffix():
    code, out, _ = run("compose", "T+T^2", "T+T^2", "--cap", "4", "--text")
    assert (code, out) == (0, "T + 2*T^2 + 2*T^3 + T^4 (cap 4)")
    code, out, _ = run("revert", "t(T)", "--cap", "3", "--text")
    assert out.endswith("(cap 3)")
    code, out, _ = run("log", "--cap", "3", "--text")
    assert out == "T - b[1]*T^2 + (2*b[1,1] - b[2])*T^3 (cap 3)"


def test_series_commands_json_default():
    code, out, _ = run("fgl", "--cap", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["vars"] == 2 and doc["cap"] == 2
    back_code, back_out, _ = run("fgl", "--cap", "2")
    assert back_out == out  # byte stable across runs


def test_charnum_and_crn():
    assert run("charnum", "cp", "--dim", "2")[1] == "6*b[1,1] - 3*b[2]"
    assert run("charnum", "cp", "--dim", "2", "--partition", "2")[1] == "-3"
    assert run("crn", "--weight", "2")[1] == "Z[1,1] + Z[2]"
    space = '{"factors":[1],"roots":[[1],[1]]}'
    assert run("charnum", "quasitoric", "--space", space,
               "--composition", "1")[1] == "2"
    assert run("charnum", "quasitoric", "--space", space, "--composition", "1",
               "--convention", "normal")[1] == "-2"


def test_space_file_argument(tmp_path):
    path = tmp_path / "space.json"
    path.write_text('{"factors":[1,1],"roots":[[1,0],[1,0],[0,1],[0,1]]}')
    code, out, _ = run("charnum", "quasitoric", "--space", "@" + str(path),
                       "--composition", "1,1")
    assert (code, out) == (0, "4")


def test_missing_space_file_is_io_error():
    code, _, err = run("charnum", "quasitoric",
                       "--space", "@/no/such/file.json", "--composition", "1")
    assert code == 4 and "error" in err


def test_capability_errors_exit_2():
    code, _, err = run("cobar-rank", "--algebroid", "S.B", "--weight", "3",
                       "--degree", "5")
    assert code == 2
    code, _, err = run("coproduct", "b[1]")
    assert code == 2


def test_syntax_error_reports_column():
    code, _, err = run("eval", "M[1,2")
    assert code == 1
    assert "column 5" in err


def test_usage_errors_exit_1():
    assert run("no-such-command")[0] == 1
    assert run("eval")[0] == 1
    assert run("convert", "e[2]", "--to", "q")[0] == 1
    assert run()[0] == 1


def test_help_exits_zero():
    code, out, _ = run("--help")
    assert code == 0 and "COMMAND" in out


def test_verify_counts_suite():
    code, out, _ = run("verify", "--suite", "counts")
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_failure_exits_3(monkeypatch):
    import hopftower.cli as cli_mod

    def fake(names, weight=None, cap=None):
        return [("forced failure", False, "injected by the test")], False

    monkeypatch.setattr(cli_mod, "run_suites", fake)
    code, out, _ = run("verify", "--suite", "counts")
    assert code == 3
    assert "FAIL" in out


def test_cobar_rank_json():
    code, out, _ = run("cobar-rank", "--algebroid", "S.B",
                       "--weight", "2", "--degree", "0")
    assert (code, out) == (
        0, '{"algebroid":"S.B","weight":2,"degree":0,"rank":1}')


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "hopftower", "pair", "h[2,1]", "m[2,1]"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"
    proc = subprocess.run(
        [sys.executable, "-m", "hopftower", "eval", "M[1,2"],
        capture_output=True, text=True)
    assert proc.returncode == 1
    assert "column 5" in proc.stderr
