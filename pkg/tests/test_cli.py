import io
import subprocess
import sys

from bbquiver import data_path
from bbquiver.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_validate_biquandle_ok():
    assert run("validate-biquandle", "hopf_z3.bq") == (0, "OK n=4\n")


def test_validate_biquandle_reports_violations(tmp_path):
    bad = tmp_path / "bad.bq"
    bad.write_text("2\n1 1\n1 2\n\n1 2\n2 1\n")
    code, out = run("validate-biquandle", str(bad))
    assert code == 1
    assert "axiom=i " in out and "axiom=ii.under" in out


def test_validate_bracket():
    assert run("validate-bracket", "hopf_z3.br", "hopf_z3.bq") == (0, "OK delta=2 w=1\n")
    code, out = run("validate-bracket", "links_z6.br", "links_z6.bq")
    assert code == 1
    assert out.startswith("axiom=")


def test_endos():
    code, out = run("endos", "knots_q.bq")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "8" and len(lines) == 9
    assert "1 2 3 4" in lines


def test_colorings_counts():
    code, out = run("colorings", "links_upto7.pd", "hopf_z3.bq", "--name", "L2a1")
    assert (code, out) == (0, "L2a1: 8\n")
    code, out = run("colorings", "links_upto7.pd", "jones.bq")
    assert out.count("\n") == 18


def test_bracket_multiset():
    code, out = run("bracket", "links_upto7.pd", "hopf_z3.bq", "hopf_z3.br", "--name", "L2a1")
    assert (code, out) == (0, "L2a1: {1: 4, 2: 4}\n")


def test_printed_bracket_needs_unchecked():
    argv = ["bracket", "links_upto7.pd", "links_z6.bq", "links_z6.br", "--name", "L2a1"]
    assert run(*argv)[0] == 1
    assert run(*argv, "--unchecked")[0] == 0


def test_poly_hopf():
    args = ["links_upto7.pd", "hopf_z3.bq", "hopf_z3.br", "--endos", "hopf_z3.endo", "--name", "L2a1"]
    assert run("poly", *args) == (0, "L2a1: 4u^{2}v^{1} + 4u^{1}v^{1}\n")
    assert run("poly", *args, "--kind", "twovar") == (0, "L2a1: 4s^{2}t^{2} + 4s^{1}t^{1}\n")


def test_quiver_and_dot(tmp_path):
    dot = tmp_path / "h.dot"
    code, out = run("quiver", "links_upto7.pd", "hopf_z3.bq", "hopf_z3.br",
                    "--endos", "identity", "--name", "L2a1", "--dot", str(dot))
    assert code == 0
    assert out.startswith("L2a1: 8 vertices, 8 edges, |S|=1\n")
    text = dot.read_text()
    assert text.startswith('digraph "L2a1" {') and text.count("->") == 8


def test_table_virtual_separation_and_jones_column():
    code, out = run("table", "virtual.pd", "virtual_q.bq", "virtual_q.br", "--weighting", "edge")
    rows = dict(line.split(" & ") for line in out.splitlines())
    assert code == 0 and rows["3.1"] == rows["3.7"]  # bundled 3.1 is not the tabulated knot, see docs/orientations.md
    code, out = run("table", "virtual.pd", "jones.bq", "jones.br", "--group")
    assert code == 0 and out.count("\n") == 1 and out.rstrip().endswith("3.1, 3.7")


def test_table_parallel_is_deterministic(monkeypatch):
    argv = ["table", "knots_upto8.pd", "knots_q.bq", "knots_q.br", "--weighting", "edge"]
    monkeypatch.setenv("BBQUIVER_WORKERS", "1")
    serial = run(*argv)
    monkeypatch.setenv("BBQUIVER_WORKERS", "2")
    assert run(*argv) == serial
    assert run(*argv) == serial
    assert serial[1].splitlines()[0].startswith("3_1 & ")


def test_missing_file_is_usage_error(capsys):
    assert run("poly", "nope.pd", "hopf_z3.bq", "hopf_z3.br") == (2, "")
    assert "no such file" in capsys.readouterr().err


def test_bad_arguments_are_usage_errors():
    assert run("bogus")[0] == 2
    assert run("poly", "links_upto7.pd")[0] == 2
    assert run("poly", "links_upto7.pd", "hopf_z3.bq", "hopf_z3.br", "--kind", "x")[0] == 2


def test_parse_error_is_validation_failure(tmp_path, capsys):
    bad = tmp_path / "bad.pd"
    bad.write_text("k : X+(1,2,3\n")
    assert run("colorings", str(bad), "hopf_z3.bq") == (1, "")
    assert "error" in capsys.readouterr().err


def test_non_endomorphism_file(tmp_path):
    f = tmp_path / "maps.endo"
    f.write_text("1 1 1 2\n")
    code, out = run("poly", "links_upto7.pd", "hopf_z3.bq", "hopf_z3.br",
                    "--endos", str(f), "--name", "L2a1")
    assert (code, out) == (1, "")


def test_table_row_errors_continue(monkeypatch):
    from bbquiver import cli

    real = cli._poly_text

    def flaky(d, *rest):
        if d.name == "4_1":
            raise ArithmeticError("boom")
        return real(d, *rest)

    monkeypatch.setattr(cli, "_poly_text", flaky)
    monkeypatch.setenv("BBQUIVER_WORKERS", "1")
    code, out = run("table", "knots_upto8.pd", "jones.bq", "jones.br")
    lines = out.splitlines()
    assert code == 1 and len(lines) == 35
    assert lines[1] == "4_1 & ERROR boom" and lines[2].startswith("5_1 & ")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "bbquiver", "endos", str(data_path("jones.bq"))],
                         capture_output=True, text=True, check=True)
    assert out.stdout == "1\n1\n"
