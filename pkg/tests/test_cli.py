import subprocess
import sys

import pytest

from syspres.cli import main
from syspres.corpus import table_names
from syspres.table import load_table, parse_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def machine(out):
    block = out.split("[machine]\n", 1)[1]
    return dict(line.split("=", 1) for line in block.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "syspres", "check", "corpus:F2xF2"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "condition 5: FAIL" in proc.stdout


def test_check_f2xf2_file(tmp_path, capsys):
    path = tmp_path / "f2.txt"
    code, out, _ = run(capsys, "corpus", "show", "F2xF2")
    path.write_text(out)
    code, out, _ = run(capsys, "check", str(path), "--link-oracle", "--order-checker", "--witnesses")
    assert code == 1
    m = machine(out)
    assert m["FAILED"] == "5" and m["VERDICT"] == "FAIL"
    assert m["LINK_AGREES"] == "yes" and m["ORDER_AGREES"] == "yes"
    assert "  u=a v=b w=c x=d" in out


def test_check_garside_emitted_table(tmp_path, capsys):
    path = tmp_path / "g23.txt"
    assert run(capsys, "garside", "2x3", "--emit", str(path))[0] == 0
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0 and machine(out)["VERDICT"] == "PASS"


def test_check_undeclared_symbol(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("generators: a b\nproduct: a b = c\n")
    code, out, err = run(capsys, "check", str(path))
    assert code == 2 and "line 2" in err and out == ""


def test_check_invalid_table(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("generators: a b\nproduct: a b = a\n")
    code, out, _ = run(capsys, "check", str(path))
    assert code == 2 and "self-absorption" in out and machine(out)["VALID"] == "no"


def test_missing_file(capsys):
    assert run(capsys, "check", "/nonexistent/table")[0] == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "check", "corpus:R3", "--witnesses", "--link-oracle")[1]
    second = run(capsys, "check", "corpus:R3", "--witnesses", "--link-oracle")[1]
    assert first == second


def test_emit_link_and_dot(tmp_path, capsys):
    link, dot = tmp_path / "l.txt", tmp_path / "l.dot"
    run(capsys, "check", "corpus:R1", "--emit-link", str(link), "--emit-dot", str(dot))
    assert link.read_text().count("edge:") == 12
    assert dot.read_text().startswith("digraph")


@pytest.mark.parametrize("spec", ["1x2;1x3", "3x3"])
def test_garside_check(spec, capsys):
    code, out, _ = run(capsys, "garside", spec, "--check", "--classify-roundtrip")
    m = machine(out)
    assert code == 0 and m["GCD"] == "PASS" and m["ROUNDTRIP"] == "yes" and m["VERDICT"] == "PASS"


@pytest.mark.parametrize("spec", ["0x2", "2x1", "2by3"])
def test_garside_bad_spec(spec, capsys):
    assert run(capsys, "garside", spec)[0] == 2


def test_emitted_tables_reparse(tmp_path, capsys):
    path = tmp_path / "t.txt"
    run(capsys, "garside", "2x3;3x2", "--emit", str(path))
    from syspres.garside import garside_table, parse_spec
    assert load_table(path) == garside_table(parse_spec("2x3;3x2"))


def test_artin_single_edge_matches_garside(tmp_path, capsys):
    graph = tmp_path / "e.g"
    graph.write_text("vertex: v\nvertex: w\nedge: v w label=4 orient=w\n")
    dual = tmp_path / "dual.txt"
    code, out, _ = run(capsys, "artin", str(graph), "--emit-dual", str(dual), "--check")
    assert code == 0 and machine(out)["VERDICT"] == "PASS"
    from syspres.garside import garside_table, parse_spec
    from syspres.table import rename_table
    renamed = rename_table(load_table(dual), {"x_v": "f1_x1", "x_w": "f1_x2", "t_1_1": "f1_x3",
                                              "t_1_2": "f1_x4", "D_1": "D"})
    assert renamed.same_structure(garside_table(parse_spec("4x2")))


def test_artin_triangle(capsys):
    code, out, _ = run(capsys, "artin", "corpus:triangle-333", "--check")
    assert code == 0 and machine(out)["THREE_CYCLES_DIRECTED"] == "yes"


def test_artin_undirected_triangle(tmp_path, capsys):
    graph = tmp_path / "t.g"
    graph.write_text("vertex: a\nvertex: b\nvertex: c\n"
                     "edge: a b label=2 orient=both\nedge: b c label=3 orient=c\nedge: c a label=3 orient=a\n")
    code, _, err = run(capsys, "artin", str(graph))
    assert code == 2 and "undirected 3-cycle (a b c)" in err


def test_artin_bad_orientation(tmp_path, capsys):
    graph = tmp_path / "t.g"
    graph.write_text("vertex: a\nvertex: b\nedge: a b label=3 orient=both\n")
    code, _, err = run(capsys, "artin", str(graph))
    assert code == 2 and "line 3" in err


def test_artin_misdirected_warns(tmp_path, capsys):
    graph = tmp_path / "m.g"
    graph.write_text("vertex: a1\nvertex: a2\nvertex: a3\nvertex: a4\n"
                     "edge: a1 a2 label=3 orient=a2\nedge: a2 a3 label=3 orient=a2\n"
                     "edge: a3 a4 label=3 orient=a4\nedge: a4 a1 label=3 orient=a4\n")
    code, out, _ = run(capsys, "artin", str(graph), "--check")
    assert code in (0, 1)
    assert "warning: misdirected 4-cycle" in out
    assert machine(out)["LINK_AGREES"] == "yes"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "corpus:garside:1x2;1x3")
    assert code == 0 and machine(out)["SPEC"] == "1x2;1x3"
    code, out, _ = run(capsys, "classify", "corpus:F2xF2")
    assert code == 1 and machine(out)["VERDICT"] == "FAIL"


def test_counterexamples(capsys):
    code, out, _ = run(capsys, "counterexamples", "--verify")
    m = machine(out)
    assert code == 0
    assert [m[f"R{i}_FAILED"] for i in range(1, 6)] == ["1", "2", "3", "4", "5"]
    code, out, _ = run(capsys, "counterexamples", "--verify", "--index", "3")
    assert code == 0 and "a=u v" in out and "R1" not in machine(out)


def test_corpus_list_and_show(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0 and "table F2xF2" in out and "graph star-333" in out
    for name in table_names():
        code, out, _ = run(capsys, "corpus", "show", name)
        assert code == 0
        parse_table(out)
    assert run(capsys, "corpus", "show", "nope")[0] == 2


def test_witness_cap_env(monkeypatch, capsys):
    monkeypatch.setenv("SYSPRES_WITNESS_CAP", "2")
    code, out, _ = run(capsys, "check", "corpus:F2xF2", "--witnesses")
    assert "... 6 more" in out
    monkeypatch.setenv("SYSPRES_WITNESS_CAP", "-1")
    assert run(capsys, "check", "corpus:F2xF2")[0] == 2


def test_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2
