import json
import os

import pytest

from ordtile.cli import (DOCUMENTS, EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, export_schemas,
                         validate_document)
from ordtile.cli.__main__ import main, render_human
from ordtile.data import generators, read_graph
from ordtile.datatypes import OrderedGraph, OrderedMultipartite

SCHEMA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "schemas")


def run(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


class TestAnalyze:
    def test_barrier8(self, capsys, graph_file, barrier8):
        code, doc = run(capsys, "analyze", graph_file(barrier8))
        assert code == EXIT_OK
        validate_document("analyze", doc)
        assert doc["perfect_case"] == "CaseII"
        assert doc["chi_star"] == {"kind": "exact", "value": "8/3", "rule": "bottlegraph_scan",
                                   "evidence": doc["chi_star"]["evidence"], "bottlegraph": [3, 3, 2]}
        assert doc["barrier"] is not None

    def test_unresolved_exits_zero(self, capsys, graph_file, path5):
        code, doc = run(capsys, "analyze", graph_file(path5), "--effort", "none")
        assert code == EXIT_OK
        assert doc["perfect_case"] == "UnresolvedChiStar"
        assert doc["notes"]

    def test_human_output(self, capsys, graph_file, path5):
        assert main(["analyze", graph_file(path5)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "perfect_case: CaseIII" in out
        assert "3/5 (≈ 0.6)" in out

    @pytest.mark.parametrize("name", ["long_edge11", "skip_path7", "barrier8"])
    def test_deterministic(self, capsys, graph_file, name):
        path = graph_file(generators.FIXTURES[name]())
        outputs = []
        for jobs in ("1", "2", "1"):
            assert main(["--json", "--jobs", jobs, "analyze", path]) == EXIT_OK
            outputs.append(capsys.readouterr().out)
        assert outputs[0]
        assert outputs[0] == outputs[1] == outputs[2]

    def test_edgeless_is_input_error(self, capsys, graph_file):
        assert main(["analyze", graph_file(OrderedGraph.empty(3))]) == EXIT_INPUT
        assert "error" in capsys.readouterr().err


class TestTile:
    def test_perfect(self, capsys, graph_file, k22, edge):
        code, doc = run(capsys, "tile", graph_file(k22, "host.txt"), graph_file(edge), "--perfect")
        assert code == EXIT_OK
        assert doc["mode"] == "perfect"
        assert doc["answer"]["status"] == "PerfectFound"
        assert doc["verified"] is True
        validate_document("tile", doc)

    def test_no_perfect(self, capsys, graph_file, k3, edge):
        code, doc = run(capsys, "tile", graph_file(k3, "host.txt"), graph_file(edge), "--perfect")
        assert code == EXIT_NEGATIVE
        assert doc["answer"]["status"] == "NoPerfect"

    def test_cover(self, capsys, graph_file, edge):
        host = graph_file(OrderedGraph(4, [(1, 2)]), "host.txt")
        code, doc = run(capsys, "tile", host, graph_file(edge), "--cover")
        assert code == EXIT_NEGATIVE
        assert doc == {"mode": "cover", "uncovered": [3, 4]}

    def test_max_and_x(self, capsys, graph_file, k22):
        host = graph_file(OrderedMultipartite((2, 6)).to_graph(), "host.txt")
        code, doc = run(capsys, "tile", host, graph_file(k22), "--max")
        assert code == EXIT_OK
        assert doc["answer"]["count"] == 1
        code, doc = run(capsys, "tile", host, graph_file(k22), "--x", "1/2")
        assert code == EXIT_OK
        assert (doc["x"], doc["target"]) == ("1/2", 1)
        code, doc = run(capsys, "tile", host, graph_file(k22), "--x", "3/4")
        assert code == EXIT_NEGATIVE
        assert doc["answer"]["status"] == "TargetUnreachable"
        assert "verified" not in doc

    def test_timeout(self, capsys, graph_file, edge):
        host = graph_file(OrderedMultipartite((3, 4)).to_graph(), "host.txt")
        code, doc = run(capsys, "tile", host, graph_file(edge), "--max", "--budget", "1")
        assert code == EXIT_INCONCLUSIVE
        assert doc["answer"]["status"] == "Timeout"

    def test_bad_rational(self, capsys, graph_file, edge):
        assert main(["tile", graph_file(edge, "host.txt"), graph_file(edge), "--x", "0.5"]) == EXIT_INPUT

    def test_missing_file(self, capsys, tmp_path, graph_file, edge):
        missing = str(tmp_path / "nope.txt")
        assert main(["tile", missing, graph_file(edge), "--perfect"]) == EXIT_INPUT

    def test_malformed_graph(self, capsys, tmp_path, graph_file, edge):
        bad = tmp_path / "bad.txt"
        bad.write_text("3\n2 1\n")
        assert main(["tile", str(bad), graph_file(edge), "--perfect"]) == EXIT_INPUT
        assert "line 2" in capsys.readouterr().err


class TestBottlegraph:
    def test_simple_yes(self, capsys, graph_file, barrier8):
        code, doc = run(capsys, "bottlegraph", "parts: 3 3 2", graph_file(barrier8), "--simple")
        assert code == EXIT_OK
        assert doc["status"] == "SimpleYes"
        assert doc["parts"] == [3, 3, 2]
        assert len(doc["orderings"]) == 3

    def test_not_simple(self, capsys, graph_file, edge):
        code, doc = run(capsys, "bottlegraph", "parts: 3 1", graph_file(edge), "--simple")
        assert code == EXIT_NEGATIVE
        assert doc["failing_ordering"] == [1, 3]

    def test_bounded_certificate(self, capsys, graph_file, path5):
        code, doc = run(capsys, "bottlegraph", "parts: 5 5 1", graph_file(path5), "--tmax", "2")
        assert code == EXIT_NEGATIVE
        assert doc["certificate"]["kind"] == "CountingFirstPart"

    def test_x_mode(self, capsys, graph_file, k3):
        code, doc = run(capsys, "bottlegraph", "parts: 2 2", graph_file(k3), "--x", "1")
        assert code == EXIT_NEGATIVE
        assert doc["mode"] == "x"
        assert doc["status"] == "No"

    def test_parts_file(self, capsys, tmp_path, graph_file, edge):
        parts = tmp_path / "parts.txt"
        parts.write_text("parts: 1 1\n")
        code, doc = run(capsys, "bottlegraph", str(parts), graph_file(edge), "--simple")
        assert code == EXIT_OK


class TestExtremal:
    def test_F1_to_file(self, capsys, tmp_path, graph_file, k22):
        out = str(tmp_path / "f1.txt")
        code, doc = run(capsys, "extremal", "F1", "--n", "9", "--r", "2", "--i", "1", "--j", "3",
                        "--H", graph_file(k22), "--out", out)
        assert code == EXIT_OK
        assert doc["verified"] is True
        assert read_graph(out).h == 9
        validate_document("extremal", doc)

    def test_F1_to_stdout(self, capsys):
        assert main(["extremal", "F1", "--n", "7", "--r", "2", "--i", "1", "--j", "2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("7\n")

    def test_F2(self, capsys, tmp_path, graph_file, path5):
        code, doc = run(capsys, "extremal", "F2", "--H", graph_file(path5), "--n", "10", "--chi", "5/2",
                        "--out", str(tmp_path / "f2.txt"))
        assert code == EXIT_OK
        assert doc["obstruction"]["ordering"] == [5, 5]

    def test_F2_computes_chi_star(self, capsys, tmp_path, graph_file, edge):
        code, doc = run(capsys, "extremal", "F2", "--H", graph_file(edge), "--n", "8",
                        "--out", str(tmp_path / "f2.txt"))
        assert code == EXIT_OK
        assert doc["parameters"]["chi_star"] == "2"

    def test_F2_wrong_chi_star(self, capsys, tmp_path, graph_file, edge):
        code = main(["extremal", "F2", "--H", graph_file(edge), "--n", "4", "--chi", "100",
                     "--out", str(tmp_path / "f2.txt")])
        assert code == EXIT_NEGATIVE
        assert "ContradictionError" in capsys.readouterr().err

    def test_F2_inconclusive(self, capsys, tmp_path, graph_file, edge):
        code = main(["extremal", "F2", "--H", graph_file(edge), "--n", "4", "--chi", "2", "--budget", "1",
                     "--out", str(tmp_path / "f2.txt")])
        assert code == EXIT_INCONCLUSIVE

    def test_F3(self, capsys, tmp_path, graph_file, skip_path7):
        code, doc = run(capsys, "extremal", "F3", "--H", graph_file(skip_path7), "--n", "9",
                        "--out", str(tmp_path / "f3.txt"))
        assert code == EXIT_OK
        assert doc["min_degree"] == 6

    def test_fourpart(self, capsys, tmp_path):
        code, doc = run(capsys, "extremal", "fourpart", "--ell", "2", "--n", "20", "--no-search",
                        "--out", str(tmp_path / "fourpart.txt"))
        assert code == EXIT_OK
        assert doc["obstruction"]["counting"] == {"lhs": "9/2", "rhs": "4"}


class TestFxh:
    def test_edge(self, capsys, graph_file, edge):
        code, doc = run(capsys, "fxh", graph_file(edge))
        assert code == EXIT_OK
        assert doc["at_one"] == "1/2"
        assert doc["tj_x0"] == {"T": 1, "J": 1, "x0": "1"}
        validate_document("fxh", doc)

    def test_path5_with_chi(self, capsys, graph_file, path5):
        code, doc = run(capsys, "fxh", graph_file(path5), "--chi", "5/2")
        assert doc["gaps"][0]["upper"] == "3/5"

    def test_edgeless(self, capsys, graph_file):
        code, doc = run(capsys, "fxh", graph_file(OrderedGraph.empty(2)))
        assert code == EXIT_OK
        assert "tj_x0" not in doc


def test_usage_errors(capsys):
    assert main([]) == EXIT_INPUT
    assert main(["tile", "a", "b"]) == EXIT_INPUT
    assert main(["--help"]) == EXIT_OK


def test_render_human():
    lines = render_human({"a": "8/3", "b": {"c": [1, 2]}, "d": [{"e": True}]})
    assert lines[0] == "a: 8/3 (≈ 2.666667)"
    assert "  c: 1, 2" in lines
    assert "  e: True" in lines


@pytest.mark.parametrize("command", sorted(DOCUMENTS))
def test_schema_files_match_models(command):
    with open(os.path.join(SCHEMA_DIR, f"{command}.schema.json"), encoding="utf-8") as f:
        on_disk = json.load(f)
    generated = DOCUMENTS[command].model_json_schema()
    assert set(on_disk["properties"]) == set(generated["properties"])
    assert set(on_disk["required"]) == set(generated.get("required", []))
    assert on_disk["additionalProperties"] is False


def test_export_schemas(tmp_path):
    export_schemas(str(tmp_path))
    assert sorted(os.listdir(tmp_path)) == sorted(f"{c}.schema.json" for c in DOCUMENTS)
