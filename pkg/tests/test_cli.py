"""
Тесты командной строки: коды выхода, файлы и схема отчёта
"""

import json
from pathlib import Path

import pytest

from mdst_engine.adapters.cli import run
from mdst_engine.adapters.cli.utils import format_tree
from mdst_engine.config.settings import settings
from mdst_engine.core.driver import improved_mdst
from mdst_engine.models import RunConfig, format_graph
from tests.conftest import star_plus_edge

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def cycle_file(tmp_path: Path) -> Path:
    path = tmp_path / "cycle.txt"
    assert run(["gen", "cycle", "10", "--output", str(path)]) == 0
    return path


@pytest.fixture
def certified(tmp_path: Path):
    """Файлы графа, дерева и сертификата для звезды с ребром"""
    graph = star_plus_edge()
    result = improved_mdst(graph, RunConfig(eps_user=0.1, threshold_scale=0.0))
    assert result.certificate is not None
    graph_path = tmp_path / "graph.txt"
    tree_path = tmp_path / "tree.txt"
    cert_path = tmp_path / "cert.json"
    graph_path.write_text(format_graph(graph))
    tree_path.write_text(format_tree(result.tree))
    cert_path.write_text(result.certificate.model_dump_json())
    return graph_path, tree_path, cert_path


class TestGen:
    """Команда gen"""

    def test_cycle_lines(self, cycle_file: Path):
        """gen cycle пишет n рёбер по строке"""
        lines = cycle_file.read_text().splitlines()
        assert len(lines) == 10
        assert lines[0] == "0 1"

    def test_stdout_and_dimacs(self, capsys):
        """Вывод в stdout в формате DIMACS"""
        assert run(["gen", "path", "3", "--format", "dimacs"]) == 0
        assert capsys.readouterr().out == "p edge 3 2\ne 1 2\ne 2 3\n"

    def test_bad_params(self):
        """gnp без --p - ошибка параметров (код 3)"""
        assert run(["gen", "gnp", "10"]) == 3

    def test_unknown_kind(self):
        """Неизвестное семейство - ошибка флагов (код 3)"""
        assert run(["gen", "lattice", "10"]) == 3


class TestSolve:
    """Команда solve"""

    def test_json_matches_golden(self, cycle_file: Path, capsys):
        """JSON-отчёт совпадает с эталонным файлом"""
        code = run(["solve", "--input", str(cycle_file), "--epsilon", "0.1", "--json", "--no-timings"])
        assert code == 0
        out = capsys.readouterr().out
        expected = (GOLDEN / "solve_cycle10.json").read_text()
        assert list(json.loads(out)) == list(json.loads(expected))
        assert json.loads(out) == json.loads(expected)

    def test_emitted_tree_matches_report(self, cycle_file: Path, tmp_path: Path, capsys):
        """Записанное дерево соответствует степени в отчёте"""
        tree_path = tmp_path / "tree.txt"
        code = run(["solve", "-i", str(cycle_file), "--emit-tree", str(tree_path), "--json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        degree = [0] * 10
        for line in tree_path.read_text().splitlines():
            u, v = map(int, line.split())
            degree[u] += 1
            degree[v] += 1
        assert max(degree) == report["tree_degree"] == 2
        assert report["wall_ms"] is not None

    def test_deterministic(self, tmp_path: Path, capsys):
        """Два запуска с одним зерном дают одинаковый вывод"""
        graph_path = tmp_path / "ham.txt"
        run(["gen", "ham-path-plus-edges", "300", "--extra", "900", "--seed", "5", "-o", str(graph_path)])
        outputs = []
        for name in ("a", "b"):
            tree_path = tmp_path / f"{name}.tree"
            args = ["solve", "-i", str(graph_path), "--seed", "5", "--json", "--no-timings"]
            assert run(args + ["--emit-tree", str(tree_path)]) == 0
            outputs.append((capsys.readouterr().out, tree_path.read_bytes()))
        assert outputs[0] == outputs[1]

    def test_table_output(self, cycle_file: Path, capsys):
        """Табличный вывод по умолчанию"""
        assert run(["solve", "-i", str(cycle_file)]) == 0
        out = capsys.readouterr().out
        assert "tree_degree" in out and "small-step-exit" in out

    def test_epsilon_out_of_range(self, cycle_file: Path):
        """ε вне диапазона - код 3"""
        assert run(["solve", "-i", str(cycle_file), "--epsilon", "0.2"]) == 3

    def test_missing_flag(self):
        """Нет обязательного флага - код 3"""
        assert run(["solve"]) == 3

    def test_missing_file(self, tmp_path: Path):
        """Нет входного файла - код 2"""
        assert run(["solve", "-i", str(tmp_path / "absent.txt")]) == 2

    def test_malformed_graph(self, tmp_path: Path):
        """Петля во входе - код 2"""
        path = tmp_path / "loop.txt"
        path.write_text("0 1\n1 1\n")
        assert run(["solve", "-i", str(path)]) == 2

    def test_invalid_utf8_is_input_error(self, tmp_path: Path):
        """Байты не в UTF-8 - ошибка ввода (код 2), а не падение"""
        path = tmp_path / "binary.txt"
        path.write_bytes(b"0 1\n1 2\xff\n")
        assert run(["solve", "-i", str(path)]) == 2
        assert run(["exact", "-i", str(path)]) == 2

    def test_certificate_emission(self, tmp_path: Path, capsys, monkeypatch):
        """solve пишет сертификат, verify его принимает"""
        monkeypatch.setattr(settings.solver, "threshold_scale", 0.0)
        graph_path = tmp_path / "graph.txt"
        cert_path = tmp_path / "cert.json"
        tree_path = tmp_path / "tree.txt"
        graph_path.write_text(format_graph(star_plus_edge()))
        args = ["solve", "-i", str(graph_path), "--emit-cert", str(cert_path)]
        code = run(args + ["--emit-tree", str(tree_path), "--json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["certificate_bound"] == json.loads(cert_path.read_text())["bound"] == 1
        assert run(["verify", "-i", str(graph_path), "--tree", str(tree_path), "--cert", str(cert_path)]) == 0


class TestVerify:
    """Команда verify"""

    def test_valid(self, certified, capsys):
        """Верный сертификат: печатается оценка, код 0"""
        graph_path, tree_path, cert_path = certified
        args = ["verify", "-i", str(graph_path), "--tree", str(tree_path), "--cert", str(cert_path)]
        assert run(args) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_explain(self, certified, capsys):
        """--explain печатает подробности в JSON"""
        graph_path, tree_path, cert_path = certified
        args = ["verify", "-i", str(graph_path), "--tree", str(tree_path), "--cert", str(cert_path)]
        assert run(args + ["--explain"]) == 0
        details = json.loads(capsys.readouterr().out)
        assert details["verified_bound"] == 1

    def test_tampered_layers(self, certified, capsys):
        """Испорченные слои: отказ с названием причины, код 1"""
        graph_path, tree_path, cert_path = certified
        doc = json.loads(cert_path.read_text())
        doc["layers"] = [[1], []]
        cert_path.write_text(json.dumps(doc))
        args = ["verify", "-i", str(graph_path), "--tree", str(tree_path), "--cert", str(cert_path)]
        assert run(args) == 1
        assert "UncoveredBoundaryEdge" in capsys.readouterr().out

    def test_tree_not_spanning(self, certified, capsys):
        """Не остовное дерево: отказ, код 1"""
        graph_path, tree_path, cert_path = certified
        tree_path.write_text("0 1\n0 2\n1 2\n0 3\n")
        args = ["verify", "-i", str(graph_path), "--tree", str(tree_path), "--cert", str(cert_path)]
        assert run(args) == 1
        assert "InvalidTree" in capsys.readouterr().out

    def test_garbage_certificate(self, certified):
        """Не JSON вместо сертификата - код 2"""
        graph_path, tree_path, cert_path = certified
        cert_path.write_text("{not json")
        args = ["verify", "-i", str(graph_path), "--tree", str(tree_path), "--cert", str(cert_path)]
        assert run(args) == 2


class TestExact:
    """Команда exact"""

    def test_star(self, tmp_path: Path, capsys):
        """exact печатает Δ* звезды"""
        path = tmp_path / "star.txt"
        assert run(["gen", "star", "5", "-o", str(path)]) == 0
        assert run(["exact", "-i", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "4"

    def test_too_large(self, tmp_path: Path):
        """Граф больше лимита точного перебора - код 3"""
        path = tmp_path / "path.txt"
        run(["gen", "path", "12", "-o", str(path)])
        assert run(["exact", "-i", str(path)]) == 3


class TestBenchCommand:
    """Команда bench"""

    def test_small_ladder(self, tmp_path: Path):
        """bench пишет CSV с заголовком и строкой на каждое n"""
        out = tmp_path / "bench.csv"
        args = ["bench", "--min-log-n", "4", "--max-log-n", "5", "--avg-degree", "4", "-o", str(out)]
        assert run(args) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "n,m,eps,wall_ms,tree_degree,degred_calls"
        assert [line.split(",")[0] for line in lines[1:]] == ["16", "32"]
