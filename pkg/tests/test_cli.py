import json

import pytest

from app.algorithms.model import derive_params, project, sample_bipartite
from app.core.enums import ExitCode
from app.modules.graph_io import read_bipartite, read_graph
from cli import main


def _run(*argv: str) -> int:
    return main([str(arg) for arg in argv])


@pytest.fixture
def generated(tmp_path) -> str:
    path = tmp_path / "b.txt"
    assert _run("generate", "--alpha", 1.5, "--beta", 0.1, "--gamma", 5, "--n", 1000, "--seed", 1, "-o", path) == 0
    return str(path)


def test_generate_writes_bipartite_file(generated):
    b = read_bipartite(generated)
    params = derive_params(1.5, 0.1, 5, 1000, seed=1)
    assert (b.n_nodes, b.n_attributes) == (1000, params.m)
    assert list(b.incidences()) == list(sample_bipartite(params).incidences())


def test_generate_with_raw_parameters(tmp_path):
    path = tmp_path / "b.txt"
    assert _run("generate", "--n", 4, "--m", 2, "--p", 1, "-o", path) == 0
    assert read_bipartite(str(path)).edge_count == 8


def test_generate_rejects_mixed_parameterizations(capsys):
    assert _run("generate", "--n", 4, "--m", 2, "--p", 0.5, "--alpha", 1) == ExitCode.VALIDATION
    assert capsys.readouterr().err.startswith("error:")


def test_generate_rejects_invalid_probability(capsys):
    assert _run("generate", "--n", 4, "--m", 2, "--p", 1.5) == ExitCode.VALIDATION
    assert "error:" in capsys.readouterr().err


def test_project_round_trip_matches_memory(generated, tmp_path):
    out = tmp_path / "g.txt"
    assert _run("project", "--bipartite", generated, "-o", out) == 0
    in_memory = project(sample_bipartite(derive_params(1.5, 0.1, 5, 1000, seed=1)))
    assert list(read_graph(str(out)).edges()) == list(in_memory.edges())


def test_subcommands_are_byte_deterministic(generated, tmp_path):
    outputs = []
    for attempt in range(2):
        out = tmp_path / f"run{attempt}"
        out.mkdir()
        assert _run("generate", "--n", 300, "--alpha", 1, "--beta", 1, "--gamma", 2, "--seed", 5, "-o", out / "b.txt") == 0
        assert _run("project", "--bipartite", out / "b.txt", "-o", out / "g.txt") == 0
        assert _run("analyze", "--bipartite", out / "b.txt", "-o", out / "a.json") == 0
        assert _run("color", "--graph", out / "g.txt", "--k", 3, "--verify", "-o", out / "c.json") == 0
        assert _run("verify", "--graph", out / "g.txt", "--coloring", out / "c.json", "-o", out / "v.json") == 0
        assert _run("hyperbolicity", "--graph", out / "g.txt", "-o", out / "h.json") == 0
        outputs.append({name: (out / name).read_bytes() for name in ("b.txt", "g.txt", "a.json", "c.json", "v.json", "h.json")})
    assert outputs[0] == outputs[1]


def test_analyze_empty_graph(tmp_path, capsys):
    graph = tmp_path / "empty10.txt"
    graph.write_text("graph 10\n")
    assert _run("analyze", "--graph", graph) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["degeneracy"] == 0
    assert (report["grad0_num"], report["grad0_den"]) == (0, 1)


def test_analyze_reports_attribute_degree(tmp_path, capsys):
    b = tmp_path / "b.txt"
    b.write_text("bipartite 4 2\na 0 0\na 0 1\na 0 2\na 1 3\n")
    assert _run("analyze", "--bipartite", b, "--thresholds", 1, 2) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["max_attribute_degree"] == 3
    assert report["degeneracy"] == 2
    assert [point["threshold"] for point in report["degree_tail"]] == [1, 2]


def test_unknown_flag_is_a_validation_error(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    graph.write_text("graph 2\n")
    assert _run("analyze", "--graph", graph, "--bogus") == ExitCode.VALIDATION
    assert capsys.readouterr().err.startswith("error:")


def test_non_ascii_input_is_a_validation_error(tmp_path, capsys):
    graph = tmp_path / "accent.txt"
    graph.write_bytes(b"graph 2\ne 0 1 \xc3\xa9\n")
    assert _run("analyze", "--graph", graph) == ExitCode.VALIDATION
    assert capsys.readouterr().err.startswith("error:")


def test_directory_input_is_a_validation_error(tmp_path, capsys):
    assert _run("analyze", "--graph", tmp_path) == ExitCode.VALIDATION
    assert capsys.readouterr().err.startswith("error:")


def test_unreadable_coloring_is_a_validation_error(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    graph.write_text("graph 2\ne 0 1\n")
    coloring = tmp_path / "c.json"
    coloring.write_bytes(b"{\"k\": 2, \"note\": \"\xff\"}")
    assert _run("verify", "--graph", graph, "--coloring", coloring) == ExitCode.VALIDATION
    assert _run("verify", "--graph", graph, "--coloring", tmp_path) == ExitCode.VALIDATION
    assert capsys.readouterr().err.count("error:") == 2


def test_missing_subcommand(capsys):
    assert _run() == ExitCode.VALIDATION
    assert capsys.readouterr().err.startswith("error:")


def test_verify_planted_violation_exits_three(tmp_path, capsys):
    graph = tmp_path / "triangle.txt"
    graph.write_text("graph 3\ne 0 1\ne 0 2\ne 1 2\n")
    coloring = tmp_path / "c.json"
    coloring.write_text(json.dumps({"k": 2, "num_colors": 1, "colors": [0, 0, 0]}))
    assert _run("verify", "--graph", graph, "--coloring", coloring) == ExitCode.VERIFICATION_FAILED
    captured = capsys.readouterr()
    assert json.loads(captured.out)["verification"][0]["pass"] is False
    assert captured.err.startswith("error:")


def test_verify_rejects_foreign_coloring(tmp_path):
    graph = tmp_path / "g.txt"
    graph.write_text("graph 3\ne 0 1\n")
    coloring = tmp_path / "c.json"
    coloring.write_text(json.dumps({"k": 2, "num_colors": 1, "colors": [0, 0]}))
    assert _run("verify", "--graph", graph, "--coloring", coloring) == ExitCode.VALIDATION


def test_hyperbolicity_over_cap_exits_two(tmp_path, capsys):
    graph = tmp_path / "cycle.txt"
    graph.write_text("graph 12\n" + "".join(f"e {i} {i + 1}\n" for i in range(11)) + "e 0 11\n")
    assert _run("hyperbolicity", "--graph", graph, "--size-cap", 6) == ExitCode.CAP_EXCEEDED
    assert "exceeds cap" in capsys.readouterr().err
    assert _run("hyperbolicity", "--graph", graph) == 0
    report = json.loads(capsys.readouterr().out)
    assert (report["delta_num"], report["certificate"], report["special_k"]) == (6, 3, 12)


def test_hyperbolicity_omits_absent_witness(tmp_path, capsys):
    graph = tmp_path / "path.txt"
    graph.write_text("graph 3\ne 0 1\ne 1 2\n")
    assert _run("hyperbolicity", "--graph", graph) == 0
    assert "witness" not in json.loads(capsys.readouterr().out)


def test_hyperbolicity_checks_bipartite_query(tmp_path, capsys):
    b = tmp_path / "b.txt"
    b.write_text("bipartite 5 4\na 0 0\na 0 2\na 1 2\na 1 3\na 2 1\na 2 3\na 3 0\na 3 1\na 3 4\n")
    query = tmp_path / "q.json"
    query.write_text(json.dumps({"X": [2, 3], "Y": [1], "C": 0, "path": [0, 2, 1, 3, 2]}))
    assert _run("hyperbolicity", "--bipartite", b, "--query", query) == 0
    assert json.loads(capsys.readouterr().out)["accepted"] is True


def test_color_writes_result(tmp_path, capsys):
    graph = tmp_path / "p4.txt"
    graph.write_text("graph 4\ne 0 1\ne 1 2\ne 2 3\n")
    assert _run("color", "--graph", graph, "--k", 3) == 0
    result = json.loads(capsys.readouterr().out)
    assert (result["k"], result["num_colors"], result["verification"]) == (3, 3, [])


def test_color_writes_summary_csv(tmp_path):
    graph = tmp_path / "p4.txt"
    graph.write_text("graph 4\ne 0 1\ne 1 2\ne 2 3\n")
    summary = tmp_path / "summary.csv"
    assert _run("color", "--graph", graph, "--k", 3, "--csv", summary, "-o", tmp_path / "c.json") == 0
    assert summary.read_text() == "n,k,num_colors,rounds\n4,3,3,1\n"


def test_experiment_from_config(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(
        json.dumps(
            {
                "name": "cli",
                "alpha": 1.5,
                "beta": 0.1,
                "gamma": 5,
                "n_values": [60, 90],
                "trials": 2,
                "measurements": ["degeneracy", "coloring_k"],
                "coloring_k": [2],
            }
        )
    )
    code = _run("experiment", "--config", config, "--workers", 1, "-o", tmp_path / "results")
    assert code == 0
    target = capsys.readouterr().out.strip()
    summary = (tmp_path / "results" / "cli").glob("*/summary.csv")
    lines = next(summary).read_text().splitlines()
    assert lines[0] == "n,measurement,median,min,max"
    assert len(lines) == 1 + 2 * 2
    assert target.startswith(str(tmp_path / "results" / "cli"))


def test_experiment_overrides_are_validated(tmp_path):
    assert _run("experiment", "--preset", "degen-alpha-0.5", "--trials", 0) == ExitCode.VALIDATION
    assert _run("experiment", "--preset", "no-such-preset") == ExitCode.VALIDATION
    assert _run("experiment") == ExitCode.VALIDATION
