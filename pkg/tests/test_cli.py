import json

import pytest

from pathramsey.cli import ConfigError, load_config, main
from pathramsey.graphs import complete_graph, cycle_graph, path_graph


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(g.to_edgelist())
        return str(p)
    return write


def test_constants_pass(capsys):
    assert main(["constants", "--quick"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "78.285" in out


def test_constants_json_and_tight_tolerance(capsys):
    assert main(["constants", "--quick", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert {"name", "computed", "published", "relation", "tolerance", "passed"} <= set(rows[0])
    # the published c0 and f(c0) are rounded to three decimals
    assert main(["constants", "--quick", "--tolerance", "1e-4"]) == 1


def test_arrow(graph_file, tmp_path, capsys):
    assert main(["arrow", graph_file(complete_graph(3)), "-n", "3"]) == 0
    out = tmp_path / "cert.json"
    assert main(["arrow", graph_file(path_graph(3)), "-n", "3", "--out", str(out)]) == 1
    cert = json.loads(out.read_text())
    assert cert["verdict"] == "fails" and cert["witness"]["colours"][0] != cert["witness"]["colours"][1]
    assert main(["arrow", graph_file(complete_graph(5)), "-n", "4"]) == 0
    assert main(["arrow", graph_file(complete_graph(6)), "-n", "6", "--budget", "10"]) == 3
    assert "undecided" in capsys.readouterr().err


def test_arrow_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n1\n")
    assert main(["arrow", str(bad), "-n", "3"]) == 2
    assert "line 3" in capsys.readouterr().err


def test_certify(graph_file, capsys):
    assert main(["certify", graph_file(complete_graph(12)), "-n", "4"]) == 0
    assert main(["certify", graph_file(cycle_graph(12)), "-n", "4"]) == 1
    assert main(["certify", graph_file(cycle_graph(12)), "-n", "4", "--mode", "monte_carlo"]) == 2
    assert main(["certify", graph_file(cycle_graph(12)), "-n", "4", "--mode", "monte_carlo",
                 "--seed", "1", "--budget", "100"]) == 1


def test_gen(tmp_path, capsys):
    assert main(["gen", "--model", "regular", "-n", "10", "-d", "3", "--seed", "4"]) == 0
    first = capsys.readouterr().out
    assert first.splitlines()[0] == "10 15"
    main(["gen", "--model", "regular", "-n", "10", "-d", "3", "--seed", "4"])
    assert capsys.readouterr().out == first
    assert main(["gen", "--model", "pairing", "-n", "5", "-d", "3", "--seed", "4"]) == 2
    with pytest.raises(SystemExit):
        main(["gen", "--model", "gnp", "-n", "5", "-p", "0.5"])  # seed is required


def test_config_validation():
    with pytest.raises(ConfigError, match="seed"):
        load_config('{"kind": "dr", "n": 10, "p": 0.5, "r": 2, "trials": 3}')
    text = '{\n  "kind": "mono_path",\n  "model": "pairing",\n  "n": 7,\n  "d": 3,\n  "r": 2,\n  "trials": 2,\n  "seed": 1\n}'
    with pytest.raises(ConfigError, match="line 5"):
        load_config(text)
    with pytest.raises(ConfigError, match="line 3"):
        load_config('{\n  "n": 10,\n  "bogus": 1,\n  "seed": 1\n}')
    with pytest.raises(ConfigError, match="line 2"):
        load_config('{\n  "n": 10,,\n}')
    cfg = load_config('{"kind": "dr", "n": 10, "p": 0.5, "r": 2, "trials": 3, "seed": 5}')
    assert cfg["seed"] == 5


def test_experiment_outputs_reproducible(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"kind": "dr", "n": 120, "p": 0.1, "r": 3, "strategy": "greedy",
                               "trials": 5, "seed": 42}))
    assert main(["experiment", str(cfg), "--out-dir", str(tmp_path / "a")]) == 0
    monkeypatch.setenv("PATHRAMSEY_OUT_DIR", str(tmp_path / "b"))
    assert main(["experiment", str(cfg), "--jobs", "2"]) == 0
    a = (tmp_path / "a" / "run.csv").read_bytes()
    assert a == (tmp_path / "b" / "run.csv").read_bytes()
    assert (tmp_path / "a" / "run.summary.json").read_bytes() == (tmp_path / "b" / "run.summary.json").read_bytes()
    summary = json.loads((tmp_path / "a" / "run.summary.json").read_text())
    assert summary["trials"] == 5


def test_experiment_missing_seed(tmp_path, capsys):
    cfg = tmp_path / "noseed.json"
    cfg.write_text('{"kind": "dr", "n": 50, "p": 0.5, "r": 2, "trials": 3}')
    assert main(["experiment", str(cfg), "--out-dir", str(tmp_path)]) == 2
    assert "seed" in capsys.readouterr().err
    assert not (tmp_path / "noseed.csv").exists()


def test_tree_claim(graph_file, capsys):
    assert main(["tree-claim", graph_file(path_graph(7)), "-k", "1", "-n", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["kind"] == "disjoint_subgraphs" and out["violations"] == []
    assert main(["tree-claim", graph_file(cycle_graph(5)), "-k", "1", "-n", "3"]) == 2


def test_colour_lower_bound(tmp_path, capsys):
    out = tmp_path / "adv.json"
    assert main(["colour-lower-bound", "-n", "6", "-r", "2", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "no monochromatic P_6: yes" in text and "15/2" in text
    data = json.loads(out.read_text())
    assert data["r"] == 3 and len(data["construction"]["U"]) == 5
    assert main(["colour-lower-bound", "-n", "6", "-r", "2", "--graph", str(out)]) == 2
