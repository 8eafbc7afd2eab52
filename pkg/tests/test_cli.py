import json

import pytest

from aspectmine.cli import main
from aspectmine.corpus import save_annotated

from conftest import copular, has_object, make_corpus


@pytest.fixture()
def corpus_path(tmp_path):
    sentences = [copular("p%d" % i, "picture", "good") for i in range(4)]
    sentences += [has_object("b%d" % i, "good", "battery") for i in range(3)]
    path = tmp_path / "toy.jsonl"
    save_annotated(make_corpus("toy", sentences), path)
    return path


def test_validate_ok(corpus_path, capsys):
    assert main(["validate", "--corpus", str(corpus_path)]) == 0
    assert "OK" in capsys.readouterr().out


def test_validate_schema_error_exit_3(tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text('{"id": "x"}\n')
    assert main(["validate", "--corpus", str(bad)]) == 3


def test_validate_empty_file_exit_3(tmp_path):
    empty = tmp_path / "empty.jsonl"
    empty.write_text("")
    assert main(["validate", "--corpus", str(empty)]) == 3


def test_parse_crd(tmp_path, capsys):
    raw = tmp_path / "raw.txt"
    raw.write_text("[t]nice one\nplayer[+2]##great player .\n##plain sentence .\n")
    assert main(["parse-crd", "--in", str(raw)]) == 0
    lines = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert lines[0]["gold"][0]["term"] == "player"
    assert lines[1]["gold"] == []


def test_run_fba_with_eval(corpus_path, tmp_path, capsys):
    config = tmp_path / "config.yaml"
    config.write_text("fba:\n  min_sup: 0.2\n  min_psupport: 1\n  compact_min_sentences: 1\n")
    out = tmp_path / "result.json"
    code = main([
        "run", "fba", "--corpus", str(corpus_path), "--config", str(config), "--out", str(out),
    ])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["algorithm"] == "fba"
    assert "evaluation" in payload
    assert "P=" in capsys.readouterr().out


def test_run_bad_config_exit_2(corpus_path, tmp_path):
    config = tmp_path / "config.yaml"
    config.write_text("fba:\n  min_sup: 42\n")
    assert main(["run", "fba", "--corpus", str(corpus_path), "--config", str(config)]) == 2


def test_run_missing_corpus_exit_3(tmp_path):
    # a nonexistent corpus path surfaces as a data error, not a traceback
    missing = tmp_path / "nope.jsonl"
    code = main(["run", "fba", "--corpus", str(missing)])
    assert code == 3


def test_evaluate_stored_result(corpus_path, tmp_path, capsys):
    result = {
        "corpus": "toy",
        "algorithm": "fba",
        "aspects": [{"term": "picture", "kind": "frequent", "support": 4, "sentences": []}],
        "opinion_words": [],
    }
    result_path = tmp_path / "result.json"
    result_path.write_text(json.dumps(result))
    assert main(["evaluate", "--result", str(result_path), "--corpus", str(corpus_path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["precision"] == 1.0


def test_sweep_tba_with_t_grid_flag(corpus_path, tmp_path, capsys):
    config = tmp_path / "config.yaml"
    config.write_text(
        "tba:\n  ibm1_iterations: 2\n  ibm2_iterations: 1\n  df_table: null\n"
        "sweep:\n  tba:\n    grid:\n      grouping: [np_subtree]\n"
    )
    out_dir = tmp_path / "sweep_tba"
    code = main([
        "sweep", "tba", "--corpus", str(corpus_path), "--config", str(config),
        "--t-grid", "5:5:20", "--out", str(out_dir),
    ])
    assert code == 0
    rows = json.loads((out_dir / "results.json").read_text())["rows"]
    thresholds = {r["config"]["threshold"] for r in rows}
    assert thresholds == {None, 5.0, 10.0, 15.0, 20.0}


def test_sweep_and_report(corpus_path, tmp_path, capsys):
    config = tmp_path / "config.yaml"
    config.write_text(
        "fba:\n  compact_min_sentences: 1\n"
        "sweep:\n  fba:\n    grid:\n      min_sup: [0.2, 0.4]\n      min_psupport: [1, 2]\n"
    )
    out_dir = tmp_path / "sweep"
    code = main([
        "sweep", "fba", "--corpus", str(corpus_path), "--config", str(config),
        "--out", str(out_dir),
    ])
    assert code == 0
    assert (out_dir / "results.json").exists()
    assert (out_dir / "timings.csv").exists()
    capsys.readouterr()
    assert main(["report", "--results", str(out_dir / "results.json"), "--format", "table"]) == 0
    assert "Corpus" in capsys.readouterr().out
