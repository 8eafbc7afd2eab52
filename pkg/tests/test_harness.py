import json
from pathlib import Path

import pytest

from aspectmine.corpus import save_annotated
from aspectmine.errors import ConfigError
from aspectmine.harness import (
    DEFAULT_SWEEP_GRIDS,
    SweepSpec,
    best_average,
    build_dba_config,
    build_fba_config,
    build_tba_config,
    grid_points,
    load_config_file,
    load_sweep_result,
    report,
    resolve_seeds,
    run_sweep,
    save_sweep,
)

from conftest import conjoined, copular, has_object, make_corpus


def small_corpus(name):
    sentences = []
    for i in range(4):
        sentences.append(copular("%s_p%d" % (name, i), "picture", "good"))
    for i in range(3):
        sentences.append(has_object("%s_b%d" % (name, i), "good", "battery"))
    sentences.append(conjoined("%s_c0" % name, "battery", "screen", "fine"))
    sentences.append(copular("%s_n0" % name, "trip", "great", gold=()))
    return make_corpus(name, sentences)


@pytest.fixture()
def corpus_paths(tmp_path):
    paths = []
    for name in ("alpha", "beta"):
        path = tmp_path / ("%s.jsonl" % name)
        save_annotated(small_corpus(name), path)
        paths.append(path)
    return paths


class TestConfigBuilders:
    def test_fba_roundtrip(self):
        cfg = build_fba_config({"min_sup": 0.05, "adj_window": 2, "stem_algorithm": "lemma"})
        assert cfg.mining.min_sup == 0.05
        assert cfg.adj_window == 2
        assert cfg.stem_algorithm == "lemma"

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown fba keys"):
            build_fba_config({"min_support": 0.05})

    def test_dba_seed_specs(self):
        assert resolve_seeds("good_bad") == (("good", 1), ("bad", -1))
        subset = resolve_seeds("subset0")
        assert len(subset) > 5
        assert resolve_seeds(["great", "awful"]) == (("great", 1), ("awful", -1))
        with pytest.raises(ConfigError):
            resolve_seeds("subsetx")

    def test_tba_lambda_key(self):
        cfg = build_tba_config({"lambda": 0.5, "grouping": "np_subtree", "limit": 10})
        assert cfg.walk_lambda == 0.5
        assert cfg.grouping.method == "np_subtree"

    def test_config_file_loading(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("fba:\n  min_sup: 0.02\neval:\n  matching: stem\n")
        sections = load_config_file(path)
        assert build_fba_config(sections["fba"]).mining.min_sup == 0.02


class TestGridPoints:
    def test_cartesian_size_and_order(self):
        grid = {"b": [1, 2], "a": ["x", "y", "z"]}
        points = list(grid_points(grid))
        assert len(points) == 6
        assert points[0] == {"a": "x", "b": 1}
        assert points[1] == {"a": "x", "b": 2}
        assert points[-1] == {"a": "z", "b": 2}


class TestRunSweep:
    def spec(self, paths, grid=None, **kw):
        return SweepSpec(
            algorithm="fba",
            corpus_paths=paths,
            grid=grid or {"min_sup": [0.2, 0.4], "min_psupport": [1, 2]},
            base={"fba": {"compact_min_sentences": 1}},
            **kw,
        )

    def test_row_count_is_grid_times_corpora(self, corpus_paths):
        result = run_sweep(self.spec(corpus_paths))
        assert len(result.rows) == 4 * 2

    def test_single_point_single_corpus(self, corpus_paths):
        spec = SweepSpec(
            algorithm="fba",
            corpus_paths=corpus_paths[:1],
            grid={"min_sup": [0.3]},
            base={"fba": {"min_psupport": 1, "compact_min_sentences": 1}},
        )
        result = run_sweep(spec)
        assert len(result.rows) == 1

    def test_failures_recorded_not_raised(self, corpus_paths):
        spec = self.spec(corpus_paths, grid={"min_sup": [0.3, 5.0]})
        result = run_sweep(spec)
        errors = [r for r in result.rows if r["error"]]
        assert len(errors) == 2  # the bad grid value on each corpus
        assert all(r["f1"] is None for r in errors)
        # best sets still computed from the good rows
        assert all(result.best[name]["rows"] for name in result.corpora)

    def test_best_ties_all_reported(self, corpus_paths):
        result = run_sweep(self.spec(corpus_paths))
        for name, entry in result.best.items():
            assert entry["rows"]
            assert all(r["f1"] == entry["f1"] for r in entry["rows"])
            # tie-set size must be derivable from the row table itself
            from_rows = [
                r for r in result.rows
                if r["corpus"] == name and r["error"] is None and r["f1"] == entry["f1"]
            ]
            assert len(from_rows) == len(entry["rows"])

    def test_best_average(self, corpus_paths):
        result = run_sweep(self.spec(corpus_paths))
        p, r, f1 = best_average(result)
        assert 0 <= p <= 1 and 0 <= r <= 1 and 0 <= f1 <= 1

    def test_tba_threshold_expansion(self, corpus_paths):
        spec = SweepSpec(
            algorithm="tba",
            corpus_paths=corpus_paths[:1],
            grid={"grouping": ["np_subtree"]},
            base={"tba": {"ibm1_iterations": 2, "ibm2_iterations": 1, "df_table": None}},
        )
        result = run_sweep(spec)
        thresholds = [r["config"]["threshold"] for r in result.rows]
        assert None in thresholds
        assert len(thresholds) > 1  # the t grid expanded

    def test_deterministic_files(self, corpus_paths, tmp_path):
        spec = self.spec(corpus_paths)
        out_a = tmp_path / "run_a"
        out_b = tmp_path / "run_b"
        save_sweep(run_sweep(spec), out_a)
        save_sweep(run_sweep(spec), out_b)
        assert (out_a / "results.json").read_bytes() == (out_b / "results.json").read_bytes()
        assert (out_a / "results.csv").read_bytes() == (out_b / "results.csv").read_bytes()

    def test_parallel_matches_serial(self, corpus_paths, tmp_path):
        spec_serial = self.spec(corpus_paths)
        spec_parallel = self.spec(corpus_paths, jobs=2)
        out_a = tmp_path / "serial"
        out_b = tmp_path / "parallel"
        save_sweep(run_sweep(spec_serial), out_a)
        save_sweep(run_sweep(spec_parallel), out_b)
        assert (out_a / "results.json").read_bytes() == (out_b / "results.json").read_bytes()

    def test_empty_grid_rejected(self, corpus_paths):
        with pytest.raises(ConfigError):
            SweepSpec(algorithm="fba", corpus_paths=corpus_paths, grid={})


class TestReport:
    def make_result(self, corpus_paths, tmp_path):
        result = run_sweep(self.spec(corpus_paths))
        return result

    def spec(self, paths):
        return SweepSpec(
            algorithm="fba",
            corpus_paths=paths,
            grid={"min_sup": [0.2]},
            base={"fba": {"min_psupport": 1, "compact_min_sentences": 1}},
        )

    def test_json_and_csv_round(self, corpus_paths, tmp_path):
        result = run_sweep(self.spec(corpus_paths))
        path = save_sweep(result, tmp_path / "out")
        loaded = load_sweep_result(path)
        assert loaded.algorithm == "fba"
        assert report(loaded, fmt="json")
        assert "corpus,original_p" in report(loaded, fmt="csv")

    def test_table_contains_reference_columns(self):
        # a sweep over the shipped fixture names picks up the Original columns
        result = load_fake_sweep()
        table = report(result, fmt="table")
        assert "Apex DVD Player" in table
        assert "0.797" in table and "0.743" in table  # fba original for apex
        assert "Average" in table

    def test_reference_rows_per_algorithm(self):
        from aspectmine.data import reference_results

        ref = reference_results()
        assert ref["fba"]["original"]["apex_dvd_player"] == {"p": 0.797, "r": 0.743}
        assert ref["dba"]["original"]["nokia_phone"] == {"p": 0.92, "r": 0.86}
        assert ref["tba"]["original"]["average"] == {"p": 0.86, "r": 0.86}

    def test_unknown_format_rejected(self):
        with pytest.raises(ConfigError):
            report(load_fake_sweep(), fmt="xml")


def load_fake_sweep():
    from aspectmine.harness import SweepResult

    row = {
        "config": {"min_sup": 0.01},
        "corpus": "apex_dvd_player",
        "precision": 0.4,
        "recall": 0.35,
        "f1": 0.373,
        "error": None,
    }
    return SweepResult(
        algorithm="fba",
        grid={"min_sup": [0.01]},
        corpora=["apex_dvd_player"],
        rows=[row],
        best={"apex_dvd_player": {"f1": 0.373, "rows": [row]}},
    )


def test_default_grids_cover_algorithms():
    assert set(DEFAULT_SWEEP_GRIDS) == {"fba", "dba", "tba"}
    for grid in DEFAULT_SWEEP_GRIDS.values():
        assert grid
        assert all(len(values) >= 2 for values in grid.values())
