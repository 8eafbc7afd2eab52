import json
import shutil
import subprocess
from pathlib import Path

import pytest

from crdannotator.crd import read_raw
from crdannotator.pipeline import RulePipeline, annotate_file, annotate_sentences

REPO_ROOT = Path(__file__).resolve().parents[2]
RAW_DIR = REPO_ROOT / "data" / "corpora" / "raw"
CORPUS_NAMES = (
    "apex_dvd_player",
    "creative_mp3_player",
    "nikon_camera",
    "nokia_phone",
    "canon_camera",
)

SAMPLE = """[t]great little player
player[+2]##this player is excellent .
size[+1][u],weight[+1][u]##i like the size and weight .
##no opinions here .
battery[-2]##the battery died after a week .
"""


class TestCrdReader:
    def test_reads_annotated_and_plain_lines(self):
        sentences = read_raw(SAMPLE.splitlines())
        assert len(sentences) == 4
        assert sentences[0].gold == [("player", 2, [])]
        assert sentences[1].gold == [("size", 1, ["u"]), ("weight", 1, ["u"])]
        assert sentences[2].gold == []

    def test_document_ids_from_titles(self):
        sentences = read_raw(SAMPLE.splitlines())
        assert {s.doc for s in sentences} == {"d001"}


class TestRulePipeline:
    def test_spec_example(self):
        tokens, clauses = RulePipeline().annotate("this player is excellent .")
        assert len(tokens) == 5
        player = tokens[1]
        assert player["pos"] == "NN"
        assert player["chunk"] in ("B-NP", "I-NP")
        assert clauses == [[0, 5]]

    def test_tree_is_single_rooted(self):
        tokens, _ = RulePipeline().annotate("i bought this player at the store last week .")
        roots = [t for t in tokens if t["head"] == -1]
        assert len(roots) == 1

    def test_compound_sentence_splits_clauses(self):
        tokens, clauses = RulePipeline().annotate(
            "the picture is great but the sound is terrible ."
        )
        assert len(clauses) == 2
        spans = [tuple(c) for c in clauses]
        assert spans[0][1] <= spans[1][0]

    def test_gold_passthrough(self):
        sentences = read_raw(SAMPLE.splitlines())
        objs = list(annotate_sentences(sentences, "toy"))
        assert objs[0]["gold"] == [{"term": "player", "strength": 2, "flags": []}]
        assert objs[1]["gold"][0]["flags"] == ["u"]

    def test_failing_sentence_dropped(self, caplog):
        # a whitespace-only sentence tokenizes to nothing and must be dropped
        sentences = read_raw(["##\u2003", "##fine sentence ."])
        with caplog.at_level("WARNING"):
            objs = list(annotate_sentences(sentences, "toy"))
        assert len(objs) == 1
        assert any("dropping" in record.message for record in caplog.records)

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            list(annotate_sentences([], "toy", backend="nope"))


class TestAnnotateFile:
    def test_empty_input_empty_output_exit_zero(self, tmp_path):
        raw = tmp_path / "empty.txt"
        raw.write_text("")
        out = tmp_path / "out.jsonl"
        count = annotate_file(raw, out)
        assert count == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1 and lines[0].startswith("#")

    def test_header_records_backend_and_version(self, tmp_path):
        raw = tmp_path / "raw.txt"
        raw.write_text(SAMPLE)
        out = tmp_path / "out.jsonl"
        annotate_file(raw, out)
        header = out.read_text().splitlines()[0]
        assert header.startswith("# annotator=rulepipe crd-annotator/")

    def test_cli_round(self, tmp_path):
        from crdannotator.cli import main

        raw = tmp_path / "raw.txt"
        raw.write_text(SAMPLE)
        out = tmp_path / "out.jsonl"
        assert main(["--in", str(raw), "--out", str(out), "--name", "toy"]) == 0
        payload = [json.loads(l) for l in out.read_text().splitlines()[1:]]
        assert payload[0]["id"] == "toy_0000"

    def test_cli_missing_input_exit_3(self, tmp_path):
        from crdannotator.cli import main

        assert main(["--in", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "o")]) == 3


def _local_schema_check(obj):
    assert list(obj) == ["id", "doc", "tokens", "clauses", "gold"]
    n = len(obj["tokens"])
    roots = 0
    prev_chunk = "O"
    for i, tok in enumerate(obj["tokens"]):
        assert list(tok) == ["i", "surface", "lemma", "pos", "chunk", "head", "deprel"]
        assert tok["i"] == i
        assert -1 <= tok["head"] < n and tok["head"] != i
        roots += tok["head"] == -1
        if tok["chunk"] == "I-NP":
            assert prev_chunk in ("B-NP", "I-NP")
        prev_chunk = tok["chunk"]
    assert roots == 1
    for start, end in obj["clauses"]:
        assert 0 <= start < end <= n


@pytest.mark.parametrize("name", CORPUS_NAMES)
class TestFullCorpora:
    def _raw_path(self, name):
        path = RAW_DIR / ("%s.txt" % name)
        if not path.exists():
            pytest.skip("raw corpus %s not present" % name)
        return path

    def test_annotates_schema_valid(self, name, tmp_path):
        out = tmp_path / ("%s.jsonl" % name)
        count = annotate_file(self._raw_path(name), out, corpus_name=name)
        assert count > 0
        for line in out.read_text().splitlines():
            if line.startswith("#"):
                continue
            _local_schema_check(json.loads(line))

    def test_primary_loader_accepts_output(self, name, tmp_path):
        cli = shutil.which("aspectmine")
        if cli is None:
            pytest.skip("primary CLI not installed")
        out = tmp_path / ("%s.jsonl" % name)
        annotate_file(self._raw_path(name), out, corpus_name=name)
        proc = subprocess.run(
            [cli, "validate", "--corpus", str(out)], capture_output=True, text=True
        )
        assert proc.returncode == 0, proc.stderr

    def test_two_runs_are_identical(self, name, tmp_path):
        raw = self._raw_path(name)
        out_a = tmp_path / "a.jsonl"
        out_b = tmp_path / "b.jsonl"
        annotate_file(raw, out_a, corpus_name=name)
        annotate_file(raw, out_b, corpus_name=name)
        assert out_a.read_bytes() == out_b.read_bytes()
