import json

import pytest

from aspectmine.corpus import (
    GoldAnnotation,
    load_annotated,
    noun_phrases,
    parse_crd,
    save_annotated,
    sentence_to_obj,
)
from aspectmine.errors import DataError, SchemaError

from conftest import make_corpus, make_sentence


class TestParseCrd:
    def test_single_aspect(self):
        recs = parse_crd("player[+2]##this player is excellent.")
        assert len(recs) == 1
        assert recs[0].text == "this player is excellent."
        assert [(a.term, a.strength, set(a.flags)) for a in recs[0].gold.aspects] == [
            ("player", 2, set())
        ]

    def test_two_aspects_with_flags(self):
        recs = parse_crd("size[+1][u],weight[+1][u]##i like the size and weight.")
        assert [(a.term, a.strength, set(a.flags)) for a in recs[0].gold.aspects] == [
            ("size", 1, {"u"}),
            ("weight", 1, {"u"}),
        ]

    def test_unannotated(self):
        recs = parse_crd("##no opinions here .")
        assert recs[0].text == "no opinions here ."
        assert not recs[0].gold

    def test_title_starts_document(self):
        recs = parse_crd("[t]great player\n##first .\n[t]another title\n##second .")
        assert [r.doc for r in recs] == ["d001", "d002"]
        assert len(recs) == 2

    def test_missing_separator_warns_and_keeps_line(self):
        warnings = []
        recs = parse_crd("no separator here", collect_warnings=warnings)
        assert recs[0].text == "no separator here"
        assert not recs[0].gold
        assert warnings

    def test_unreadable_strength_kept_with_zero(self):
        warnings = []
        recs = parse_crd("player[+x]##text .", collect_warnings=warnings)
        assert [(a.term, a.strength) for a in recs[0].gold.aspects] == [("player", 0)]
        assert any("unreadable" in w or "no strength" in w for w in warnings)

    def test_negative_strength(self):
        recs = parse_crd("battery[-3]##bad battery .")
        assert recs[0].gold.aspects[0].strength == -3

    def test_total_every_line_consumed(self):
        text = "[t]t\nplayer[+1]##a .\n##b .\n\nbare line\n"
        warnings = []
        recs = parse_crd(text, collect_warnings=warnings)
        assert len(recs) == 3  # annotated + unannotated + bare

    def test_gold_terms_lowercased_and_collapsed(self):
        recs = parse_crd("Battery   Life[+2]##battery life is great .")
        assert recs[0].gold.aspects[0].term == "battery life"


def sample_corpus():
    return make_corpus(
        "sample",
        [
            make_sentence(
                "s1",
                [
                    ("the", "DT", "B-NP", 1, "det"),
                    ("player", "NN", "I-NP", 3, "nsubj"),
                    ("is", "VBZ", "O", 3, "cop", "be"),
                    ("great", "JJ", "O", None, "root"),
                    (".", ".", "O", 3, "punct"),
                ],
                clauses=[(0, 5)],
                gold=[("player", 2, ("u",))],
            ),
            make_sentence(
                "s2",
                [
                    ("no", "DT", "B-NP", 1, "det"),
                    ("opinions", "NNS", "I-NP", None, "root", "opinion"),
                    (".", ".", "O", 1, "punct"),
                ],
            ),
        ],
    )


class TestInterchangeRoundTrip:
    def test_round_trip_identity(self, tmp_path):
        corpus = sample_corpus()
        path = tmp_path / "sample.jsonl"
        save_annotated(corpus, path)
        loaded = load_annotated(path)
        assert loaded == corpus

    def test_save_key_order_is_stable(self, tmp_path):
        corpus = sample_corpus()
        path = tmp_path / "sample.jsonl"
        save_annotated(corpus, path)
        first = json.loads(path.read_text().splitlines()[0])
        assert list(first) == ["id", "doc", "tokens", "clauses", "gold"]
        assert list(first["tokens"][0]) == [
            "i", "surface", "lemma", "pos", "chunk", "head", "deprel",
        ]

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text("")
        with pytest.raises(DataError, match="no sentences"):
            load_annotated(path)

    def test_token_count_preserved(self, tmp_path):
        corpus = sample_corpus()
        path = tmp_path / "sample.jsonl"
        save_annotated(corpus, path)
        loaded = load_annotated(path)
        assert [len(s) for s in loaded] == [len(s) for s in corpus]

    def test_save_of_load_is_byte_identity_on_fixture(self, tmp_path):
        from conftest import CORPORA_DIR

        source = CORPORA_DIR / "apex_dvd_player.jsonl"
        if not source.exists():
            import pytest

            pytest.skip("fixture corpora not built")
        corpus = load_annotated(source)
        out = tmp_path / "copy.jsonl"
        save_annotated(corpus, out)
        assert out.read_bytes() == source.read_bytes()

    def test_comment_header_lines_skipped(self, tmp_path):
        corpus = sample_corpus()
        path = tmp_path / "with_header.jsonl"
        save_annotated(corpus, path)
        path.write_text("# annotator=rulepipe test/0.0\n" + path.read_text())
        assert load_annotated(path, name="sample") == corpus


def _write_sentences(tmp_path, objs):
    path = tmp_path / "bad.jsonl"
    path.write_text("\n".join(json.dumps(o) for o in objs) + "\n")
    return path


class TestSchemaValidation:
    def base_obj(self):
        return sentence_to_obj(sample_corpus().sentences[0])

    def test_iob_violation(self, tmp_path):
        obj = self.base_obj()
        obj["tokens"][0]["chunk"] = "O"  # leaves I-NP after O
        with pytest.raises(SchemaError, match="I-NP"):
            load_annotated(_write_sentences(tmp_path, [obj]))

    def test_schema_error_names_line_and_field(self, tmp_path):
        good = self.base_obj()
        bad = self.base_obj()
        bad["id"] = "s2"
        bad["tokens"][1]["head"] = 99
        with pytest.raises(SchemaError, match="line 2.*head"):
            load_annotated(_write_sentences(tmp_path, [good, bad]))

    def test_self_head_rejected(self, tmp_path):
        obj = self.base_obj()
        obj["tokens"][0]["head"] = 0
        with pytest.raises(SchemaError, match="own head"):
            load_annotated(_write_sentences(tmp_path, [obj]))

    def test_two_roots_rejected(self, tmp_path):
        obj = self.base_obj()
        obj["tokens"][0]["head"] = -1
        with pytest.raises(SchemaError, match="root"):
            load_annotated(_write_sentences(tmp_path, [obj]))

    def test_cycle_rejected(self, tmp_path):
        obj = self.base_obj()
        # 0 -> 1 -> 0 cycle
        obj["tokens"][0]["head"] = 1
        obj["tokens"][1]["head"] = 0
        with pytest.raises(SchemaError):
            load_annotated(_write_sentences(tmp_path, [obj]))

    def test_duplicate_ids_rejected(self, tmp_path):
        obj = self.base_obj()
        with pytest.raises(SchemaError, match="duplicate"):
            load_annotated(_write_sentences(tmp_path, [obj, obj]))

    def test_overlapping_clauses_rejected(self, tmp_path):
        obj = self.base_obj()
        obj["clauses"] = [[0, 3], [2, 5]]
        with pytest.raises(SchemaError, match="overlap"):
            load_annotated(_write_sentences(tmp_path, [obj]))

    def test_bad_gold_flag_rejected(self, tmp_path):
        obj = self.base_obj()
        obj["gold"][0]["flags"] = ["zz"]
        with pytest.raises(SchemaError, match="flags"):
            load_annotated(_write_sentences(tmp_path, [obj]))

    def test_invalid_json_names_line(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text("{not json}\n")
        with pytest.raises(SchemaError, match="line 1"):
            load_annotated(path)


class TestNounPhrases:
    def make(self, chunks):
        specs = []
        for i, chunk in enumerate(chunks):
            head = None if i == 0 else 0
            rel = "root" if i == 0 else "dep"
            specs.append(("w%d" % i, "NN", chunk, head, rel))
        return make_sentence("s", specs)

    def test_all_outside(self):
        assert noun_phrases(self.make(["O", "O", "O"])) == []

    def test_run_then_single(self):
        assert noun_phrases(self.make(["B-NP", "I-NP", "O", "B-NP"])) == [(0, 2), (3, 4)]

    def test_adjacent_phrases(self):
        assert noun_phrases(self.make(["B-NP", "B-NP"])) == [(0, 1), (1, 2)]

    def test_trailing_run(self):
        assert noun_phrases(self.make(["O", "B-NP", "I-NP"])) == [(1, 3)]

    def test_ranges_cover_exactly_chunk_tokens(self):
        chunks = ["B-NP", "I-NP", "O", "B-NP", "B-NP", "I-NP", "O"]
        ranges = noun_phrases(self.make(chunks))
        covered = sorted(i for a, b in ranges for i in range(a, b))
        expected = [i for i, c in enumerate(chunks) if c != "O"]
        assert covered == expected
        assert ranges == sorted(ranges)
