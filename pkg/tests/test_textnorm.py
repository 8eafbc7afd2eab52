from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aspectmine.errors import ConfigError
from aspectmine.textnorm import (
    FuzzyParams,
    cluster_terms,
    levenshtein_distance,
    levenshtein_ratio,
    load_stopwords,
    stem,
)

words = st.text(alphabet="abcdefg-", max_size=12)


class TestLevenshteinRatio:
    def test_identity(self):
        assert levenshtein_ratio("abc", "abc") == 1.0

    def test_both_empty(self):
        assert levenshtein_ratio("", "") == 1.0

    def test_single_substitution(self):
        assert levenshtein_ratio("abc", "abd") == pytest.approx(1 - 1 / 3)

    def test_hyphen_insertion(self):
        # "autofocus" vs "auto-focus": one insertion over max length 10
        assert levenshtein_ratio("autofocus", "auto-focus") == pytest.approx(0.9)

    def test_unrelated_words(self):
        # distance("player", "battery") = 5: four substitutions + one insertion
        assert levenshtein_distance("player", "battery") == 5
        assert levenshtein_ratio("player", "battery") == pytest.approx(2 / 7)

    @given(words, words)
    def test_symmetric(self, a, b):
        assert levenshtein_ratio(a, b) == pytest.approx(levenshtein_ratio(b, a))

    @given(words, words)
    def test_bounded(self, a, b):
        assert 0.0 <= levenshtein_ratio(a, b) <= 1.0

    @given(words, words)
    def test_one_iff_equal(self, a, b):
        assert (levenshtein_ratio(a, b) == 1.0) == (a == b)


class TestClusterTerms:
    def test_singleton(self):
        index = cluster_terms(["player"], FuzzyParams(min_sim=0.8))
        assert index.rep("player") == "player"
        assert len(index.clusters()) == 1

    def test_variants_merge(self):
        index = cluster_terms(["autofocus", "auto-focus"], FuzzyParams(min_sim=0.8))
        assert index.cluster_of["autofocus"] == index.cluster_of["auto-focus"]

    def test_distant_words_stay_apart(self):
        index = cluster_terms(["player", "battery"], FuzzyParams(min_sim=0.8))
        assert index.cluster_of["player"] != index.cluster_of["battery"]

    def test_min_sim_one_all_singletons(self):
        stems = ["abc", "abd", "abe", "abcd"]
        index = cluster_terms(stems, FuzzyParams(min_sim=1.0))
        assert len(index.clusters()) == len(stems)

    def test_max_intra_cluster_distance_bounded(self):
        stems = ["abcdef", "abcdeg", "abcdxx", "zzzzzz", "zzzzzy"]
        params = FuzzyParams(min_sim=0.8)
        index = cluster_terms(stems, params)
        for members in index.clusters().values():
            for a in members:
                for b in members:
                    assert 1 - levenshtein_ratio(a, b) <= 1 - params.min_sim + 1e-12

    def test_order_independent(self):
        stems = ["abcdef", "abcdeg", "abcdex", "fedcba", "player", "players"]
        a = cluster_terms(stems, FuzzyParams(min_sim=0.8))
        b = cluster_terms(list(reversed(stems)), FuzzyParams(min_sim=0.8))
        part_a = sorted(tuple(m) for m in a.clusters().values())
        part_b = sorted(tuple(m) for m in b.clusters().values())
        assert part_a == part_b

    def test_representative_most_frequent_then_lexicographic(self):
        counts = Counter({"playe": 3, "playr": 3, "playz": 1})
        index = cluster_terms(counts, FuzzyParams(min_sim=0.6))
        cid = index.cluster_of["playe"]
        assert index.cluster_of["playr"] == cid
        assert index.representative[cid] == "playe"

    def test_short_words_never_merge(self):
        index = cluster_terms(["ab", "ac"], FuzzyParams(min_sim=0.5))
        assert index.cluster_of["ab"] != index.cluster_of["ac"]

    def test_surfaces_back_index(self):
        counts = Counter({"pictur": 3})
        surfaces = {"pictur": Counter({"pictures": 2, "picture": 1})}
        index = cluster_terms(counts, FuzzyParams(min_sim=0.8), surfaces=surfaces)
        assert index.surface("pictur") == "pictures"

    def test_empty_rejected(self):
        with pytest.raises(ConfigError):
            cluster_terms([], FuzzyParams(min_sim=0.8))


class TestStem:
    def test_porter(self):
        assert stem("players", "porter") == "player"

    def test_lemma_uses_precomputed(self):
        assert stem("players", "lemma", lemma="player") == "player"

    def test_lemma_falls_back_to_word(self):
        assert stem("Players", "lemma") == "players"

    def test_unknown_algorithm(self):
        with pytest.raises(ConfigError):
            stem("x", "snowball")


class TestFuzzyParams:
    def test_rejects_zero(self):
        with pytest.raises(ConfigError):
            FuzzyParams(min_sim=0.0)

    def test_rejects_above_one(self):
        with pytest.raises(ConfigError):
            FuzzyParams(min_sim=1.5)


def test_load_stopwords(tmp_path):
    path = tmp_path / "stopwords.txt"
    path.write_text("# comment\nthe\nA\n\nan\n", encoding="utf-8")
    assert load_stopwords(path) == {"the", "a", "an"}
