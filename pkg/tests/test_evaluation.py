import pytest

from aspectmine.errors import DataError
from aspectmine.evaluation import EvalConfig, aggregate, evaluate, f1_score
from aspectmine.results import AspectCandidate, ExtractionResult

from conftest import copular, make_corpus


def corpus_with_gold(terms):
    sentences = [copular("s%d" % i, "player", "great", gold=((t, 2, ()),)) for i, t in enumerate(terms)]
    return make_corpus("toy", sentences)


def extraction(terms):
    return ExtractionResult(
        corpus_name="toy",
        algorithm="fba",
        aspects=tuple(AspectCandidate(term=t, kind="frequent", support=1) for t in terms),
    )


class TestEvaluate:
    def test_perfect_match(self):
        report = evaluate(extraction(["battery"]), corpus_with_gold(["battery"]))
        assert (report.precision, report.recall, report.f1) == (1.0, 1.0, 1.0)

    def test_half_and_half(self):
        report = evaluate(
            extraction(["battery", "foo"]), corpus_with_gold(["battery", "screen"])
        )
        assert (report.precision, report.recall, report.f1) == (0.5, 0.5, 0.5)

    def test_empty_extraction(self):
        report = evaluate(extraction([]), corpus_with_gold(["battery"]))
        assert (report.precision, report.recall, report.f1) == (0.0, 0.0, 0.0)

    def test_requires_gold(self):
        corpus = make_corpus("nog", [copular("s1", "player", "great", gold=())])
        with pytest.raises(DataError):
            evaluate(extraction(["x"]), corpus)

    def test_duplicates_do_not_change_scores(self):
        gold = corpus_with_gold(["battery", "screen"])
        once = evaluate(extraction(["battery"]), gold)
        thrice = evaluate(extraction(["battery", "battery", "battery"]), gold)
        assert (once.precision, once.recall) == (thrice.precision, thrice.recall)

    def test_adding_correct_term_never_lowers_recall(self):
        gold = corpus_with_gold(["battery", "screen", "lens"])
        base = evaluate(extraction(["battery"]), gold)
        more = evaluate(extraction(["battery", "screen"]), gold)
        assert more.recall >= base.recall

    def test_adding_wrong_term_never_raises_precision(self):
        gold = corpus_with_gold(["battery", "screen"])
        base = evaluate(extraction(["battery"]), gold)
        more = evaluate(extraction(["battery", "junk"]), gold)
        assert more.precision <= base.precision

    def test_stem_matching_mode(self):
        gold = corpus_with_gold(["batteries"])
        report = evaluate(extraction(["battery"]), gold, EvalConfig(matching="stem"))
        assert report.recall == 1.0

    def test_fuzzy_matching_one_to_one(self):
        gold = corpus_with_gold(["battery"])
        report = evaluate(
            extraction(["battery", "batterys"]), gold, EvalConfig(matching="fuzzy", min_sim=0.8)
        )
        # both candidates are close to the single gold term; only one may match
        assert len(report.matched) == 1
        assert report.precision == 0.5
        assert report.recall == 1.0

    def test_fuzzy_prefers_highest_ratio(self):
        gold = corpus_with_gold(["battery"])
        report = evaluate(
            extraction(["battery", "batterx"]), gold, EvalConfig(matching="fuzzy", min_sim=0.7)
        )
        assert report.matched == ("battery",)

    def test_report_lists(self):
        report = evaluate(
            extraction(["battery", "foo"]), corpus_with_gold(["battery", "screen"])
        )
        assert report.matched == ("battery",)
        assert report.missed == ("screen",)
        assert report.spurious == ("foo",)


class TestAggregate:
    def test_single_report_is_itself(self):
        report = evaluate(extraction(["battery"]), corpus_with_gold(["battery"]))
        agg = aggregate([report])
        assert (agg.precision, agg.recall, agg.f1) == (1.0, 1.0, 1.0)

    def test_mean_of_two(self):
        r1 = evaluate(extraction(["battery"]), corpus_with_gold(["battery", "screen", "lens", "cap", "bag"]))
        r2 = evaluate(extraction(["battery", "screen"]), corpus_with_gold(["battery", "screen", "lens", "cap", "bag"]))
        agg = aggregate([r1, r2])
        assert agg.precision == pytest.approx((r1.precision + r2.precision) / 2)
        assert agg.recall == pytest.approx((r1.recall + r2.recall) / 2)
        assert agg.f1 == pytest.approx(f1_score(agg.precision, agg.recall))

    def test_replication_average_f1(self):
        # the comparison-table averages: F1 recomputed from averaged P/R
        assert f1_score(0.325, 0.381) == pytest.approx(0.3507, abs=1e-3)
        assert f1_score(0.22, 0.33) == pytest.approx(0.264, abs=1e-3)
        assert f1_score(0.426, 0.368) == pytest.approx(0.3949, abs=1e-3)


def test_only_type_level_granularity():
    from aspectmine.errors import ConfigError

    assert EvalConfig().granularity == "type_level"
    with pytest.raises(ConfigError):
        EvalConfig(granularity="occurrence")
