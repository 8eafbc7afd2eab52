"""Exact-match type-level evaluation of extraction results against gold."""

from dataclasses import dataclass

from .errors import ConfigError, DataError
from .porter import porter_stem
from .textnorm import levenshtein_ratio

MATCHING_MODES = ("surface", "stem", "fuzzy")


@dataclass(frozen=True)
class EvalConfig:
    matching: str = "surface"
    min_sim: float = 0.8
    granularity: str = "type_level"

    def __post_init__(self):
        if self.matching not in MATCHING_MODES:
            raise ConfigError("matching must be one of %s" % (MATCHING_MODES,))
        if self.matching == "fuzzy" and not 0.0 < self.min_sim <= 1.0:
            raise ConfigError("fuzzy matching requires min_sim in (0, 1]")
        if self.granularity != "type_level":
            raise ConfigError("only type_level evaluation is supported")


@dataclass(frozen=True)
class EvalReport:
    corpus_name: str
    precision: float
    recall: float
    f1: float
    matched: tuple
    missed: tuple
    spurious: tuple
    n_extracted: int
    n_gold: int
    config: EvalConfig

    def to_obj(self):
        return {
            "corpus": self.corpus_name,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "extracted": self.n_extracted,
            "gold": self.n_gold,
            "matched": list(self.matched),
            "missed": list(self.missed),
            "spurious": list(self.spurious),
            "matching": self.config.matching,
        }


def f1_score(p, r):
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def normalize_term(term, config):
    words = term.lower().split()
    if config.matching == "stem":
        words = [porter_stem(w) for w in words]
    return " ".join(words)


def _fuzzy_matches(extracted, gold, min_sim):
    """Greedy highest-ratio-first one-to-one matching."""
    pairs = []
    for e in extracted:
        for g in gold:
            ratio = levenshtein_ratio(e, g)
            if ratio >= min_sim:
                pairs.append((ratio, e, g))
    pairs.sort(key=lambda p: (-p[0], p[1], p[2]))
    used_e, used_g = set(), set()
    matches = []
    for _, e, g in pairs:
        if e in used_e or g in used_g:
            continue
        used_e.add(e)
        used_g.add(g)
        matches.append((e, g))
    return matches


def evaluate(result, corpus, config=EvalConfig()):
    """Type-level precision/recall/F1 of distinct extracted vs gold terms."""
    if not corpus.has_gold():
        raise DataError("corpus %r carries no gold annotations" % corpus.name)
    extracted = sorted({normalize_term(t, config) for t in result.terms() if t.strip()})
    gold = sorted({normalize_term(t, config) for t in corpus.gold_terms()})

    if config.matching == "fuzzy":
        matches = _fuzzy_matches(extracted, gold, config.min_sim)
        matched_e = {e for e, _ in matches}
        matched_g = {g for _, g in matches}
        n_match = len(matches)
    else:
        matched_e = matched_g = set(extracted) & set(gold)
        n_match = len(matched_e)

    precision = n_match / len(extracted) if extracted else 0.0
    recall = n_match / len(gold) if gold else 0.0
    return EvalReport(
        corpus_name=corpus.name,
        precision=precision,
        recall=recall,
        f1=f1_score(precision, recall),
        matched=tuple(sorted(matched_g)),
        missed=tuple(g for g in gold if g not in matched_g),
        spurious=tuple(e for e in extracted if e not in matched_e),
        n_extracted=len(extracted),
        n_gold=len(gold),
        config=config,
    )


@dataclass(frozen=True)
class AggregateReport:
    """Unweighted mean of per-corpus P and R, as in the comparison tables;
    F1 is recomputed from the averaged P/R and also reported as mean of F1s."""

    precision: float
    recall: float
    f1: float
    mean_f1: float
    per_corpus: tuple

    def to_obj(self):
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "mean_f1": self.mean_f1,
            "per_corpus": [r.to_obj() for r in self.per_corpus],
        }


def aggregate(reports):
    if not reports:
        raise DataError("aggregate requires at least one report")
    p = sum(r.precision for r in reports) / len(reports)
    r = sum(rep.recall for rep in reports) / len(reports)
    return AggregateReport(
        precision=p,
        recall=r,
        f1=f1_score(p, r),
        mean_f1=sum(rep.f1 for rep in reports) / len(reports),
        per_corpus=tuple(reports),
    )
