"""Shared output types for the three extractors."""

import json
from dataclasses import dataclass

from .errors import DataError


@dataclass(frozen=True)
class AspectCandidate:
    term: str
    kind: str  # "frequent" | "infrequent"
    support: int
    sentence_ids: tuple = ()
    confidence: float | None = None


@dataclass(frozen=True)
class OpinionWord:
    word: str
    sentence_ids: tuple = ()


@dataclass(frozen=True)
class ExtractionResult:
    corpus_name: str
    algorithm: str
    aspects: tuple = ()
    opinion_words: tuple = ()

    def terms(self):
        """Distinct extracted terms, first-seen order."""
        seen = []
        for a in self.aspects:
            if a.term not in seen:
                seen.append(a.term)
        return seen

    def to_obj(self):
        return {
            "corpus": self.corpus_name,
            "algorithm": self.algorithm,
            "aspects": [
                {
                    "term": a.term,
                    "kind": a.kind,
                    "support": a.support,
                    "confidence": a.confidence,
                    "sentences": list(a.sentence_ids),
                }
                for a in self.aspects
            ],
            "opinion_words": [
                {"word": o.word, "sentences": list(o.sentence_ids)} for o in self.opinion_words
            ],
        }

    def to_json(self):
        return json.dumps(self.to_obj(), ensure_ascii=False, indent=2)


def result_from_obj(obj):
    try:
        aspects = tuple(
            AspectCandidate(
                term=a["term"],
                kind=a["kind"],
                support=a["support"],
                sentence_ids=tuple(a.get("sentences", ())),
                confidence=a.get("confidence"),
            )
            for a in obj["aspects"]
        )
        opinions = tuple(
            OpinionWord(word=o["word"], sentence_ids=tuple(o.get("sentences", ())))
            for o in obj.get("opinion_words", ())
        )
        return ExtractionResult(
            corpus_name=obj["corpus"],
            algorithm=obj["algorithm"],
            aspects=aspects,
            opinion_words=opinions,
        )
    except (KeyError, TypeError) as exc:
        raise DataError("malformed extraction result: %s" % exc) from exc


def check_provenance(result, corpus):
    """Every provenance sentence id must exist in the corpus."""
    known = corpus.sentence_ids()
    for a in result.aspects:
        for sid in a.sentence_ids:
            if sid not in known:
                raise DataError("aspect %r cites unknown sentence %r" % (a.term, sid))
    for o in result.opinion_words:
        for sid in o.sentence_ids:
            if sid not in known:
                raise DataError("opinion word %r cites unknown sentence %r" % (o.word, sid))
