import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from aspectmine.corpus import (  # noqa: E402
    AnnotatedSentence,
    ClauseSpan,
    Corpus,
    GoldAnnotation,
    GoldAspect,
    Token,
)

DATA_DIR = ROOT / "data"
CORPORA_DIR = DATA_DIR / "corpora" / "annotated"
RAW_DIR = DATA_DIR / "corpora" / "raw"
CORPUS_NAMES = (
    "apex_dvd_player",
    "creative_mp3_player",
    "nikon_camera",
    "nokia_phone",
    "canon_camera",
)


def make_sentence(sid, token_specs, doc="d000", clauses=None, gold=()):
    """token_specs: (surface, pos, chunk, head, deprel[, lemma]) per token."""
    tokens = []
    for i, spec in enumerate(token_specs):
        surface, pos, chunk, head, deprel = spec[:5]
        lemma = spec[5] if len(spec) > 5 else surface.lower()
        tokens.append(
            Token(
                index=i,
                surface=surface,
                lemma=lemma,
                stem=lemma,
                pos=pos,
                chunk=chunk,
                head=head,
                deprel=deprel,
            )
        )
    gold_aspects = tuple(
        GoldAspect(term, strength, frozenset(flags)) for term, strength, flags in gold
    )
    return AnnotatedSentence(
        id=sid,
        doc=doc,
        tokens=tuple(tokens),
        clauses=tuple(ClauseSpan(a, b) for a, b in (clauses or ())),
        gold=GoldAnnotation(gold_aspects),
    )


def make_corpus(name, sentences):
    return Corpus(name=name, sentences=tuple(sentences))


def copular(sid, noun, adj, gold=None, det="the"):
    """"the <noun> is <adj> ." with Stanford-style copular analysis."""
    sent_gold = (((noun, 2, ()),) if gold is None else gold) if gold != () else ()
    return make_sentence(
        sid,
        [
            (det, "DT", "B-NP", 1, "det"),
            (noun, "NN", "I-NP", 3, "nsubj"),
            ("is", "VBZ", "O", 3, "cop", "be"),
            (adj, "JJ", "O", None, "root"),
            (".", ".", "O", 3, "punct"),
        ],
        gold=sent_gold,
    )


def has_object(sid, adj, noun, gold=None):
    """"it has a <adj> <noun> ." with amod(noun, adj)."""
    sent_gold = (((noun, 1, ()),) if gold is None else gold) if gold != () else ()
    return make_sentence(
        sid,
        [
            ("it", "PRP", "B-NP", 1, "nsubj"),
            ("has", "VBZ", "O", None, "root", "have"),
            ("a", "DT", "B-NP", 4, "det"),
            (adj, "JJ", "I-NP", 4, "amod"),
            (noun, "NN", "I-NP", 1, "dobj"),
            (".", ".", "O", 1, "punct"),
        ],
        gold=sent_gold,
    )


def conjoined(sid, noun_a, noun_b, adj):
    """"the <a> and <b> are <adj> ." with conj(a, b)."""
    return make_sentence(
        sid,
        [
            ("the", "DT", "B-NP", 1, "det"),
            (noun_a, "NN", "I-NP", 5, "nsubj"),
            ("and", "CC", "O", 1, "cc"),
            (noun_b, "NN", "B-NP", 1, "conj"),
            ("are", "VBP", "O", 5, "cop", "be"),
            (adj, "JJ", "O", None, "root"),
            (".", ".", "O", 5, "punct"),
        ],
        gold=((noun_a, 2, ()), (noun_b, 2, ())),
    )


@pytest.fixture(scope="session")
def fixture_corpora():
    from aspectmine.corpus import load_annotated

    paths = [CORPORA_DIR / ("%s.jsonl" % name) for name in CORPUS_NAMES]
    missing = [p for p in paths if not p.exists()]
    if missing:
        pytest.skip("fixture corpora not built: %s" % missing[0])
    return [load_annotated(p) for p in paths]
