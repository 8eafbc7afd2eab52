"""Annotated-corpus data model, Customer-Review-style gold parsing and the
JSON-lines interchange loader/writer.

A corpus is immutable after load and safe to share between workers.
"""

import json
import logging
import re
from dataclasses import dataclass, field

from .errors import DataError, SchemaError

log = logging.getLogger(__name__)

NOUN_TAGS = frozenset({"NN", "NNS", "NNP", "NNPS"})
ADJ_TAGS = frozenset({"JJ", "JJR", "JJS"})
CHUNK_LABELS = frozenset({"B-NP", "I-NP", "O"})
GOLD_FLAGS = frozenset({"u", "p", "s", "cc", "cs"})

# Interchange key order is part of the format: writers emit exactly this.
_SENT_KEYS = ("id", "doc", "tokens", "clauses", "gold")
_TOKEN_KEYS = ("i", "surface", "lemma", "pos", "chunk", "head", "deprel")


@dataclass(frozen=True)
class Token:
    index: int
    surface: str
    lemma: str
    stem: str
    pos: str
    chunk: str
    head: int | None  # None for the sentence root
    deprel: str

    @property
    def is_noun(self):
        return self.pos in NOUN_TAGS

    @property
    def is_adjective(self):
        return self.pos in ADJ_TAGS


@dataclass(frozen=True)
class ClauseSpan:
    start: int
    end: int  # exclusive


@dataclass(frozen=True)
class GoldAspect:
    term: str
    strength: int
    flags: frozenset = frozenset()


@dataclass(frozen=True)
class GoldAnnotation:
    aspects: tuple = ()

    def terms(self):
        seen = []
        for a in self.aspects:
            if a.term not in seen:
                seen.append(a.term)
        return seen

    def __bool__(self):
        return bool(self.aspects)


@dataclass(frozen=True)
class AnnotatedSentence:
    id: str
    doc: str
    tokens: tuple
    clauses: tuple = ()
    gold: GoldAnnotation = GoldAnnotation()

    def __len__(self):
        return len(self.tokens)

    def words(self):
        return [t.surface for t in self.tokens]

    def clause_spans(self):
        """Clause spans, falling back to the whole sentence when absent."""
        if self.clauses:
            return self.clauses
        return (ClauseSpan(0, len(self.tokens)),)


@dataclass(frozen=True)
class Corpus:
    name: str
    sentences: tuple

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    def sentence_ids(self):
        return frozenset(s.id for s in self.sentences)

    def has_gold(self):
        return any(s.gold for s in self.sentences)

    def gold_terms(self):
        terms = set()
        for s in self.sentences:
            terms.update(s.gold.terms())
        return terms


def noun_phrases(sentence):
    """Maximal contiguous B-NP/I-NP runs as (start, end) index ranges."""
    ranges = []
    start = None
    for tok in sentence.tokens:
        if tok.chunk == "B-NP":
            if start is not None:
                ranges.append((start, tok.index))
            start = tok.index
        elif tok.chunk == "I-NP":
            continue
        else:
            if start is not None:
                ranges.append((start, tok.index))
                start = None
    if start is not None:
        ranges.append((start, len(sentence.tokens)))
    return ranges


# ---------------------------------------------------------------------------
# Customer Review Dataset text format
# ---------------------------------------------------------------------------

_BRACKET = re.compile(r"\[([^\[\]]*)\]")
_STRENGTH = re.compile(r"^[+-]\d+$")


@dataclass(frozen=True)
class CrdSentence:
    text: str
    gold: GoldAnnotation
    doc: str


def _normalize_gold_term(term):
    return " ".join(term.lower().split())


def _parse_gold_prefix(prefix, lineno, warnings):
    aspects = []
    for chunk in prefix.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        bracket_at = chunk.find("[")
        term = _normalize_gold_term(chunk if bracket_at < 0 else chunk[:bracket_at])
        if not term:
            warnings.append("line %d: empty aspect term in %r, skipped" % (lineno, chunk))
            continue
        strength = None
        flags = set()
        for mark in _BRACKET.findall(chunk[bracket_at:] if bracket_at >= 0 else ""):
            mark = mark.strip()
            if _STRENGTH.match(mark):
                strength = int(mark)
            elif mark in GOLD_FLAGS:
                flags.add(mark)
            else:
                warnings.append("line %d: unreadable marker [%s] on %r" % (lineno, mark, term))
        if strength is None:
            warnings.append("line %d: no strength on %r, using 0" % (lineno, term))
            strength = 0
        aspects.append(GoldAspect(term, strength, frozenset(flags)))
    return GoldAnnotation(tuple(aspects))


def parse_crd(lines, collect_warnings=None):
    """Parse Customer-Review-format text into (text, gold, doc) records.

    ``[t]``-prefixed title lines open a new document and are not emitted as
    sentences.  Every other non-blank line is consumed: annotated
    (``gold##text``), unannotated (``##text``) or, with a warning, a bare
    line lacking the ``##`` separator.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    warnings = [] if collect_warnings is None else collect_warnings
    out = []
    doc_no = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("[t]"):
            doc_no += 1
            continue
        doc = "d%03d" % doc_no
        if "##" in line:
            prefix, text = line.split("##", 1)
            gold = _parse_gold_prefix(prefix, lineno, warnings)
        else:
            warnings.append("line %d: missing '##' separator, treated as unannotated" % lineno)
            text, gold = line, GoldAnnotation()
        out.append(CrdSentence(text.strip(), gold, doc))
    for w in warnings if collect_warnings is None else ():
        log.warning("parse_crd: %s", w)
    return out


# ---------------------------------------------------------------------------
# JSON-lines interchange format
# ---------------------------------------------------------------------------

def _expect(cond, message, line=None, field=None):
    if not cond:
        raise SchemaError(message, line=line, field=field)


def _parse_token(obj, n_tokens, pos, lineno):
    _expect(isinstance(obj, dict), "token must be an object", lineno, "tokens")
    for key in _TOKEN_KEYS:
        _expect(key in obj, "token missing key %r" % key, lineno, "tokens[%d]" % pos)
    _expect(obj["i"] == pos, "token index %r out of order" % obj["i"], lineno, "i")
    for key in ("surface", "lemma", "pos", "chunk", "deprel"):
        _expect(isinstance(obj[key], str), "%r must be a string" % key, lineno, key)
    _expect(obj["surface"] != "", "empty surface", lineno, "surface")
    _expect(obj["chunk"] in CHUNK_LABELS, "bad chunk label %r" % obj["chunk"], lineno, "chunk")
    head = obj["head"]
    _expect(isinstance(head, int) and not isinstance(head, bool), "head must be an int", lineno, "head")
    _expect(-1 <= head < n_tokens, "head %d out of range" % head, lineno, "head")
    _expect(head != pos, "token is its own head", lineno, "head")
    return Token(
        index=pos,
        surface=obj["surface"],
        lemma=obj["lemma"],
        stem=obj["lemma"],
        pos=obj["pos"],
        chunk=obj["chunk"],
        head=None if head == -1 else head,
        deprel=obj["deprel"],
    )


def _check_tree(tokens, lineno):
    roots = [t.index for t in tokens if t.head is None]
    _expect(len(roots) == 1, "expected exactly one root, got %d" % len(roots), lineno, "head")
    for tok in tokens:
        seen = set()
        cur = tok.index
        while cur is not None:
            _expect(cur not in seen, "dependency cycle at token %d" % tok.index, lineno, "head")
            seen.add(cur)
            cur = tokens[cur].head


def _check_iob(tokens, lineno):
    prev = "O"
    for tok in tokens:
        if tok.chunk == "I-NP":
            _expect(prev in ("B-NP", "I-NP"), "I-NP after %s at token %d" % (prev, tok.index), lineno, "chunk")
        prev = tok.chunk


def _parse_sentence(obj, lineno):
    _expect(isinstance(obj, dict), "sentence must be an object", lineno)
    for key in _SENT_KEYS:
        _expect(key in obj, "missing key %r" % key, lineno, key)
    _expect(isinstance(obj["id"], str) and obj["id"], "id must be a nonempty string", lineno, "id")
    _expect(isinstance(obj["doc"], str), "doc must be a string", lineno, "doc")
    _expect(isinstance(obj["tokens"], list) and obj["tokens"], "tokens must be nonempty", lineno, "tokens")
    n = len(obj["tokens"])
    tokens = tuple(_parse_token(t, n, i, lineno) for i, t in enumerate(obj["tokens"]))
    _check_tree(tokens, lineno)
    _check_iob(tokens, lineno)

    clauses = []
    _expect(isinstance(obj["clauses"], list), "clauses must be a list", lineno, "clauses")
    for span in obj["clauses"]:
        _expect(isinstance(span, list) and len(span) == 2, "clause span must be [start, end]", lineno, "clauses")
        start, end = span
        _expect(isinstance(start, int) and isinstance(end, int), "clause bounds must be ints", lineno, "clauses")
        _expect(0 <= start < end <= n, "clause span %r out of range" % (span,), lineno, "clauses")
        clauses.append(ClauseSpan(start, end))
    ordered = sorted(clauses, key=lambda c: c.start)
    for a, b in zip(ordered, ordered[1:]):
        _expect(a.end <= b.start, "overlapping clause spans", lineno, "clauses")

    aspects = []
    _expect(isinstance(obj["gold"], list), "gold must be a list", lineno, "gold")
    for g in obj["gold"]:
        _expect(isinstance(g, dict), "gold entry must be an object", lineno, "gold")
        for key in ("term", "strength", "flags"):
            _expect(key in g, "gold entry missing %r" % key, lineno, "gold")
        _expect(isinstance(g["term"], str) and g["term"].strip(), "gold term must be nonempty", lineno, "term")
        _expect(isinstance(g["strength"], int) and -3 <= g["strength"] <= 3,
                "gold strength must be an int in [-3, 3]", lineno, "strength")
        flags = g["flags"]
        _expect(isinstance(flags, list) and set(flags) <= GOLD_FLAGS, "bad gold flags %r" % (flags,), lineno, "flags")
        aspects.append(GoldAspect(_normalize_gold_term(g["term"]), g["strength"], frozenset(flags)))

    return AnnotatedSentence(
        id=obj["id"],
        doc=obj["doc"],
        tokens=tokens,
        clauses=tuple(ordered),
        gold=GoldAnnotation(tuple(aspects)),
    )


def load_annotated(path, name=None):
    """Load an interchange JSON-lines file into a Corpus, validating it fully."""
    sentences = []
    ids = set()
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError("cannot read corpus %s: %s" % (path, exc)) from exc
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip() or raw.startswith("#"):
                continue  # '#' lines carry annotator provenance headers
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise SchemaError("invalid JSON: %s" % exc, line=lineno) from exc
            sent = _parse_sentence(obj, lineno)
            _expect(sent.id not in ids, "duplicate sentence id %r" % sent.id, lineno, "id")
            ids.add(sent.id)
            sentences.append(sent)
    if not sentences:
        raise DataError("%s: no sentences" % path)
    if name is None:
        name = _name_from_path(path)
    return Corpus(name=name, sentences=tuple(sentences))


def _name_from_path(path):
    base = str(path).rsplit("/", 1)[-1]
    return base.rsplit(".", 1)[0]


def sentence_to_obj(sent):
    return {
        "id": sent.id,
        "doc": sent.doc,
        "tokens": [
            {
                "i": t.index,
                "surface": t.surface,
                "lemma": t.lemma,
                "pos": t.pos,
                "chunk": t.chunk,
                "head": -1 if t.head is None else t.head,
                "deprel": t.deprel,
            }
            for t in sent.tokens
        ],
        "clauses": [[c.start, c.end] for c in sent.clauses],
        "gold": [
            {"term": a.term, "strength": a.strength, "flags": sorted(a.flags)}
            for a in sent.gold.aspects
        ],
    }


def save_annotated(corpus, path):
    """Write a corpus in the interchange format; inverse of load_annotated."""
    with open(path, "w", encoding="utf-8") as fh:
        for sent in corpus.sentences:
            fh.write(json.dumps(sentence_to_obj(sent), ensure_ascii=False))
            fh.write("\n")
