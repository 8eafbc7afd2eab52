"""Annotation pipeline: raw sentences in, interchange JSON objects out.

A sentence that fails any layer (empty tokenization, inconsistent layer
lengths, malformed tree) is dropped with a logged id rather than emitted
half-annotated.
"""

import json
import logging

from . import chunker, crd, lemma, parser, tagger, tokenize

log = logging.getLogger(__name__)


class RulePipeline:
    """Self-contained lexicon-and-rules backend; deterministic per version."""

    name = "rulepipe"

    def annotate(self, text):
        words = tokenize.tokenize(text)
        if not words:
            raise ValueError("no tokens")
        tags = tagger.tag(words)
        chunks = chunker.chunk(tags)
        heads, rels, clauses = parser.parse(words, tags, chunks)
        if not (len(words) == len(tags) == len(chunks) == len(heads) == len(rels)):
            raise ValueError("layer length mismatch")
        _check_tree(heads)
        tokens = []
        for i, word in enumerate(words):
            tokens.append({
                "i": i,
                "surface": word,
                "lemma": lemma.lemma(word, tags[i]),
                "pos": tags[i],
                "chunk": chunks[i],
                "head": -1 if heads[i] is None else heads[i],
                "deprel": rels[i],
            })
        return tokens, clauses


def _check_tree(heads):
    roots = [i for i, h in enumerate(heads) if h is None]
    if len(roots) != 1:
        raise ValueError("expected one root, got %d" % len(roots))
    for start in range(len(heads)):
        seen = set()
        cur = start
        while cur is not None:
            if cur in seen:
                raise ValueError("dependency cycle at %d" % start)
            seen.add(cur)
            cur = heads[cur]


BACKENDS = {RulePipeline.name: RulePipeline}


def annotate_sentences(raw_sentences, corpus_name, backend="rulepipe"):
    """Yield interchange objects; drops sentences that fail annotation."""
    if backend not in BACKENDS:
        raise ValueError("unknown backend %r (available: %s)" % (backend, sorted(BACKENDS)))
    pipe = BACKENDS[backend]()
    for index, sent in enumerate(raw_sentences):
        sid = "%s_%04d" % (corpus_name, index)
        try:
            tokens, clauses = pipe.annotate(sent.text)
        except Exception as exc:
            log.warning("dropping %s: %s", sid, exc)
            continue
        yield {
            "id": sid,
            "doc": sent.doc,
            "tokens": tokens,
            "clauses": clauses,
            "gold": [
                {"term": term, "strength": strength, "flags": list(flags)}
                for term, strength, flags in sent.gold
            ],
        }


def annotate_file(in_path, out_path, backend="rulepipe", corpus_name=None):
    """Annotate a raw review file into interchange JSON-lines.  Returns the
    number of sentences written."""
    from . import __version__

    if corpus_name is None:
        corpus_name = str(in_path).rsplit("/", 1)[-1].rsplit(".", 1)[0]
    warnings = []
    with open(in_path, encoding="utf-8") as fh:
        raw = crd.read_raw(fh, warnings)
    for warning in warnings:
        log.warning("%s: %s", in_path, warning)

    count = 0
    with open(out_path, "w", encoding="utf-8") as out:
        out.write("# annotator=%s crd-annotator/%s\n" % (backend, __version__))
        for obj in annotate_sentences(raw, corpus_name, backend=backend):
            out.write(json.dumps(obj, ensure_ascii=False))
            out.write("\n")
            count += 1
    return count
