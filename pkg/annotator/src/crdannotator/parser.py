"""Deterministic dependency head rules and clause spans over tagged,
chunked sentences.  Labels follow the Stanford-style names the extraction
rules downstream expect (det, poss, amod, nn, num, nsubj, cop, dobj, prep,
pobj, cc, conj, advmod, neg, aux, punct, dep)."""

from . import lexicon as lx

_FINITE = {"VBZ", "VBP", "VBD", "MD"}
_NOUNS = {"NN", "NNS", "NNP", "NNPS"}
_ADJS = {"JJ", "JJR", "JJS"}


def np_spans(chunks):
    spans = []
    start = None
    for i, label in enumerate(chunks):
        if label == "B-NP":
            if start is not None:
                spans.append((start, i))
            start = i
        elif label == "O" and start is not None:
            spans.append((start, i))
            start = None
    if start is not None:
        spans.append((start, len(chunks)))
    return spans


def _span_head(tags, span):
    start, end = span
    head = None
    for i in range(start, end):
        if tags[i] in _NOUNS or tags[i] == "PRP":
            head = i
    return head if head is not None else end - 1


def clause_boundaries(words, tags):
    """Split at a coordinator/semicolon with finite predicates on both sides."""
    def finite_in(a, b):
        return any(tags[i] in _FINITE for i in range(a, b))

    cuts = []
    for i, word in enumerate(words):
        if tags[i] == "CC" or word == ";":
            if finite_in(0, i) and finite_in(i + 1, len(words)):
                cuts.append(i)
    spans = []
    start = 0
    for cut in cuts:
        if cut > start:
            spans.append((start, cut))
        start = cut + 1
    if start < len(words):
        spans.append((start, len(words)))
    return spans or [(0, len(words))]


def _find_predicate(words, tags, chunks, start, end):
    """(predicate index, copula index or None) for one clause."""
    in_np = set()
    for s, e in np_spans(chunks[start:end]):
        in_np.update(range(start + s, start + e))
    for i in range(start, end):
        if i in in_np or tags[i] not in _FINITE and tags[i] != "VB":
            continue
        if words[i] in lx.BE_FORMS:
            for j in range(i + 1, end):
                if tags[j] in _ADJS and j not in in_np:
                    return j, i  # adjectival predicate with copula
                if tags[j] in _FINITE or words[j] in (",", ";"):
                    break
            for j in range(i + 1, end):
                if j in in_np and tags[j] in _NOUNS:
                    return _np_head_at(chunks, tags, j, start, end), i  # nominal predicate
            return i, None
        if tags[i] == "MD":
            for j in range(i + 1, end):
                if tags[j].startswith("VB"):
                    return j, None
            return i, None
        if tags[i] in _FINITE:
            return i, None
    # verbless fragment: head of the first NP, else first word-like token
    spans = [s for s in np_spans(chunks) if start <= s[0] and s[1] <= end]
    if spans:
        return _span_head(tags, spans[0]), None
    for i in range(start, end):
        if tags[i] not in (".", ","):
            return i, None
    return start, None


def _np_head_at(chunks, tags, i, start, end):
    for s, e in np_spans(chunks):
        if s <= i < e:
            return _span_head(tags, (s, e))
    return i


def parse(words, tags, chunks):
    """Return (heads, rels, clauses); heads use None for the root."""
    n = len(words)
    heads = [None] * n
    rels = ["dep"] * n
    attached = [False] * n

    def attach(child, head, rel):
        if child == head or attached[child]:
            return
        heads[child] = head
        rels[child] = rel
        attached[child] = True

    spans = np_spans(chunks)
    head_of_span = {}
    for span in spans:
        h = _span_head(tags, span)
        head_of_span[span] = h
        for i in range(span[0], span[1]):
            if i == h:
                continue
            tag = tags[i]
            if tag == "DT":
                attach(i, h, "det")
            elif tag == "PRP$":
                attach(i, h, "poss")
            elif tag in _ADJS or tag == "VBG":
                attach(i, h, "amod")
            elif tag == "CD":
                attach(i, h, "num")
            elif tag in _NOUNS:
                attach(i, h, "nn")
            else:
                attach(i, h, "dep")

    clauses = clause_boundaries(words, tags)
    predicates = []
    for cs, ce in clauses:
        pred, cop = _find_predicate(words, tags, chunks, cs, ce)
        predicates.append((cs, ce, pred, cop))

    root = predicates[0][2]
    for cs, ce, pred, cop in predicates[1:]:
        attach(pred, root, "conj")

    for cs, ce, pred, cop in predicates:
        attached[pred] = pred != root and attached[pred]
        clause_spans = [s for s in spans if cs <= s[0] and s[1] <= ce]
        clause_np_heads = [head_of_span[s] for s in clause_spans]

        if cop is not None:
            attach(cop, pred, "cop")

        # coordination between noun phrases (and between adjectives)
        pending_left = None
        for i in range(cs, ce):
            if tags[i] == "CC":
                left = None
                for h in clause_np_heads:
                    if h < i and h != pred:
                        left = h
                for j in range(i - 1, cs - 1, -1):
                    if tags[j] in _ADJS:
                        left = left if left is not None and left > j else j
                        break
                    if tags[j] in _NOUNS:
                        break
                if left is not None:
                    attach(i, left, "cc")
                    pending_left = (i, left)
            elif pending_left is not None and i in clause_np_heads and not attached[i] and i != pred:
                attach(i, pending_left[1], "conj")
                pending_left = None
            elif pending_left is not None and tags[i] in _ADJS and not attached[i] and i != pred:
                attach(i, pending_left[1], "conj")
                pending_left = None

        # subject: last unattached NP head before the predicate (or copula)
        boundary = cop if cop is not None else pred
        subject = None
        for h in clause_np_heads:
            if h < boundary and not attached[h] and h != pred:
                subject = h
        if subject is not None:
            attach(subject, pred, "nsubj")

        # prepositions attach to the preceding nominal if adjacent, else the
        # predicate; their NP becomes pobj
        for i in range(cs, ce):
            if tags[i] in ("IN", "TO") and words[i] != "to":
                prev_np = [s for s in clause_spans if s[1] == i]
                if prev_np:
                    attach(i, head_of_span[prev_np[0]], "prep")
                else:
                    attach(i, pred, "prep")
                for s in clause_spans:
                    if s[0] >= i + 1 and s[0] <= i + 1:
                        attach(head_of_span[s], i, "pobj")
                        break

        # first unattached post-predicate NP head is the object
        for h in clause_np_heads:
            if h > pred and not attached[h]:
                attach(h, pred, "dobj")
                break

        for i in range(cs, ce):
            if attached[i] or i == pred:
                continue
            tag = tags[i]
            word = words[i]
            if word in ("not", "n't"):
                attach(i, pred, "neg")
            elif tag == "RB":
                target = pred
                for j in range(i + 1, ce):
                    if tags[j] in _ADJS or tags[j].startswith("VB"):
                        target = j
                        break
                attach(i, target if target != i else pred, "advmod")
            elif word == "to":
                for j in range(i + 1, ce):
                    if tags[j].startswith("VB"):
                        attach(i, j, "aux")
                        break
                else:
                    attach(i, pred, "prep")
            elif tag == "MD" or (tag.startswith("VB") and words[i] in lx.BE_FORMS and cop != i):
                attach(i, pred, "aux")
            elif tag in (".", ","):
                attach(i, pred, "punct")
            else:
                attach(i, pred, "dep")

    # anything left (should be rare) hangs off the sentence root
    for i in range(n):
        if i != root and heads[i] is None:
            heads[i] = root
            rels[i] = "dep"
    heads[root] = None
    rels[root] = "root"
    return heads, rels, [list(c) for c in clauses]
