"""Penn-Treebank POS tagging via lexicon lookups, orthographic heuristics and
a few contextual repair rules."""

import re

from . import lexicon as lx

_NUMBER = re.compile(r"^\d+(?:[.,]\d+)*$|^\d+\w*$")
_PUNCT = re.compile(r"^[^\w]+$")

_VERB_SUFFIX_BASES = {}
for _base in lx.VERBS:
    _VERB_SUFFIX_BASES[_base] = "VB"


def _verb_form_tag(word):
    """Tag for a conjugated form of a known base verb, or None."""
    if word in lx.BE_FORMS:
        return lx.BE_FORMS[word]
    if word in lx.HAVE_FORMS:
        return lx.HAVE_FORMS[word]
    if word in lx.DO_FORMS:
        return lx.DO_FORMS[word]
    if word in lx.IRREGULAR_PAST:
        return "VBD"
    if word in lx.VERBS:
        return "VBP"
    for suffix, tag in (("ing", "VBG"), ("ed", "VBD"), ("es", "VBZ"), ("s", "VBZ")):
        if word.endswith(suffix):
            stem = word[: -len(suffix)]
            candidates = [stem, stem + "e"]
            if len(stem) >= 2 and stem[-1] == stem[-2]:
                candidates.append(stem[:-1])  # jamming -> jam
            if suffix in ("es", "s"):
                candidates.append(stem)
            if any(c in lx.VERBS for c in candidates):
                return tag
    return None


def _lexical_tag(word, position):
    if _PUNCT.match(word):
        return "," if word == "," else "."
    if _NUMBER.match(word):
        return "CD"
    if word in lx.DETERMINERS:
        return "DT"
    if word in lx.POSSESSIVES:
        return "PRP$"
    if word in lx.PRONOUNS:
        return "PRP"
    if word in lx.MODALS:
        return "MD"
    if word in lx.CONJUNCTIONS:
        return "CC"
    if word in lx.PREPOSITIONS:
        return "IN"
    if word in lx.ADVERBS or (word.endswith("ly") and len(word) > 4):
        return "RB"
    if word in lx.COMPARATIVES:
        return "JJR"
    if word in lx.SUPERLATIVES:
        return "JJS"
    if word in lx.ADJECTIVES:
        return "JJ"
    if word in lx.BRAND_NAMES:
        return "NNP"
    if word in lx.NOUN_PREFERENCE:
        return "NNS" if word.endswith("s") and not word.endswith("ss") else "NN"
    verb_tag = _verb_form_tag(word)
    if verb_tag:
        return verb_tag
    if word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return "NNS"
    return "NN"


_NOMINAL_CONTEXT = {"DT", "PRP$", "JJ", "JJR", "JJS", "CD"}


def tag(words):
    """Tag a token list; words are matched lowercase."""
    tags = []
    lowered = [w.lower() for w in words]
    for i, word in enumerate(lowered):
        t = _lexical_tag(word, i)
        prev = tags[-1] if tags else None
        # nominal context forces noun/adjective readings of verb forms
        if prev in _NOMINAL_CONTEXT and t in ("VB", "VBP", "VBZ", "VBD", "VBG", "VBN"):
            if word in lx.ADJECTIVES:
                t = "JJ"
            elif t == "VBZ" or (word.endswith("s") and not word.endswith("ss")):
                t = "NNS"
            else:
                t = "NN"
        # infinitives and modals take base verb forms
        if prev in ("TO", "MD") and t in ("NN", "VBP", "VBZ"):
            if _verb_form_tag(word) or word in lx.VERBS:
                t = "VB"
        # "to" is TO before a verb, IN before a noun phrase
        if word == "to":
            t = "TO"
        tags.append(t)

    for i, word in enumerate(lowered):
        # predicative adjectives after forms of "be"
        if i > 0 and tags[i - 1] in ("VBZ", "VBP", "VBD") and lowered[i - 1] in lx.BE_FORMS:
            if word in lx.ADJECTIVES:
                tags[i] = "JJ"
    return tags
