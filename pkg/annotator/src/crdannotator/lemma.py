"""Rule-based lemmatization keyed on the POS tag."""

from . import lexicon as lx

_IRREGULAR_NOUNS = {
    "children": "child", "men": "man", "women": "woman", "people": "people",
    "feet": "foot", "teeth": "tooth", "mice": "mouse", "lenses": "lens",
    "headphones": "headphones", "earphones": "earphones", "games": "game",
}

_BE_LIKE = {}
_BE_LIKE.update(dict.fromkeys(lx.BE_FORMS, "be"))
_BE_LIKE.update(dict.fromkeys(lx.HAVE_FORMS, "have"))
_BE_LIKE.update(dict.fromkeys(lx.DO_FORMS, "do"))


def _singularize(word):
    if word in _IRREGULAR_NOUNS:
        return _IRREGULAR_NOUNS[word]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(("ses", "xes", "zes", "ches", "shes")):
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def _verb_base(word):
    if word in _BE_LIKE:
        return _BE_LIKE[word]
    if word in lx.IRREGULAR_PAST:
        return lx.IRREGULAR_PAST[word]
    for suffix in ("ing", "ed", "es", "s"):
        if word.endswith(suffix) and len(word) > len(suffix) + 1:
            stem = word[: -len(suffix)]
            for candidate in (stem, stem + "e", stem[:-1] if len(stem) > 1 and stem[-1] == stem[-2] else stem):
                if candidate in lx.VERBS:
                    return candidate
            if suffix in ("es", "s"):
                return stem
            return stem
    return word


def lemma(word, tag):
    word = word.lower()
    if tag in ("NNS", "NNPS"):
        return _singularize(word)
    if tag.startswith("V"):
        return _verb_base(word)
    if tag == "JJR":
        return lx.COMPARATIVES.get(word, word)
    if tag == "JJS":
        return lx.SUPERLATIVES.get(word, word)
    if word == "n't":
        return "not"
    return word
