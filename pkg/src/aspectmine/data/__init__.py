"""Bundled resources: stopword list, opinion seed lexicon, document-frequency
table and the checked-in reference results used by report tables."""

import json
from functools import lru_cache
from importlib import resources


def _text(name):
    return resources.files(__package__).joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def default_stopwords():
    words = set()
    for line in _text("stopwords.txt").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


@lru_cache(maxsize=None)
def opinion_lexicon():
    """word -> polarity (+1/-1), in file order."""
    out = {}
    for line in _text("opinion_lexicon.txt").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        out[parts[0]] = int(parts[1]) if len(parts) > 1 else 1
    return dict(out)


def seed_subset(k, n_subsets=9):
    """The k-th of n same-size seed subsets of the bundled lexicon."""
    words = list(opinion_lexicon().items())
    return dict(words[k % n_subsets::n_subsets])


@lru_cache(maxsize=None)
def reference_results():
    return json.loads(_text("reference_results.json"))


def default_df_path():
    return resources.files(__package__).joinpath("df_table.txt")
