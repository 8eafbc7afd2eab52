"""Whitespace-and-punctuation tokenizer for review text.

The raw review files are mostly pre-tokenized (spaces around punctuation);
this tokenizer re-splits anything that is not, keeps hyphenated words and
decimal numbers intact, and separates n't-style contractions.
"""

import re

_CONTRACTION = re.compile(r"^(?P<stem>\w+)(?P<clitic>n't|'s|'re|'ve|'ll|'d|'m)$", re.IGNORECASE)
_TOKEN = re.compile(
    r"""
    \d+(?:[.,]\d+)*          # numbers, possibly with separators
    | \w+(?:[-/]\w+)*        # words incl. hyphen/slash compounds
    | n't | '\w+             # clitics when already split
    | [^\w\s]                # any single punctuation mark
    """,
    re.VERBOSE,
)


def tokenize(text):
    tokens = []
    for chunk in text.split():
        m = _CONTRACTION.match(chunk)
        if m:
            tokens.append(m.group("stem"))
            tokens.append(m.group("clitic"))
            continue
        tokens.extend(_TOKEN.findall(chunk))
    return tokens
