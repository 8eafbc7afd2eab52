"""IOB2 noun-phrase chunking over POS tags."""

_NP_LEAD = {"DT", "PRP$", "CD"}
_NP_MOD = {"JJ", "JJR", "JJS", "CD", "VBG"}
_NP_HEAD = {"NN", "NNS", "NNP", "NNPS"}


def chunk(tags):
    """B-NP/I-NP/O labels: optional determiner/possessive, premodifiers, then
    one or more nouns; a bare pronoun is its own NP."""
    labels = ["O"] * len(tags)
    i = 0
    while i < len(tags):
        if tags[i] == "PRP":
            labels[i] = "B-NP"
            i += 1
            continue
        j = i
        if tags[j] in _NP_LEAD:
            j += 1
        while j < len(tags) and tags[j] in _NP_MOD:
            j += 1
        if j < len(tags) and tags[j] in _NP_HEAD:
            while j < len(tags) and tags[j] in _NP_HEAD:
                j += 1
            labels[i] = "B-NP"
            for k in range(i + 1, j):
                labels[k] = "I-NP"
            i = j
        else:
            i += 1
    return labels
