"""Offline converter from raw gold-prefixed review text to the annotated
JSON-lines interchange format: tokens, lemmas, Penn Treebank POS tags, IOB2
noun-phrase chunks, dependency heads/relations and clause spans.

Backends are pluggable; the bundled ``rulepipe`` backend is a deterministic
lexicon-and-rules pipeline with no model downloads, so results are stable
given a pinned package version.
"""

from .pipeline import BACKENDS, annotate_file, annotate_sentences

__version__ = "0.1.0"
