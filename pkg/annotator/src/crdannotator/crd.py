"""Parsing of the raw gold-prefixed review format.

Mirrors the consumer-side contract: ``[t]`` title lines open documents,
annotated lines carry ``term[+n][flags],...##sentence``, unannotated lines
start with ``##``, and a bare line is kept as an unannotated sentence with a
warning.
"""

import re
from dataclasses import dataclass

_BRACKET = re.compile(r"\[([^\[\]]*)\]")
_STRENGTH = re.compile(r"^[+-]\d+$")
FLAGS = {"u", "p", "s", "cc", "cs"}


@dataclass
class RawSentence:
    text: str
    doc: str
    gold: list  # of (term, strength, flags)


def _parse_prefix(prefix, lineno, warnings):
    aspects = []
    for chunk in prefix.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        at = chunk.find("[")
        term = " ".join((chunk if at < 0 else chunk[:at]).lower().split())
        if not term:
            warnings.append("line %d: empty aspect term" % lineno)
            continue
        strength = None
        flags = []
        for mark in _BRACKET.findall(chunk[at:] if at >= 0 else ""):
            mark = mark.strip()
            if _STRENGTH.match(mark):
                strength = int(mark)
            elif mark in FLAGS:
                flags.append(mark)
            else:
                warnings.append("line %d: unreadable marker [%s]" % (lineno, mark))
        if strength is None:
            warnings.append("line %d: missing strength on %r" % (lineno, term))
            strength = 0
        aspects.append((term, max(-3, min(3, strength)), sorted(set(flags))))
    return aspects


def read_raw(lines, warnings=None):
    if warnings is None:
        warnings = []
    out = []
    doc_no = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("[t]"):
            doc_no += 1
            continue
        if "##" in line:
            prefix, text = line.split("##", 1)
            gold = _parse_prefix(prefix, lineno, warnings)
        else:
            warnings.append("line %d: missing '##', treated as unannotated" % lineno)
            text, gold = line, []
        out.append(RawSentence(text=text.strip(), doc="d%03d" % doc_no, gold=gold))
    return out
