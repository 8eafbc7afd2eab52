"""Alignment-based aspect extraction: multiword grouping (C-value or NP
heuristic), constrained monolingual IBM model 1/2 EM training, harmonic-mean
associations, tf-idf relevance and bipartite random-walk confidence scoring.

The corpus is aligned with itself; a token may never align to its own
position, and noun/noun-phrase tokens align only to adjectives (and vice
versa) while all other words align freely.
"""

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .corpus import noun_phrases
from .errors import ConfigError, DataError
from .porter import porter_stem
from .results import AspectCandidate, ExtractionResult

GROUPING_METHODS = ("cvalue_ngram", "cvalue_pattern", "np_subtree")
STEMMING_MODES = ("none", "porter", "lemma")
CONFIDENCE_SCALES = ("walk_raw", "walk_times_freq")


@dataclass(frozen=True)
class GroupingConfig:
    method: str = "cvalue_ngram"
    max_n: int = 4
    limit: int | None = None

    def __post_init__(self):
        if self.method not in GROUPING_METHODS:
            raise ConfigError("grouping method must be one of %s" % (GROUPING_METHODS,))
        if self.method.startswith("cvalue") and self.max_n < 2:
            raise ConfigError("max_n must be >= 2 for C-value grouping")
        if self.limit is not None and self.limit < 1:
            raise ConfigError("limit must be >= 1 when set")


@dataclass(frozen=True)
class TbaConfig:
    grouping: GroupingConfig = GroupingConfig()
    stemming: str = "none"
    ibm1_iterations: int = 5
    ibm2_iterations: int = 5
    walk_lambda: float = 0.3
    walk_k: int = 100
    confidence_scale: str = "walk_times_freq"

    def __post_init__(self):
        if self.stemming not in STEMMING_MODES:
            raise ConfigError("stemming must be one of %s" % (STEMMING_MODES,))
        if self.ibm1_iterations < 1:
            raise ConfigError("ibm1_iterations must be >= 1")
        if self.ibm2_iterations < 0:
            raise ConfigError("ibm2_iterations must be >= 0")
        if not 0.0 <= self.walk_lambda <= 1.0:
            raise ConfigError("walk_lambda must be in [0, 1]")
        if self.walk_k < 1:
            raise ConfigError("walk_k must be >= 1")
        if self.confidence_scale not in CONFIDENCE_SCALES:
            raise ConfigError("confidence_scale must be one of %s" % (CONFIDENCE_SCALES,))


@dataclass(frozen=True)
class DfTable:
    """Document frequencies backing the idf part of candidate relevance."""

    df: dict
    total_docs: int

    def lookup(self, term):
        # unseen terms are floored at a document count of 1
        value = self.df.get(term, 1)
        return min(max(value, 1), self.total_docs)

    def idf(self, term):
        return math.log(self.total_docs / self.lookup(term))


def load_df_table(path):
    df = {}
    total = None
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError("cannot read df table %s: %s" % (path, exc)) from exc
    with fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                if line.startswith("#total_docs="):
                    total = int(line.split("=", 1)[1])
                continue
            term, _, count = line.rpartition("\t")
            df[term] = int(count)
    if total is None or total < 1:
        raise DataError("%s: missing or invalid '#total_docs=' header" % path)
    return DfTable(df=df, total_docs=total)


# ---------------------------------------------------------------------------
# Tokens, candidates, grouping
# ---------------------------------------------------------------------------

def _is_wordlike(token):
    return any(ch.isalpha() for ch in token.surface)


def _token_key(token, stemming):
    if stemming == "porter":
        return porter_stem(token.surface.lower())
    if stemming == "lemma":
        return token.lemma.lower()
    return token.surface.lower()


def _token_class(token):
    if token.is_noun:
        return "noun"
    if token.is_adjective:
        return "adj"
    return "other"


def _candidate_spans(sent, config):
    n_tokens = len(sent.tokens)
    spans = []
    if config.method == "cvalue_ngram":
        for n in range(2, config.max_n + 1):
            for i in range(n_tokens - n + 1):
                if all(_is_wordlike(t) for t in sent.tokens[i:i + n]):
                    spans.append((i, i + n))
    elif config.method == "cvalue_pattern":
        # (JJ|NN)+ NN sequences
        for n in range(2, config.max_n + 1):
            for i in range(n_tokens - n + 1):
                window = sent.tokens[i:i + n]
                if not all(_is_wordlike(t) for t in window):
                    continue
                if all(t.is_noun or t.is_adjective for t in window[:-1]) and window[-1].is_noun:
                    spans.append((i, i + n))
    else:  # np_subtree
        for start, end in noun_phrases(sent):
            toks = [t for t in sent.tokens[start:end] if _is_wordlike(t)]
            while toks and not (toks[0].is_noun or toks[0].is_adjective):
                toks = toks[1:]
            if len(toks) >= 2 and toks[-1].is_noun:
                spans.append((toks[0].index, toks[-1].index + 1))
    return spans


def cvalue_rank(corpus, config, stemming="none"):
    """Rank multiword candidates by C-value (np_subtree bypasses the score
    and ranks by raw frequency).  Returns [(term_tuple, score), ...] sorted
    by descending score, truncated at config.limit."""
    freq = Counter()
    for sent in corpus:
        for start, end in _candidate_spans(sent, config):
            term = tuple(_token_key(t, stemming) for t in sent.tokens[start:end])
            freq[term] += 1
    if config.method == "np_subtree":
        ranked = sorted(freq.items(), key=lambda kv: (-kv[1], kv[0]))
    else:
        longer_of = {}
        for b in freq:
            for length in range(2, len(b)):
                for i in range(len(b) - length + 1):
                    sub = b[i:i + length]
                    if sub in freq:
                        longer_of.setdefault(sub, set()).add(b)
        scored = []
        for a, f_a in freq.items():
            nesting = longer_of.get(a)
            if nesting:
                adjusted = f_a - sum(freq[b] for b in nesting) / len(nesting)
            else:
                adjusted = f_a
            scored.append((a, math.log2(len(a)) * adjusted))
        ranked = sorted(scored, key=lambda kv: (-kv[1], kv[0]))
    if config.limit is not None:
        ranked = ranked[: config.limit]
    return ranked


@dataclass(frozen=True)
class FusedToken:
    key: str
    cls: str
    surface: str


def group_terms(corpus, ranked_terms, stemming="none"):
    """Fuse occurrences of the ranked multiword terms into single tokens,
    longest match first, scanning left to right.  Fused tokens behave as
    nouns; their key joins the member keys with underscores."""
    by_length = {}
    for term in ranked_terms:
        by_length.setdefault(len(term), set()).add(tuple(term))
    lengths = sorted(by_length, reverse=True)

    fused_corpus = []
    for sent in corpus:
        keys = [_token_key(t, stemming) for t in sent.tokens]
        out = []
        i = 0
        while i < len(keys):
            match_len = 0
            for n in lengths:
                if i + n <= len(keys) and tuple(keys[i:i + n]) in by_length[n]:
                    match_len = n
                    break
            if match_len:
                toks = sent.tokens[i:i + match_len]
                out.append(
                    FusedToken(
                        key="_".join(keys[i:i + match_len]),
                        cls="noun",
                        surface=" ".join(t.surface.lower() for t in toks),
                    )
                )
                i += match_len
            else:
                tok = sent.tokens[i]
                out.append(FusedToken(key=keys[i], cls=_token_class(tok), surface=tok.surface.lower()))
                i += 1
        fused_corpus.append((sent.id, out))
    return fused_corpus


# ---------------------------------------------------------------------------
# Constrained monolingual IBM models
# ---------------------------------------------------------------------------

@dataclass
class TranslationTable:
    t: dict  # e-key -> {f-key: prob}
    classes: dict  # key -> cls
    history: list = field(default_factory=list)

    def prob(self, f, e):
        return self.t.get(e, {}).get(f, 0.0)

    def row_sums(self):
        return {e: sum(row.values()) for e, row in self.t.items()}

    def forbidden_mass(self):
        """Total probability on class-forbidden pairs (must be exactly 0).
        Allowed pairs: noun <-> adjective, other <-> other."""
        mass = 0.0
        for e, row in self.t.items():
            e_cls = self.classes.get(e, "other")
            wanted = {"noun": "adj", "adj": "noun", "other": "other"}[e_cls]
            for f, p in row.items():
                if self.classes.get(f, "other") != wanted:
                    mass += p
        return mass


@dataclass
class DistortionTable:
    a: dict  # (i, j, l, m) -> prob
    history: list = field(default_factory=list)

    def position_sums(self):
        sums = {}
        for (i, j, l, m), p in self.a.items():
            sums[(j, l, m)] = sums.get((j, l, m), 0.0) + p
        return sums


def vocabulary_classes(fused_corpus):
    """Type-level noun/adj/other partition: majority class over a key's
    occurrences, ties broken noun > adj > other.  The alignment constraint is
    enforced on this partition so the table invariant is meaningful."""
    votes = {}
    for _, tokens in fused_corpus:
        for tok in tokens:
            votes.setdefault(tok.key, Counter())[tok.cls] += 1
    priority = {"noun": 2, "adj": 1, "other": 0}
    return {
        key: max(counts.items(), key=lambda kv: (kv[1], priority[kv[0]]))[0]
        for key, counts in votes.items()
    }


def _allowed_positions(keys, classes):
    """allowed[j] = e-side positions token j may align to: nouns/noun phrases
    pair only with adjectives and vice versa, the remaining words pair freely
    among themselves, and no token may align to its own position."""
    wanted = {"noun": "adj", "adj": "noun", "other": "other"}
    cls = [classes[k] for k in keys]
    allowed = []
    for j in range(len(keys)):
        target = wanted[cls[j]]
        allowed.append([i for i in range(len(keys)) if i != j and cls[i] == target])
    return allowed


def _sentence_groups(fused_corpus, classes):
    """Identical key sequences are trained once with a multiplicity weight."""
    groups = {}
    for _, tokens in fused_corpus:
        sig = tuple(t.key for t in tokens)
        groups[sig] = groups.get(sig, 0) + 1
    out = []
    for sig in sorted(groups):
        out.append((sig, _allowed_positions(sig, classes), groups[sig]))
    return out


def train_ibm1(fused_corpus, iterations, init=None, classes=None):
    """Constrained IBM model 1 EM on the corpus paired with itself.  Tokens
    whose allowed set is empty align to NULL and contribute no counts."""
    if iterations < 1:
        raise ConfigError("IBM1 training requires iterations >= 1")
    if classes is None:
        classes = vocabulary_classes(fused_corpus)
    groups = _sentence_groups(fused_corpus, classes)

    if init is None:
        pair_sets = {}
        for keys, allowed, _ in groups:
            for j, idxs in enumerate(allowed):
                for i in idxs:
                    pair_sets.setdefault(keys[i], set()).add(keys[j])
        t = {e: {f: 1.0 / len(fs) for f in sorted(fs)} for e, fs in pair_sets.items()}
    else:
        t = {e: dict(row) for e, row in init.items()}

    history = []
    for _ in range(iterations):
        counts = {}
        ll = 0.0
        for keys, allowed, weight in groups:
            for j, idxs in enumerate(allowed):
                if not idxs:
                    continue
                f = keys[j]
                probs = [t[keys[i]].get(f, 0.0) for i in idxs]
                denom = sum(probs)
                if denom <= 0.0:
                    continue
                ll += weight * (math.log(denom) - math.log(len(idxs)))
                for i, p in zip(idxs, probs):
                    row = counts.setdefault(keys[i], {})
                    row[f] = row.get(f, 0.0) + weight * p / denom
        history.append(ll)
        t = {
            e: {f: c / total for f, c in sorted(row.items())}
            for e, row in counts.items()
            for total in (sum(row.values()),)
            if total > 0
        }
    return TranslationTable(t=t, classes=classes, history=history)


def train_ibm2(fused_corpus, iterations, init):
    """Constrained IBM model 2: joint EM on the translation table (seeded
    from model 1) and positional distortion probabilities."""
    if iterations < 0:
        raise ConfigError("IBM2 iterations must be >= 0")
    classes = dict(init.classes)
    groups = _sentence_groups(fused_corpus, classes)

    union = {}
    for keys, allowed, _ in groups:
        l = m = len(keys)
        for j, idxs in enumerate(allowed):
            for i in idxs:
                union.setdefault((j, l, m), set()).add(i)
    a = {}
    for (j, l, m), idxs in sorted(union.items()):
        p = 1.0 / len(idxs)
        for i in sorted(idxs):
            a[(i, j, l, m)] = p

    t = {e: dict(row) for e, row in init.t.items()}
    history = []
    for _ in range(iterations):
        t_counts = {}
        a_counts = {}
        ll = 0.0
        for keys, allowed, weight in groups:
            l = m = len(keys)
            for j, idxs in enumerate(allowed):
                if not idxs:
                    continue
                f = keys[j]
                probs = [
                    t.get(keys[i], {}).get(f, 0.0) * a[(i, j, l, m)] for i in idxs
                ]
                denom = sum(probs)
                if denom <= 0.0:
                    continue
                ll += weight * math.log(denom)
                for i, p in zip(idxs, probs):
                    row = t_counts.setdefault(keys[i], {})
                    row[f] = row.get(f, 0.0) + weight * p / denom
                    a_counts[(i, j, l, m)] = a_counts.get((i, j, l, m), 0.0) + weight * p / denom
        history.append(ll)
        t = {
            e: {f: c / total for f, c in sorted(row.items())}
            for e, row in t_counts.items()
            for total in (sum(row.values()),)
            if total > 0
        }
        sums = {}
        for (i, j, l, m), c in a_counts.items():
            sums[(j, l, m)] = sums.get((j, l, m), 0.0) + c
        a = {
            key: c / sums[(key[1], key[2], key[3])]
            for key, c in sorted(a_counts.items())
            if sums[(key[1], key[2], key[3])] > 0
        }
    table = TranslationTable(t=t, classes=classes, history=list(init.history) + history)
    return table, DistortionTable(a=a, history=history)


def associations(table):
    """Harmonic mean of the two directed translation probabilities for every
    noun/adjective pair; zero whenever either direction is zero."""
    assoc = {}
    for n, row in table.t.items():
        if table.classes.get(n) != "noun":
            continue
        for adj, t_an in row.items():
            t_na = table.t.get(adj, {}).get(n, 0.0)
            if t_an > 0.0 and t_na > 0.0:
                assoc.setdefault(n, {})[adj] = 2.0 * t_an * t_na / (t_an + t_na)
    return assoc


def relevance(candidates, freqs, df_terms, df=None):
    """Normalized tf-idf relevance; without a DfTable the idf factor is 1."""
    r = np.zeros(len(candidates))
    for pos, key in enumerate(candidates):
        tf = freqs.get(key, 0)
        idf = df.idf(df_terms.get(key, key)) if df is not None else 1.0
        r[pos] = tf * idf
    total = r.sum()
    if total <= 0.0:
        return np.full(len(candidates), 1.0 / len(candidates)) if len(candidates) else r
    return r / total


@dataclass
class AssociationGraph:
    """Bipartite candidate/opinion graph with per-candidate relevance and the
    walk parameters."""

    targets: list
    opinions: list
    assoc: np.ndarray  # |targets| x |opinions|, entries >= 0
    relevance: np.ndarray  # sums to 1
    lam: float = 0.3
    k: int = 100

    def __post_init__(self):
        if np.any(self.assoc < 0):
            raise ConfigError("association strengths must be >= 0")
        if len(self.relevance) and abs(float(self.relevance.sum()) - 1.0) > 1e-9:
            raise ConfigError("relevance must sum to 1")
        if not 0.0 <= self.lam <= 1.0:
            raise ConfigError("lambda must be in [0, 1]")


@dataclass
class WalkResult:
    confidence: np.ndarray
    iterations: int
    converged: bool


def random_walk(graph_or_matrix, r=None, lam=0.3, k=100, tol=1e-6):
    """c0 = r;  c_{i+1} = (1 - lam) * N @ c_i + lam * r, where N row-normalizes
    the two-hop target->opinion->target matrix.  lam = 1 returns r unchanged.

    Accepts an AssociationGraph, or the raw (matrix, r, lam, k) pieces."""
    if isinstance(graph_or_matrix, AssociationGraph):
        graph = graph_or_matrix
        assoc_matrix, r, lam, k = graph.assoc, graph.relevance, graph.lam, graph.k
    else:
        assoc_matrix = graph_or_matrix
        if r is None:
            raise ConfigError("random_walk needs a relevance vector")
    if not 0.0 <= lam <= 1.0:
        raise ConfigError("lambda must be in [0, 1]")
    r = np.asarray(r, dtype=float)
    if lam == 1.0:
        return WalkResult(confidence=r.copy(), iterations=0, converged=True)
    a = np.asarray(assoc_matrix, dtype=float)
    if len(r) == 0:
        return WalkResult(confidence=r.copy(), iterations=0, converged=True)

    row_sums = a.sum(axis=1, keepdims=True)
    a_row = np.divide(a, row_sums, out=np.zeros_like(a), where=row_sums > 0)
    col_sums = a.sum(axis=0, keepdims=True)
    a_col = np.divide(a, col_sums, out=np.zeros_like(a), where=col_sums > 0)
    two_hop = a_row @ a_col.T
    n_sums = two_hop.sum(axis=1, keepdims=True)
    n = np.divide(two_hop, n_sums, out=np.zeros_like(two_hop), where=n_sums > 0)

    c = r.copy()
    for it in range(1, k + 1):
        c_next = (1.0 - lam) * (n @ c) + lam * r
        if np.max(np.abs(c_next - c)) < tol:
            return WalkResult(confidence=c_next, iterations=it, converged=True)
        c = c_next
    return WalkResult(confidence=c, iterations=k, converged=False)


# ---------------------------------------------------------------------------
# End-to-end model
# ---------------------------------------------------------------------------

@dataclass
class TbaModel:
    corpus_name: str
    candidates: list  # noun/NP keys, sorted
    confidences: dict  # key -> scaled confidence
    surfaces: dict  # key -> Counter of surface forms
    freqs: dict  # key -> corpus frequency
    sentence_ids: dict  # key -> ordered sentence ids
    table: TranslationTable
    distortion: DistortionTable | None
    walk: WalkResult

    def extract(self, threshold=None):
        """threshold None returns the full unfiltered candidate list."""
        chosen = []
        for key in self.candidates:
            conf = self.confidences[key]
            if threshold is None or conf > threshold:
                chosen.append((key, conf))
        chosen.sort(key=lambda kv: (-kv[1], kv[0]))
        aspects = tuple(
            AspectCandidate(
                term=_best_surface(self.surfaces[key]),
                kind="frequent",
                support=self.freqs[key],
                sentence_ids=tuple(self.sentence_ids[key]),
                confidence=conf,
            )
            for key, conf in chosen
        )
        return ExtractionResult(corpus_name=self.corpus_name, algorithm="tba", aspects=aspects)

    def max_confidence(self):
        return max(self.confidences.values(), default=0.0)


def _best_surface(counts):
    top = max(counts.values())
    return min(s for s, c in counts.items() if c == top)


def fit_tba(corpus, config=TbaConfig(), df=None):
    if not len(corpus):
        raise DataError("fit_tba requires a nonempty corpus")
    ranked = [term for term, _ in cvalue_rank(corpus, config.grouping, config.stemming)]
    fused = group_terms(corpus, ranked, config.stemming)

    freqs = Counter()
    surfaces = {}
    sentence_ids = {}
    for sid, tokens in fused:
        for tok in tokens:
            freqs[tok.key] += 1
            surfaces.setdefault(tok.key, Counter())[tok.surface] += 1
            ids = sentence_ids.setdefault(tok.key, [])
            if not ids or ids[-1] != sid:
                ids.append(sid)

    classes = vocabulary_classes(fused)
    table = train_ibm1(fused, config.ibm1_iterations, classes=classes)
    distortion = None
    if config.ibm2_iterations > 0:
        table, distortion = train_ibm2(fused, config.ibm2_iterations, table)

    candidates = sorted(k for k, cls in classes.items() if cls == "noun" and _has_alpha(k))
    opinions = sorted(k for k, cls in classes.items() if cls == "adj" and _has_alpha(k))
    assoc = associations(table)
    matrix = np.zeros((len(candidates), len(opinions)))
    opinion_pos = {o: i for i, o in enumerate(opinions)}
    for ti, key in enumerate(candidates):
        for adj, value in assoc.get(key, {}).items():
            if adj in opinion_pos:
                matrix[ti, opinion_pos[adj]] = value

    df_terms = {key: _best_surface(surfaces[key]) for key in candidates}
    r = relevance(candidates, freqs, df_terms, df)
    graph = AssociationGraph(
        targets=candidates,
        opinions=opinions,
        assoc=matrix,
        relevance=r,
        lam=config.walk_lambda,
        k=config.walk_k,
    )
    walk = random_walk(graph)

    confidences = {}
    for pos, key in enumerate(candidates):
        conf = float(walk.confidence[pos])
        if config.confidence_scale == "walk_times_freq":
            conf *= freqs[key]
        confidences[key] = conf
    return TbaModel(
        corpus_name=corpus.name,
        candidates=candidates,
        confidences=confidences,
        surfaces=surfaces,
        freqs=dict(freqs),
        sentence_ids=sentence_ids,
        table=table,
        distortion=distortion,
        walk=walk,
    )


def _has_alpha(key):
    return any(ch.isalpha() for ch in key)


def extract_tba(corpus, config=TbaConfig(), threshold=None, df=None):
    """Fit the model and extract candidates with confidence above the
    threshold; threshold None yields the full unfiltered list."""
    return fit_tba(corpus, config, df=df).extract(threshold)


def threshold_grid(t_max, start=10.0, step=10.0):
    """The sweep grid [start, start+step, ...] up to and including the first
    value at or above t_max."""
    if step <= 0:
        raise ConfigError("t-grid step must be positive")
    grid = []
    t = start
    while True:
        grid.append(round(t, 10))
        if t >= t_max:
            break
        t += step
        if len(grid) > 10000:
            raise ConfigError("t-grid too large")
    return grid
