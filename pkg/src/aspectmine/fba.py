"""Frequency-based aspect extraction: noun transactions, frequent itemset
mining, compactness and redundancy pruning, opinion-word harvesting and
infrequent-feature recovery.
"""

import weakref
from collections import Counter
from dataclasses import dataclass, field, replace
from itertools import product

from .corpus import noun_phrases
from .data import default_stopwords
from .errors import ConfigError, DataError
from .itemsets import MiningParams, Transaction, apriori
from .results import AspectCandidate, ExtractionResult, OpinionWord
from .textnorm import FuzzyParams, StemIndex, cluster_terms, stem

_COMBO_CAP = 5000


@dataclass(frozen=True)
class FbaConfig:
    mining: MiningParams = MiningParams()
    fuzzy: FuzzyParams = FuzzyParams()
    stem_algorithm: str = "porter"
    adj_window: int = 3
    compact_max_gap: int = 3
    compact_min_sentences: int = 2
    min_psupport: int = 3
    compactness: bool = True
    redundancy: bool = True
    infrequent: bool = True
    stopwords: frozenset = field(default_factory=default_stopwords)

    def __post_init__(self):
        if self.stem_algorithm not in ("porter", "lemma"):
            raise ConfigError("stem_algorithm must be 'porter' or 'lemma'")
        for name in ("adj_window", "compact_max_gap", "compact_min_sentences", "min_psupport"):
            if getattr(self, name) < 1:
                raise ConfigError("%s must be >= 1" % name)


@dataclass
class FrequentFeature:
    stems: frozenset
    order: tuple  # materialized item order
    phrase: str
    support: int
    sentence_ids: tuple
    psupport: int = 0
    compact_ids: tuple = ()


@dataclass
class FbaIndex:
    """Per-corpus normalization state shared by the pipeline stages."""

    transactions: list
    item_positions: dict  # item -> {sentence_id: sorted positions}
    item_surfaces: dict  # item -> Counter of lowercase surface forms
    noun_index: StemIndex
    adj_index: StemIndex
    sentences: dict  # sentence_id -> AnnotatedSentence


def _is_word(token):
    return any(ch.isalpha() for ch in token.surface)


def _token_stem(token, algorithm):
    return stem(token.surface, algorithm, lemma=token.lemma)


def _empty_stem_index():
    return StemIndex(cluster_of={}, representative={}, originals={})


def _class_index(occurrences, params):
    """occurrences: list of (stem, surface). Returns a StemIndex."""
    if not occurrences:
        return _empty_stem_index()
    counts = Counter(s for s, _ in occurrences)
    surfaces = {}
    for s, surf in occurrences:
        surfaces.setdefault(s, Counter())[surf] += 1
    return cluster_terms(counts, params, surfaces=surfaces)


def build_index(corpus, config):
    """Collect candidate tokens, cluster their stems per POS class and build
    the transaction list plus the back-index used for surface recovery."""
    noun_occ, adj_occ = [], []
    per_sentence = []  # (sentence, [(pos, cls, stem)])
    for sent in corpus:
        cand = set()
        for start, end in noun_phrases(sent):
            cand.update(range(start, end))
        cand.update(t.index for t in sent.tokens if t.is_noun)
        picked = []
        for i in sorted(cand):
            tok = sent.tokens[i]
            if not _is_word(tok) or tok.surface.lower() in config.stopwords:
                continue
            st = _token_stem(tok, config.stem_algorithm)
            if tok.is_noun:
                cls = "noun"
                noun_occ.append((st, tok.surface.lower()))
            elif tok.is_adjective:
                cls = "adj"
            else:
                cls = "other"
            picked.append((i, cls, st))
        # adjectives cluster over the whole corpus, not only NP-internal ones
        for tok in sent.tokens:
            if tok.is_adjective and _is_word(tok) and tok.surface.lower() not in config.stopwords:
                adj_occ.append((_token_stem(tok, config.stem_algorithm), tok.surface.lower()))
        per_sentence.append((sent, picked))

    noun_index = _class_index(noun_occ, config.fuzzy)
    adj_index = _class_index(adj_occ, config.fuzzy)

    def item_of(cls, st):
        if cls == "noun":
            return noun_index.rep(st)
        if cls == "adj":
            return adj_index.rep(st)
        return st

    transactions = []
    item_positions = {}
    item_surfaces = {}
    sentences = {}
    for sent, picked in per_sentence:
        items = set()
        for i, cls, st in picked:
            item = item_of(cls, st)
            items.add(item)
            item_positions.setdefault(item, {}).setdefault(sent.id, []).append(i)
            item_surfaces.setdefault(item, Counter())[sent.tokens[i].surface.lower()] += 1
        transactions.append(Transaction(sentence_id=sent.id, items=frozenset(items)))
        sentences[sent.id] = sent
    return FbaIndex(
        transactions=transactions,
        item_positions=item_positions,
        item_surfaces=item_surfaces,
        noun_index=noun_index,
        adj_index=adj_index,
        sentences=sentences,
    )


def build_transactions(corpus, config):
    """Noun/noun-phrase transactions after stopword removal, stemming and
    fuzzy-cluster canonicalization."""
    return build_index(corpus, config).transactions


def _surface_of(index, item):
    counts = index.item_surfaces.get(item)
    if not counts:
        return item
    top = max(counts.values())
    return min(s for s, c in counts.items() if c == top)


def _selections(items, positions_by_item):
    lists = [positions_by_item[i] for i in items]
    total = 1
    for lst in lists:
        total *= len(lst)
    if total > _COMBO_CAP:
        lists = [lst[:3] for lst in lists]
    return product(*lists)


def _compact_selection(items, positions_by_item, max_gap):
    """Best selection of one position per item whose sorted adjacent gaps are
    all <= max_gap, or None.  Best = smallest span, then leftmost."""
    best = None
    for combo in _selections(items, positions_by_item):
        pairs = sorted(zip(combo, items))
        if any(b[0] - a[0] > max_gap for a, b in zip(pairs, pairs[1:])):
            continue
        span = pairs[-1][0] - pairs[0][0]
        key = (span, pairs[0][0])
        if best is None or key < best[0]:
            best = (key, pairs)
    return None if best is None else best[1]


def _any_selection(items, positions_by_item):
    pairs = sorted((positions_by_item[i][0], i) for i in items)
    return pairs


def _sentence_positions(index, items, sid):
    out = {}
    for item in items:
        positions = index.item_positions.get(item, {}).get(sid)
        if not positions:
            return None
        out[item] = positions
    return out


def mine_frequent_features(transactions, config, index):
    """Run the itemset miner and materialize each itemset into a surface
    phrase, using the most frequent compactly-observed token ordering."""
    counts = apriori(transactions, config.mining)
    features = []
    for itemset in sorted(counts, key=lambda s: (len(s), tuple(sorted(s)))):
        items = tuple(sorted(itemset))
        sids = tuple(tx.sentence_id for tx in transactions if itemset <= tx.items)
        if len(items) == 1:
            order = items
            compact_ids = sids
        else:
            orderings = Counter()
            compact = []
            fallback = Counter()
            for sid in sids:
                pos = _sentence_positions(index, items, sid)
                if pos is None:
                    continue
                sel = _compact_selection(items, pos, config.compact_max_gap)
                if sel is not None:
                    orderings[tuple(item for _, item in sel)] += 1
                    compact.append(sid)
                else:
                    fallback[tuple(item for _, item in _any_selection(items, pos))] += 1
            compact_ids = tuple(compact)
            source = orderings or fallback
            top = max(source.values()) if source else 0
            order = min((o for o, c in source.items() if c == top), default=items)
        phrase = " ".join(_surface_of(index, item) for item in order)
        features.append(
            FrequentFeature(
                stems=itemset,
                order=order,
                phrase=phrase,
                support=counts[itemset],
                sentence_ids=sids,
                compact_ids=compact_ids,
            )
        )
    return features


def compactness_prune(features, corpus, config, index):
    """Keep multiword features compact (adjacent matched words <= max gap)
    in at least compact_min_sentences sentences; single words always pass."""
    kept = []
    for f in features:
        if len(f.stems) == 1 or len(f.compact_ids) >= config.compact_min_sentences:
            kept.append(f)
    return kept


def redundancy_prune(features, corpus, config, index):
    """p-support = sentences where the feature occurs outside every surviving
    superset feature; single-word features below min_psupport are dropped."""
    sent_sets = {id(f): set(f.sentence_ids) for f in features}
    for f in features:
        supersets = [g for g in features if g is not f and f.stems < g.stems]
        psupport = 0
        for sid in f.sentence_ids:
            if not any(sid in sent_sets[id(g)] for g in supersets):
                psupport += 1
        f.psupport = psupport
    return [f for f in features if len(f.stems) > 1 or f.psupport >= config.min_psupport]


def _feature_spans(features, index, config, sid):
    spans = []
    for f in features:
        if sid not in f.sentence_ids:
            continue
        items = tuple(sorted(f.stems))
        pos = _sentence_positions(index, items, sid)
        if pos is None:
            continue
        if len(items) == 1:
            spans.extend((p, p) for p in pos[items[0]])
        else:
            sel = _compact_selection(items, pos, config.compact_max_gap)
            if sel is None:
                sel = _any_selection(items, pos)
            spans.append((sel[0][0], sel[-1][0]))
    return spans


def _span_distance(span, i):
    start, end = span
    if i < start:
        return start - i
    if i > end:
        return i - end
    return 0


def extract_opinion_words(features, corpus, config, index):
    """Adjectives within adj_window tokens of a frequent-feature span,
    normalized with the same stem + fuzzy-cluster treatment as features."""
    opinions = {}
    for sent in corpus:
        spans = _feature_spans(features, index, config, sent.id)
        if not spans:
            continue
        for tok in sent.tokens:
            if not tok.is_adjective or not _is_word(tok):
                continue
            if tok.surface.lower() in config.stopwords:
                continue
            if min(_span_distance(sp, tok.index) for sp in spans) > config.adj_window:
                continue
            rep = index.adj_index.rep(_token_stem(tok, config.stem_algorithm))
            surfaces, sids = opinions.setdefault(rep, (Counter(), []))
            surfaces[tok.surface.lower()] += 1
            if sent.id not in sids:
                sids.append(sent.id)
    return opinions


def _noun_units(sent):
    """Candidate noun units: the contiguous noun run of each NP chunk plus
    standalone nouns outside chunks.  Returns (start, end_inclusive, phrase)."""
    units = []
    in_np = set()
    for start, end in noun_phrases(sent):
        in_np.update(range(start, end))
        run = []
        best_run = []
        for i in range(start, end):
            if sent.tokens[i].is_noun and _is_word(sent.tokens[i]):
                run.append(i)
                if len(run) > len(best_run):
                    best_run = list(run)
            else:
                run = []
        if best_run:
            units.append((best_run[0], best_run[-1]))
    for tok in sent.tokens:
        if tok.index not in in_np and tok.is_noun and _is_word(tok):
            units.append((tok.index, tok.index))
    units.sort()
    return [
        (s, e, " ".join(sent.tokens[i].surface.lower() for i in range(s, e + 1)))
        for s, e in units
    ]


def extract_infrequent_features(corpus, features, opinions, config, index):
    """In sentences with no frequent feature but at least one opinion word,
    take the noun/noun-phrase unit closest to each opinion word (ties left)."""
    covered = set()
    for f in features:
        covered.update(f.sentence_ids)
    found = {}
    for sent in corpus:
        if sent.id in covered:
            continue
        opinion_positions = [
            tok.index
            for tok in sent.tokens
            if tok.is_adjective and _is_word(tok)
            and index.adj_index.rep(_token_stem(tok, config.stem_algorithm)) in opinions
        ]
        if not opinion_positions:
            continue
        units = _noun_units(sent)
        if not units:
            continue
        for oi in opinion_positions:
            best = min(units, key=lambda u: (_span_distance((u[0], u[1]), oi), u[0]))
            support, sids = found.setdefault(best[2], [0, []])
            entry = found[best[2]]
            entry[0] += 1
            if sent.id not in entry[1]:
                entry[1].append(sent.id)
    return [
        AspectCandidate(term=term, kind="infrequent", support=entry[0], sentence_ids=tuple(entry[1]))
        for term, entry in sorted(found.items())
    ]


# Index construction (clustering in particular) is the expensive part and only
# depends on (corpus, stem_algorithm, min_sim, stopwords); sweeps reuse it.
_INDEX_CACHE = {}
_INDEX_CACHE_LIMIT = 64


def _cached_index(corpus, config):
    key = (id(corpus), config.stem_algorithm, config.fuzzy.min_sim, hash(config.stopwords))
    hit = _INDEX_CACHE.get(key)
    if hit is not None and hit[0]() is corpus:
        return hit[1]
    index = build_index(corpus, config)
    if len(_INDEX_CACHE) >= _INDEX_CACHE_LIMIT:
        _INDEX_CACHE.pop(next(iter(_INDEX_CACHE)))
    _INDEX_CACHE[key] = (weakref.ref(corpus), index)
    return index


def run_fba(corpus, config=FbaConfig()):
    """The whole pipeline.  The compactness/redundancy/infrequent flags allow
    stagewise runs; with all three off the output is exactly the raw
    itemset-stage candidate list."""
    if not len(corpus):
        raise DataError("run_fba requires a nonempty corpus")
    index = _cached_index(corpus, config)
    features = mine_frequent_features(index.transactions, config, index)
    if config.compactness:
        features = compactness_prune(features, corpus, config, index)
    if config.redundancy:
        features = redundancy_prune(features, corpus, config, index)

    aspects = [
        AspectCandidate(
            term=f.phrase, kind="frequent", support=f.support, sentence_ids=f.sentence_ids
        )
        for f in features
    ]
    opinions = extract_opinion_words(features, corpus, config, index)
    if config.infrequent:
        aspects.extend(extract_infrequent_features(corpus, features, opinions, config, index))
    aspects.sort(key=lambda a: (a.kind, -a.support, a.term))
    opinion_words = tuple(
        OpinionWord(word=_best_surface(surfaces), sentence_ids=tuple(sids))
        for rep, (surfaces, sids) in sorted(opinions.items())
    )
    return ExtractionResult(
        corpus_name=corpus.name,
        algorithm="fba",
        aspects=tuple(aspects),
        opinion_words=opinion_words,
    )


def _best_surface(counts):
    top = max(counts.values())
    return min(s for s, c in counts.items() if c == top)


def itemset_stage_config(config):
    """The same configuration with every pruning stage disabled."""
    return replace(config, compactness=False, redundancy=False, infrequent=False)
