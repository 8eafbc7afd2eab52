"""Dependency-based double propagation: rule-driven co-extraction of targets
and opinion words to a fixpoint, followed by clause, dealer, phrase and
frequency pruning with provenance-cascade removal.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import ConfigError, DataError
from .results import AspectCandidate, ExtractionResult, OpinionWord
from .textnorm import FuzzyParams, cluster_terms
from .porter import porter_stem

DEFAULT_MR = frozenset({"amod", "nsubj", "csubj", "xsubj", "dobj", "iobj", "prep", "nmod"})
DEFAULT_DEALER_PATTERNS = ("compared with", "compared to", "vs", "versus", "than")
MATCHING_MODES = ("surface", "stem", "fuzzy")
SEED = "<seed>"


@dataclass(frozen=True)
class DbaConfig:
    seeds: tuple = (("good", 1), ("bad", -1))  # (word, polarity) pairs
    mr_relations: frozenset = DEFAULT_MR
    conj_relation: str = "conj"
    dealer_patterns: tuple = DEFAULT_DEALER_PATTERNS
    dealer_window: int = 3
    q: int = 2  # consecutive nouns merged before/after an aspect
    k: int = 1  # adjectives merged before it
    min_freq: int = 2
    matching: str = "stem"
    fuzzy: FuzzyParams = FuzzyParams()
    merge_opinion_adjectives: bool = False
    conj_test: str = "surface"  # or "tree"

    def __post_init__(self):
        if not self.seeds:
            raise ConfigError("DBA requires a nonempty seed lexicon")
        if self.matching not in MATCHING_MODES:
            raise ConfigError("matching must be one of %s" % (MATCHING_MODES,))
        if self.q < 0 or self.k < 0:
            raise ConfigError("q and k must be >= 0")
        if self.min_freq < 1:
            raise ConfigError("min_freq must be >= 1")
        if self.conj_test not in ("surface", "tree"):
            raise ConfigError("conj_test must be 'surface' or 'tree'")


@dataclass(frozen=True)
class Event:
    """One rule firing: ``item`` was extracted in ``sentence_id`` from
    ``source`` (another item key, or SEED)."""

    item: str
    rule: str
    sentence_id: str
    source: str


@dataclass
class PropagationState:
    targets: dict  # key -> set of Event
    opinions: dict  # key -> set of Event
    target_occ: dict  # key -> list of (sentence_id, index), noun sites
    opinion_surfaces: dict  # key -> Counter
    target_surfaces: dict
    rounds: int = 0

    def target_keys(self):
        return set(self.targets)

    def opinion_keys(self):
        return set(self.opinions)


class _Matcher:
    """Per-corpus key function implementing the matching mode."""

    def __init__(self, corpus, config):
        self.mode = config.matching
        self._rep = {}
        if self.mode == "fuzzy":
            noun_stems, adj_stems = Counter(), Counter()
            for sent in corpus:
                for tok in sent.tokens:
                    if tok.is_noun:
                        noun_stems[porter_stem(tok.surface.lower())] += 1
                    elif tok.is_adjective:
                        adj_stems[porter_stem(tok.surface.lower())] += 1
            self._noun_index = cluster_terms(noun_stems, config.fuzzy) if noun_stems else None
            self._adj_index = cluster_terms(adj_stems, config.fuzzy) if adj_stems else None

    def key(self, word, is_noun=True):
        word = word.lower()
        if self.mode == "surface":
            return word
        stem = porter_stem(word)
        if self.mode == "stem":
            return stem
        index = self._noun_index if is_noun else self._adj_index
        return index.rep(stem) if index is not None else stem


def _dep_edges(sent):
    return [(tok.head, tok.index, tok.deprel) for tok in sent.tokens if tok.head is not None]


def propagate(corpus, config, schedule=("R1", "R2", "R3", "R4")):
    """Apply the eight extraction rules round-robin until neither the item
    sets nor the provenance event sets grow.  Rule families:

    R1a/R1b extract noun targets from known opinion words (direct modifying
    relation, or indirectly through a shared head); R2a/R2b extract adjective
    opinion words from known targets the same two ways; R3a/R3b extract
    targets from targets via conjunction or an identical relation to a shared
    head; R4a/R4b do the same for opinion words.
    """
    if not config.seeds:
        raise ConfigError("DBA requires a nonempty seed lexicon")
    matcher = _Matcher(corpus, config)
    seed_keys = {matcher.key(w, is_noun=False) for w, _ in config.seeds}

    state = PropagationState(
        targets={}, opinions={}, target_occ={}, opinion_surfaces={}, target_surfaces={}
    )
    for sent in corpus:
        for tok in sent.tokens:
            key = matcher.key(tok.surface, is_noun=tok.is_noun)
            if tok.is_noun:
                state.target_occ.setdefault(key, []).append((sent.id, tok.index))
                state.target_surfaces.setdefault(key, Counter())[tok.surface.lower()] += 1
            elif tok.is_adjective:
                state.opinion_surfaces.setdefault(key, Counter())[tok.surface.lower()] += 1

    def tkey(tok):
        return matcher.key(tok.surface, is_noun=tok.is_noun)

    def known_opinion(tok):
        if not tok.is_adjective:
            return None
        key = tkey(tok)
        if key in seed_keys:
            return key, SEED
        if key in state.opinions:
            return key, key
        return None

    def known_target(tok):
        if not tok.is_noun:
            return None
        key = tkey(tok)
        return key if key in state.targets else None

    def add_target(tok, rule, sid, source, added):
        ev = Event(tkey(tok), rule, sid, source)
        events = state.targets.setdefault(ev.item, set())
        if ev not in events:
            events.add(ev)
            added[0] = True

    def add_opinion(tok, rule, sid, source, added):
        ev = Event(tkey(tok), rule, sid, source)
        events = state.opinions.setdefault(ev.item, set())
        if ev not in events:
            events.add(ev)
            added[0] = True

    def rule_r1(sent, added):
        toks = sent.tokens
        for h, d, rel in _dep_edges(sent):
            if rel not in config.mr_relations:
                continue
            for o_i, t_i in ((d, h), (h, d)):
                hit = known_opinion(toks[o_i])
                if hit and toks[t_i].is_noun:
                    add_target(toks[t_i], "R1a", sent.id, hit[1], added)
        for h, deps in _shared_head(sent, config.mr_relations).items():
            for o_i in deps:
                hit = known_opinion(sent.tokens[o_i])
                if not hit:
                    continue
                for t_i in deps:
                    if t_i != o_i and sent.tokens[t_i].is_noun:
                        add_target(sent.tokens[t_i], "R1b", sent.id, hit[1], added)

    def rule_r2(sent, added):
        toks = sent.tokens
        for h, d, rel in _dep_edges(sent):
            if rel not in config.mr_relations:
                continue
            for t_i, o_i in ((d, h), (h, d)):
                t_key = known_target(toks[t_i])
                if t_key is not None and toks[o_i].is_adjective:
                    add_opinion(toks[o_i], "R2a", sent.id, t_key, added)
        for h, deps in _shared_head(sent, config.mr_relations).items():
            for t_i in deps:
                t_key = known_target(sent.tokens[t_i])
                if t_key is None:
                    continue
                for o_i in deps:
                    if o_i != t_i and sent.tokens[o_i].is_adjective:
                        add_opinion(sent.tokens[o_i], "R2b", sent.id, t_key, added)

    def rule_r3(sent, added):
        toks = sent.tokens
        for h, d, rel in _dep_edges(sent):
            if rel != config.conj_relation:
                continue
            for a, b in ((h, d), (d, h)):
                t_key = known_target(toks[a])
                if t_key is not None and toks[b].is_noun:
                    add_target(toks[b], "R3a", sent.id, t_key, added)
        for (h, rel), deps in _shared_head_same_rel(sent).items():
            for a in deps:
                t_key = known_target(toks[a])
                if t_key is None:
                    continue
                for b in deps:
                    if b != a and toks[b].is_noun:
                        add_target(toks[b], "R3b", sent.id, t_key, added)

    def rule_r4(sent, added):
        toks = sent.tokens
        for h, d, rel in _dep_edges(sent):
            if rel != config.conj_relation:
                continue
            for a, b in ((h, d), (d, h)):
                hit = known_opinion(toks[a])
                if hit and toks[b].is_adjective:
                    add_opinion(toks[b], "R4a", sent.id, hit[1], added)
        for (h, rel), deps in _shared_head_same_rel(sent).items():
            for a in deps:
                hit = known_opinion(toks[a])
                if not hit:
                    continue
                for b in deps:
                    if b != a and toks[b].is_adjective:
                        add_opinion(toks[b], "R4b", sent.id, hit[1], added)

    rules = {"R1": rule_r1, "R2": rule_r2, "R3": rule_r3, "R4": rule_r4}
    unknown = [r for r in schedule if r not in rules]
    if unknown:
        raise ConfigError("unknown rules in schedule: %s" % unknown)

    # item sets grow for at most |vocabulary| rounds, after which one more
    # pass saturates the event sets
    round_bound = sum(len(s.tokens) for s in corpus) + 3
    while True:
        added = [False]
        for name in schedule:
            for sent in corpus:
                rules[name](sent, added)
        state.rounds += 1
        if not added[0]:
            break
        if state.rounds > round_bound:
            raise AssertionError("propagation failed to reach a fixpoint")
    return state


def _shared_head(sent, mr):
    heads = {}
    for h, d, rel in _dep_edges(sent):
        if rel in mr:
            heads.setdefault(h, []).append(d)
    return {h: deps for h, deps in heads.items() if len(deps) > 1}


def _shared_head_same_rel(sent):
    groups = {}
    for h, d, rel in _dep_edges(sent):
        groups.setdefault((h, rel), []).append(d)
    return {key: deps for key, deps in groups.items() if len(deps) > 1}


def _match_key(matcher, tok):
    return matcher.key(tok.surface, is_noun=tok.is_noun)


def clause_prune(state, corpus, config):
    """Within each clause holding two or more extracted targets that are not
    linked by a conjunction, keep only the globally most frequent target's
    occurrences (ties toward the leftmost occurrence)."""
    occ_by_sentence = {}
    for key, occs in state.target_occ.items():
        if key not in state.targets:
            continue
        for sid, idx in occs:
            occ_by_sentence.setdefault(sid, []).append((idx, key))
    global_freq = {
        key: len(occs) for key, occs in state.target_occ.items() if key in state.targets
    }

    removed = set()
    for sent in corpus:
        occs = sorted(occ_by_sentence.get(sent.id, ()))
        if not occs:
            continue
        for clause in sent.clause_spans():
            inside = [(i, k) for i, k in occs if clause.start <= i < clause.end]
            if len({k for _, k in inside}) < 2:
                continue
            if _all_connected(sent, inside, clause, config):
                continue
            best_key = max(
                {k for _, k in inside},
                key=lambda k: (global_freq.get(k, 0), -min(i for i, kk in inside if kk == k)),
            )
            for i, k in inside:
                if k != best_key:
                    removed.add((sent.id, i, k))

    _drop_occurrences(state, removed)
    return state


def _all_connected(sent, inside, clause, config):
    """Every pair of distinct-target occurrences must have a conjunction
    between them (surface test) or lie on a conj dependency path (tree)."""
    positions = sorted(i for i, _ in inside)
    if config.conj_test == "surface":
        conj_at = {
            t.index
            for t in sent.tokens
            if clause.start <= t.index < clause.end and t.pos == "CC"
        }
        for a, b in zip(positions, positions[1:]):
            if not any(a < c < b for c in conj_at):
                return False
        return True
    # tree test: occurrences must form one conj-connected component
    conj_pairs = set()
    for tok in sent.tokens:
        if tok.head is not None and tok.deprel == config.conj_relation:
            conj_pairs.add((tok.head, tok.index))
            conj_pairs.add((tok.index, tok.head))
    pos_set = set(positions)
    comp = {positions[0]}
    frontier = [positions[0]]
    while frontier:
        cur = frontier.pop()
        for a, b in conj_pairs:
            if a == cur and b in pos_set and b not in comp:
                comp.add(b)
                frontier.append(b)
    return comp == pos_set


def _drop_occurrences(state, removed):
    if not removed:
        return
    for key in list(state.target_occ):
        if key not in state.targets:
            continue
        kept = [(sid, i) for sid, i in state.target_occ[key] if (sid, i, key) not in removed]
        state.target_occ[key] = kept


def dealer_prune(state, corpus, config):
    """Remove target occurrences whose noun lies within dealer_window tokens
    of a comparison/dealer trigger phrase."""
    patterns = [tuple(p.lower().split()) for p in config.dealer_patterns]
    removed = set()
    for sent in corpus:
        words = [t.surface.lower() for t in sent.tokens]
        spans = []
        for pat in patterns:
            for i in range(len(words) - len(pat) + 1):
                if tuple(words[i:i + len(pat)]) == pat:
                    spans.append((i, i + len(pat) - 1))
        if not spans:
            continue
        for key in state.targets:
            for sid, idx in state.target_occ.get(key, ()):
                if sid != sent.id:
                    continue
                for s, e in spans:
                    dist = s - idx if idx < s else (idx - e if idx > e else 0)
                    if dist <= config.dealer_window:
                        removed.add((sid, idx, key))
                        break
    _drop_occurrences(state, removed)
    return state


def form_phrases(state, corpus, config, opinion_keys=None, matcher=None):
    """Extend each target occurrence with up to q consecutive nouns on both
    sides and up to k adjectives immediately before; returns occurrence ->
    phrase span mapping {(sentence_id, index): (start, end, phrase)}."""
    sentences = {s.id: s for s in corpus}
    spans = {}
    for key in state.targets:
        for sid, idx in state.target_occ.get(key, ()):
            sent = sentences[sid]
            toks = sent.tokens
            start = idx
            taken = 0
            while start - 1 >= 0 and toks[start - 1].is_noun and taken < config.q:
                start -= 1
                taken += 1
            taken = 0
            while start - 1 >= 0 and toks[start - 1].is_adjective and taken < config.k:
                prev = toks[start - 1]
                if not config.merge_opinion_adjectives and opinion_keys is not None and matcher is not None:
                    if _match_key(matcher, prev) in opinion_keys:
                        break
                start -= 1
                taken += 1
            end = idx
            taken = 0
            while end + 1 < len(toks) and toks[end + 1].is_noun and taken < config.q:
                end += 1
                taken += 1
            phrase = " ".join(t.surface.lower() for t in toks[start:end + 1])
            spans[(sid, idx, key)] = (start, end, phrase)
    return spans


def frequency_prune_and_cascade(state, config, phrase_spans):
    """Drop aspect phrases below min_freq, then iteratively remove items whose
    every provenance chain passes through a removed item."""

    def alive_state(occ_map):
        counts = Counter()
        sites_of = {}
        for (sid, idx, key), (start, end, phrase) in phrase_spans.items():
            if (sid, idx) not in occ_map.get(key, ()):
                continue
            sites_of.setdefault(key, set()).add((sid, start, end, phrase))
        seen_sites = set()
        for key in sorted(sites_of):
            for site in sites_of[key]:
                if site not in seen_sites:
                    seen_sites.add(site)
                    counts[site[3]] += 1
        return counts, sites_of

    occ_map = {k: set(v) for k, v in state.target_occ.items() if k in state.targets}
    while True:
        counts, sites_of = alive_state(occ_map)
        # frequency pruning at phrase granularity
        new_occ = {}
        changed = False
        for key, occs in occ_map.items():
            kept = set()
            for sid, idx in occs:
                start, end, phrase = phrase_spans[(sid, idx, key)]
                if counts[phrase] >= config.min_freq:
                    kept.add((sid, idx))
                else:
                    changed = True
            new_occ[key] = kept
        occ_map = new_occ

        # provenance cascade: an item is grounded if some chain of extraction
        # events reaches a seed through currently-alive items
        target_alive = {k for k, occs in occ_map.items() if occs}
        opinion_alive = set(state.opinions)
        grounded = set()
        progress = True
        while progress:
            progress = False
            for key in sorted(target_alive | opinion_alive):
                if key in grounded:
                    continue
                events = state.targets.get(key, set()) | state.opinions.get(key, set())
                for ev in events:
                    if ev.source == SEED or (
                        ev.source in grounded
                        and (ev.source in target_alive or ev.source in opinion_alive)
                    ):
                        grounded.add(key)
                        progress = True
                        break
        dropped_targets = target_alive - grounded
        dropped_opinions = opinion_alive - grounded
        if dropped_targets:
            changed = True
            for key in dropped_targets:
                occ_map[key] = set()
        if dropped_opinions:
            for key in dropped_opinions:
                state.opinions.pop(key, None)
        if not changed:
            break

    final_counts, sites_of = alive_state(occ_map)
    return occ_map, final_counts, sites_of


def run_dba(corpus, config=DbaConfig()):
    if not len(corpus):
        raise DataError("run_dba requires a nonempty corpus")
    if not config.seeds:
        raise ConfigError("DBA requires a nonempty seed lexicon")
    matcher = _Matcher(corpus, config)
    seed_keys = {matcher.key(w, is_noun=False) for w, _ in config.seeds}

    state = propagate(corpus, config)
    state = clause_prune(state, corpus, config)
    state = dealer_prune(state, corpus, config)
    opinion_keys = set(state.opinions) | seed_keys
    spans = form_phrases(state, corpus, config, opinion_keys=opinion_keys, matcher=matcher)
    occ_map, phrase_counts, sites_of = frequency_prune_and_cascade(state, config, spans)

    by_phrase = {}
    for key in sorted(occ_map):
        for sid, idx in sorted(occ_map[key]):
            start, end, phrase = spans[(sid, idx, key)]
            entry = by_phrase.setdefault(phrase, [set(), []])
            entry[0].add((sid, start, end))
            if sid not in entry[1]:
                entry[1].append(sid)
    aspects = tuple(
        AspectCandidate(term=phrase, kind="frequent", support=len(entry[0]), sentence_ids=tuple(entry[1]))
        for phrase, entry in sorted(by_phrase.items(), key=lambda kv: (-len(kv[1][0]), kv[0]))
    )
    opinion_words = tuple(
        OpinionWord(
            word=_best_surface(state.opinion_surfaces.get(key, Counter({key: 1}))),
            sentence_ids=tuple(sorted({ev.sentence_id for ev in events})),
        )
        for key, events in sorted(state.opinions.items())
    )
    return ExtractionResult(
        corpus_name=corpus.name, algorithm="dba", aspects=aspects, opinion_words=opinion_words
    )


def _best_surface(counts):
    top = max(counts.values())
    return min(s for s, c in counts.items() if c == top)


def load_seed_lexicon(path):
    """One word per line with optional tab-separated polarity."""
    seeds = []
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError("cannot read seed lexicon %s: %s" % (path, exc)) from exc
    with fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            seeds.append((parts[0].lower(), int(parts[1]) if len(parts) > 1 else 1))
    if not seeds:
        raise DataError("%s: empty seed lexicon" % path)
    return tuple(seeds)
