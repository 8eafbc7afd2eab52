"""Term normalization shared by the extractors: edit-distance similarity,
complete-linkage fuzzy clustering of stems, and the stemming front-end.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import ConfigError
from .porter import porter_stem

STEM_ALGORITHMS = ("porter", "lemma")

# Edit-ratio is degenerate on very short strings; never fuzzily merge them.
MIN_FUZZY_LENGTH = 3


def levenshtein_distance(a, b):
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[-1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def levenshtein_ratio(a, b):
    """1 - distance/max(|a|, |b|); symmetric, in [0, 1], 1 iff equal."""
    if a == b:
        return 1.0
    longest = max(len(a), len(b))
    return 1.0 - levenshtein_distance(a, b) / longest


@dataclass(frozen=True)
class FuzzyParams:
    min_sim: float = 0.8

    def __post_init__(self):
        if not 0.0 < self.min_sim <= 1.0:
            raise ConfigError("min_sim must be in (0, 1], got %r" % (self.min_sim,))


@dataclass(frozen=True)
class StemIndex:
    """Flat fuzzy clusters over stems, with a back-index to surface forms."""

    cluster_of: dict
    representative: dict
    originals: dict  # cluster id -> Counter of original surface forms

    def rep(self, stem):
        cid = self.cluster_of.get(stem)
        return stem if cid is None else self.representative[cid]

    def surface(self, stem):
        """Most frequent original surface form of the stem's cluster,
        ties broken lexicographically."""
        cid = self.cluster_of.get(stem)
        if cid is None:
            return stem
        counts = self.originals[cid]
        top = max(counts.values())
        return min(w for w, c in counts.items() if c == top)

    def clusters(self):
        out = {}
        for stem, cid in self.cluster_of.items():
            out.setdefault(cid, []).append(stem)
        return {cid: sorted(members) for cid, members in out.items()}


def _complete_linkage(members, dists, cut):
    """Agglomerate ``members`` (index list) with pair distances ``dists``
    (missing pair means > cut), merging the closest pair first and breaking
    ties on the lowest index pair, until the closest pair exceeds ``cut``.
    """
    clusters = [(i,) for i in members]
    while len(clusters) > 1:
        best = None
        for x in range(len(clusters)):
            for y in range(x + 1, len(clusters)):
                worst = 0.0
                for i in clusters[x]:
                    for j in clusters[y]:
                        d = dists.get((i, j) if i < j else (j, i))
                        if d is None:
                            worst = None
                            break
                        worst = max(worst, d)
                    if worst is None:
                        break
                if worst is not None and worst <= cut:
                    key = (worst, clusters[x][0], clusters[y][0])
                    if best is None or key < best[0]:
                        best = (key, x, y)
        if best is None:
            break
        _, x, y = best
        merged = tuple(sorted(clusters[x] + clusters[y]))
        clusters = [c for k, c in enumerate(clusters) if k not in (x, y)]
        clusters.append(merged)
        clusters.sort(key=lambda c: c[0])
    return clusters


def cluster_terms(stems, params, surfaces=None):
    """Group a multiset of stems into fuzzy clusters (complete linkage over
    d = 1 - levenshtein_ratio, cut at 1 - min_sim).

    ``stems`` is an iterable or Counter; ``surfaces`` optionally maps a stem
    to a Counter of the original surface forms behind it.
    """
    counts = stems if isinstance(stems, Counter) else Counter(stems)
    if not counts:
        raise ConfigError("cluster_terms requires a nonempty stem multiset")
    vocab = sorted(counts)
    cut = 1.0 - params.min_sim

    parent = list(range(len(vocab)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    dists = {}
    if cut > 0.0:
        eligible = [i for i, w in enumerate(vocab) if len(w) >= MIN_FUZZY_LENGTH]
        for a in range(len(eligible)):
            i = eligible[a]
            wi = vocab[i]
            for b in range(a + 1, len(eligible)):
                j = eligible[b]
                wj = vocab[j]
                longest = max(len(wi), len(wj))
                if abs(len(wi) - len(wj)) > cut * longest + 1e-12:
                    continue
                d = 1.0 - levenshtein_ratio(wi, wj)
                if d <= cut + 1e-12:
                    dists[(i, j)] = d
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[max(ri, rj)] = min(ri, rj)

    components = {}
    for i in range(len(vocab)):
        components.setdefault(find(i), []).append(i)

    cluster_of = {}
    representative = {}
    originals = {}
    cid = 0
    for root in sorted(components):
        comp = sorted(components[root])
        if len(comp) == 1:
            groups = [tuple(comp)]
        else:
            groups = sorted(_complete_linkage(comp, dists, cut), key=lambda c: c[0])
        for group in groups:
            words = [vocab[i] for i in group]
            top = max(counts[w] for w in words)
            rep = min(w for w in words if counts[w] == top)
            representative[cid] = rep
            surface_counts = Counter()
            for w in words:
                cluster_of[w] = cid
                if surfaces and w in surfaces:
                    surface_counts.update(surfaces[w])
                else:
                    surface_counts[w] += counts[w]
            originals[cid] = surface_counts
            cid += 1
    return StemIndex(cluster_of=cluster_of, representative=representative, originals=originals)


def stem(word, algorithm, lemma=None):
    """Stem a word: ``porter`` applies the suffix stripper, ``lemma``
    returns the precomputed lemma (falling back to the word itself)."""
    if algorithm == "porter":
        return porter_stem(word.lower())
    if algorithm == "lemma":
        return (lemma if lemma is not None else word).lower()
    raise ConfigError("unknown stem algorithm %r" % (algorithm,))


def load_stopwords(path):
    """One word per line, UTF-8, '#' comment lines allowed."""
    words = set()
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise ConfigError("cannot read stopword list %s: %s" % (path, exc)) from exc
    with fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words.add(line.lower())
    return frozenset(words)
