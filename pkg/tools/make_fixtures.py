"""Dev tool: generate the five review fixture corpora.

Emits, per product, a raw review file in the gold-prefixed text format and a
pre-annotated interchange JSON-lines file, plus the bundled document-frequency
table.  Generation is template-based and fully deterministic per seed, so the
committed fixtures are reproducible byte for byte.
"""

import json
import random
import sys
from collections import Counter
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

RAW_DIR = ROOT / "data" / "corpora" / "raw"
ANN_DIR = ROOT / "data" / "corpora" / "annotated"
DF_PATH = ROOT / "src" / "aspectmine" / "data" / "df_table.txt"

POS_ADJ = [
    "good", "great", "excellent", "amazing", "nice", "wonderful", "fantastic",
    "superb", "impressive", "outstanding", "solid", "sharp", "crisp", "clear",
    "bright", "fast", "responsive", "easy", "simple", "intuitive", "comfortable",
    "sturdy", "durable", "reliable", "accurate", "smooth", "quiet", "compact",
    "light", "sleek", "stylish", "beautiful", "gorgeous", "elegant", "powerful",
    "vivid", "rich", "warm", "natural", "affordable", "reasonable", "worthwhile",
    "handy", "convenient", "versatile", "flexible", "quick", "snappy", "stable",
    "consistent", "precise", "clean", "neat", "roomy", "decent", "pleasant",
    "enjoyable", "fun", "exciting", "satisfying", "delightful", "remarkable",
    "exceptional", "brilliant", "splendid", "marvelous", "perfect", "flawless",
    "dependable", "robust", "premium", "classy", "refined", "polished", "vibrant",
    "colorful", "lovely", "charming", "handsome", "attractive", "portable",
    "lightweight", "slim", "trim", "efficient", "economical", "valuable",
    "helpful", "friendly", "capable", "prompt",
]
NEG_ADJ = [
    "bad", "poor", "terrible", "awful", "horrible", "disappointing", "lousy",
    "useless", "annoying", "frustrating", "flimsy", "blurry", "noisy", "fuzzy",
    "dim", "slow", "sluggish", "difficult", "complicated", "confusing",
    "awkward", "fragile", "cheap", "unreliable", "inaccurate", "rough", "loud",
    "bulky", "heavy", "clunky", "ugly", "bland", "tacky", "weak", "feeble",
    "thin", "shallow", "harsh", "artificial", "expensive", "overpriced",
    "worthless", "cumbersome", "inconvenient", "limited", "rigid", "laggy",
    "choppy", "shaky", "erratic", "sloppy", "messy", "cluttered", "cramped",
    "tiny", "mediocre", "unpleasant", "tedious", "boring", "dull", "dreadful",
    "ordinary", "dismal", "atrocious", "abysmal", "defective", "faulty",
    "broken", "brittle", "shoddy", "crude", "coarse", "unfinished", "dreary",
    "drab", "nasty", "unsightly", "unattractive", "massive", "oversized",
    "wasteful", "costly", "pricey", "unhelpful", "unresponsive", "late",
]

CHATTER_NOUNS = [
    "time", "thing", "way", "day", "week", "month", "year", "home", "work",
    "trip", "vacation", "kid", "wife", "husband", "son", "daughter", "friend",
    "family", "store", "shop", "mall", "box", "mail", "order", "website",
    "review", "people", "guy", "money", "deal", "gift", "christmas", "birthday",
    "brand", "company", "market", "dollar", "hand", "pocket", "bag", "car",
    "house", "room", "desk", "shelf", "table", "morning", "night", "weekend",
    "hour", "minute", "party", "office", "school", "college", "kitchen",
    "garage", "neighbor", "brother", "sister", "mom", "dad", "grandma",
    "grandpa", "cousin", "uncle", "aunt", "boss", "coworker", "roommate",
    "buddy", "crowd", "line", "street", "city", "town", "state", "country",
    "world", "internet", "computer", "phone_call", "letter", "question",
    "answer", "idea", "point", "fact", "reason", "story", "word", "name",
    "number", "list", "page", "site", "forum", "post", "comment", "rating",
]

PERSONS = ["wife", "husband", "son", "daughter", "friend", "brother", "sister", "mom", "dad", "neighbor"]
STORES = ["store", "shop", "mall", "website", "outlet"]
TIMES = ["week", "month", "year", "christmas", "summer", "winter", "weekend"]
VERBS_PAST = [
    ("bought", "buy"), ("purchased", "purchase"), ("ordered", "order"),
    ("got", "get"), ("grabbed", "grab"), ("picked", "pick"),
]
RIVALS = {
    "apex_dvd_player": ["sony", "toshiba", "panasonic", "philips"],
    "creative_mp3_player": ["ipod", "rio", "samsung", "sandisk"],
    "nikon_camera": ["canon", "olympus", "fuji", "kodak"],
    "nokia_phone": ["motorola", "ericsson", "siemens", "samsung"],
    "canon_camera": ["nikon", "olympus", "minolta", "sony"],
}

# (term, weight); multiword terms annotated as one gold aspect
PRODUCTS = {
    "apex_dvd_player": {
        "type": "player",
        "head_aspects": [
            ("player", 46), ("picture", 30), ("price", 24), ("remote", 18),
            ("picture quality", 14), ("sound", 14), ("remote control", 9),
            ("menu", 9), ("tray", 8), ("button", 8), ("setup", 7), ("design", 7),
            ("playback", 6), ("display", 6), ("sound quality", 5), ("unit", 5),
            ("disc tray", 4), ("video output", 4), ("front panel", 4), ("case", 3),
        ],
        "tail_aspects": [
            "power cord", "fan", "firmware", "zoom function", "slow motion",
            "fast forward", "pause", "eject button", "disc changer", "optical output",
            "cable", "adapter", "warranty", "manual", "packaging", "power button",
            "clock", "timer", "screen saver", "subtitle", "language menu",
            "region code", "progressive scan", "surround sound", "bass", "treble",
            "volume control", "skip button", "loading time", "startup", "labels",
            "lid", "hinge", "feet", "chassis", "finish", "logo", "indicator light",
            "standby mode", "sleep mode", "child lock", "angle button", "repeat mode",
        ],
        "implicit": ["size", "noise", "durability", "compatibility", "speed", "weight", "looks", "reliability", "value", "portability", "setup time", "build"],
    },
    "creative_mp3_player": {
        "type": "player",
        "head_aspects": [
            ("player", 42), ("battery", 26), ("sound", 24), ("software", 20),
            ("battery life", 16), ("interface", 13), ("screen", 12), ("size", 10),
            ("sound quality", 9), ("headphones", 8), ("storage", 7), ("menu", 7),
            ("volume", 6), ("design", 6), ("price", 6), ("transfer speed", 5),
            ("firmware", 4), ("control", 4), ("earphones", 4), ("case", 3),
        ],
        "tail_aspects": [
            "eq settings", "playlist", "shuffle mode", "radio", "recorder",
            "microphone", "usb cable", "charger", "dock", "belt clip", "armband",
            "display light", "backlight", "scroll wheel", "jog dial", "hold switch",
            "power switch", "jack", "bass", "treble", "equalizer", "album list",
            "artist list", "search function", "bookmark", "clock", "alarm",
            "sleep timer", "driver", "installer", "update", "manual", "warranty",
            "packaging", "strap", "clip", "battery door", "memory slot", "led",
            "volume buttons", "skip buttons", "menu button",
        ],
        "implicit": ["size", "weight", "capacity", "durability", "speed", "looks", "value", "battery life", "comfort", "reliability", "style", "feel"],
    },
    "nikon_camera": {
        "type": "camera",
        "head_aspects": [
            ("camera", 44), ("picture", 32), ("battery", 20), ("lens", 16),
            ("zoom", 14), ("picture quality", 13), ("flash", 11), ("size", 10),
            ("price", 9), ("screen", 8), ("viewfinder", 7), ("optical zoom", 6),
            ("shutter", 6), ("resolution", 5), ("color", 5), ("auto mode", 4),
            ("memory card", 4), ("manual mode", 4), ("design", 3), ("grip", 3),
        ],
        "tail_aspects": [
            "macro mode", "night mode", "red eye reduction", "self timer",
            "exposure", "aperture", "shutter speed", "white balance", "iso setting",
            "battery charger", "lens cap", "strap", "tripod mount", "usb cable",
            "video mode", "sound recording", "playback mode", "delete button",
            "menu system", "dial", "mode dial", "zoom lever", "focus", "autofocus",
            "lcd", "lcd screen", "battery compartment", "card slot", "flash range",
            "burst mode", "panorama mode", "date stamp", "software", "manual",
            "warranty", "packaging", "firmware", "sensor", "noise reduction",
            "image stabilizer", "battery indicator", "histogram",
        ],
        "implicit": ["weight", "speed", "durability", "looks", "battery life", "startup time", "value", "size", "handling", "image quality", "ease of use", "build"],
    },
    "nokia_phone": {
        "type": "phone",
        "head_aspects": [
            ("phone", 46), ("screen", 24), ("battery", 20), ("reception", 16),
            ("battery life", 14), ("sound", 12), ("keypad", 11), ("size", 10),
            ("ringtone", 9), ("menu", 8), ("display", 7), ("signal", 7),
            ("speaker", 6), ("price", 6), ("speakerphone", 5), ("radio", 4),
            ("volume", 4), ("design", 4), ("button", 3), ("case", 3),
        ],
        "tail_aspects": [
            "antenna", "vibrate mode", "silent mode", "profiles", "games",
            "calendar", "alarm", "clock", "calculator", "phonebook", "contacts",
            "text messaging", "sms", "wap browser", "infrared", "data cable",
            "charger", "battery cover", "faceplate", "backlight", "key lock",
            "voice dialing", "call quality", "earpiece", "microphone", "holster",
            "belt clip", "screen icons", "wallpaper", "screensaver", "composer",
            "predictive text", "t9", "manual", "warranty", "packaging", "sim tray",
            "network settings", "call log", "redial", "speed dial", "headset jack",
        ],
        "implicit": ["weight", "durability", "looks", "coverage", "speed", "ergonomics", "value", "battery life", "comfort", "style", "build quality", "feel"],
    },
    "canon_camera": {
        "type": "camera",
        "head_aspects": [
            ("camera", 42), ("picture", 30), ("lens", 18), ("picture quality", 16),
            ("battery", 14), ("zoom", 13), ("flash", 11), ("viewfinder", 9),
            ("lcd", 9), ("size", 8), ("price", 8), ("photo", 7), ("focus", 6),
            ("screen", 5), ("control", 5), ("weight", 4), ("menu", 4),
            ("auto focus", 4), ("grip", 3), ("shutter lag", 3),
        ],
        "tail_aspects": [
            "manual controls", "exposure compensation", "aperture priority",
            "shutter priority", "white balance", "iso", "raw mode", "movie mode",
            "macro", "hot shoe", "flash sync", "lens adapter", "filters",
            "battery grip", "battery charger", "memory card", "cf slot",
            "swivel screen", "lcd hood", "neck strap", "remote", "self timer",
            "burst rate", "buffer", "histogram", "zoom ring", "focus ring",
            "dial", "command dial", "software", "driver", "manual", "warranty",
            "packaging", "firmware", "noise", "color accuracy", "skin tones",
            "dynamic range", "startup time", "shot to shot time", "flash recycle",
        ],
        "implicit": ["speed", "durability", "looks", "battery life", "handling", "build quality", "value", "size", "ease of use", "responsiveness", "feel", "construction"],
    },
}

N_REVIEWS = {
    "apex_dvd_player": 78,
    "creative_mp3_player": 74,
    "nikon_camera": 72,
    "nokia_phone": 80,
    "canon_camera": 75,
}

# accessory/peripheral terms plausible for any of the five products; they
# extend the per-product tail vocabularies
SHARED_TAILS = [
    "carrying case", "power adapter", "usb port", "quick start guide",
    "rubber feet", "mounting screw", "battery latch", "serial number",
    "firmware update", "settings menu", "error message", "status light",
    "power supply", "instruction booklet", "registration card", "protective film",
]

# Zipf-ish weights so a core of chatter nouns recurs often enough to pass
# frequency thresholds, like ordinary review small talk does
CHATTER_WEIGHTS = [max(1.0, 14.0 / (1 + 0.35 * rank)) for rank in range(len(CHATTER_NOUNS))]


def T(surface, lemma, pos, chunk, head, deprel):
    return {
        "surface": surface, "lemma": lemma, "pos": pos,
        "chunk": chunk, "head": head, "deprel": deprel,
    }


def retag(tokens, offset):
    out = []
    for t in tokens:
        t = dict(t)
        if t["head"] is not None and t["head"] >= 0:
            t["head"] += offset
        out.append(t)
    return out


def finish(tokens, root_idx, clauses=None):
    """Resolve -1 head placeholders to the root index and sanity-check."""
    final = []
    for i, t in enumerate(tokens):
        t = dict(t)
        if t["head"] == -1:
            t["head"] = root_idx
        if i == root_idx:
            t["head"] = None
        final.append(t)
    roots = [i for i, t in enumerate(final) if t["head"] is None]
    assert roots == [root_idx], roots
    return final, (clauses or [(0, len(final))])


def pluralize(noun):
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


class SentenceBuilder:
    """Assembles token lists with a fluent head-offset bookkeeping."""

    def __init__(self):
        self.tokens = []

    def add(self, surface, lemma, pos, chunk, head, deprel):
        self.tokens.append(T(surface, lemma, pos, chunk, head, deprel))
        return len(self.tokens) - 1

    def add_np(self, words, det=None, adj=None, plural_last=False, head=-1, deprel="nsubj"):
        """Noun phrase [det] [adj] w1 .. wN; returns index of the head noun."""
        start = len(self.tokens)
        chunk = "B-NP"
        n = len(words)
        det_idx = adj_idx = None
        if det:
            det_idx = self.add(det, det, "DT" if det not in ("my", "his", "her", "our") else "PRP$",
                               chunk, -2, "det" if det not in ("my", "his", "her", "our") else "poss")
            chunk = "I-NP"
        if adj:
            adj_idx = self.add(adj, adj, "JJ", chunk, -2, "amod")
            chunk = "I-NP"
        noun_idxs = []
        for k, w in enumerate(words):
            last = k == n - 1
            surface = pluralize(w) if (plural_last and last) else w
            pos = "NNS" if (plural_last and last) else "NN"
            idx = self.add(surface, w, pos, chunk, -2, "nn" if not last else deprel)
            chunk = "I-NP"
            noun_idxs.append(idx)
        head_idx = noun_idxs[-1]
        for idx in noun_idxs[:-1]:
            self.tokens[idx]["head"] = head_idx
        if det_idx is not None:
            self.tokens[det_idx]["head"] = head_idx
        if adj_idx is not None:
            self.tokens[adj_idx]["head"] = head_idx
        self.tokens[head_idx]["head"] = head
        return head_idx


def strength_for(rng, polarity):
    return polarity * rng.choice([1, 1, 2, 2, 2, 3])


class CorpusGenerator:
    def __init__(self, product_id, spec, rng):
        self.pid = product_id
        self.spec = spec
        self.rng = rng
        self.head_terms = [t for t, _ in spec["head_aspects"]]
        # superlinear boost concentrates mentions on the top few aspects
        self.head_weights = [w ** 1.2 for _, w in spec["head_aspects"]]
        self.tail_pool = list(spec["tail_aspects"]) + list(SHARED_TAILS)
        rng.shuffle(self.tail_pool)
        self.tail_uses = Counter()
        self.rare_nouns = self._make_rare_nouns()
        self.sentences = []  # (tokens, clauses, gold, text)

    RARE_NOUNS = [
        "receipt", "coupon", "rebate", "clerk", "cashier", "parcel", "porch",
        "doorstep", "ad", "flyer", "catalog", "magazine", "article", "blog",
        "thread", "poster", "sticker", "ribbon", "wrapper", "drawer", "closet",
        "basement", "attic", "cabin", "hotel", "airport", "beach", "lake",
        "mountain", "park", "garden", "yard", "driveway", "commute", "train",
        "bus", "ferry", "museum", "concert", "gathering", "reunion", "wedding",
        "anniversary", "semester", "meeting", "conference", "presentation",
        "project", "assignment", "deadline", "lunch", "dinner", "breakfast",
        "picnic", "barbecue", "campsite", "errand", "chore", "laundry", "garage_sale",
        "auction", "raffle", "lottery", "paycheck", "bonus", "allowance", "budget",
    ]

    def _make_rare_nouns(self):
        base = list(self.RARE_NOUNS)
        self.rng.shuffle(base)
        # a block of rare nouns recurs about three times so frequency pruning
        # does not silently erase all of them
        recurring = base[:26]
        plan = recurring * 3 + recurring[:13]
        self.rng.shuffle(plan)
        self.recurring_plan = plan
        return base[26:]

    # ----- term helpers -----

    def pick_adj(self, polarity=None):
        if polarity is None:
            polarity = 1 if self.rng.random() < 0.72 else -1
        pool = POS_ADJ if polarity > 0 else NEG_ADJ
        # bias toward the most common opinion words
        if self.rng.random() < 0.35:
            word = pool[self.rng.randrange(0, 8)]
        else:
            word = self.rng.choice(pool)
        return word, polarity

    def pick_head_aspect(self):
        return self.rng.choices(self.head_terms, weights=self.head_weights, k=1)[0]

    def pick_tail_aspect(self):
        candidates = [t for t in self.tail_pool if self.tail_uses[t] < 2]
        if not candidates:
            candidates = self.tail_pool
        term = self.rng.choice(candidates)
        self.tail_uses[term] += 1
        return term

    def pick_chatter(self):
        word = self.rng.choices(CHATTER_NOUNS, weights=CHATTER_WEIGHTS, k=1)[0]
        return word.replace("_", " ")

    def pick_rare(self):
        if self.rare_nouns:
            return self.rare_nouns.pop().replace("_", " ")
        return self.pick_chatter()

    def pick_recurring_rare(self):
        if self.recurring_plan:
            return self.recurring_plan.pop().replace("_", " ")
        return self.pick_chatter()

    def gold_term(self, term, surface_words):
        """Most gold terms mirror the surface; some keep the lemma form."""
        surface = " ".join(surface_words)
        if surface != term and self.rng.random() < 0.75:
            return surface
        return term

    # ----- templates (each returns tokens, clauses, gold list) -----

    def t_copular(self, term, adverb=False, polarity=None):
        rng = self.rng
        adj, pol = self.pick_adj(polarity)
        b = SentenceBuilder()
        words = term.split()
        plural = len(words) == 1 and rng.random() < 0.18 and not term.endswith("s")
        asp = b.add_np(words, det=rng.choice(["the", "the", "this", "its"]),
                       plural_last=plural, head=-1, deprel="nsubj")
        verb = "are" if plural else rng.choice(["is", "is", "was"])
        b.add(verb, "be", "VBZ" if not plural else "VBP", "O", -1, "cop")
        if adverb:
            b.add(rng.choice(["really", "very", "surprisingly", "quite"]),
                  rng.choice(["really", "very", "surprisingly", "quite"]), "RB", "O", -1, "advmod")
        root = b.add(adj, adj, "JJ", "O", -1, "root")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        surface_words = [t["surface"] for t in tokens if t["lemma"] in words]
        gold = [(self.gold_term(term, surface_words), strength_for(rng, pol), ())]
        return tokens, clauses, gold

    def t_has(self, term):
        rng = self.rng
        adj, pol = self.pick_adj()
        b = SentenceBuilder()
        subj = b.add(rng.choice(["it", "it", "this"]), "it", "PRP", "B-NP", -1, "nsubj")
        root = b.add("has", "have", "VBZ", "O", -1, "root")
        b.tokens[subj]["head"] = root
        asp = b.add_np(term.split(), det=rng.choice(["a", "a", "an" if adj[0] in "aeiou" else "a"]),
                       adj=adj, head=root, deprel="dobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        words = term.split()
        surface_words = [t["surface"] for t in tokens if t["lemma"] in words]
        gold = [(self.gold_term(term, surface_words), strength_for(rng, pol), ())]
        return tokens, clauses, gold

    def t_love(self, term, include_product=True):
        rng = self.rng
        verb, pol = (("love", 1) if rng.random() < 0.7 else ("hate", -1))
        b = SentenceBuilder()
        subj = b.add("i", "i", "PRP", "B-NP", -1, "nsubj")
        root = b.add(verb, verb, "VBP", "O", -1, "root")
        b.tokens[subj]["head"] = root
        asp = b.add_np(term.split(), det="the", head=root, deprel="dobj")
        gold_terms = [(self.gold_term(term, [t["surface"] for t in b.tokens if t["lemma"] in term.split()]),
                       strength_for(rng, pol), ())]
        if include_product:
            prep = b.add("of", "of", "IN", "O", asp, "prep")
            b.add_np([self.spec["type"]], det="this", head=prep, deprel="pobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, gold_terms

    def t_conj(self, term_a, term_b):
        rng = self.rng
        adj, pol = self.pick_adj()
        b = SentenceBuilder()
        a_idx = b.add_np(term_a.split(), det="the", head=-1, deprel="nsubj")
        cc = b.add("and", "and", "CC", "O", a_idx, "cc")
        b_idx = b.add_np(term_b.split(), det="the" if rng.random() < 0.5 else None,
                         head=a_idx, deprel="conj")
        b.add("are", "be", "VBP", "O", -1, "cop")
        root = b.add(adj, adj, "JJ", "O", -1, "root")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        gold = [
            (term_a, strength_for(rng, pol), ()),
            (term_b, strength_for(rng, pol), ()),
        ]
        return tokens, clauses, gold

    def t_fragment(self, term):
        rng = self.rng
        adj, pol = self.pick_adj()
        b = SentenceBuilder()
        adj_idx = b.add(adj, adj, "JJ", "B-NP", -2, "amod")
        words = term.split()
        noun_idxs = []
        chunk = "I-NP"
        for k, w in enumerate(words):
            last = k == len(words) - 1
            idx = b.add(w, w, "NN", chunk, -2, "nn" if not last else "root")
            noun_idxs.append(idx)
        head = noun_idxs[-1]
        for idx in noun_idxs[:-1]:
            b.tokens[idx]["head"] = head
        b.tokens[adj_idx]["head"] = head
        b.add("!", "!", ".", "O", head, "punct")
        tokens, clauses = finish(b.tokens, head)
        gold = [(term, strength_for(rng, pol), ())]
        return tokens, clauses, gold

    def t_tail_of_head(self, tail, head_term):
        rng = self.rng
        adj, pol = self.pick_adj()
        b = SentenceBuilder()
        tail_idx = b.add_np(tail.split(), det="the", head=-1, deprel="nsubj")
        prep = b.add(rng.choice(["of", "on"]), "of", "IN", "O", tail_idx, "prep")
        b.add_np(head_term.split(), det="the", head=prep, deprel="pobj")
        b.add("is", "be", "VBZ", "O", -1, "cop")
        root = b.add(adj, adj, "JJ", "O", -1, "root")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        gold = [(tail, strength_for(rng, pol), ())]
        return tokens, clauses, gold

    def t_implicit(self, term):
        rng = self.rng
        templates = [
            ["it", "fits", "right", "in", "my", "pocket", "."],
            ["it", "goes", "everywhere", "with", "me", "."],
            ["i", "can", "carry", "it", "all", "day", "."],
            ["it", "survived", "a", "drop", "down", "the", "stairs", "."],
            ["it", "still", "runs", "like", "new", "."],
            ["it", "starts", "before", "i", "even", "sit", "down", "."],
        ]
        words = rng.choice(templates)
        b = SentenceBuilder()
        root = None
        for i, w in enumerate(words):
            pos = "PRP" if w in ("it", "i", "me") else ("." if w == "." else "RB")
            if i == 1:
                root = b.add(w, w, "VBZ", "O", -1, "root")
            else:
                b.add(w, w, pos, "O", -1, "dep" if w != "." else "punct")
        tokens, clauses = finish(b.tokens, 1)
        gold = [(term, strength_for(rng, 1), ("u",))]
        return tokens, clauses, gold

    def t_verb_opinion(self, term):
        rng = self.rng
        good = rng.random() < 0.7
        b = SentenceBuilder()
        asp = b.add_np(term.split(), det="the", head=-1, deprel="nsubj")
        root = b.add(rng.choice(["works", "performs", "runs"]), "work", "VBZ", "O", -1, "root")
        b.tokens[asp]["head"] = -1
        adv = "well" if good else "poorly"
        b.add(adv, adv, "RB", "O", root, "advmod")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        gold = [(term, strength_for(rng, 1 if good else -1), ())]
        return tokens, clauses, gold

    def t_compare(self, with_gold=True):
        rng = self.rng
        rival = rng.choice(RIVALS[self.pid])
        b = SentenceBuilder()
        subj = b.add("it", "it", "PRP", "B-NP", -1, "nsubj")
        b.add("is", "be", "VBZ", "O", -1, "cop")
        adv = b.add("much", "much", "RB", "O", -1, "advmod")
        root = b.add("better", "better", "JJR", "O", -1, "root")
        prep = b.add("than", "than", "IN", "O", root, "prep")
        det = b.add("the", "the", "DT", "B-NP", -2, "det")
        rv = b.add(rival, rival, "NNP", "I-NP", -2, "nn")
        ty = b.add(self.spec["type"], self.spec["type"], "NN", "I-NP", prep, "pobj")
        b.tokens[det]["head"] = ty
        b.tokens[rv]["head"] = ty
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        gold = [(self.spec["type"], strength_for(rng, 1), ("cc",))] if with_gold else []
        return tokens, clauses, gold

    def t_broke(self, term):
        """Failure report with no opinion adjective; annotated gold anyway."""
        rng = self.rng
        b = SentenceBuilder()
        asp = b.add_np(term.split(), det="the", head=-1, deprel="nsubj")
        root = b.add(rng.choice(["broke", "died", "failed", "jammed", "stopped"]),
                     "break", "VBD", "O", -1, "root")
        b.tokens[asp]["head"] = root
        prep = b.add("after", "after", "IN", "O", root, "prep")
        b.add_np([rng.choice(["week", "month", "day"])], det="a", head=prep, deprel="pobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        gold = [(term, strength_for(rng, -1), ())]
        return tokens, clauses, gold

    def t_compound(self, term_a, term_b):
        rng = self.rng
        adj_a, pol_a = self.pick_adj(1)
        adj_b, pol_b = self.pick_adj(-1)
        b = SentenceBuilder()
        a_idx = b.add_np(term_a.split(), det="the", head=-1, deprel="nsubj")
        b.add("is", "be", "VBZ", "O", -1, "cop")
        root = b.add(adj_a, adj_a, "JJ", "O", -1, "root")
        b.tokens[a_idx]["head"] = root
        fix_cop = len(b.tokens) - 2
        b.tokens[fix_cop]["head"] = root
        comma = b.add(",", ",", ",", "O", root, "punct")
        cc = b.add("but", "but", "CC", "O", root, "cc")
        clause2 = len(b.tokens)
        b_idx = b.add_np(term_b.split(), det="the", head=-2, deprel="nsubj")
        cop2 = b.add("is", "be", "VBZ", "O", -2, "cop")
        adj2 = b.add(adj_b, adj_b, "JJ", "O", root, "conj")
        b.tokens[b_idx]["head"] = adj2
        b.tokens[cop2]["head"] = adj2
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root, clauses=[(0, comma), (clause2, len(b.tokens) - 1)])
        gold = [
            (term_a, strength_for(rng, pol_a), ()),
            (term_b, strength_for(rng, pol_b), ()),
        ]
        return tokens, clauses, gold

    # ----- neutral templates -----

    def chatter_adj(self, p=0.35):
        """Attributive adjective for a non-aspect noun phrase."""
        if self.rng.random() >= p:
            return None
        adj, _ = self.pick_adj()
        return adj

    def n_purchase(self):
        rng = self.rng
        verb, lemma = rng.choice(VERBS_PAST)
        b = SentenceBuilder()
        subj = b.add("i", "i", "PRP", "B-NP", -1, "nsubj")
        root = b.add(verb, lemma, "VBD", "O", -1, "root")
        b.tokens[subj]["head"] = root
        b.add_np([self.spec["type"]], det="this", head=root, deprel="dobj")
        prep = b.add("at", "at", "IN", "O", root, "prep")
        b.add_np([rng.choice(STORES)], det="the", adj=self.chatter_adj(), head=prep, deprel="pobj")
        prep2 = b.add("last", "last", "JJ", "O", -2, "amod")
        tm = b.add(rng.choice(TIMES), "time", "NN", "B-NP", root, "dep")
        b.tokens[prep2]["head"] = tm
        b.tokens[tm]["lemma"] = b.tokens[tm]["surface"]
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_person(self):
        rng = self.rng
        b = SentenceBuilder()
        who = b.add_np([rng.choice(PERSONS)], det="my", head=-1, deprel="nsubj")
        root = b.add(rng.choice(["uses", "likes", "borrowed", "keeps"]), "use", "VBZ", "O", -1, "root")
        b.tokens[who]["head"] = root
        b.add("it", "it", "PRP", "B-NP", root, "dobj")
        if rng.random() < 0.5:
            prep = b.add("for", "for", "IN", "O", root, "prep")
            b.add_np(self.pick_chatter().split(), det="the" if rng.random() < 0.4 else None,
                     adj=self.chatter_adj(), head=prep, deprel="pobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_story(self):
        rng = self.rng
        nouns = [self.pick_chatter(), self.pick_chatter()]
        roll = rng.random()
        if roll < 0.3:
            nouns[1] = self.pick_rare()
        elif roll < 0.6:
            nouns[1] = self.pick_recurring_rare()
        b = SentenceBuilder()
        n1 = b.add_np(nouns[0].split(), det="the", adj=self.chatter_adj(0.3), head=-1, deprel="nsubj")
        root = b.add(rng.choice(["took", "needed", "involved", "included"]), "take", "VBD", "O", -1, "root")
        b.tokens[n1]["head"] = root
        b.add_np(nouns[1].split(), det=rng.choice(["a", "the", None]),
                 adj=self.chatter_adj(0.3), head=root, deprel="dobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_trip(self):
        rng = self.rng
        b = SentenceBuilder()
        subj = b.add("i", "i", "PRP", "B-NP", -1, "nsubj")
        root = b.add("took", "take", "VBD", "O", -1, "root")
        b.tokens[subj]["head"] = root
        b.add("it", "it", "PRP", "B-NP", root, "dobj")
        prep = b.add("on", "on", "IN", "O", root, "prep")
        b.add_np([rng.choice(["trip", "vacation", "flight", "drive"])], det="my",
                 adj=self.chatter_adj(0.4), head=prep, deprel="pobj")
        if rng.random() < 0.5:
            prep2 = b.add("with", "with", "IN", "O", root, "prep")
            b.add_np([rng.choice(PERSONS)], det="my", head=prep2, deprel="pobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_opinion_chatter(self):
        """Opinion about something that is not a product aspect; no gold."""
        rng = self.rng
        adj, _ = self.pick_adj()
        roll = rng.random()
        if roll < 0.45:
            noun = self.pick_recurring_rare()
        elif roll < 0.75:
            # flat draw reaches far more distinct nouns than the Zipf draw
            noun = rng.choice(CHATTER_NOUNS).replace("_", " ")
        else:
            noun = self.pick_chatter()
        b = SentenceBuilder()
        asp = b.add_np(noun.split(), det=rng.choice(["the", "the", "my", "that"]),
                       head=-1, deprel="nsubj")
        b.add("was" if rng.random() < 0.6 else "is", "be", "VBZ", "O", -1, "cop")
        root = b.add(adj, adj, "JJ", "O", -1, "root")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_good_deal(self):
        rng = self.rng
        adj, _ = self.pick_adj(1)
        noun = rng.choice(["deal", "gift", "buy", "bargain", "surprise", "choice", "purchase"])
        b = SentenceBuilder()
        subj = b.add("it", "it", "PRP", "B-NP", -1, "nsubj")
        root = b.add("was", "be", "VBD", "O", -1, "root")
        b.tokens[subj]["head"] = root
        b.add_np([noun], det="a", adj=adj, head=root, deprel="dobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_person_happy(self):
        rng = self.rng
        adj, _ = self.pick_adj()
        b = SentenceBuilder()
        who = b.add_np([rng.choice(PERSONS)], det="my", head=-1, deprel="nsubj")
        b.add("is", "be", "VBZ", "O", -1, "cop")
        root = b.add(adj, adj, "JJ", "O", -1, "root")
        prep = b.add("with", "with", "IN", "O", root, "prep")
        b.add("it", "it", "PRP", "B-NP", prep, "pobj")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_rival(self):
        """Another product mentioned outside any comparison pattern, so the
        dealer pruning has nothing to anchor on; no gold."""
        rng = self.rng
        adj, _ = self.pick_adj()
        rival = rng.choice(RIVALS[self.pid])
        b = SentenceBuilder()
        if rng.random() < 0.5:
            r_idx = b.add(rival, rival, "NNP", "B-NP", -2, "nn")
            head = b.add(self.spec["type"], self.spec["type"], "NN", "I-NP", -1, "nsubj")
            b.tokens[r_idx]["head"] = head
            det = None
        else:
            head = b.add_np([rival], det="my", head=-1, deprel="nsubj")
            b.tokens[head]["pos"] = "NNP"
        b.add("was", "be", "VBD", "O", -1, "cop")
        root = b.add(adj, adj, "JJ", "O", -1, "root")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    def n_conj_chatter(self):
        """Two conjoined non-aspect nouns in an opinion frame; no gold."""
        rng = self.rng
        adj, _ = self.pick_adj()
        noun_a = self.pick_chatter()
        noun_b = self.pick_recurring_rare() if rng.random() < 0.5 else self.pick_chatter()
        b = SentenceBuilder()
        a_idx = b.add_np(noun_a.split(), det="the", head=-1, deprel="nsubj")
        b.add("and", "and", "CC", "O", a_idx, "cc")
        b.add_np(noun_b.split(), det="the" if rng.random() < 0.5 else None,
                 head=a_idx, deprel="conj")
        b.add("were", "be", "VBD", "O", -1, "cop")
        root = b.add(adj, adj, "JJ", "O", -1, "root")
        b.add(".", ".", ".", "O", root, "punct")
        tokens, clauses = finish(b.tokens, root)
        return tokens, clauses, []

    # ----- assembly -----

    def opinion_sentence(self):
        rng = self.rng
        r = rng.random()
        if r < 0.09:
            return self.t_copular(self.spec["type"], adverb=rng.random() < 0.3)
        if r < 0.27:
            return self.t_copular(self.pick_head_aspect(), adverb=rng.random() < 0.3)
        if r < 0.38:
            return self.t_has(self.pick_head_aspect())
        if r < 0.46:
            return self.t_love(
                self.pick_tail_aspect() if rng.random() < 0.35 else self.pick_head_aspect(),
                include_product=rng.random() < 0.6,
            )
        if r < 0.50:
            return self.t_conj(self.pick_head_aspect(), self.pick_head_aspect())
        if r < 0.56:
            return self.t_fragment(self.pick_tail_aspect() if rng.random() < 0.6 else self.pick_head_aspect())
        if r < 0.64:
            return self.t_tail_of_head(self.pick_tail_aspect(), self.pick_head_aspect())
        if r < 0.67:
            return self.t_copular(self.pick_tail_aspect())
        if r < 0.75:
            return self.t_implicit(rng.choice(self.spec["implicit"]))
        if r < 0.87:
            return self.t_verb_opinion(
                self.pick_tail_aspect() if rng.random() < 0.65 else self.pick_head_aspect()
            )
        if r < 0.94:
            return self.t_broke(
                self.pick_tail_aspect() if rng.random() < 0.7 else self.pick_head_aspect()
            )
        if r < 0.98:
            return self.t_compare(with_gold=rng.random() < 0.5)
        return self.t_compound(self.pick_head_aspect(), self.pick_head_aspect())

    def neutral_sentence(self):
        rng = self.rng
        r = rng.random()
        if r < 0.10:
            return self.n_purchase()
        if r < 0.19:
            return self.n_person()
        if r < 0.34:
            return self.n_story()
        if r < 0.41:
            return self.n_trip()
        if r < 0.78:
            return self.n_opinion_chatter()
        if r < 0.84:
            return self.n_conj_chatter()
        if r < 0.89:
            return self.n_rival()
        if r < 0.95:
            return self.n_good_deal()
        return self.n_person_happy()

    def review_title(self):
        rng = self.rng
        adj, _ = self.pick_adj()
        return "%s %s" % (adj, self.spec["type"])

    def generate(self, n_reviews):
        rng = self.rng
        reviews = []
        for _ in range(n_reviews):
            n_sents = rng.randint(3, 9)
            sents = []
            for _ in range(n_sents):
                if rng.random() < 0.52:
                    sents.append(self.opinion_sentence())
                else:
                    sents.append(self.neutral_sentence())
            reviews.append((self.review_title(), sents))
        return reviews


def detok(tokens):
    return " ".join(t["surface"] for t in tokens)


def render_gold_prefix(gold):
    parts = []
    for term, strength, flags in gold:
        s = "%s[%+d]" % (term, strength)
        for fl in flags:
            s += "[%s]" % fl
        parts.append(s)
    return ",".join(parts)


def write_product(pid, spec, seed):
    rng = random.Random(seed)
    gen = CorpusGenerator(pid, spec, rng)
    reviews = gen.generate(N_REVIEWS[pid])

    RAW_DIR.mkdir(parents=True, exist_ok=True)
    ANN_DIR.mkdir(parents=True, exist_ok=True)

    raw_lines = []
    ann_lines = []
    sent_no = 0
    for doc_no, (title, sents) in enumerate(reviews, start=1):
        raw_lines.append("[t]%s" % title)
        for tokens, clauses, gold in sents:
            text = detok(tokens)
            raw_lines.append("%s##%s" % (render_gold_prefix(gold), text))
            obj = {
                "id": "%s_%04d" % (pid, sent_no),
                "doc": "d%03d" % doc_no,
                "tokens": [
                    {
                        "i": i,
                        "surface": t["surface"],
                        "lemma": t["lemma"],
                        "pos": t["pos"],
                        "chunk": t["chunk"],
                        "head": -1 if t["head"] is None else t["head"],
                        "deprel": t["deprel"],
                    }
                    for i, t in enumerate(tokens)
                ],
                "clauses": [list(c) for c in clauses],
                "gold": [
                    {"term": term, "strength": strength, "flags": sorted(flags)}
                    for term, strength, flags in gold
                ],
            }
            ann_lines.append(json.dumps(obj, ensure_ascii=False))
            sent_no += 1

    (RAW_DIR / ("%s.txt" % pid)).write_text("\n".join(raw_lines) + "\n", encoding="utf-8")
    (ANN_DIR / ("%s.jsonl" % pid)).write_text("\n".join(ann_lines) + "\n", encoding="utf-8")
    return sent_no


def build_df_table():
    """Document frequencies at review granularity over all five corpora,
    for 1..3-grams of lowercase surface tokens."""
    doc_terms = []
    for pid in PRODUCTS:
        path = ANN_DIR / ("%s.jsonl" % pid)
        docs = {}
        for line in path.read_text(encoding="utf-8").splitlines():
            obj = json.loads(line)
            words = [t["surface"].lower() for t in obj["tokens"]]
            grams = set()
            for n in (1, 2, 3):
                for i in range(len(words) - n + 1):
                    gram = " ".join(words[i:i + n])
                    if any(ch.isalpha() for ch in gram):
                        grams.add(gram)
            docs.setdefault(obj["doc"], set()).update(grams)
        doc_terms.extend(docs.values())

    df = Counter()
    for grams in doc_terms:
        df.update(grams)
    total = len(doc_terms)
    keep = {term: n for term, n in df.items() if n >= 2 or " " not in term}
    lines = ["#total_docs=%d" % total]
    for term in sorted(keep):
        lines.append("%s\t%d" % (term, keep[term]))
    DF_PATH.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return total, len(keep)


def main():
    total = 0
    for i, (pid, spec) in enumerate(PRODUCTS.items()):
        n = write_product(pid, spec, seed=1000 + i * 7)
        print("%s: %d sentences" % (pid, n))
        total += n
    docs, terms = build_df_table()
    print("df table: %d docs, %d terms" % (docs, terms))
    print("total sentences: %d" % total)


if __name__ == "__main__":
    main()
