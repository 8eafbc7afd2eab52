"""Word lists backing the rule pipeline tagger and lemmatizer."""

DETERMINERS = {"the", "a", "an", "this", "that", "these", "those", "no", "every", "each",
               "some", "any", "another", "all", "both"}
POSSESSIVES = {"my", "your", "his", "her", "its", "our", "their"}
PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "them", "us",
            "myself", "itself", "everything", "something", "anything", "nothing",
            "someone", "anyone", "everyone"}
PREPOSITIONS = {"of", "in", "on", "at", "by", "for", "with", "about", "against",
                "between", "into", "through", "during", "before", "after", "above",
                "below", "to", "from", "up", "down", "out", "off", "over", "under",
                "than", "as", "like", "without", "within", "around", "near", "since",
                "until", "because", "if", "while", "when", "although", "though"}
CONJUNCTIONS = {"and", "but", "or", "nor", "yet", "plus"}
MODALS = {"can", "could", "will", "would", "shall", "should", "may", "might", "must"}
BE_FORMS = {"is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD", "am": "VBP",
            "be": "VB", "been": "VBN", "being": "VBG"}
HAVE_FORMS = {"has": "VBZ", "have": "VBP", "had": "VBD", "having": "VBG"}
DO_FORMS = {"does": "VBZ", "do": "VBP", "did": "VBD", "doing": "VBG", "done": "VBN"}

ADVERBS = {"really", "very", "quite", "too", "so", "well", "poorly", "badly", "also",
           "just", "still", "even", "not", "n't", "never", "always", "often", "here",
           "there", "now", "then", "again", "almost", "already", "everywhere", "right",
           "surprisingly", "only", "much", "pretty", "fairly"}

# base-form verbs common in reviews (conjugations are derived)
VERBS = {
    "be", "have", "do", "buy", "purchase", "order", "get", "grab", "pick", "use",
    "like", "love", "hate", "keep", "take", "need", "involve", "include", "work",
    "perform", "run", "break", "die", "fail", "jam", "stop", "fit", "go", "carry",
    "survive", "start", "sit", "return", "ship", "arrive", "send", "recommend",
    "borrow", "play", "record", "charge", "hold", "turn", "press", "push", "read",
    "watch", "listen", "sound", "look", "feel", "seem", "come", "make", "find",
    "give", "want", "try", "call", "say", "know", "think", "see", "show", "leave",
    "rock",
}

IRREGULAR_PAST = {
    "bought": "buy", "got": "get", "took": "take", "broke": "break", "went": "go",
    "came": "come", "made": "make", "found": "find", "gave": "give", "held": "hold",
    "left": "leave", "said": "say", "knew": "know", "thought": "think", "saw": "see",
    "felt": "feel", "kept": "keep", "ran": "run", "sat": "sit", "read": "read",
}

# adjectives seen in product reviews; shared across products
ADJECTIVES = {
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
    "helpful", "friendly", "capable", "prompt", "bad", "poor", "terrible",
    "awful", "horrible", "disappointing", "lousy", "useless", "annoying",
    "frustrating", "flimsy", "blurry", "noisy", "fuzzy", "dim", "slow",
    "sluggish", "difficult", "complicated", "confusing", "awkward", "fragile",
    "cheap", "unreliable", "inaccurate", "rough", "loud", "bulky", "heavy",
    "clunky", "ugly", "bland", "tacky", "weak", "feeble", "thin", "shallow",
    "harsh", "artificial", "expensive", "overpriced", "worthless", "cumbersome",
    "inconvenient", "limited", "rigid", "laggy", "choppy", "shaky", "erratic",
    "sloppy", "messy", "cluttered", "cramped", "tiny", "mediocre", "unpleasant",
    "tedious", "boring", "dull", "dreadful", "ordinary", "dismal", "atrocious",
    "abysmal", "defective", "faulty", "broken", "brittle", "shoddy", "crude",
    "coarse", "unfinished", "dreary", "drab", "nasty", "unsightly",
    "unattractive", "massive", "oversized", "wasteful", "costly", "pricey",
    "unhelpful", "unresponsive", "late", "new", "old", "big", "small", "long",
    "short", "high", "low", "little", "other", "same", "digital", "optical",
    "manual", "automatic", "whole", "last", "first", "next", "crowded",
    "happy", "glad", "sad",
}

COMPARATIVES = {"better": "good", "worse": "bad", "bigger": "big", "smaller": "small",
                "nicer": "nice", "cheaper": "cheap", "faster": "fast", "slower": "slow",
                "easier": "easy", "lighter": "light", "heavier": "heavy"}
SUPERLATIVES = {"best": "good", "worst": "bad", "biggest": "big", "smallest": "small",
                "nicest": "nice", "cheapest": "cheap", "fastest": "fast",
                "easiest": "easy", "lightest": "light", "greatest": "great"}

# words that are nouns even though a verb reading exists
NOUN_PREFERENCE = {
    "sound", "work", "play", "record", "charge", "hold", "turn", "press", "look",
    "feel", "call", "show", "use", "picture", "zoom", "flash", "display", "remote",
    "case", "cover", "button", "menu", "price", "screen", "player", "camera",
    "phone", "battery", "lens", "size", "design", "control", "setup", "playback",
}

BRAND_NAMES = {
    "sony", "toshiba", "panasonic", "philips", "ipod", "rio", "samsung",
    "sandisk", "canon", "olympus", "fuji", "kodak", "motorola", "ericsson",
    "siemens", "minolta", "nikon", "nokia", "apex", "creative", "apple",
    "amazon", "ebay",
}
