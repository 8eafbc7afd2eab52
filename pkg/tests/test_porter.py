from pathlib import Path

from aspectmine.porter import porter_stem

PAIRS_FILE = Path(__file__).parent / "data" / "porter_reference_pairs.txt"


def load_pairs():
    pairs = []
    for line in PAIRS_FILE.read_text(encoding="utf-8").splitlines():
        if line.strip():
            word, stem = line.split("\t")
            pairs.append((word, stem))
    return pairs


def test_reference_pairs_exactly():
    pairs = load_pairs()
    assert len(pairs) > 250
    for word, expected in pairs:
        assert porter_stem(word) == expected, "%s -> %s != %s" % (word, porter_stem(word), expected)


def test_plural_noun():
    assert porter_stem("players") == "player"


def test_already_stemmed():
    assert porter_stem("player") == "player"


def test_empty_string():
    assert porter_stem("") == ""


def test_short_words_pass_through():
    assert porter_stem("as") == "as"
    assert porter_stem("is") == "is"
    assert porter_stem("a") == "a"


def test_uppercase_is_lowered():
    assert porter_stem("Players") == "player"


def test_classic_forms():
    assert porter_stem("caresses") == "caress"
    assert porter_stem("ponies") == "poni"
    assert porter_stem("agreed") == "agre"
    assert porter_stem("feed") == "feed"
    assert porter_stem("matting") == "mat"
    assert porter_stem("mating") == "mate"
    assert porter_stem("happy") == "happi"
    assert porter_stem("sky") == "sky"
    assert porter_stem("relational") == "relat"
    assert porter_stem("vietnamization") == "vietnam"
    assert porter_stem("replacement") == "replac"
    assert porter_stem("controll") == "control"
