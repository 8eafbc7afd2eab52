"""Dev tool: freeze a Porter reference pair list.

Runs an independently maintained port of the author's ANSI C release (from
examples/, not shipped) over a branch-covering vocabulary and writes
word<TAB>stem pairs to tests/data/porter_reference_pairs.txt.  The test suite
then pins src/aspectmine/porter.py against the frozen file.
"""

import importlib.util
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
ORACLE = (
    ROOT
    / "examples"
    / "porter_stemmer_reference_implementation_test_voc"
    / "r006__piskvorky__gensim__porter.py"
)

VOCAB = """
caresses ponies ties caress cats feed agreed disabled matting mating meeting
milling messing meetings plastered bled motoring sing conflated troubled
troubles sized hopping tanned falling hissing fizzed failing filing happy sky
relational conditional rational valency hesitancy digitizer conformably
radically differently vilely analogously vietnamization predication operator
feudalism decisiveness hopefulness callousness formality sensitivity
sensibility triplicate formative formalize electricity electrical hopeful
goodness revival allowance inference airliner gyroscopic adjustable defensible
irritant replacement adjustment dependent adoption homologou communism activate
angularity homologous effective bowdlerize probate rate cease controll roll
generalizations generalization generalize general oscillators oscillator
player players played playing play plays plaster supply supplies supplied
knack knacks siezing skating skies dying lying tying news innings inning
outing canning howe proceed exceed succeed agreement arguments argument
happiness happier relieving relieved denied denying sponsored batteries
battery cameras camera pictures picture quality qualities lenses lens flashes
flash zooms zoom buttons button screens screen menus menu prices price
software manuals manual photos photo shutter images image videos video
recordings recording settings setting features feature designs design
interfaces interface speakers speaker phones phone sounds sound signals signal
services service deliveries delivery shipping shipped warranty warranties
accessories accessory chargers charger adapters adapter connections connection
resolutions resolution exposure exposures focusing focused autofocus
durability reliability usability portability stability clarity brightness
sharpness loudness smoothness quickness lightness heaviness easiness
simplicity complexity flexibility versatility responsiveness sluggishness
excellent amazing wonderful terrible horrible awful fantastic impressive
annoying frustrating disappointing outstanding remarkable exceptional
comfortable awkward sturdy fragile durable reliable unreliable accurate
enjoyable tedious exciting boring satisfying delightful dreadful brilliant
marvelous flawless faulty dependable robust brittle premium shoddy classy
refined polished vibrant dreary colorful lovely charming attractive portable
lightweight efficient wasteful economical costly valuable helpful friendly
capable prompt ability abilities able abler ablest realization realizations
organization organizer organized organizes organ organs sensational sensation
weakness weaknesses strengthen strengthens strengthened considering considered
consideration consist consisted consistency consistent consisting consists
derivate derivation derive derived derives deriving
"""


def load_oracle():
    spec = importlib.util.spec_from_file_location("porter_oracle", ORACLE)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module.PorterStemmer()


def main():
    oracle = load_oracle()
    words = sorted(set(VOCAB.split()))
    out_path = ROOT / "tests" / "data" / "porter_reference_pairs.txt"
    out_path.parent.mkdir(parents=True, exist_ok=True)

    sys.path.insert(0, str(ROOT / "src"))
    from aspectmine.porter import porter_stem

    mismatches = []
    lines = []
    for word in words:
        expected = oracle.stem(word)
        lines.append("%s\t%s" % (word, expected))
        mine = porter_stem(word)
        if mine != expected:
            mismatches.append((word, expected, mine))

    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print("wrote %d pairs to %s" % (len(lines), out_path))
    if mismatches:
        print("MISMATCHES (%d):" % len(mismatches))
        for word, expected, mine in mismatches:
            print("  %-20s oracle=%-15s ours=%s" % (word, expected, mine))
        return 1
    print("implementation agrees with the oracle on all pairs")
    return 0


if __name__ == "__main__":
    sys.exit(main())
