"""Dev tool: quick per-algorithm band check on the fixture corpora.

Runs defaults (not the full sweep) plus a handful of config variants per
algorithm to approximate where a sweep's best would land.
"""

import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from aspectmine.corpus import load_annotated
from aspectmine.data import default_df_path
from aspectmine.dba import DbaConfig, run_dba
from aspectmine.evaluation import EvalConfig, evaluate, f1_score
from aspectmine.fba import FbaConfig, run_fba
from aspectmine.harness import resolve_seeds
from aspectmine.itemsets import MiningParams
from aspectmine.tba import GroupingConfig, TbaConfig, fit_tba, load_df_table, threshold_grid

NAMES = ["apex_dvd_player", "creative_mp3_player", "nikon_camera", "nokia_phone", "canon_camera"]
BANDS = {"fba": (0.325, 0.381), "dba": (0.22, 0.33), "tba": (0.426, 0.368)}


def band(algo):
    p, r = BANDS[algo]
    center = f1_score(p, r)
    return center - 0.10, center, center + 0.10


def average(rows):
    p = sum(r[0] for r in rows) / len(rows)
    r = sum(x[1] for x in rows) / len(rows)
    return p, r, f1_score(p, r)


def main():
    corpora = [load_annotated(ROOT / "data" / "corpora" / "annotated" / ("%s.jsonl" % n)) for n in NAMES]
    df = load_df_table(default_df_path())
    ev = EvalConfig()

    fba_variants = {
        "default": FbaConfig(),
        "minsup.005": FbaConfig(mining=MiningParams(min_sup=0.005)),
        "minsup.02": FbaConfig(mining=MiningParams(min_sup=0.02)),
        "lemma": FbaConfig(stem_algorithm="lemma"),
        "psup2": FbaConfig(min_psupport=2),
        "win2gap2": FbaConfig(adj_window=2, compact_max_gap=2),
    }
    print("== FBA  band lo/center/hi: %.3f %.3f %.3f" % band("fba"))
    best = (0, None)
    for tag, cfg in sorted(fba_variants.items()):
        rows = [(lambda rep: (rep.precision, rep.recall))(evaluate(run_fba(c, cfg), c, ev)) for c in corpora]
        p, r, f1 = average(rows)
        best = max(best, (f1, tag))
        print("  %-12s P=%.3f R=%.3f F1=%.3f" % (tag, p, r, f1))
    print("  FBA best variant: %s F1=%.3f" % (best[1], best[0]))

    dba_variants = {
        "default": DbaConfig(),
        "surface": DbaConfig(matching="surface"),
        "minfreq3": DbaConfig(min_freq=3),
        "q1k0": DbaConfig(q=1, k=0),
        "subset0": DbaConfig(seeds=resolve_seeds("subset0")),
        "subset1": DbaConfig(seeds=resolve_seeds("subset1")),
    }
    print("== DBA  band lo/center/hi: %.3f %.3f %.3f" % band("dba"))
    best = (0, None)
    for tag, cfg in sorted(dba_variants.items()):
        rows = [(lambda rep: (rep.precision, rep.recall))(evaluate(run_dba(c, cfg), c, ev)) for c in corpora]
        p, r, f1 = average(rows)
        best = max(best, (f1, tag))
        print("  %-12s P=%.3f R=%.3f F1=%.3f" % (tag, p, r, f1))
    print("  DBA best variant: %s F1=%.3f" % (best[1], best[0]))

    tba_variants = {
        "np": TbaConfig(grouping=GroupingConfig(method="np_subtree")),
        "pattern60": TbaConfig(grouping=GroupingConfig(method="cvalue_pattern", limit=60)),
        "ngram60": TbaConfig(grouping=GroupingConfig(method="cvalue_ngram", limit=60)),
        "ngram20": TbaConfig(grouping=GroupingConfig(method="cvalue_ngram", limit=20)),
        "np_porter": TbaConfig(grouping=GroupingConfig(method="np_subtree"), stemming="porter"),
    }
    print("== TBA  band lo/center/hi: %.3f %.3f %.3f" % band("tba"))
    best = (0, None)
    t0 = time.time()
    for tag, cfg in sorted(tba_variants.items()):
        rows = []
        for c in corpora:
            model = fit_tba(c, cfg, df=df)
            per_best = (0.0, 0.0, -1.0, None)
            for t in [None] + threshold_grid(model.max_confidence()):
                rep = evaluate(model.extract(t), c, ev)
                if rep.f1 > per_best[2]:
                    per_best = (rep.precision, rep.recall, rep.f1, t)
            rows.append(per_best)
        p, r, f1 = average(rows)
        best = max(best, (f1, tag))
        print("  %-12s P=%.3f R=%.3f F1=%.3f  best t per corpus: %s"
              % (tag, p, r, f1, [row[3] for row in rows]))
    print("  TBA best variant: %s F1=%.3f  [%.0fs]" % (best[1], best[0], time.time() - t0))


if __name__ == "__main__":
    main()
