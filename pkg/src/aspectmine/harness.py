"""Configuration files, parameter-grid sweeps and report generation.

Every constant of the three extractors is settable from one YAML file; the
shipped default grids drive the replication sweeps.  Result files are fully
deterministic: wall-clock timings go to a separate side file so re-running a
sweep reproduces results.json/results.csv byte for byte.
"""

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from . import data as _data
from .corpus import load_annotated
from .dba import DbaConfig, load_seed_lexicon, run_dba
from .errors import ConfigError, DataError
from .evaluation import EvalConfig, evaluate, f1_score
from .fba import FbaConfig, run_fba
from .itemsets import MiningParams
from .tba import (
    GroupingConfig,
    TbaConfig,
    fit_tba,
    load_df_table,
    threshold_grid,
)
from .textnorm import FuzzyParams, load_stopwords

ALGORITHMS = ("fba", "dba", "tba")

DEFAULT_SWEEP_GRIDS = {
    "fba": {
        "min_sup": [0.005, 0.01, 0.02],
        "min_sim": [0.75, 0.85, 1.0],
        "stem_algorithm": ["porter", "lemma"],
        "adj_window": [2, 3, 4],
        "compact_max_gap": [2, 3],
        "min_psupport": [2, 3, 4],
    },
    "dba": {
        "seeds": ["good_bad", "subset0", "subset1"],
        "matching": ["surface", "stem"],
        "q": [1, 2],
        "k": [0, 1],
        "min_freq": [2, 3],
        "dealer_window": [2, 3],
    },
    "tba": {
        "grouping": ["cvalue_ngram", "cvalue_pattern", "np_subtree"],
        "limit": [20, 60, 120],
        "stemming": ["none", "porter"],
    },
}

DEFAULT_T_GRID = "10:10:auto"


def load_config_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError("cannot read config %s: %s" % (path, exc)) from exc
    except yaml.YAMLError as exc:
        raise ConfigError("%s: invalid YAML: %s" % (path, exc)) from exc
    if obj is None:
        return {}
    if not isinstance(obj, dict):
        raise ConfigError("%s: top level must be a mapping" % path)
    return obj


def _take(section, key, default):
    return section.get(key, default)


def _check_keys(section, allowed, where):
    unknown = set(section) - set(allowed)
    if unknown:
        raise ConfigError("unknown %s keys: %s" % (where, ", ".join(sorted(unknown))))


_FBA_KEYS = (
    "min_sup", "max_size", "strict_gt", "min_sim", "stem_algorithm", "adj_window",
    "compact_max_gap", "compact_min_sentences", "min_psupport",
    "compactness", "redundancy", "infrequent", "stopwords",
)


def build_fba_config(section):
    section = dict(section or {})
    _check_keys(section, _FBA_KEYS, "fba")
    stopwords = section.get("stopwords")
    kwargs = {
        "mining": MiningParams(
            min_sup=_take(section, "min_sup", 0.01),
            max_size=_take(section, "max_size", 3),
            strict_gt=_take(section, "strict_gt", False),
        ),
        "fuzzy": FuzzyParams(min_sim=_take(section, "min_sim", 0.8)),
        "stem_algorithm": _take(section, "stem_algorithm", "porter"),
        "adj_window": _take(section, "adj_window", 3),
        "compact_max_gap": _take(section, "compact_max_gap", 3),
        "compact_min_sentences": _take(section, "compact_min_sentences", 2),
        "min_psupport": _take(section, "min_psupport", 3),
        "compactness": _take(section, "compactness", True),
        "redundancy": _take(section, "redundancy", True),
        "infrequent": _take(section, "infrequent", True),
    }
    if stopwords:
        kwargs["stopwords"] = load_stopwords(stopwords)
    return FbaConfig(**kwargs)


_DBA_KEYS = (
    "seeds", "seed_file", "mr_relations", "conj_relation", "dealer_patterns",
    "dealer_window", "q", "k", "min_freq", "matching", "min_sim",
    "merge_opinion_adjectives", "conj_test",
)


def resolve_seeds(value):
    """Seed spec: 'good_bad', 'subsetK' (k-th lexicon subset), a word list,
    or a path via the seed_file key."""
    if value is None or value == "good_bad":
        return (("good", 1), ("bad", -1))
    if isinstance(value, str) and value.startswith("subset"):
        try:
            k = int(value[len("subset"):])
        except ValueError as exc:
            raise ConfigError("bad seed subset spec %r" % value) from exc
        return tuple(sorted(_data.seed_subset(k).items()))
    if isinstance(value, (list, tuple)):
        lex = _data.opinion_lexicon()
        return tuple((str(w).lower(), lex.get(str(w).lower(), 1)) for w in value)
    raise ConfigError("bad seeds spec %r" % (value,))


def build_dba_config(section):
    section = dict(section or {})
    _check_keys(section, _DBA_KEYS, "dba")
    if section.get("seed_file"):
        seeds = load_seed_lexicon(section["seed_file"])
    else:
        seeds = resolve_seeds(section.get("seeds"))
    kwargs = {
        "seeds": seeds,
        "dealer_window": _take(section, "dealer_window", 3),
        "q": _take(section, "q", 2),
        "k": _take(section, "k", 1),
        "min_freq": _take(section, "min_freq", 2),
        "matching": _take(section, "matching", "stem"),
        "fuzzy": FuzzyParams(min_sim=_take(section, "min_sim", 0.8)),
        "merge_opinion_adjectives": _take(section, "merge_opinion_adjectives", False),
        "conj_test": _take(section, "conj_test", "surface"),
    }
    if "mr_relations" in section:
        kwargs["mr_relations"] = frozenset(section["mr_relations"])
    if "conj_relation" in section:
        kwargs["conj_relation"] = section["conj_relation"]
    if "dealer_patterns" in section:
        kwargs["dealer_patterns"] = tuple(section["dealer_patterns"])
    return DbaConfig(**kwargs)


_TBA_KEYS = (
    "grouping", "max_n", "limit", "stemming", "ibm1_iterations", "ibm2_iterations",
    "lambda", "walk_k", "confidence_scale", "df_table", "threshold",
)


def build_tba_config(section):
    section = dict(section or {})
    _check_keys(section, _TBA_KEYS, "tba")
    return TbaConfig(
        grouping=GroupingConfig(
            method=_take(section, "grouping", "cvalue_ngram"),
            max_n=_take(section, "max_n", 4),
            limit=_take(section, "limit", 60),
        ),
        stemming=_take(section, "stemming", "none"),
        ibm1_iterations=_take(section, "ibm1_iterations", 5),
        ibm2_iterations=_take(section, "ibm2_iterations", 5),
        walk_lambda=_take(section, "lambda", 0.3),
        walk_k=_take(section, "walk_k", 100),
        confidence_scale=_take(section, "confidence_scale", "walk_times_freq"),
    )


def resolve_df_table(section):
    """df_table: 'default' for the packaged table, a path, or null to disable."""
    spec = (section or {}).get("df_table", "default")
    if spec in (None, "none", "null", False):
        return None
    if spec == "default":
        return load_df_table(_data.default_df_path())
    return load_df_table(spec)


def build_eval_config(section):
    section = dict(section or {})
    _check_keys(section, ("matching", "min_sim"), "eval")
    return EvalConfig(
        matching=_take(section, "matching", "surface"),
        min_sim=_take(section, "min_sim", 0.8),
    )


def run_algorithm(algorithm, corpus, sections, threshold="from_config"):
    """Run one extractor with the per-algorithm section of a config mapping."""
    if algorithm == "fba":
        return run_fba(corpus, build_fba_config(sections.get("fba")))
    if algorithm == "dba":
        return run_dba(corpus, build_dba_config(sections.get("dba")))
    if algorithm == "tba":
        section = sections.get("tba") or {}
        config = build_tba_config(section)
        df = resolve_df_table(section)
        if threshold == "from_config":
            threshold = section.get("threshold")
        return fit_tba(corpus, config, df=df).extract(threshold)
    raise ConfigError("unknown algorithm %r" % (algorithm,))


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

@dataclass
class SweepSpec:
    algorithm: str
    corpus_paths: list
    grid: dict = field(default_factory=dict)
    base: dict = field(default_factory=dict)  # whole config mapping
    t_grid: str = DEFAULT_T_GRID
    jobs: int = 1

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigError("algorithm must be one of %s" % (ALGORITHMS,))
        if not self.grid:
            raise ConfigError("sweep grid must be nonempty")
        if not self.corpus_paths:
            raise ConfigError("sweep needs at least one corpus")


@dataclass
class SweepResult:
    algorithm: str
    grid: dict
    corpora: list
    rows: list
    best: dict
    timings: list = field(default_factory=list)

    def to_obj(self):
        return {
            "algorithm": self.algorithm,
            "grid": self.grid,
            "corpora": self.corpora,
            "rows": self.rows,
            "best": self.best,
        }


def grid_points(grid):
    """Cartesian product in lexicographic parameter order."""
    names = sorted(grid)
    for values in itertools.product(*(grid[name] for name in names)):
        yield dict(zip(names, values))


def _apply_point(base_section, point):
    section = dict(base_section or {})
    section.update(point)
    return section


def _eval_row(point, corpus, result, eval_config):
    report = evaluate(result, corpus, eval_config)
    return {
        "config": dict(sorted(point.items())),
        "corpus": corpus.name,
        "precision": report.precision,
        "recall": report.recall,
        "f1": report.f1,
        "error": None,
    }


def _run_point(args):
    algorithm, point, base, corpora, t_grid = args
    eval_config = build_eval_config(base.get("eval"))
    rows = []
    started = time.perf_counter()
    for corpus in corpora:
        try:
            if algorithm == "fba":
                config = build_fba_config(_apply_point(base.get("fba"), point))
                rows.append(_eval_row(point, corpus, run_fba(corpus, config), eval_config))
            elif algorithm == "dba":
                config = build_dba_config(_apply_point(base.get("dba"), point))
                rows.append(_eval_row(point, corpus, run_dba(corpus, config), eval_config))
            else:
                section = _apply_point(base.get("tba"), point)
                config = build_tba_config(section)
                df = resolve_df_table(section)
                model = fit_tba(corpus, config, df=df)
                thresholds = [None] + _parse_t_grid(t_grid, model.max_confidence())
                for t in thresholds:
                    t_point = dict(point)
                    t_point["threshold"] = t
                    rows.append(_eval_row(t_point, corpus, model.extract(t), eval_config))
        except Exception as exc:  # recorded, sweep continues
            failed = {
                "config": dict(sorted(point.items())),
                "corpus": corpus.name,
                "precision": None,
                "recall": None,
                "f1": None,
                "error": "%s: %s" % (type(exc).__name__, exc),
            }
            rows.append(failed)
    return rows, time.perf_counter() - started


def _parse_t_grid(spec, max_confidence):
    parts = str(spec).split(":")
    if len(parts) != 3:
        raise ConfigError("t-grid must be start:step:max, got %r" % (spec,))
    start, step = float(parts[0]), float(parts[1])
    t_max = max_confidence if parts[2] == "auto" else float(parts[2])
    return threshold_grid(t_max, start=start, step=step)


_WORKER_STATE = {}


def _init_worker(paths):
    _WORKER_STATE["corpora"] = [load_annotated(p) for p in paths]


def _run_point_worker(args):
    algorithm, point, base, t_grid = args
    return _run_point((algorithm, point, base, _WORKER_STATE["corpora"], t_grid))


def run_sweep(spec):
    """Evaluate every grid point on every corpus; failures become recorded
    rows, never aborts.  Row order is deterministic: grid points in
    lexicographic parameter order, corpora sorted by name."""
    paths = sorted(spec.corpus_paths, key=lambda p: str(p))
    corpora = [load_annotated(p) for p in paths]
    corpora.sort(key=lambda c: c.name)
    points = list(grid_points(spec.grid))

    rows = []
    timings = []
    if spec.jobs > 1:
        tasks = [(spec.algorithm, point, spec.base, spec.t_grid) for point in points]
        with ProcessPoolExecutor(
            max_workers=spec.jobs, initializer=_init_worker, initargs=(paths,)
        ) as pool:
            for point, (point_rows, seconds) in zip(points, pool.map(_run_point_worker, tasks)):
                rows.extend(point_rows)
                timings.append({"config": dict(sorted(point.items())), "seconds": seconds})
    else:
        for point in points:
            point_rows, seconds = _run_point((spec.algorithm, point, spec.base, corpora, spec.t_grid))
            rows.extend(point_rows)
            timings.append({"config": dict(sorted(point.items())), "seconds": seconds})

    best = {}
    for corpus in corpora:
        scored = [r for r in rows if r["corpus"] == corpus.name and r["error"] is None]
        if not scored:
            best[corpus.name] = {"f1": None, "rows": []}
            continue
        top = max(r["f1"] for r in scored)
        ties = [r for r in scored if r["f1"] == top]
        best[corpus.name] = {"f1": top, "rows": ties}
    return SweepResult(
        algorithm=spec.algorithm,
        grid={k: list(v) for k, v in sorted(spec.grid.items())},
        corpora=[c.name for c in corpora],
        rows=rows,
        best=best,
        timings=timings,
    )


def best_average(sweep_result):
    """Average the per-corpus best rows (first tying row per corpus) into
    (precision, recall, f1-of-averages)."""
    ps, rs = [], []
    for name in sweep_result.corpora:
        entry = sweep_result.best.get(name) or {}
        if not entry.get("rows"):
            raise DataError("no successful rows for corpus %r" % name)
        row = entry["rows"][0]
        ps.append(row["precision"])
        rs.append(row["recall"])
    p = sum(ps) / len(ps)
    r = sum(rs) / len(rs)
    return p, r, f1_score(p, r)


def _row_sort_key(row):
    return (json.dumps(row["config"], sort_keys=True), row["corpus"])


def save_sweep(result, out_dir):
    """results.json and results.csv are byte-deterministic; wall-clock
    timings live in the separate timings.csv."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    obj = result.to_obj()
    obj["rows"] = sorted(obj["rows"], key=_row_sort_key)
    (out / "results.json").write_text(
        json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8"
    )

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["config", "corpus", "precision", "recall", "f1", "error"])
    for row in obj["rows"]:
        writer.writerow(
            [
                json.dumps(row["config"], sort_keys=True),
                row["corpus"],
                _fmt(row["precision"]),
                _fmt(row["recall"]),
                _fmt(row["f1"]),
                row["error"] or "",
            ]
        )
    (out / "results.csv").write_text(buf.getvalue(), encoding="utf-8")

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["config", "seconds"])
    for entry in result.timings:
        writer.writerow([json.dumps(entry["config"], sort_keys=True), "%.3f" % entry["seconds"]])
    (out / "timings.csv").write_text(buf.getvalue(), encoding="utf-8")
    return out / "results.json"


def _fmt(value):
    return "" if value is None else "%.6f" % value


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def load_sweep_result(path):
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    return SweepResult(
        algorithm=obj["algorithm"],
        grid=obj["grid"],
        corpora=obj["corpora"],
        rows=obj["rows"],
        best=obj["best"],
    )


def report(result, fmt="table"):
    """Serialize a sweep result; the table mirrors the published comparison
    layout with the checked-in reference values in the Original columns."""
    if fmt == "json":
        return json.dumps(result.to_obj(), indent=2, sort_keys=True, ensure_ascii=False)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["corpus", "original_p", "original_r", "p", "r", "f1"])
        for name, display, orig, row in _table_rows(result):
            writer.writerow([
                name,
                _fmt(orig and orig.get("p")),
                _fmt(orig and orig.get("r")),
                _fmt(row and row["precision"]),
                _fmt(row and row["recall"]),
                _fmt(row and row["f1"]),
            ])
        return buf.getvalue()
    if fmt != "table":
        raise ConfigError("unknown report format %r" % (fmt,))

    lines = []
    header = "%-22s %10s %10s %8s %8s %8s" % ("Corpus", "Orig P", "Orig R", "P", "R", "F1")
    lines.append(header)
    lines.append("-" * len(header))
    for name, display, orig, row in _table_rows(result):
        lines.append(
            "%-22s %10s %10s %8s %8s %8s"
            % (
                display,
                _cell(orig and orig.get("p")),
                _cell(orig and orig.get("r")),
                _cell(row and row["precision"]),
                _cell(row and row["recall"]),
                _cell(row and row["f1"]),
            )
        )
    return "\n".join(lines) + "\n"


def _cell(value):
    return "-" if value is None else "%.3f" % value


def _table_rows(result):
    reference = _data.reference_results()
    originals = reference.get(result.algorithm, {}).get("original", {})
    display_names = reference.get("corpora", {})
    rows = []
    ps, rs = [], []
    for name in result.corpora:
        entry = result.best.get(name) or {}
        row = entry["rows"][0] if entry.get("rows") else None
        if row:
            ps.append(row["precision"])
            rs.append(row["recall"])
        rows.append((name, display_names.get(name, name), originals.get(name), row))
    if ps:
        p = sum(ps) / len(ps)
        r = sum(rs) / len(rs)
        avg_row = {"precision": p, "recall": r, "f1": f1_score(p, r)}
    else:
        avg_row = None
    rows.append(("average", "Average", originals.get("average"), avg_row))
    return rows
