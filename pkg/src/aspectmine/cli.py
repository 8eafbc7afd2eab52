"""Command-line front end.

Exit codes: 0 success, 2 configuration/usage error, 3 data error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from . import harness
from .corpus import load_annotated, parse_crd
from .errors import AspectMineError, ConfigError, DataError
from .evaluation import evaluate
from .results import result_from_obj

log = logging.getLogger("aspectmine")


def _add_common(parser):
    parser.add_argument("--config", help="YAML config file")
    parser.add_argument("--out", help="output file or directory")
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(prog="aspectmine", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse-crd", help="parse a raw review file with gold prefixes")
    p.add_argument("--in", dest="infile", required=True)
    _add_common(p)

    p = sub.add_parser("validate", help="validate an annotated interchange file")
    p.add_argument("--corpus", required=True, action="append")
    _add_common(p)

    p = sub.add_parser("run", help="run one extractor on one corpus")
    p.add_argument("algorithm", choices=harness.ALGORITHMS)
    p.add_argument("--corpus", required=True)
    p.add_argument("--threshold", type=float, default=None)
    p.add_argument("--no-eval", action="store_true", help="skip evaluation against gold")
    _add_common(p)

    p = sub.add_parser("sweep", help="run a parameter-grid sweep")
    p.add_argument("algorithm", choices=harness.ALGORITHMS)
    p.add_argument("--corpus", required=True, action="append")
    p.add_argument("--t-grid", default=None, help="start:step:max (max may be 'auto')")
    p.add_argument("--jobs", type=int, default=1)
    _add_common(p)

    p = sub.add_parser("evaluate", help="evaluate a stored extraction result")
    p.add_argument("--result", required=True)
    p.add_argument("--corpus", required=True)
    _add_common(p)

    p = sub.add_parser("report", help="render a sweep result")
    p.add_argument("--results", required=True, help="path to results.json")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    _add_common(p)
    return parser


def _load_config(args):
    if getattr(args, "config", None):
        return harness.load_config_file(args.config)
    return {}


def _emit(text, args):
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_parse_crd(args):
    warnings = []
    with open(args.infile, encoding="utf-8") as fh:
        records = parse_crd(fh, collect_warnings=warnings)
    for w in warnings:
        log.warning("%s", w)
    lines = []
    for rec in records:
        lines.append(json.dumps({
            "doc": rec.doc,
            "text": rec.text,
            "gold": [
                {"term": a.term, "strength": a.strength, "flags": sorted(a.flags)}
                for a in rec.gold.aspects
            ],
        }, ensure_ascii=False))
    _emit("\n".join(lines) + ("\n" if lines else ""), args)
    return 0


def cmd_validate(args):
    for path in args.corpus:
        corpus = load_annotated(path)
        tokens = sum(len(s) for s in corpus)
        print("%s: OK (%d sentences, %d tokens)" % (path, len(corpus), tokens))
    return 0


def cmd_run(args):
    sections = _load_config(args)
    corpus = load_annotated(args.corpus)
    threshold = args.threshold if args.threshold is not None else "from_config"
    result = harness.run_algorithm(args.algorithm, corpus, sections, threshold=threshold)
    payload = result.to_obj()
    if corpus.has_gold() and not args.no_eval:
        report = evaluate(result, corpus, harness.build_eval_config(sections.get("eval")))
        payload["evaluation"] = report.to_obj()
        print("%s on %s: P=%.3f R=%.3f F1=%.3f (%d terms)" % (
            args.algorithm, corpus.name, report.precision, report.recall,
            report.f1, payload["evaluation"]["extracted"]))
    if args.out:
        Path(args.out).write_text(json.dumps(payload, ensure_ascii=False, indent=2) + "\n",
                                  encoding="utf-8")
    elif not corpus.has_gold() or args.no_eval:
        sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    return 0


def cmd_sweep(args):
    sections = _load_config(args)
    sweep_section = (sections.get("sweep") or {}).get(args.algorithm) or {}
    grid = sweep_section.get("grid") or harness.DEFAULT_SWEEP_GRIDS[args.algorithm]
    t_grid = args.t_grid or sweep_section.get("t_grid") or harness.DEFAULT_T_GRID
    spec = harness.SweepSpec(
        algorithm=args.algorithm,
        corpus_paths=args.corpus,
        grid=grid,
        base=sections,
        t_grid=t_grid,
        jobs=args.jobs,
    )
    size = 1
    for values in grid.values():
        size *= len(values)
    print("sweep %s: %d grid points x %d corpora" % (args.algorithm, size, len(args.corpus)))
    result = harness.run_sweep(spec)
    out_dir = args.out or ("sweep_%s" % args.algorithm)
    path = harness.save_sweep(result, out_dir)
    for name in result.corpora:
        entry = result.best[name]
        n_ties = len(entry["rows"])
        f1 = entry["f1"]
        print("  %s: best F1 %s (%d tying configs)" % (
            name, "%.3f" % f1 if f1 is not None else "n/a", n_ties))
    print("wrote %s" % path)
    return 0


def cmd_evaluate(args):
    sections = _load_config(args)
    corpus = load_annotated(args.corpus)
    obj = json.loads(Path(args.result).read_text(encoding="utf-8"))
    result = result_from_obj(obj)
    report = evaluate(result, corpus, harness.build_eval_config(sections.get("eval")))
    _emit(json.dumps(report.to_obj(), ensure_ascii=False, indent=2) + "\n", args)
    return 0


def cmd_report(args):
    result = harness.load_sweep_result(args.results)
    _emit(harness.report(result, fmt=args.format), args)
    return 0


_COMMANDS = {
    "parse-crd": cmd_parse_crd,
    "validate": cmd_validate,
    "run": cmd_run,
    "sweep": cmd_sweep,
    "evaluate": cmd_evaluate,
    "report": cmd_report,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        log.error("%s", exc)
        return 2
    except DataError as exc:
        log.error("%s", exc)
        return 3
    except AspectMineError as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
