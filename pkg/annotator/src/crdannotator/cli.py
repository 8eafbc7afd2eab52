"""CLI: annotate a raw review file into the interchange format.

Exit codes: 0 success, 2 usage/config error, 3 unreadable input.
"""

import argparse
import logging
import sys

from .pipeline import BACKENDS, annotate_file

log = logging.getLogger("crd-annotate")


def build_parser():
    parser = argparse.ArgumentParser(prog="crd-annotate", description=__doc__)
    parser.add_argument("--in", dest="infile", required=True, help="raw review file")
    parser.add_argument("--out", dest="outfile", required=True, help="interchange JSON-lines output")
    parser.add_argument("--backend", default="rulepipe", choices=sorted(BACKENDS))
    parser.add_argument("--name", default=None, help="corpus name for sentence ids")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        count = annotate_file(args.infile, args.outfile, backend=args.backend,
                              corpus_name=args.name)
    except OSError as exc:
        log.error("%s", exc)
        return 3
    except ValueError as exc:
        log.error("%s", exc)
        return 2
    print("%s: wrote %d sentences to %s" % (args.infile, count, args.outfile))
    return 0


if __name__ == "__main__":
    sys.exit(main())
