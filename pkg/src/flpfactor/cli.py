"""Command line: ``flpfactor factorize`` and ``flpfactor verify``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .jobs import EXIT_CODES, JobSpec, dump_json, run_factorize, verify_report
from .parsing import ParseError


def _factorize(args) -> int:
    try:
        job = JobSpec.load(args.job)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES["parse-error"]
    if args.all_factorizations:
        job.options["all_factorizations"] = True
    if args.frp:
        job.options["frp"] = True
    if args.order:
        job.options["order"] = args.order
    doc = run_factorize(job)
    text = dump_json(doc)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if doc["status"] != "ok":
        print(f"{doc['status']}: {doc.get('error', '')}", file=sys.stderr)
    return EXIT_CODES[doc["status"]]


def _verify(args) -> int:
    try:
        doc = json.loads(Path(args.result).read_text(encoding="utf-8"))
        report = verify_report(doc)
    except (OSError, json.JSONDecodeError, ParseError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CODES["parse-error"]
    for label, ok in report:
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
    return 0 if all(ok for _, ok in report) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flpfactor", description=__doc__)
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factorize", help="compute all FLP factorizations of a job's matrix")
    f.add_argument("job", help="job file (JSON)")
    f.add_argument("--out", help="write the result document here instead of stdout")
    f.add_argument("--all-factorizations", action="store_true",
                   help="return every certified factorization, not only FLP ones")
    f.add_argument("--frp", action="store_true", help="factor-right-prime mode (via transpose)")
    f.add_argument("--order", choices=["lex", "degrevlex"], help="monomial order")
    f.set_defaults(func=_factorize)

    v = sub.add_parser("verify", help="independently re-check a result document")
    v.add_argument("result", help="result file (JSON)")
    v.set_defaults(func=_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
