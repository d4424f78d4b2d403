"""Command-line interface.

Exit codes: 0 success, 1 a verification found violations, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .classify import THEOREM_IDS, classify
from .forms import generate_forms
from .harness import DEFAULT_MAX_SPAN, HarnessConfig, enumerate_normalized, run_census, run_verification
from .intset import Regime, doubling_profile, read_sets
from .iso import isomorphism


class UsageError(Exception):
    pass


def _one_set(arg: str):
    sets = read_sets(arg)
    if len(sets) != 1:
        raise UsageError(f"{arg}: expected exactly one set, found {len(sets)}")
    return sets[0]


def cmd_classify(args) -> int:
    reports = [classify(A).to_json() for A in read_sets(args.set)]
    out = reports if args.set.startswith("@") else reports[0]
    print(json.dumps(out))
    return 0


def cmd_iso(args) -> int:
    pairs = isomorphism(_one_set(args.x), _one_set(args.y))
    print(json.dumps(None if pairs is None else {"mapping": [list(p) for p in pairs]}))
    return 0


def cmd_forms(args) -> int:
    out = []
    for A, w in generate_forms(args.n, args.family):
        out.append({
            "set": list(A),
            "family": w.family,
            "k": w.k,
            "u": w.u,
            "blocks": [list(b) for b in w.blocks],
        })
    print(json.dumps(out))
    return 0


def cmd_enumerate(args) -> int:
    want = Regime(args.regime) if args.regime else None
    write = sys.stdout.write
    for A in enumerate_normalized(args.n):
        if want is not None and doubling_profile(A).regime is not want:
            continue
        write(",".join(map(str, A)) + "\n")
    return 0


def cmd_census(args) -> int:
    config = HarnessConfig(
        max_span=args.max_n,
        job_count=args.jobs,
        output_path=Path(args.out) if args.out else None,
        min_span=args.min_n,
        force=args.force,
    )
    report = run_census(config)
    if config.output_path is None:
        sys.stdout.write(report.to_json())
    return 0


def cmd_verify(args) -> int:
    theorems = tuple(t.strip() for t in args.theorems.split(",") if t.strip())
    config = HarnessConfig(
        max_span=args.max_n,
        theorems=theorems,
        job_count=args.jobs,
        min_span=args.min_n,
        force=args.force,
    )
    failures = run_verification(config)
    print(json.dumps([f.to_json() for f in failures], indent=2))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="freiman3k3", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="classify a set, JSON case report on stdout")
    s.add_argument("set", help='set literal such as "0,1,2,5,6,10", or @file')
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("iso", help="Freiman isomorphism between two sets, or null")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("forms", help="all T/S forms of an even span")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--family", choices=["T", "S", "both"], default="both")
    s.set_defaults(func=cmd_forms)

    s = sub.add_parser("enumerate", help="normalized sets of span n, one per line")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--regime", choices=[r.value for r in Regime])
    s.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (
        ("census", cmd_census, "per-span census of regimes and structural cases"),
        ("verify", cmd_verify, "exhaustive theorem verification"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--max-n", type=int, default=DEFAULT_MAX_SPAN)
        s.add_argument("--min-n", type=int, default=1)
        s.add_argument("--jobs", type=int, default=1)
        s.add_argument("--force", action="store_true", help="allow spans >= 26")
        if name == "census":
            s.add_argument("--out", help="write the JSON report here instead of stdout")
        else:
            s.add_argument("--theorems", default=",".join(THEOREM_IDS),
                           help="comma-separated subset of " + ",".join(THEOREM_IDS))
        s.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
