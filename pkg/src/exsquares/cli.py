"""Command-line front end.

Subcommands: gen (construct one system), verify (validate a JSON
system from a file or stdin), catalog (list / eval / cross-check the
built-in families), sweep (JSON-lines stream over a parameter range).

All big integers are serialized as decimal strings; the values exceed
64-bit range by hundreds of bits and must survive any JSON reader.
Exit codes: 0 valid, 1 verification failure, 2 bad or degenerate
input, 3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import catalog
from .exactmath import DomainError
from .seeds import DegenerateParameterError, SquareSystem
from .evolve import generate_method1
from .derive import pipeline_n5, pipeline_n6, pipeline_n7, pipeline_n8
from .verify import validate_system

_PIPELINES = {5: pipeline_n5, 6: pipeline_n6, 7: pipeline_n7,
              8: pipeline_n8}

GEN_NS = range(3, 9)


def system_to_json(system: SquareSystem) -> str:
    return json.dumps({
        "n": system.n,
        "roots": [str(r) for r in system.roots],
        "certificates": [str(c) for c in system.certificates],
        "s": str(system.s),
        "reduced": True,
    })


def system_from_json(text: str) -> SquareSystem:
    obj = json.loads(text)
    try:
        n = int(obj["n"])
        roots = tuple(int(r) for r in obj["roots"])
        certs = tuple(int(c) for c in obj["certificates"])
        s = int(obj["s"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"not a system object: {exc}") from exc
    distinct = len(set(roots)) == len(roots) and all(roots)
    return SquareSystem(n, roots, certs, s, distinct=distinct)


def _parse_pair(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected integers, got {text!r}") from None


def _parse_range(text: str):
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected LO:HI, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected integers in range, got {text!r}") from None
    return lo, hi


def _generate(n, method, t, params):
    if method == 1:
        if t is None:
            raise DomainError("method 1 needs --t")
        return generate_method1(n, t)
    if params is None:
        raise DomainError("method 2 needs --params P1,P2")
    pipeline = _PIPELINES.get(n)
    if pipeline is None:
        raise DomainError(
            f"method 2 has built-in pipelines for n in {sorted(_PIPELINES)}")
    return pipeline(*params)


def cmd_gen(args) -> int:
    try:
        system = _generate(args.n, args.method, args.t, args.params)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = validate_system(system)
    if not report.ok:
        print(f"internal error: generated system failed validation\n{report}",
              file=sys.stderr)
        return 1
    print(system_to_json(system))
    return 0


def cmd_verify(args) -> int:
    try:
        if args.file is None or args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        system = system_from_json(text)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    report = validate_system(system,
                             require_distinct=not args.allow_repeats)
    print(report)
    return 0 if report.ok else 1


def cmd_catalog(args) -> int:
    try:
        if args.action == "list":
            for fid in catalog.list_families():
                rec = catalog.get_family(fid)
                print(f"{fid}  n={rec.n}  degree={rec.degree}  "
                      f"kind={rec.kind}")
            return 0
        if args.action == "eval":
            if args.t is not None:
                params = args.t
            elif args.params is not None:
                params = args.params
            else:
                print("error: catalog eval needs --params P1,P2 or --t T",
                      file=sys.stderr)
                return 2
            system = catalog.eval_family(args.id, params)
            print(system_to_json(system))
            return 0
        report = catalog.cross_check(args.id)
        print(report)
        return 0 if report.ok else 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _sweep_points(args):
    """Deterministic list of (n, method, point) work items."""
    if args.method == 1:
        if args.t_range is None:
            raise DomainError("method 1 sweeps need --t-range LO:HI")
        lo, hi = args.t_range
        return [(args.n, 1, t) for t in range(lo, hi + 1)]
    if args.max_sum is None:
        raise DomainError("method 2 sweeps need --max-sum N")
    points = []
    for total in range(2, args.max_sum + 1):
        for p1 in range(1, total):
            p2 = total - p1
            if math.gcd(p1, p2) == 1:
                points.append((args.n, 2, (p1, p2)))
    return points


def _sweep_worker(item):
    n, method, point = item
    try:
        if method == 1:
            system = _generate(n, 1, point, None)
        else:
            system = _generate(n, 2, None, point)
    except DomainError as exc:
        return ("skip", f"skipped {point}: {exc}")
    report = validate_system(system)
    if not report.ok:
        return ("fail", f"validation failed at {point}: {report}")
    return ("ok", system_to_json(system))


def cmd_sweep(args) -> int:
    try:
        points = _sweep_points(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_worker, points))
    else:
        results = [_sweep_worker(item) for item in points]
    # results arrive in point order whatever the worker count
    failed = False
    for status, payload in results:
        if status == "ok":
            print(payload)
        elif status == "skip":
            print(payload, file=sys.stderr)
        else:
            print(payload, file=sys.stderr)
            failed = True
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exsquares",
        description="Construct sets of n distinct squares whose sum minus "
                    "any one member is again a square.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct one system")
    gen.add_argument("--n", type=int, required=True, choices=GEN_NS,
                     help="number of squares")
    gen.add_argument("--method", type=int, required=True, choices=(1, 2),
                     help="1 = seed and transform, 2 = chain assignment")
    gen.add_argument("--t", type=int, help="method 1 seed parameter")
    gen.add_argument("--params", type=_parse_pair, metavar="P1,P2",
                     help="method 2 parameter pair")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="validate a JSON system")
    ver.add_argument("file", nargs="?",
                     help="JSON file (default or '-': stdin)")
    ver.add_argument("--allow-repeats", action="store_true",
                     help="accept repeated roots")
    ver.set_defaults(func=cmd_verify)

    cat = sub.add_parser("catalog", help="built-in published families")
    cat.add_argument("action", choices=("list", "eval", "cross-check"))
    cat.add_argument("id", nargs="?", help="family id")
    cat.add_argument("--params", type=_parse_pair, metavar="P1,P2")
    cat.add_argument("--t", type=int)
    cat.set_defaults(func=cmd_catalog)

    sweep = sub.add_parser("sweep", help="JSON-lines over a parameter range")
    sweep.add_argument("--n", type=int, required=True, choices=GEN_NS)
    sweep.add_argument("--method", type=int, required=True, choices=(1, 2))
    sweep.add_argument("--t-range", type=_parse_range, metavar="LO:HI",
                       help="inclusive t range for method 1")
    sweep.add_argument("--max-sum", type=int,
                       help="method 2: all coprime pairs with p1+p2 <= N")
    sweep.add_argument("--jobs", type=int, default=1,
                       help="parallel workers (output order is unchanged)")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "catalog" and args.action in ("eval", "cross-check") \
            and args.id is None:
        parser.error(f"catalog {args.action} needs a family id")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
