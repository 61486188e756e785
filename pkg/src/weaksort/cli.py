"""
Command-line surface.

    weaksort count      --class pi5 --n 6
    weaksort sequence   --classes all --n 8
    weaksort search     --target A111279 --n 8
    weaksort series     --name main --n 20 --format csv
    weaksort bijection  --map phi --input "3 1 4 2"
    weaksort bijection  --inverse --path "NDE"
    weaksort class5     --count 9 | --decompose "3 1 4 2" | --indec 7
    weaksort recurrence --class pi1 --n 20
    weaksort oeis       --id A006318
    weaksort verify

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Identical invocations produce byte-identical output.  All data commands
support --format table|csv|json where it makes sense.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import acceptance, class5, counting, oeis, recurrence, schroder, series
from .perms import (
    TRIPLES,
    format_perm,
    parse_pattern_set,
    parse_perm,
)

#: n beyond which sequence/search/count demand --limit-override
SEARCH_DEFAULT_MAX = 8


def _usage(message: str) -> "SystemExit":
    print(f"usage error: {message}", file=sys.stderr)
    return SystemExit(2)


def _emit_terms(name: str, pairs: list[tuple[int, int]], fmt: str) -> None:
    if fmt == "table":
        for n, v in pairs:
            print(n, v)
    elif fmt == "csv":
        print("n,value")
        for n, v in pairs:
            print(f"{n},{v}")
    else:
        print(json.dumps({"name": name, "terms": [v for _, v in pairs]}))


def _resolve_target(text: str, nmax: int) -> tuple[int, ...]:
    """--target accepts an OEIS id (offline fixture) or comma-separated ints."""
    if text.startswith("A"):
        return oeis.fetch(text, source="offline").prefix(nmax + 1)
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def _class_list(selector: str) -> list[str]:
    if selector == "all":
        return list(TRIPLES)
    out = []
    for token in selector.split(","):
        token = token.strip()
        if token not in TRIPLES:
            raise _usage(f"unknown class {token!r}; choose from {list(TRIPLES)}")
        out.append(token)
    return out


def _cmd_count(args: argparse.Namespace) -> int:
    if (args.cls is None) == (args.patterns is None):
        raise _usage("count: give exactly one of --class or --patterns")
    patterns = TRIPLES[args.cls] if args.cls else parse_pattern_set(args.patterns)
    seq = counting.counting_sequence(
        patterns, args.n, override=args.limit_override
    )
    label = args.cls or "custom"
    if args.format == "json":
        print(json.dumps({"name": label, "n": args.n, "count": seq[args.n]}))
    elif args.format == "csv":
        print("n,value")
        print(f"{args.n},{seq[args.n]}")
    else:
        print(seq[args.n])
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    classes = _class_list(args.classes)
    rows = {
        cid: counting.counting_sequence(
            TRIPLES[cid], args.n, override=args.limit_override
        )
        for cid in classes
    }
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    elif args.format == "csv":
        print("class,n,value")
        for cid in classes:
            for n, v in enumerate(rows[cid]):
                print(f"{cid},{n},{v}")
    else:
        for cid in classes:
            print(cid, " ".join(str(v) for v in rows[cid]))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.n > SEARCH_DEFAULT_MAX and not args.limit_override:
        raise _usage(
            f"search beyond n={SEARCH_DEFAULT_MAX} is costly; pass --limit-override"
        )
    target = _resolve_target(args.target, args.n)
    report = counting.wilf_search(args.n, target)
    reps = ["; ".join(format_perm(t) for t in rep) for rep in report.matches]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "target": list(report.target),
                    "nmax": report.nmax,
                    "orbits_examined": report.orbits_examined,
                    "triples_total": report.triples_total,
                    "matches": reps,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"target  {' '.join(str(v) for v in report.target)}")
        print(f"orbits  {report.orbits_examined} (covering {report.triples_total} triples)")
        print(f"matches {len(report.matches)}")
        for rep in reps:
            print(f"  {rep}")
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    f = series.gf_catalog(args.name, args.n)
    if isinstance(f, series.BivariateSeries):
        triples = [
            (n, k, f.coefficient(n, k))
            for n in range(f.order + 1)
            for k in range(len(f.coeffs[n]))
        ]
        for _, _, c in triples:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c} in {args.name}")
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "name": args.name,
                        "terms": [[n, k, int(c)] for n, k, c in triples if c],
                    }
                )
            )
        elif args.format == "csv":
            print("n,k,value")
            for n, k, c in triples:
                if c:
                    print(f"{n},{k},{int(c)}")
        else:
            for n, k, c in triples:
                if c:
                    print(n, k, int(c))
        return 0
    coeffs = series.integer_coefficients(f)
    _emit_terms(args.name, list(enumerate(coeffs)), args.format)
    return 0


def _cmd_bijection(args: argparse.Namespace) -> int:
    if args.inverse:
        if args.path is None:
            raise _usage("bijection --inverse needs --path")
        path = schroder.validate_path(args.path)
        print(format_perm(schroder.path_to_perm(path)))
        return 0
    if args.map != "phi":
        raise _usage(f"unknown map {args.map!r}; only 'phi' is available")
    if args.input is None:
        raise _usage("bijection --map phi needs --input")
    print(schroder.perm_to_path(parse_perm(args.input)).steps)
    return 0


def _cmd_class5(args: argparse.Namespace) -> int:
    chosen = [x for x in (args.count, args.decompose, args.indec) if x is not None]
    if len(chosen) != 1:
        raise _usage("class5: give exactly one of --count, --decompose, --indec")
    if args.count is not None:
        print(class5.count_avoiders(args.count))
    elif args.indec is not None:
        print(class5.count_indecomposable(args.indec))
    else:
        d = class5.decompose(parse_perm(args.decompose))
        print(
            json.dumps(
                {
                    "perm": format_perm(d.perm),
                    "upper": [v for _, v in d.upper],
                    "lower": [v for _, v in d.lower],
                    "upper_head": [v for _, v in d.upper_head],
                    "upper_tail": [v for _, v in d.upper_tail],
                    "lower_tail": [v for _, v in d.lower_tail],
                    "key_positions": list(d.key_positions),
                    "key_values": list(d.key_values),
                    "blocks": [[v for _, v in block] for block in d.blocks],
                    "a": d.a,
                    "k": d.k,
                    "i": d.i,
                },
                sort_keys=True,
            )
        )
    return 0


def _cmd_recurrence(args: argparse.Namespace) -> int:
    seq = recurrence.count_via_recurrence(args.cls, args.n)
    _emit_terms(args.cls, list(enumerate(seq)), args.format)
    return 0


def _cmd_oeis(args: argparse.Namespace) -> int:
    source = "online" if args.online and not args.offline else "offline"
    seq = oeis.fetch(args.id, source=source)
    pairs = [(seq.offset + i, v) for i, v in enumerate(seq.terms)]
    _emit_terms(seq.id, pairs, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    return 0 if acceptance.run_all() else 1


def _add_format(p: argparse.ArgumentParser, default: str = "table") -> None:
    p.add_argument(
        "--format", choices=("table", "csv", "json"), default=default,
        help="output format (default %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weaksort",
        description="pattern-avoidance enumeration for the five triples "
        "counted by the weak sorting numbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="|S_n(T)| for one class or pattern set")
    p.add_argument("--class", dest="cls", choices=list(TRIPLES))
    p.add_argument("--patterns", help='semicolon-separated, e.g. "3 2 1 4; 4 2 1 3"')
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit-override", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("sequence", help="counting sequences of the five classes")
    p.add_argument("--classes", default="all", help="'all' or comma list like pi1,pi4")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--limit-override", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("search", help="classify all 2024 triples by counting sequence")
    p.add_argument("--target", default="A111279", help="OEIS id or comma-separated terms")
    p.add_argument("--n", type=int, default=8, help="match counts for 0..n (default 8)")
    p.add_argument("--limit-override", action="store_true")
    _add_format(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("series", help="coefficients of a catalog generating function")
    p.add_argument("--name", required=True, choices=series.CATALOG_NAMES)
    p.add_argument("--n", type=int, default=20, help="truncation order (default 20)")
    _add_format(p)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("bijection", help="permutation <-> Schroder path")
    p.add_argument("--map", default="phi")
    p.add_argument("--input", help="permutation in one-line notation")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--path", help="path step string like NDE")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("class5", help="fifth-triple counts and decomposition")
    p.add_argument("--count", type=int)
    p.add_argument("--decompose", help="permutation in one-line notation")
    p.add_argument("--indec", type=int)
    p.set_defaults(func=_cmd_class5)

    p = sub.add_parser("recurrence", help="counting sequence via the table recurrence")
    p.add_argument("--class", dest="cls", required=True, choices=recurrence.CLASS_IDS)
    p.add_argument("--n", type=int, required=True)
    _add_format(p, default="csv")
    p.set_defaults(func=_cmd_recurrence)

    p = sub.add_parser("oeis", help="terms of a bundled or fetched OEIS sequence")
    p.add_argument("--id", required=True)
    p.add_argument("--offline", action="store_true", help="force the bundled fixture")
    p.add_argument("--online", action="store_true", help="fetch and cache the b-file")
    _add_format(p)
    p.set_defaults(func=_cmd_oeis)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, KeyError, ConnectionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
