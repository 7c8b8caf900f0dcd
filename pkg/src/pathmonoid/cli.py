"""Command-line interface.

Exit codes: 0 on success, 1 when a domain check fails (non-member,
unverified round trip or certificate), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Iterator, Sequence

from .generators_rank import evaluate, factorize, kernel_lower_bound
from .path_endomorphisms import (
    classify,
    count_idempotents,
    count_wend,
    count_wend_closed_form,
    encode,
    enumerate_wend,
    is_idempotent,
    is_regular,
)
from .transformations import ParseError, format_transformation, parse_transformation, rank_of

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

DEFAULT_CAPS = {
    "count": 64,
    "table": 64,
    "enumerate": 8,
    "verify-rank": 8,
    "factorize": 10,
}


class UsageError(Exception):
    pass


def _plain_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    text = str(value)
    if text == "" or any(c.isspace() for c in text):
        return json.dumps(text)
    return text


def write_records(
    rows: Iterable[dict], fmt: str, out, bare: bool = False
) -> None:
    """Write rows as ``key=value`` lines, JSON lines or CSV.

    ``bare`` drops the keys in plain output (used by ``table``).
    """
    rows = list(rows)
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        if not rows:
            return
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _plain_value(v) if isinstance(v, bool) else v for k, v in row.items()})
        out.write(buf.getvalue())
    else:
        for row in rows:
            if bare:
                out.write(" ".join(_plain_value(v) for v in row.values()) + "\n")
            else:
                out.write(" ".join(f"{k}={_plain_value(v)}" for k, v in row.items()) + "\n")


def _check_n(n: int, args, command: str, lo: int = 1) -> None:
    if n < lo:
        raise UsageError(f"{command}: n must be at least {lo}, got {n}")
    cap = args.max_n if args.max_n is not None else DEFAULT_CAPS[command]
    if n > cap and not args.allow_large:
        raise UsageError(
            f"{command}: n={n} exceeds the cap of {cap}; raise it with --max-n or pass --allow-large"
        )


def _inputs(values: Sequence[str]) -> Iterator[str]:
    if values and values != ["-"]:
        yield from values
        return
    for line in sys.stdin:
        if line.strip():
            yield line.strip()


def cmd_count(args, out) -> int:
    _check_n(args.n, args, "count")
    row = {"n": args.n, "wend": count_wend(args.n), "idempotents": count_idempotents(args.n)}
    if args.closed_form:
        closed = count_wend_closed_form(args.n)
        row["closed_form"] = closed
        row["closed_form_agrees"] = closed == row["wend"]
    write_records([row], args.format, out)
    if args.closed_form and not row["closed_form_agrees"]:
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    _check_n(args.n, args, "enumerate")
    rows = []
    for f in enumerate_wend(args.n):
        e = encode(f)
        rows.append(
            {
                "image": format_transformation(f),
                "j": e.offset_j,
                "composition": ",".join(map(str, e.composition)),
                "rank": rank_of(f),
                "idempotent": is_idempotent(f),
                "regular": is_regular(f),
            }
        )
    write_records(rows, args.format, out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    rows = []
    for text in _inputs(args.transformations):
        rows.append(classify(parse_transformation(text)).as_dict())
    write_records(rows, args.format, out)
    return EXIT_OK


def cmd_factorize(args, out) -> int:
    status = EXIT_OK
    rows = []
    for text in _inputs(args.transformations):
        f = parse_transformation(text)
        if f.n < 3:
            print(
                f"factorize: {text}: n={f.n} has no canonical generating set; "
                "wEnd has rank 0 for n=1 and rank 2 for n=2",
                file=sys.stderr,
            )
            status = EXIT_DOMAIN
            continue
        _check_n(f.n, args, "factorize", lo=3)
        try:
            word = factorize(f)
        except ValueError as exc:
            print(f"factorize: {exc}", file=sys.stderr)
            status = EXIT_DOMAIN
            continue
        result = evaluate(word)
        verified = result == f
        rows.append(
            {
                "image": format_transformation(f),
                "word": str(word),
                "length": len(word),
                "evaluates_to": format_transformation(result),
                "verified": verified,
            }
        )
        if not verified:
            status = EXIT_DOMAIN
    write_records(rows, args.format, out)
    return status


def cmd_verify_rank(args, out) -> int:
    _check_n(args.n, args, "verify-rank", lo=3)
    cert = kernel_lower_bound(args.n)
    write_records([cert.as_dict()], args.format, out)
    ok = cert.verdict and cert.identity_unique_of_rank_n
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_table(args, out) -> int:
    _check_n(args.n_max, args, "table")
    rows = [
        {"n": n, "size": count_wend(n), "idempotents": count_idempotents(n)}
        for n in range(1, args.n_max + 1)
    ]
    write_records(rows, args.format, out, bare=True)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "jsonl", "csv"], default="plain")
    common.add_argument("--max-n", type=int, default=None, help="override the size cap for this command")
    common.add_argument("--allow-large", action="store_true", help="ignore size caps")

    parser = argparse.ArgumentParser(
        prog="pathmonoid",
        description="Weak endomorphisms of the directed path: counting, classification, generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="size and idempotent count of wEnd")
    p.add_argument("n", type=int)
    p.add_argument("--closed-form", action="store_true", help="cross-check against (n+1)*2^(n-2)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", parents=[common], help="list every weak endomorphism")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="membership and regularity flags")
    p.add_argument("transformations", nargs="*", help='e.g. "[1,2,2,3]"; read stdin if omitted')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("factorize", parents=[common], help="word over the canonical generators")
    p.add_argument("transformations", nargs="*", help='e.g. "[1,2,2]"; read stdin if omitted')
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify-rank", parents=[common], help="certify rank(wEnd) = n-1")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_verify_rank)

    p = sub.add_parser("table", parents=[common], help="rows n, |wEnd|, idempotents")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
