"""Command-line front end.

Subcommands::

    seq <eigen|a|catalan|bell|a051295|new4> --n N [--bfile] [--json]
    count --pattern P --n N [--brute|--fast]
    classify4 [--max-n N] [--json]
    biject <forward|inverse> --input "..."
    eigen <decompose|compose> --input "..."
    verify --suite <name> --max-n N

Results go to standard output; diagnostics go to standard error.  Exit
status is 0 on success, 1 on a failed verification, 2 on invalid input,
and 3 when an enumeration limit is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from . import bijection, four_patterns, recurrences, series, textforms, verify
from .perms import (
    InvalidInputError,
    ResourceLimitError,
    census,
    format_pattern,
    parse_pattern,
)

__all__ = ["main", "run"]

_FAST_PATTERN = parse_pattern("3(5)241")


def _sequence_terms(name: str, n: int) -> list[int]:
    """First ``n`` terms, where term ``i`` counts length-``i`` objects."""
    if n < 1:
        raise InvalidInputError("--n must be at least 1")
    if name == "eigen":
        return list(series.eigensequence(n))
    if name == "a":
        return list(recurrences.recurrence_tables(n).a[1:])
    if name == "catalan":
        return recurrences.catalan_via_compositions(n, limit=max(16, n))[1:]
    if name == "bell":
        return recurrences.bell_numbers(n)[1:]
    if name == "a051295":
        return four_patterns.a051295_terms(n)[1:]
    if name == "new4":
        return four_patterns.new4_terms(n)[1:]
    raise InvalidInputError(f"unknown sequence {name!r}")


def _emit_sequence(terms: list[int], bfile: bool, as_json: bool) -> None:
    if as_json:
        print(json.dumps([{"n": i, "value": v} for i, v in enumerate(terms, 1)]))
    elif bfile:
        sys.stdout.write("".join(f"{i} {v}\n" for i, v in enumerate(terms, 1)))
    else:
        print(" ".join(str(v) for v in terms))


def _cmd_seq(args: argparse.Namespace) -> int:
    _emit_sequence(_sequence_terms(args.name, args.n), args.bfile, args.json)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    if args.n < 0:
        raise InvalidInputError("--n must be nonnegative")
    if args.fast:
        if pattern != _FAST_PATTERN:
            raise InvalidInputError(
                "no fast counting route for pattern "
                f"{format_pattern(pattern)!r}; rerun with --brute"
            )
        print(recurrences.recurrence_tables(args.n).a[args.n])
        return 0
    print(census(pattern, args.n))
    return 0


def _cmd_classify4(args: argparse.Namespace) -> int:
    classes = four_patterns.classify(max_n=args.max_n)
    if args.json:
        records = [
            {
                "representative": format_pattern(c.representative),
                "members": [format_pattern(m) for m in c.members],
                "label": c.label,
                "trivial": c.trivial,
                "counts": list(c.counts),
            }
            for c in classes
        ]
        print(json.dumps(records))
    else:
        print(four_patterns.classification_report(classes))
    return 0


def _cmd_biject(args: argparse.Namespace) -> int:
    if args.direction == "forward":
        marked = textforms.parse_marked(args.input)
        print(textforms.format_perm_list(bijection.marked_to_list(marked)))
    else:
        items = textforms.parse_perm_list(args.input)
        print(textforms.format_marked(bijection.list_to_marked(items)))
    return 0


def _split_compose_input(text: str) -> tuple[str, str]:
    if ";" not in text:
        raise InvalidInputError(
            'compose input must look like "<rho> ; <item list>"'
        )
    head, _, tail = text.partition(";")
    return head, tail


def _cmd_eigen(args: argparse.Namespace) -> int:
    if args.direction == "decompose":
        p = textforms.parse_perm(args.input)
        rho, items = bijection.eigen_decompose(p)
        print(f"{textforms.format_perm(rho)} ; {textforms.format_perm_list(items)}")
    else:
        head, tail = _split_compose_input(args.input)
        rho = textforms.parse_perm(head)
        items = textforms.parse_perm_list(tail)
        print(textforms.format_perm(bijection.eigen_compose(rho, items)))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_suite(args.suite, args.max_n)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.detail})")
    failures = [r for r in results if not r.ok]
    if failures:
        print(f"{len(failures)} check(s) failed", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenperm",
        description="Eigensequence counts, pattern censuses, and bijections.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_seq = sub.add_parser("seq", help="print a counting sequence")
    p_seq.add_argument(
        "name", choices=("eigen", "a", "catalan", "bell", "a051295", "new4")
    )
    p_seq.add_argument("--n", type=int, required=True, help="number of terms")
    p_seq.add_argument("--bfile", action="store_true", help="one 'n value' per line")
    p_seq.add_argument("--json", action="store_true", help="JSON records")
    p_seq.set_defaults(func=_cmd_seq)

    p_count = sub.add_parser("count", help="census a marked pattern")
    p_count.add_argument("--pattern", required=True, help='for example "3(5)241"')
    p_count.add_argument("--n", type=int, required=True, help="permutation length")
    route = p_count.add_mutually_exclusive_group()
    route.add_argument(
        "--brute", action="store_true", help="exhaustive census (default)"
    )
    route.add_argument(
        "--fast", action="store_true", help="recurrence route where available"
    )
    p_count.set_defaults(func=_cmd_count)

    p_cls = sub.add_parser("classify4", help="classify the 96 marked 4-patterns")
    p_cls.add_argument("--max-n", type=int, default=6, help="census depth")
    p_cls.add_argument("--json", action="store_true", help="JSON records")
    p_cls.set_defaults(func=_cmd_classify4)

    p_bij = sub.add_parser("biject", help="marked permutation <-> list")
    p_bij.add_argument("direction", choices=("forward", "inverse"))
    p_bij.add_argument(
        "--input",
        required=True,
        help='marked permutation ("5 1 4 2 6^ 3 7") or list ("1 / 2 1 / ")',
    )
    p_bij.set_defaults(func=_cmd_biject)

    p_eig = sub.add_parser("eigen", help="permutation <-> (rho ; item list)")
    p_eig.add_argument("direction", choices=("decompose", "compose"))
    p_eig.add_argument("--input", required=True)
    p_eig.set_defaults(func=_cmd_eigen)

    p_ver = sub.add_parser("verify", help="run a consistency suite")
    p_ver.add_argument("--suite", choices=verify.SUITES, required=True)
    p_ver.add_argument("--max-n", type=int, default=6)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return 3


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
