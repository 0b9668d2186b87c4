"""Command line interface: construct, verify, search, quotient, normalize.

Exit codes: 0 when the property holds or something was found, 1 when it
fails or an exhaustive search came back empty, 2 on input or format errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .construct import synthesize
from .errors import HarmoniaError, InputError, NormalityError, ParityError
from .formats import format_sequence, format_table, load_group, parse_table, read_sequence
from .groups import conjugation_witness, cosets_of, normalize_table, quotient, subgroup_closure
from .oracle import search_harmonious, search_r_star, search_symmetric_harmonious
from .seqcheck import (
    is_complete_mapping,
    verify_harmonious,
    verify_r_sequence,
    verify_r_star,
    verify_symmetric_harmonious,
)

VERIFIERS = {
    "harmonious": verify_harmonious,
    "symmetric": verify_symmetric_harmonious,
    "r": verify_r_sequence,
    "rstar": verify_r_star,
}
SEARCHES = {
    "harmonious": search_harmonious,
    "symmetric": search_symmetric_harmonious,
    "rstar": search_r_star,
}


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    sys.stdout.write(text)


def cmd_construct(args: argparse.Namespace) -> int:
    g = load_group(args.group)
    try:
        seq = synthesize(g)
    except ParityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(format_sequence(seq), args.output)
    report = verify_symmetric_harmonious(seq)
    print(f"verified: symmetric harmonious, order {g.order}: {report.describe()}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_group(args.group)
    seq = read_sequence(args.sequence, g)
    if args.property == "complete-mapping":
        ok = is_complete_mapping(g, seq.entries)
        print(f"complete-mapping: {'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    report = VERIFIERS[args.property](seq)
    if report:
        print(f"{args.property}: PASS")
        return 0
    print(f"{args.property}: FAIL {report.describe()}")
    return 1


def cmd_search(args: argparse.Namespace) -> int:
    g = load_group(args.group)
    outcome = SEARCHES[args.property](g, args.limit, allow_large=args.allow_large)
    for s in outcome.found:
        print(" ".join(map(str, s.entries)))
    if not outcome.found:
        print("exhausted: none" if outcome.exhausted else "truncated: none")
        return 1
    state = "yes" if outcome.exhausted else "no (truncated)"
    print(f"# found {len(outcome.found)}, exhausted: {state}, nodes: {outcome.nodes_visited}")
    return 0


def cmd_quotient(args: argparse.Namespace) -> int:
    g = load_group(args.group)
    h = subgroup_closure(g, args.generators)
    print("subgroup: " + " ".join(map(str, h.members)))
    if not h.is_normal:
        x, y = conjugation_witness(g, h.members)
        conj = g.mul(g.mul(x, y), g.inv(x))
        print(f"normal: no ({x} * {y} * {x}^-1 = {conj} is not in the subgroup)")
        return 1
    print("normal: yes")
    q = quotient(g, h)
    sys.stdout.write(format_table(q.quotient))
    print("cosets:")
    for coset in cosets_of(g, h)[0]:
        print(" ".join(map(str, coset)))
    return 0


def cmd_normalize(args: argparse.Namespace) -> int:
    raw = parse_table(Path(args.group).read_text())
    _emit(format_table(normalize_table(raw)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="harmonia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def group_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--group", required=True, help="builtin spec (e.g. frobenius:7:3) or table file")

    p = sub.add_parser("construct", help="build a symmetric harmonious sequence")
    group_arg(p)
    p.add_argument("--output", help="also write the sequence file here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a sequence file against a property")
    group_arg(p)
    p.add_argument("--sequence", required=True)
    p.add_argument("--property", required=True, choices=[*VERIFIERS, "complete-mapping"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search on a small group")
    group_arg(p)
    p.add_argument("--property", required=True, choices=list(SEARCHES))
    p.add_argument("--limit", type=int, default=None, help="stop after this many results")
    p.add_argument("--allow-large", action="store_true", help="search beyond the order cap")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("quotient", help="subgroup closure, normality and quotient table")
    group_arg(p)
    p.add_argument("--generators", type=int, nargs="*", default=[])
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("normalize", help="relabel a table so the identity is element 0")
    group_arg(p)
    p.add_argument("--output")
    p.set_defaults(func=cmd_normalize)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NormalityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except HarmoniaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
