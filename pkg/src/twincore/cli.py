"""Command-line front end.

Thin shell over the library: no combinatorial logic lives here.  Exit
codes: 0 success, 1 verification mismatch, 2 usage error, 3 enumeration
guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import census
from .bijections import psi, psi_inverse
from .errors import GuardError
from .extremal import largest_size, max_partition
from .partitions import beta_set
from .paths import LatticePath, enumerate_dyck, enumerate_free_dyck, is_free_dyck
from .posets import (
    OrderIdeal,
    gap_poset,
    is_nice,
    is_order_ideal,
    iter_ideal_members,
    poset_to_dot,
    poset_to_json_dict,
    truncated_poset,
)


class UsageError(Exception):
    """Bad arguments beyond what argparse validates."""


def _format_members(members: frozenset[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(members)) + "}"


def _format_partition(parts: tuple[int, ...]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _parse_members(text: str) -> frozenset[int]:
    body = text.strip().removeprefix("{").removesuffix("}").strip()
    if not body:
        return frozenset()
    try:
        return frozenset(int(piece) for piece in body.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse ideal {text!r}: {exc}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twincore",
        description="Simultaneous core partitions with distinct parts: "
        "posets, ideals, path bijections, extremal sizes, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poset = sub.add_parser("poset", help="emit a gap poset (or its truncation)")
    p_poset.add_argument("--s", type=int, required=True)
    p_poset.add_argument("--t", type=int, required=True)
    p_poset.add_argument("--truncate-k", type=int, default=None)
    p_poset.add_argument("--format", choices=["dot", "json"], default="json")

    p_ideals = sub.add_parser("ideals", help="enumerate (nice) order ideals")
    p_ideals.add_argument("--s", type=int, required=True)
    p_ideals.add_argument("--t", type=int, required=True)
    p_ideals.add_argument("--nice", action="store_true")
    p_ideals.add_argument("--format", choices=["table", "json"], default="table")

    p_bij = sub.add_parser("bijection", help="nice truncated ideals <-> free Dyck paths")
    p_bij.add_argument("--k", type=int, required=True)
    group = p_bij.add_mutually_exclusive_group(required=True)
    group.add_argument("--ideal", type=str, help="comma-separated elements; '' for empty")
    group.add_argument("--path", type=str, help="text like UDUD")
    p_bij.add_argument("--format", choices=["table", "json"], default="table")

    p_largest = sub.add_parser("largest", help="largest distinct-part core of the family")
    p_largest.add_argument("--k", type=int, required=True)
    p_largest.add_argument("--format", choices=["table", "json"], default="table")

    p_verify = sub.add_parser("verify", help="formula-vs-enumeration census")
    mode = p_verify.add_mutually_exclusive_group(required=True)
    mode.add_argument("--counts", action="store_true")
    mode.add_argument("--largest", action="store_true")
    mode.add_argument("--regressions", action="store_true")
    mode.add_argument("--identities", action="store_true")
    p_verify.add_argument("--k", type=int, default=None)
    p_verify.add_argument("--kmax", type=int, default=None)
    p_verify.add_argument("--format", choices=["table", "json", "csv"], default="table")

    p_paths = sub.add_parser("paths", help="enumerate Dyck or free Dyck paths")
    p_paths.add_argument("--order", type=int, required=True)
    p_paths.add_argument("--free", action="store_true")
    p_paths.add_argument("--format", choices=["table", "json"], default="table")
    return parser


def _cmd_poset(args) -> int:
    if args.truncate_k is not None:
        k = args.truncate_k
        if (args.s, args.t) != (2 * k + 1, 2 * k + 3):
            raise UsageError(
                f"--truncate-k {k} needs --s {2*k+1} --t {2*k+3}, got ({args.s},{args.t})"
            )
        poset = truncated_poset(k)
    else:
        poset = gap_poset(args.s, args.t)
    if args.format == "dot":
        sys.stdout.write(poset_to_dot(poset))
    else:
        json.dump(poset_to_json_dict(poset), sys.stdout)
        sys.stdout.write("\n")
    return 0


def _cmd_ideals(args) -> int:
    poset = gap_poset(args.s, args.t)
    members = sorted(
        iter_ideal_members(poset, nice=args.nice),
        key=lambda m: (len(m), sorted(m)),
    )
    if args.format == "json":
        payload = {
            "s": args.s,
            "t": args.t,
            "nice": args.nice,
            "count": len(members),
            "ideals": [sorted(m) for m in members],
        }
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    else:
        for m in members:
            print(_format_members(m))
        print(f"count: {len(members)}")
    return 0


def _cmd_bijection(args) -> int:
    k = args.k
    if k < 0:
        raise UsageError("--k must be nonnegative")
    home = truncated_poset(k)
    if args.ideal is not None:
        members = _parse_members(args.ideal)
        if not members <= home.elements:
            raise UsageError(
                f"elements {sorted(members - home.elements)} are not in the k={k} truncation"
            )
        if not is_order_ideal(home, members):
            raise UsageError("the given set is not down-closed in the truncation")
        if not is_nice(members):
            raise UsageError("the given ideal is not nice (two members differ by 1)")
        if 1 in members:
            raise UsageError("the bijection is defined for ideals avoiding the element 1")
        result_path = psi(OrderIdeal(home, members))
        payload = {"k": k, "ideal": sorted(members), "path": result_path.text}
        output = result_path.text
    else:
        try:
            p = LatticePath.from_text(args.path)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if len(p) != 2 * k or not is_free_dyck(p):
            raise UsageError(f"{args.path!r} is not a free Dyck path of order {k}")
        ideal = psi_inverse(p)
        payload = {"k": k, "ideal": sorted(ideal.members), "path": p.text}
        output = _format_members(ideal.members)
    if args.format == "json":
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(output)
    return 0


def _cmd_largest(args) -> int:
    k = args.k
    if k < 0:
        raise UsageError("--k must be nonnegative")
    partition = max_partition(k)
    hooks = beta_set(partition)
    if args.format == "json":
        payload = {
            "k": k,
            "size": largest_size(k),
            "partition": partition.to_json_dict(),
            "beta_set": hooks.to_json_dict(),
        }
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    else:
        print(f"size: {largest_size(k)}")
        print(f"partition: {_format_partition(partition.parts)}")
        print("beta_set: {" + ",".join(str(h) for h in hooks.sorted_desc()) + "}")
    return 0


def _cmd_verify(args) -> int:
    if args.counts:
        if args.k is None:
            raise UsageError("verify --counts needs --k")
        report = census.verify_counts(args.k)
    elif args.largest:
        if args.k is None:
            raise UsageError("verify --largest needs --k")
        report = census.verify_largest(args.k)
    elif args.regressions:
        report = census.verify_regressions()
    else:
        if args.kmax is None:
            raise UsageError("verify --identities needs --kmax")
        report = census.verify_identities(args.kmax)

    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    elif args.format == "json":
        json.dump(report.to_json_dict(), sys.stdout)
        sys.stdout.write("\n")
    else:
        widths = (42, 12, 22, 22)
        print(f"{'quantity':<{widths[0]}}{'param':<{widths[1]}}"
              f"{'formula':>{widths[2]}}{'enumerated':>{widths[3]}}  match")
        for row in report.rows:
            print(f"{row.quantity:<{widths[0]}}{row.param:<{widths[1]}}"
                  f"{row.formula:>{widths[2]}}{row.enumerated:>{widths[3]}}  "
                  f"{'ok' if row.match else 'MISMATCH'}")
        print(f"status: {'ok' if report.all_match else 'MISMATCH'}")
    return 0 if report.all_match else 1


def _cmd_paths(args) -> int:
    enumerate_fn = enumerate_free_dyck if args.free else enumerate_dyck
    if args.format == "json":
        texts = [p.text for p in enumerate_fn(args.order)]
        payload = {
            "order": args.order,
            "free": args.free,
            "count": len(texts),
            "paths": texts,
        }
        json.dump(payload, sys.stdout)
        sys.stdout.write("\n")
    else:
        for p in enumerate_fn(args.order):
            print(p.text)
    return 0


_HANDLERS = {
    "poset": _cmd_poset,
    "ideals": _cmd_ideals,
    "bijection": _cmd_bijection,
    "largest": _cmd_largest,
    "verify": _cmd_verify,
    "paths": _cmd_paths,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
