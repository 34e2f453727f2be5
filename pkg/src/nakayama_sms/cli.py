"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage / input error,
3 enumeration guard exceeded, 4 internal assertion (syzygy label mismatch).
"""

from __future__ import annotations

import argparse
import sys

from . import certify
from .algebra import AlgebraParams
from .families import (
    LONG,
    SHORT,
    FamilyError,
    FamilyLabel,
    build_family,
    dumps,
    family_to_dict,
    omega_power_family,
    omega_power_label,
    render_family,
)
from .noncrossing import PartitionError, catalan, format_partition, noncrossing_partitions, parse_partition
from .verifier import ENUMERATION_LIMIT, ResourceGuardError, classify_all, count_sms, count_sms_brauer_tree, is_sms

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3, 4

TYPES = {"long": LONG, "short": SHORT}


class UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if args.json:
        out = dumps(payload)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(out + "\n")
        else:
            print(out)
    else:
        print(text)


def _positive(value: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer")
    if v < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return v


def _algebra(args) -> AlgebraParams:
    return AlgebraParams(args.n, args.ell)


def _label(args, params: AlgebraParams) -> FamilyLabel:
    e = params.e
    try:
        p = parse_partition(args.partition, e)
    except PartitionError as exc:
        raise UsageError(f"bad partition over {{1..{e}}}: {exc}")
    if not 1 <= args.k <= e:
        raise UsageError(f"k must lie in 1..{e}")
    return FamilyLabel(TYPES[args.type], p, args.k)


def _family_labels(params: AlgebraParams, label: FamilyLabel) -> list[FamilyLabel]:
    # with ell = e long and short coincide, so report both names
    if params.ell == params.e:
        return [FamilyLabel(LONG, label.p, label.k), FamilyLabel(SHORT, label.p, label.k)]
    return [label]


def cmd_ncp(args) -> int:
    e = args.e
    if e < 1:
        raise UsageError("e must be positive")
    if args.count_only:
        _emit(args, str(catalan(e)), {"e": e, "count": catalan(e)})
        return EXIT_OK
    parts = [format_partition(p) for p in noncrossing_partitions(e)]
    _emit(args, "\n".join(parts), {"e": e, "count": len(parts), "partitions": parts})
    return EXIT_OK


def cmd_construct(args) -> int:
    params = _algebra(args)
    label = _label(args, params)
    fam = build_family(params, *label)
    ok, reason = is_sms(params, fam)
    labels = _family_labels(params, label)
    text = render_family(params, fam, labels) + f"\nis_sms: {str(ok).lower()}"
    if reason:
        text += f"\nreason: {reason}"
    payload = family_to_dict(params, fam, labels)
    payload["is_sms"] = ok
    _emit(args, text, payload)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_enumerate(args) -> int:
    params = _algebra(args)
    report = classify_all(params, limit=args.limit, force=args.force)
    lines = [f"{params}: {report.count_enumerated} sms's (formula {report.count_formula})"]
    for S, labels in report.classes:
        names = " = ".join(str(lab) for lab in labels) or "UNLABELED"
        lines.append(f"{names}\n  " + ", ".join(str(M) for M in S.sorted()))
    for _, labels in report.unreal:
        lines.append("NOT AN SMS: " + " = ".join(str(lab) for lab in labels))
    lines.append(f"complete: {str(report.complete).lower()}")
    _emit(args, "\n".join(lines), report.to_dict())
    return EXIT_OK if report.complete else EXIT_VERIFY


def cmd_syzygy(args) -> int:
    params = _algebra(args)
    label = _label(args, params)
    fam = build_family(params, *label)
    image = omega_power_family(params, fam, args.power)
    predicted = omega_power_label(label, args.power)
    expected = build_family(params, *predicted)
    match = image.modules == expected.modules
    text = f"Omega^{args.power}({label}) = {predicted}\n" + render_family(params, image)
    payload = {
        "input": str(label),
        "power": args.power,
        "predicted": str(predicted),
        "match": match,
        "family": family_to_dict(params, image, [predicted]),
    }
    if not match:
        print(f"internal error: Omega^{args.power}({label}) is not {predicted}", file=sys.stderr)
        _emit(args, text, payload)
        return EXIT_INTERNAL
    _emit(args, text, payload)
    return EXIT_OK


def cmd_count(args) -> int:
    if args.brauer_tree:
        edges, m0 = args.brauer_tree
        value = count_sms_brauer_tree(edges, m0)
        payload = {"brauer_tree": {"edges": edges, "multiplicity": m0}, "count": value}
    else:
        if args.n is None or args.ell is None:
            raise UsageError("count needs --n and --ell, or --brauer-tree N M0")
        params = _algebra(args)
        value = count_sms(params)
        payload = {"algebra": {"n": params.n, "ell": params.ell, "e": params.e}, "count": value}
    _emit(args, str(value), payload)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    kwargs = {}
    if args.inject_fault:
        from .stable_hom import stable_hom_dim

        # debug hook: claim a second stable endomorphism on every length-2 module
        kwargs["stable"] = lambda params, M, N: stable_hom_dim(params, M, N) + (M == N and M.length == 2)

    results = certify.oracle_check(args.max_n, args.max_ell, **kwargs)
    ok = all(r.ok for r in results)
    lines = [f"{r.name}: {r.checked} pairs, {'pass' if r.ok else 'FAIL: ' + r.counterexample}" for r in results]
    lines.append("pass" if ok else "fail")
    payload = {
        "ok": ok,
        "sweeps": [{"name": r.name, "checked": r.checked, "counterexample": r.counterexample} for r in results],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nakayama-sms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--out", help="write JSON to this file instead of stdout")
        return p

    def algebra(p, required=True):
        p.add_argument("--n", type=_positive, required=required)
        p.add_argument("--ell", type=_positive, required=required)

    def family(p):
        algebra(p)
        p.add_argument("--type", choices=sorted(TYPES), required=True)
        p.add_argument("--partition", required=True, help='e.g. "{1,6,4|2,3|5}"')
        p.add_argument("--k", type=int, required=True)

    p = common(sub.add_parser("ncp", help="list non-crossing partitions of {1..e}"))
    p.add_argument("e", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_ncp)

    p = common(sub.add_parser("construct", help="build L'[p,k] or S'[p,k] and verify it"))
    family(p)
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("enumerate", help="find every sms by brute force and classify"))
    algebra(p)
    p.add_argument("--force", action="store_true", help=f"ignore the n*ell <= {ENUMERATION_LIMIT} guard")
    p.add_argument("--limit", type=_positive, default=ENUMERATION_LIMIT, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("syzygy", help="apply Omega^w to a family and check its predicted label"))
    family(p)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_syzygy)

    p = common(sub.add_parser("count", help="closed-form number of sms's"))
    algebra(p, required=False)
    p.add_argument("--brauer-tree", nargs=2, type=_positive, metavar=("N", "M0"))
    p.set_defaults(func=cmd_count)

    p = common(sub.add_parser("oracle-check", help="certify Hom formulas and arcs against linear algebra"))
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--max-ell", type=_positive, required=True)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, PartitionError, FamilyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
