"""Command-line front end.

Every successful command writes one JSON envelope to stdout::

    {"schema_version": "1", "command": ..., "result": ..., "timing_ms": ...}

``fmu`` and ``verify`` also accept ``--format tsv`` for a bare table.
Exit codes: 0 success, 1 verification disagreement, 2 usage or parse
error, 3 size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import partitions
from .characters import character
from .errors import DomainError, SizeBoundError, VerificationFailure
from .lr import enumerate_lr_tableaux, lr_coefficient
from .partitions import Partition, SkewShape
from .spectral import eigenvalue_profile, verify_immersion_theorem
from .symfunc import frobenius_f, multiplicity
from .theorem import VERIFY_BOUND, exception_cases, exceptions, find_witness, verify_main_theorem

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _same_size(*parts: Partition) -> None:
    sizes = {p.n for p in parts}
    if len(sizes) > 1:
        raise DomainError("partitions must have equal size: " + ", ".join(f"{p} ({p.n})" for p in parts))


def _pair_rows(records) -> list[dict]:
    grouped: dict[tuple[Partition, Partition], list[int]] = {}
    for rec in records:
        grouped.setdefault((rec.lam, rec.mu), []).append(rec.case_id)
    return [
        {"lambda": str(lam), "mu": str(mu), "case_ids": ids}
        for (lam, mu), ids in sorted(grouped.items())
    ]


def cmd_admits(args) -> dict:
    lam, mu = args.lam, args.mu
    _same_size(lam, mu)
    cases = list(exception_cases(lam, mu))
    result = {"lambda": str(lam), "mu": str(mu), "admits": not cases, "case_ids": cases}
    if not args.oracle_only:
        mult = multiplicity(lam, mu)
        result["multiplicity"] = mult
        result["agree"] = (mult >= 1) == (not cases)
    return result


def cmd_fmu(args):
    f = frobenius_f(args.mu)
    if args.format == "tsv":
        return f.to_tsv()
    return {"mu": str(args.mu), **f.to_json_obj()}


def cmd_exceptions(args) -> dict:
    return {"n": args.n, "exceptions": _pair_rows(exceptions(args.n))}


def cmd_verify(args):
    report = verify_main_theorem(args.max_n, jobs=args.jobs, bound=args.verify_bound)
    if args.format == "tsv":
        return report.to_tsv()
    return report.to_json_obj()


def cmd_character(args) -> dict:
    _same_size(args.lam, args.mu)
    return {"lambda": str(args.lam), "mu": str(args.mu), "value": str(character(args.lam, args.mu))}


def cmd_lr(args) -> dict:
    lam, alpha, beta = args.outer, args.inner, args.weight
    result = {
        "outer": str(lam),
        "inner": str(alpha),
        "weight": str(beta),
        "coefficient": lr_coefficient(lam, alpha, beta),
    }
    if args.list:
        if not partitions.contains(lam, alpha):
            raise DomainError(f"{alpha} is not contained in {lam}")
        result["tableaux"] = [t.to_json_obj()["rows"] for t in enumerate_lr_tableaux(SkewShape(lam, alpha), beta)]
    return result


def cmd_witness(args) -> dict:
    w = find_witness(args.lam, args.p, args.q)
    return {
        "lambda": str(args.lam),
        "p": args.p,
        "q": args.q,
        "found": w is not None,
        "witness": None if w is None else w.to_json_obj(),
    }


def cmd_spectrum(args) -> dict:
    _same_size(args.lam, args.mu)
    prof = eigenvalue_profile(args.lam, args.mu)
    return {"lambda": str(args.lam), "mu": str(args.mu), **prof.to_json_obj(), "text": str(prof)}


def cmd_immersion(args) -> dict:
    return verify_immersion_theorem(args.n, bound=args.verify_bound).to_json_obj()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specht-invariants",
        description="Invariant vectors of permutations in irreducible S_n representations.",
    )
    parser.add_argument(
        "--bound",
        type=int,
        default=partitions.DEFAULT_BOUND,
        help="largest n whose partitions may be enumerated (default %(default)s)",
    )
    parser.add_argument(
        "--verify-bound",
        type=int,
        default=VERIFY_BOUND,
        help="largest n accepted by the verification harnesses (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("admits", help="does w_mu fix a nonzero vector of V_lambda")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--oracle-only", action="store_true", help="skip the brute-force multiplicity")
    p.set_defaults(func=cmd_admits)

    p = sub.add_parser("fmu", help="Schur expansion of ch Ind_{C_mu}^{S_n} 1")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_fmu)

    p = sub.add_parser("exceptions", help="closed-form exception pairs at size n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_exceptions)

    p = sub.add_parser("verify", help="brute-force check of the exception list for all n <= N")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("character", help="irreducible character value chi_lambda(mu)")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^outer_{inner,weight}")
    p.add_argument("--outer", type=_partition_arg, required=True)
    p.add_argument("--inner", type=_partition_arg, required=True)
    p.add_argument("--weight", type=_partition_arg, required=True)
    p.add_argument("--list", action="store_true", help="also list the LR tableaux")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("witness", help="search alpha, beta with f_(p) f_(q) >= s_lambda")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("spectrum", help="eigenvalue multiplicities of rho_lambda(w_mu)")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("immersion", help="check the immersion statements at size n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_immersion)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse has already printed usage or help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    partitions.set_enumeration_bound(args.bound)
    start = time.perf_counter()
    try:
        result = args.func(args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(json.dumps(exc.report.to_json_obj(), indent=2), file=sys.stderr)
        return EXIT_DISAGREE
    except SizeBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        partitions.set_enumeration_bound(partitions.DEFAULT_BOUND)
    elapsed = int((time.perf_counter() - start) * 1000)
    if isinstance(result, str):
        sys.stdout.write(result)
    else:
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "result": result,
            "timing_ms": elapsed,
        }
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
