"""Command-line front end.

Exit codes: 0 success, 2 input or hypothesis error, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional

from .core import apery_set, invariants, validate_generators
from .errors import MismatchFound, TPrimeOdd, ValidationError
from .families import VARIANTS, FamilySpec, evaluate
from .oracle import brute_invariants, brute_quotient_invariants
from .quotient import (
    QuotientSpec,
    n_drp_table,
    ob_solve,
    ob_witness,
    quotient_apery,
    structured_form,
)
from .sweep import load_plan, sweep_check

APERY_GUARD = 10**6
METHODS = ("closed-form", "prop2.2", "generic", "oracle")


@dataclass
class OutputRecord:
    input: dict
    frobenius: int
    genus: Optional[int]
    method: str
    apery: Optional[List[int]] = None
    verified: Optional[bool] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls(**json.loads(text))


class UsageError(ValidationError):
    pass


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _guard(modulus: int, force: bool):
    if modulus > APERY_GUARD and not force:
        raise UsageError(f"Apéry table would have {modulus} entries (> {APERY_GUARD}); pass --force")


def _emit(records: List[OutputRecord], fmt: str, out=None):
    out = out or sys.stdout
    if fmt == "json":
        for r in records:
            print(r.to_json(), file=out)
    elif fmt == "csv":
        w = csv.writer(out)
        w.writerow(["input", "p", "method", "frobenius", "genus"])
        for r in records:
            gens = r.input.get("generators")
            label = ",".join(map(str, gens)) if gens else json.dumps(r.input, sort_keys=True)
            w.writerow([label, r.input.get("p", ""), r.method, r.frobenius, "" if r.genus is None else r.genus])
    else:
        for r in records:
            for key, value in r.input.items():
                if isinstance(value, list):
                    value = ",".join(map(str, value))
                print(f"{key:<10} {value}", file=out)
            print(f"{'frobenius':<10} {r.frobenius}", file=out)
            print(f"{'genus':<10} {'-' if r.genus is None else r.genus}", file=out)
            print(f"{'method':<10} {r.method}", file=out)
            if r.verified is not None:
                print(f"{'verified':<10} {'yes' if r.verified else 'NO'}", file=out)
            if r.apery is not None:
                print(f"{'apery':<10} {' '.join(map(str, r.apery))}", file=out)


def cmd_invariants(args) -> List[OutputRecord]:
    A = validate_generators(args.gens)
    rec = {"generators": list(A.gens)}
    if args.method == "oracle":
        F, g = brute_invariants(A)
        return [OutputRecord(rec, F, g, "oracle")]
    _guard(A.gens[0], args.force or not args.apery)
    t = apery_set(A)
    F, g = invariants(t)
    return [OutputRecord(rec, F, g, "generic", list(t.entries) if args.apery else None)]


def cmd_quotient(args) -> List[OutputRecord]:
    A = validate_generators(args.gens)
    a = args.a if args.a is not None else A.gens[0]
    rec = {"generators": list(A.gens), "p": args.p}
    if args.a is not None:
        rec["a"] = args.a
    if args.method == "oracle":
        F, g = brute_quotient_invariants(A, args.p)
        return [OutputRecord(rec, F, g, "oracle")]
    q = QuotientSpec(A, args.p, a)
    if a % args.p:
        raise UsageError(
            f"p={args.p} does not divide {a}: no Apéry reduction or closed form exists for "
            "this case; rerun with --method oracle"
        )
    _guard(q.modulus, args.force or not args.apery)
    if args.method == "prop2.2":
        t = n_drp_table(structured_form(A, a), args.p)
        method = "prop2.2"
    else:
        t = quotient_apery(q)
        method = "generic"
    F, g = invariants(t)
    return [OutputRecord(rec, F, g, method, list(t.entries) if args.apery else None)]


def _family_from_args(args) -> FamilySpec:
    cls = VARIANTS[args.variant]
    values = {"a": args.a, "h": args.h, "d": args.d, "k": args.k, "K": args.K,
              "B": tuple(args.B) if args.B is not None else None}
    params = {}
    for name in cls.__dataclass_fields__:
        if values[name] is None:
            raise UsageError(f"family {args.variant} needs --{name}")
        params[name] = values[name]
    if args.p is None:
        raise UsageError("family needs --p")
    return FamilySpec(cls(**params), args.p)


def cmd_family(args) -> List[OutputRecord]:
    spec = _family_from_args(args)
    try:
        spec.validate()
    except TPrimeOdd as exc:
        gens = ",".join(map(str, sorted(set(spec.generators()))))
        raise UsageError(f"{exc}: semiq quotient {gens} --p {spec.p} --a {spec.variant.a}") from None
    F, g = evaluate(spec)
    rec = {"family": args.variant, **spec.params(), "generators": sorted(set(spec.generators()))}
    out = OutputRecord(rec, F, g, "closed-form")
    if args.verify:
        ref = brute_quotient_invariants(validate_generators(spec.generators()), spec.p)
        got = (F, g) if g is not None else (F,)
        want = tuple(ref)[: len(got)]
        out.verified = got == want
        if not out.verified:
            _emit([out], args.format)
            raise MismatchFound(rec, want, got)
    return [out]


def cmd_apery(args) -> List[OutputRecord]:
    A = validate_generators(args.gens)
    a = args.a if args.a is not None else A.gens[0]
    rec = {"generators": list(A.gens), "a": a, "p": args.p}
    if args.p == 1:
        _guard(a, args.force)
        t = apery_set(A, a)
    else:
        q = QuotientSpec(A, args.p, a)
        _guard(q.modulus, args.force)
        t = quotient_apery(q)
    F, g = invariants(t)
    return [OutputRecord(rec, F, g, "generic", list(t.entries))]


def cmd_ob(args) -> int:
    value = ob_solve(args.B, args.M)
    witness = ob_witness(args.B, args.M) if args.witness else None
    parts = sorted(set(args.B))
    if args.format == "json":
        print(json.dumps({"B": parts, "M": args.M, "value": value, "witness": witness}, sort_keys=True))
    else:
        print("infeasible" if value is None else value)
        if witness is not None:
            print(" + ".join(f"{x}*{b}" for x, b in zip(witness, parts) if x))
    return 0


def cmd_sweep(args) -> int:
    plan = load_plan(args.config)
    report = sweep_check(plan, jobs=args.jobs)
    text = json.dumps(report.to_dict(), indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    if report.mismatches:
        first = report.first_mismatch
        print(f"first counterexample: {first['family']} {first['params']}: closed form "
              f"{first['closed_form']} vs {first['compare']} {first['reference']}", file=sys.stderr)
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiq", description=__doc__.strip().splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json", help="one JSON record per line")
    g.add_argument("--csv", dest="format", action="store_const", const="csv", help="CSV with a header row")
    fmt.set_defaults(format="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[fmt], help="Frobenius number and genus of <A>")
    p.add_argument("gens", type=_int_list, help="comma-separated generators, e.g. 3,5")
    p.add_argument("--apery", action="store_true", help="include the Apéry table")
    p.add_argument("--force", action="store_true", help="allow Apéry tables above 10^6 entries")
    p.add_argument("--method", choices=("generic", "oracle"), default="generic")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("quotient", parents=[fmt], help="invariants of <A>/p")
    p.add_argument("gens", type=_int_list)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int, help="generator divisible by p to use as modulus (default: smallest)")
    p.add_argument("--method", choices=("generic", "prop2.2", "oracle"), default="generic")
    p.add_argument("--apery", action="store_true")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("family", parents=[fmt], help="closed form for a structured family")
    p.add_argument("variant", choices=sorted(VARIANTS))
    for name in ("a", "h", "d", "k", "K", "p"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--B", type=_int_list, help="comma-separated b_i (scaled family)")
    p.add_argument("--verify", action="store_true", help="compare against the sieve oracle (exit 3 on mismatch)")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("apery", parents=[fmt], help="Apéry table of <A> or <A>/p")
    p.add_argument("gens", type=_int_list)
    p.add_argument("--a", type=int)
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser("ob", parents=[fmt], help="fewest parts from B summing to M")
    p.add_argument("B", type=_int_list)
    p.add_argument("M", type=int)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_ob)

    p = sub.add_parser("sweep", help="run a sweep plan and emit a JSON report")
    p.add_argument("config", help="TOML plan, or the name of a bundled plan")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", help="also write the report here")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
        if isinstance(result, int):
            return result
        _emit(result, args.format)
        return 0
    except MismatchFound as exc:
        print(f"semiq: verification failed: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, OverflowError) as exc:
        print(f"semiq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
