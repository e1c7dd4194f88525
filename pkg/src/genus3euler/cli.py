"""Command-line interface.

    genus3euler eval <space> <lambda> [--breakdown] [--h3-table FILE] [--m2-table FILE]
    genus3euler table <space> --max-weight N [--format csv|json] [--strict]
    genus3euler verify [--skip bootstrap]
    genus3euler bootstrap-m2 [--out FILE]

Exit codes: 0 success, 1 usage error, 2 missing data (coverage error).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable

from .a3 import A3Breakdown, default_providers, euler_a111, euler_a3
from .lowgenus import CoverageError, bootstrap_m2, euler_a1, write_table
from .strata import euler_m3, euler_m3_nonhyp
from .symplectic import Partition, PartitionError, partitions_up_to

SPACES = ("m3", "m3-nonhyp", "h3", "a3", "a1", "m2", "a111")
_NPARTS = {"a1": 1, "m2": 2}
# spaces whose odd-weight values vanish identically; tables list even weight only
_EVEN_ONLY = {"h3", "a3", "m2"}

EXIT_OK, EXIT_USAGE, EXIT_COVERAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class OutputRecord:
    lam: Partition
    space: str
    value: int | None
    breakdown: A3Breakdown | None = None
    error: str | None = None

    def padded(self) -> tuple[int, int, int]:
        parts = self.lam.parts + (0,) * (3 - len(self.lam.parts))
        return parts  # type: ignore[return-value]

    def as_dict(self) -> dict:
        a, b, c = self.padded()
        d = {"lambda": [a, b, c], "space": self.space, "value": self.value}
        if self.breakdown is not None:
            d["breakdown"] = self.breakdown.as_dict()
        if self.error is not None:
            d["error"] = self.error
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OutputRecord":
        n = _NPARTS.get(d["space"], 3)
        b = d.get("breakdown")
        if b is not None:
            b = A3Breakdown(b["m30_term"], b["h3_term"], b["kunneth_term"], b["a111_term"])
        return cls(Partition(tuple(d["lambda"][:n])), d["space"], d["value"], b, d.get("error"))


def _evaluator(space: str, args, breakdown: bool) -> Callable[[Partition], OutputRecord]:
    need_m2 = space in ("a3", "m2")
    providers = default_providers(
        getattr(args, "h3_table", None), getattr(args, "m2_table", None), bootstrap=need_m2
    )

    def ev(lam: Partition) -> OutputRecord:
        if space == "m3":
            return OutputRecord(lam, space, euler_m3(lam, providers.h3.lookup))
        if space == "m3-nonhyp":
            return OutputRecord(lam, space, euler_m3_nonhyp(lam))
        if space == "h3":
            return OutputRecord(lam, space, providers.h3.lookup(lam))
        if space == "a111":
            return OutputRecord(lam, space, euler_a111(lam))
        if space == "a1":
            return OutputRecord(lam, space, euler_a1(lam[0]))
        if space == "m2":
            return OutputRecord(lam, space, providers.m2.lookup(lam))
        b = euler_a3(lam, providers)
        return OutputRecord(lam, space, b.total, b if breakdown else None)

    return ev


def _parse_lambda(space: str, text: str) -> Partition:
    try:
        return Partition.parse(text, _NPARTS.get(space, 3))
    except PartitionError as exc:
        raise UsageError(str(exc)) from None


def cmd_eval(args) -> int:
    lam = _parse_lambda(args.space, args.lam)
    if args.breakdown and args.space != "a3":
        raise UsageError("--breakdown applies to the a3 space only")
    try:
        rec = _evaluator(args.space, args, args.breakdown)(lam)
    except CoverageError as exc:
        print(f"coverage error: {exc}", file=sys.stderr)
        return EXIT_COVERAGE
    print(rec.value)
    if rec.breakdown is not None:
        for key, v in rec.breakdown.as_dict().items():
            print(f"  {key}: {v}")
    return EXIT_OK


def table_partitions(space: str, max_weight: int) -> list[Partition]:
    """Rows in table order: by weight, then reverse-lexicographic."""
    lams = partitions_up_to(max_weight, _NPARTS.get(space, 3))
    if space in _EVEN_ONLY:
        lams = [lam for lam in lams if lam.weight % 2 == 0]
    return lams


def table_records(space: str, max_weight: int, args, strict: bool = False) -> list[OutputRecord]:
    ev = _evaluator(space, args, breakdown=(space == "a3"))
    out = []
    for lam in table_partitions(space, max_weight):
        try:
            out.append(ev(lam))
        except CoverageError as exc:
            if strict:
                raise
            out.append(OutputRecord(lam, space, None, error=str(exc)))
    return out


def format_csv(records: list[OutputRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["lambda1", "lambda2", "lambda3", "space", "value"])
    for r in records:
        w.writerow([*r.padded(), r.space, "NA" if r.value is None else r.value])
    return buf.getvalue()


def format_json(records: list[OutputRecord]) -> str:
    return json.dumps([r.as_dict() for r in records], indent=2) + "\n"


def cmd_table(args) -> int:
    if args.max_weight < 0:
        raise UsageError("--max-weight must be nonnegative")
    try:
        records = table_records(args.space, args.max_weight, args, args.strict)
    except CoverageError as exc:
        print(f"coverage error: {exc}", file=sys.stderr)
        return EXIT_COVERAGE
    sys.stdout.write(format_csv(records) if args.format == "csv" else format_json(records))
    missing = sum(r.value is None for r in records)
    if missing:
        print(f"warning: {missing} rows lack data (see coverage errors)", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all(skip_bootstrap="bootstrap" in (args.skip or []))
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed or skipped")
    return EXIT_OK if not failed else 1


def cmd_bootstrap(args) -> int:
    result = bootstrap_m2()
    header = (
        f"e_c(M2, V_mu) for even |mu| <= 10; solved from {len(result.used)} "
        f"equations, {len(result.held_out)} held out"
    )
    if args.out:
        write_table(args.out, result.provider.table, header)
    else:
        print(f"# {header}")
        for (a, b), v in sorted(result.provider.table.items(), key=lambda kv: (sum(kv[0]), -kv[0][0])):
            print(f"{a},{b},{v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="genus3euler", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate one Euler characteristic")
    e.add_argument("space", choices=SPACES)
    e.add_argument("lam", metavar="lambda", help="partition as a,b,c")
    e.add_argument("--breakdown", action="store_true", help="per-stratum terms (a3)")
    e.add_argument("--h3-table", metavar="FILE", help="extra hyperelliptic values")
    e.add_argument("--m2-table", metavar="FILE", help="extra genus-2 values")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", help="emit a table of values")
    t.add_argument("space", choices=SPACES)
    t.add_argument("--max-weight", type=int, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--strict", action="store_true", help="abort on missing data")
    t.add_argument("--h3-table", metavar="FILE")
    t.add_argument("--m2-table", metavar="FILE")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--skip", action="append", choices=("bootstrap",))
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bootstrap-m2", help="solve for genus-2 values from the A3 table")
    b.add_argument("--out", metavar="FILE")
    b.set_defaults(func=cmd_bootstrap)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"genus3euler: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"genus3euler: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
