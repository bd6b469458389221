"""Command-line interface.

Exit codes: 0 success, 1 usage error or malformed input file, 2 no
covering closed form / no such coloring, 3 search cap exceeded, 4
formula-vs-oracle (or characterization-vs-search) mismatch.  A mismatch is
a discovered inconsistency and is always loud.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict, dataclass

from . import constructions, formulas
from .characterize import thm3_rainbow_free, thm5_rainbow_free
from .coloring import find_rainbow, load_coloring, save_coloring
from .equation import Equation
from .errors import (
    BadModulusError,
    BadWitnessError,
    CapExceededError,
    NotCoveredError,
)
from .search import SearchConfig, exists_rainbow_free, rainbow_number_brute

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_COVERED = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on its own; route through _UsageError so
    # the exit-code protocol stays ours
    def error(self, message):
        raise _UsageError(message)


@dataclass
class RunRecord:
    """One machine-readable result line for --json mode."""

    n: int
    coefficients: list[int]
    rhs: int
    method: str
    rb_value: int | None
    provenance: str | None
    witness_path: str | None
    elapsed_ms: float
    status: str = "ok"
    reason: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def _parse_coeffs(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise _UsageError(
            f"--coeffs wants exactly three comma-separated integers, got {text!r}"
        )
    try:
        a1, a2, a3 = (int(p) for p in parts)
    except ValueError:
        raise _UsageError(f"--coeffs entries must be integers, got {text!r}") from None
    return a1, a2, a3


def _config(args) -> SearchConfig:
    threads = getattr(args, "threads", 1)
    return SearchConfig(
        n_cap=getattr(args, "n_cap", 20),
        parallel=threads > 1,
        threads=threads,
    )


def _equation(args, n: int) -> Equation:
    a1, a2, a3 = _parse_coeffs(args.coeffs)
    if n < 2:
        raise _UsageError(f"--modulus must be >= 2, got {n}")
    return Equation(n, a1, a2, a3, args.rhs)


def cmd_rb(args) -> int:
    eq = _equation(args, args.modulus)
    records: list[RunRecord] = []
    lines: list[str] = []
    formula_value = None
    brute_value = None
    not_covered: NotCoveredError | None = None

    if args.method in ("formula", "both"):
        t0 = time.perf_counter()
        try:
            res = formulas.rb_formula(eq)
            formula_value = res.value
            ms = (time.perf_counter() - t0) * 1000
            records.append(
                RunRecord(eq.n, list(eq.coeffs), eq.b, "formula", res.value,
                          res.provenance, None, round(ms, 3))
            )
            lines.append(f"formula: rb = {res.value}   [{res.provenance}]")
        except NotCoveredError as exc:
            not_covered = exc
            ms = (time.perf_counter() - t0) * 1000
            records.append(
                RunRecord(eq.n, list(eq.coeffs), eq.b, "formula", None, None,
                          None, round(ms, 3), status="not-covered", reason=exc.reason)
            )
            lines.append(f"formula: not covered ({exc.reason})")

    if args.method in ("brute", "both"):
        t0 = time.perf_counter()
        res = rainbow_number_brute(eq.n, eq, _config(args))
        brute_value = res.value
        ms = (time.perf_counter() - t0) * 1000
        records.append(
            RunRecord(eq.n, list(eq.coeffs), eq.b, "brute", res.value,
                      res.provenance, None, round(ms, 3))
        )
        lines.append(f"brute:   rb = {res.value}   [{res.provenance}]")

    verdict = None
    if args.method == "both":
        if formula_value is not None and brute_value is not None:
            verdict = "MATCH" if formula_value == brute_value else "MISMATCH"
        else:
            verdict = "SKIPPED (formula not covered)"

    if args.json:
        for rec in records:
            print(rec.to_json())
    else:
        print(f"rb(Z_{eq.n}, {eq})")
        for line in lines:
            print(line)
        if verdict is not None:
            print(f"verdict: {verdict}")

    if verdict == "MISMATCH":
        print("error: formula and oracle disagree", file=sys.stderr)
        return EXIT_MISMATCH
    if args.method == "formula" and not_covered is not None:
        return EXIT_NOT_COVERED
    return EXIT_OK


def cmd_witness(args) -> int:
    eq = _equation(args, args.modulus)
    try:
        coloring = exists_rainbow_free(eq.n, eq, args.num_colors, _config(args))
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if coloring is None:
        print(
            f"no rainbow-free exact {args.num_colors}-coloring of Z_{eq.n} "
            f"exists for {eq}"
        )
        return EXIT_NOT_COVERED
    save_coloring(coloring, args.out)
    print(f"wrote rainbow-free exact {coloring.r}-coloring of Z_{eq.n} to {args.out}")
    return EXIT_OK


def _parse_characterize(spec_text: str):
    if spec_text == "thm5":
        return "thm5", None
    if spec_text.startswith("thm3:"):
        try:
            return "thm3", int(spec_text[5:])
        except ValueError:
            raise _UsageError(
                f"--characterize thm3 wants an integer parameter, got {spec_text!r}"
            ) from None
    raise _UsageError(
        f"--characterize must be 'thm3:<c>' or 'thm5', got {spec_text!r}"
    )


def cmd_check_coloring(args) -> int:
    try:
        coloring = load_coloring(args.file)
    except (OSError, ValueError) as exc:
        print(f"error: bad coloring file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    eq = _equation(args, coloring.n)
    report = find_rainbow(coloring, eq)
    if report.rainbow_free:
        print(f"RainbowFree for {eq}")
    else:
        s = report.witness
        cols = tuple(coloring.assign[x] for x in s)
        print(f"rainbow solution {s} with colors {cols} for {eq}")

    if args.characterize is None:
        return EXIT_OK

    kind, cparam = _parse_characterize(args.characterize)
    try:
        if kind == "thm5":
            if eq.coeffs != (1 % eq.n, 1 % eq.n, 1 % eq.n):
                raise _UsageError(
                    "--characterize thm5 applies to coefficients 1,1,1"
                )
            verdict = thm5_rainbow_free(coloring, eq.b)
        else:
            expected = (1 % eq.n, 1 % eq.n, -cparam % eq.n)
            if eq.coeffs != expected or eq.b != 0:
                raise _UsageError(
                    f"--characterize thm3:{cparam} applies to coefficients "
                    f"1,1,{-cparam} with --rhs 0"
                )
            verdict = thm3_rainbow_free(coloring, cparam)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    agrees = verdict == report.rainbow_free
    print(f"characterization {args.characterize}: rainbow-free = {verdict}; "
          f"agrees with search = {agrees}")
    if not agrees:
        print("error: characterization and search disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_construct(args) -> int:
    kind = args.kind
    try:
        if kind == "symmetric-interval":
            if args.p is None:
                raise _UsageError("--kind symmetric-interval needs --p")
            coloring = constructions.symmetric_interval_coloring(args.p)
        elif kind == "two-power":
            if args.alpha is None:
                raise _UsageError("--kind two-power needs --alpha")
            coloring = constructions.two_power_coloring(args.alpha)
        elif kind == "z9":
            coloring = constructions.z9_coloring()
        else:
            if args.cp_file is None or args.ct_file is None or args.coeffs is None:
                raise _UsageError(
                    "--kind product needs --cp-file, --ct-file and --coeffs"
                )
            try:
                cp = load_coloring(args.cp_file)
                ct = load_coloring(args.ct_file)
            except (OSError, ValueError) as exc:
                print(f"error: bad coloring file: {exc}", file=sys.stderr)
                return EXIT_USAGE
            a1, a2, a3 = _parse_coeffs(args.coeffs)
            eq = Equation(cp.n * ct.n, a1, a2, a3, 0)
            coloring = constructions.product_coloring(cp, ct, eq)
    except (BadModulusError, BadWitnessError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_COVERED
    if args.out is None:
        print(json.dumps(coloring.to_json_dict()))
    else:
        save_coloring(coloring, args.out)
        print(f"wrote exact {coloring.r}-coloring of Z_{coloring.n} to {args.out}")
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.modulus_min < 2 or args.modulus_min > args.modulus_max:
        raise _UsageError(
            f"need 2 <= --modulus-min <= --modulus-max, got "
            f"{args.modulus_min}..{args.modulus_max}"
        )
    a1, a2, a3 = _parse_coeffs(args.coeffs)
    cfg = _config(args)
    mismatch = False
    rows = 0
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["n", "a1", "a2", "a3", "b", "rb_formula", "rb_brute",
             "provenance", "match", "elapsed_ms", "status"]
        )
        for n in range(args.modulus_min, args.modulus_max + 1):
            t0 = time.perf_counter()
            eq = Equation(n, a1, a2, a3, args.rhs)
            f_val: int | str = ""
            provenance = ""
            status = "ok"
            if args.method in ("formula", "both"):
                try:
                    res = formulas.rb_formula(eq)
                    f_val, provenance = res.value, res.provenance
                except NotCoveredError:
                    pass
            b_val: int | str = ""
            if args.method in ("brute", "both"):
                try:
                    b_val = rainbow_number_brute(n, eq, cfg).value
                except CapExceededError:
                    status = "cap-exceeded"
            match = ""
            if f_val != "" and b_val != "":
                match = "true" if f_val == b_val else "false"
                if match == "false":
                    mismatch = True
            ms = round((time.perf_counter() - t0) * 1000, 3)
            writer.writerow(
                [n, eq.a1, eq.a2, eq.a3, eq.b, f_val, b_val, provenance,
                 match, ms, status]
            )
            fh.flush()
            rows += 1
    print(f"wrote {rows} rows to {args.out}")
    if mismatch:
        print("error: formula and oracle disagree on some rows", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _add_common(parser, modulus=True):
    if modulus:
        parser.add_argument("--modulus", type=int, required=True,
                            help="the n of Z_n")
    parser.add_argument("--coeffs", required=True,
                        help="a1,a2,a3 (negatives allowed; reduced mod n)")
    parser.add_argument("--rhs", type=int, default=0, help="right side b")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="rainbownum",
        description="Rainbow numbers of Z_n for a1*x1 + a2*x2 + a3*x3 = b",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    rb = sub.add_parser("rb", help="compute rb(Z_n, eq)")
    _add_common(rb)
    rb.add_argument("--method", choices=["formula", "brute", "both"], default="both")
    rb.add_argument("--json", action="store_true", help="one RunRecord JSON per line")
    rb.add_argument("--n-cap", type=int, default=20)
    rb.add_argument("--threads", type=int, default=1)
    rb.set_defaults(func=cmd_rb)

    wit = sub.add_parser("witness", help="search for a rainbow-free exact coloring")
    _add_common(wit)
    wit.add_argument("--num-colors", type=int, required=True)
    wit.add_argument("--out", required=True)
    wit.add_argument("--n-cap", type=int, default=20)
    wit.add_argument("--threads", type=int, default=1)
    wit.set_defaults(func=cmd_witness)

    chk = sub.add_parser("check-coloring", help="test a coloring file for rainbows")
    chk.add_argument("--file", required=True)
    _add_common(chk, modulus=False)
    chk.add_argument("--characterize", default=None, metavar="thm3:<c>|thm5")
    chk.set_defaults(func=cmd_check_coloring)

    con = sub.add_parser("construct", help="materialize a witness coloring")
    con.add_argument("--kind", required=True,
                     choices=["symmetric-interval", "two-power", "product", "z9"])
    con.add_argument("--p", type=int, default=None)
    con.add_argument("--alpha", type=int, default=None)
    con.add_argument("--cp-file", default=None)
    con.add_argument("--ct-file", default=None)
    con.add_argument("--coeffs", default=None)
    con.add_argument("--out", default=None,
                     help="output path; omit to print the JSON document")
    con.set_defaults(func=cmd_construct)

    scn = sub.add_parser("scan", help="formula vs oracle over a modulus range")
    scn.add_argument("--modulus-min", type=int, required=True)
    scn.add_argument("--modulus-max", type=int, required=True)
    _add_common(scn, modulus=False)
    scn.add_argument("--method", choices=["formula", "brute", "both"], default="both")
    scn.add_argument("--out", required=True)
    scn.add_argument("--n-cap", type=int, default=20)
    scn.add_argument("--threads", type=int, default=1)
    scn.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            parser.print_help()
            return EXIT_USAGE
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotCoveredError as exc:
        print(f"not covered: {exc.reason}", file=sys.stderr)
        return EXIT_NOT_COVERED


if __name__ == "__main__":
    raise SystemExit(main())
