"""Command-line front end.  All positions are 1-based, matching the library."""

import argparse
import csv
import sys
import warnings

from .errors import MuskitError
from .index import build_index
from .lowerbound import gen_lower, verify_lower, write_family_csv
from .mus import MusSet, check_bounds, compute_mus, mus_stab, write_mus_csv
from .sensitivity import EditOp, sensitivity, sensitivity_scan, write_sensitivity_csv
from .text import build_text
from .verify import SUITES, exhaustive_verify, random_verify


def _read_text(path: str, keep_newline: bool):
    with open(path, "rb") as fh:
        raw = fh.read()
    return build_text(raw, strip_trailing_newline=not keep_newline)


def _add_file_arg(p):
    p.add_argument("file", help="input text file (raw bytes)")
    p.add_argument(
        "--keep-newline",
        action="store_true",
        help="do not strip a single trailing line feed (default: strip one)",
    )


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="muskit",
        description="Minimal unique substrings: enumeration, stabbing queries, "
        "lower-bound family, lemma checkers, edit sensitivity.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="emit all MUSs of a text as CSV")
    _add_file_arg(p)
    p.add_argument("--show-strings", action="store_true")

    p = sub.add_parser("query", help="MUSs containing a position")
    _add_file_arg(p)
    p.add_argument("--pos", type=int, required=True)
    p.add_argument("--show-strings", action="store_true")

    p = sub.add_parser("stats", help="one-row summary with counting bounds")
    _add_file_arg(p)

    p = sub.add_parser("gen-lower", help="generate a lower-bound family text")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--family-csv")

    p = sub.add_parser("verify", help="run oracle/lemma/bound sweeps")
    p.add_argument("--suite", action="append", required=True, choices=SUITES)
    p.add_argument("--alphabet", type=int, default=2)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--random", type=int, metavar="N", help="number of samples")
    p.add_argument("--max-len", type=int, help="exhaustive: max text length")
    p.add_argument("--len", type=int, dest="length", help="random: max text length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--occ-cap", type=int, default=8)
    p.add_argument("--violations-out", help="write one witness per line to this file")

    p = sub.add_parser("sensitivity", help="single-edit MUS sensitivity")
    _add_file_arg(p)
    p.add_argument("--pos", type=int)
    p.add_argument("--op", choices=("substitute", "insert", "delete"))
    p.add_argument("--char", help="single character for substitute/insert")
    p.add_argument("--scan", action="store_true")
    p.add_argument(
        "--kinds",
        nargs="+",
        choices=("substitute", "insert", "delete"),
        default=["substitute", "insert", "delete"],
    )
    return ap


def _cmd_compute(args, out):
    t = _read_text(args.file, args.keep_newline)
    ms = compute_mus(build_index(t))
    write_mus_csv(ms, t, out, show_strings=args.show_strings)
    return 0


def _cmd_query(args, out):
    t = _read_text(args.file, args.keep_newline)
    ms = compute_mus(build_index(t))
    stab = mus_stab(ms, args.pos, n=t.n)
    write_mus_csv(MusSet(stab), t, out, show_strings=args.show_strings)
    return 0


def _cmd_stats(args, out):
    t = _read_text(args.file, args.keep_newline)
    report = check_bounds(t, compute_mus(build_index(t)))
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "mus_count", "rle", "max_stab_pos", "max_stab_count", "sqrt_bound"])
    w.writerow(
        [
            report.n,
            report.mus_count,
            report.rle_size,
            report.max_stab_pos,
            report.max_stab_count,
            f"{report.sqrt_bound:.3f}",
        ]
    )
    return 0


def _cmd_gen_lower(args, out):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # the CLI prints its own warning below
        inst = gen_lower(args.m)
    if not inst.family:
        print(f"warning: m={args.m} has an empty expected-MUS family", file=sys.stderr)
    with open(args.out, "wb") as fh:
        fh.write(inst.text.data)
    if args.family_csv:
        with open(args.family_csv, "w", newline="") as fh:
            write_family_csv(inst, fh)
    report = verify_lower(inst, compute_mus(build_index(inst.text)))
    return 0 if report.ok else 1


def _cmd_verify(args, out):
    suites = set(args.suite)
    if args.exhaustive:
        if args.max_len is None:
            raise MuskitError("--exhaustive requires --max-len")
        report = exhaustive_verify(args.alphabet, args.max_len, suites, args.occ_cap)
    else:
        if args.length is None:
            raise MuskitError("--random requires --len")
        report = random_verify(
            args.alphabet, args.length, args.random, args.seed, suites, args.occ_cap
        )
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["suite", "texts", "checks", "violations"])
    w.writerow([report.suite, report.texts, report.checks, len(report.violations)])
    witnesses = [f"{text!r}: {why}" for text, why in report.violations]
    if args.violations_out:
        with open(args.violations_out, "w") as fh:
            fh.write("".join(line + "\n" for line in witnesses))
    else:
        for line in witnesses:
            print(line, file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_sensitivity(args, out):
    t = _read_text(args.file, args.keep_newline)
    if args.scan:
        records, _, _ = sensitivity_scan(t, kinds=tuple(args.kinds))
    else:
        if args.pos is None or args.op is None:
            raise MuskitError("either --scan or both --pos and --op are required")
        symbol = None
        if args.op in ("substitute", "insert"):
            if not args.char or len(args.char) != 1:
                raise MuskitError(f"--op {args.op} requires --char with one character")
            symbol = ord(args.char)
        records = [sensitivity(t, EditOp(args.op, args.pos, symbol))]
    write_sensitivity_csv(records, out)
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "query": _cmd_query,
    "stats": _cmd_stats,
    "gen-lower": _cmd_gen_lower,
    "verify": _cmd_verify,
    "sensitivity": _cmd_sensitivity,
}


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except MuskitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
