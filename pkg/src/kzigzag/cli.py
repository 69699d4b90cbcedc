"""Command-line interface: stat, decompose, enumerate, verify, sample.

Machine-first output: JSON (default, one object per record), CSV with fixed
schemas, or plain key: value text.  Exit codes: 0 success / all identities
verified, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from fractions import Fraction
from typing import Iterator, Sequence

from .exact import (
    enumerate_stats,
    expected_alternating_length,
    expected_zigzag_length,
    verify_identities,
)
from .perm import InvalidPermutationError, Permutation, decompose, find_peaks_valleys, make_permutation, values_at
from .sampling import estimate_average
from .subseq import chain_lengths, longest_zigzag_witness

FORMATS = ("json", "csv", "plain")

ENUMERATE_CSV_COLUMNS = (
    "n",
    "k",
    "perm_count",
    "sum_as",
    "sum_zs",
    "avg_as_num",
    "avg_as_den",
    "avg_zs_num",
    "avg_zs_den",
    "formula_as_num",
    "formula_as_den",
    "match",
)

STAT_CSV_COLUMNS = (
    "perm",
    "n",
    "k",
    "as",
    "zs",
    "witness_kind",
    "witness_positions",
    "witness_values",
    "peak_values",
    "valley_values",
)

DECOMPOSE_CSV_COLUMNS = (
    "perm",
    "n",
    "k",
    "section",
    "start",
    "end",
    "direction",
    "values",
    "uncovered_prefix",
    "uncovered_suffix",
)


def _parse_perm(text: str) -> Permutation:
    values = []
    for token in text.split():
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidPermutationError(
                "non-integer", f"invalid token {token!r}: expected an integer"
            ) from None
    return make_permutation(values)


def _input_perms(args: argparse.Namespace) -> Iterator[Permutation]:
    if args.perm is not None:
        yield _parse_perm(args.perm)
        return
    stream = sys.stdin if args.input == "-" else open(args.input, encoding="ascii")
    try:
        for line in stream:
            line = line.strip()
            if line:
                yield _parse_perm(line)
    finally:
        if stream is not sys.stdin:
            stream.close()


def _fraction_fields(value: Fraction) -> dict[str, object]:
    return {"num": value.numerator, "den": value.denominator, "decimal": float(value)}


def _joined(items: Sequence[object]) -> str:
    return " ".join(str(x) for x in items)


def _span(span: tuple[int, int] | None) -> str:
    return "-" if span is None else f"{span[0]}-{span[1]}"


def _csv_writer() -> csv.writer:
    return csv.writer(sys.stdout, lineterminator="\n")


def _print_plain(pairs: Sequence[tuple[str, object]]) -> None:
    for key, value in pairs:
        print(f"{key}: {value}")


def _cmd_stat(args: argparse.Namespace) -> int:
    records = []
    for w in _input_perms(args):
        as_len, zs_len = chain_lengths(w.values, args.k)
        witness = longest_zigzag_witness(w, args.k)
        pv = find_peaks_valleys(w, args.k)
        records.append(
            {
                "perm": _joined(w.values),
                "n": w.n,
                "k": args.k,
                "as": as_len,
                "zs": zs_len,
                "witness_kind": witness.kind,
                "witness_positions": list(witness.positions),
                "witness_values": list(witness.values),
                "peak_values": list(values_at(w, pv.peak_positions)),
                "valley_values": list(values_at(w, pv.valley_positions)),
            }
        )
    if args.format == "json":
        for rec in records:
            print(json.dumps(rec))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(STAT_CSV_COLUMNS)
        for rec in records:
            writer.writerow(
                [
                    rec["perm"],
                    rec["n"],
                    rec["k"],
                    rec["as"],
                    rec["zs"],
                    rec["witness_kind"],
                    _joined(rec["witness_positions"]),
                    _joined(rec["witness_values"]),
                    _joined(rec["peak_values"]),
                    _joined(rec["valley_values"]),
                ]
            )
    else:
        for idx, rec in enumerate(records):
            if idx:
                print()
            _print_plain(
                [
                    ("perm", rec["perm"]),
                    ("n", rec["n"]),
                    ("k", rec["k"]),
                    ("as", rec["as"]),
                    ("zs", rec["zs"]),
                    ("witness_kind", rec["witness_kind"]),
                    ("witness_positions", _joined(rec["witness_positions"])),
                    ("witness_values", _joined(rec["witness_values"])),
                    ("peak_values", _joined(rec["peak_values"])),
                    ("valley_values", _joined(rec["valley_values"])),
                ]
            )
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    records = []
    for w in _input_perms(args):
        chain = decompose(w, args.k)
        records.append(
            {
                "perm": _joined(w.values),
                "n": w.n,
                "k": args.k,
                "sections": [
                    {
                        "start": s.start,
                        "end": s.end,
                        "direction": s.direction,
                        "values": list(w.values[s.start - 1 : s.end]),
                    }
                    for s in chain.sections
                ],
                "uncovered_prefix": list(chain.uncovered_prefix) if chain.uncovered_prefix else None,
                "uncovered_suffix": list(chain.uncovered_suffix) if chain.uncovered_suffix else None,
            }
        )
    if args.format == "json":
        for rec in records:
            print(json.dumps(rec))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(DECOMPOSE_CSV_COLUMNS)
        for rec in records:
            prefix = _span(tuple(rec["uncovered_prefix"]) if rec["uncovered_prefix"] else None)
            suffix = _span(tuple(rec["uncovered_suffix"]) if rec["uncovered_suffix"] else None)
            if not rec["sections"]:
                writer.writerow([rec["perm"], rec["n"], rec["k"], "", "", "", "", "", prefix, suffix])
                continue
            for idx, s in enumerate(rec["sections"], start=1):
                writer.writerow(
                    [
                        rec["perm"],
                        rec["n"],
                        rec["k"],
                        idx,
                        s["start"],
                        s["end"],
                        s["direction"],
                        _joined(s["values"]),
                        prefix,
                        suffix,
                    ]
                )
    else:
        for idx, rec in enumerate(records):
            if idx:
                print()
            _print_plain([("perm", rec["perm"]), ("n", rec["n"]), ("k", rec["k"])])
            for s in rec["sections"]:
                print(f"section: {s['start']}-{s['end']} {s['direction']} | {_joined(s['values'])}")
            prefix = tuple(rec["uncovered_prefix"]) if rec["uncovered_prefix"] else None
            suffix = tuple(rec["uncovered_suffix"]) if rec["uncovered_suffix"] else None
            _print_plain([("uncovered_prefix", _span(prefix)), ("uncovered_suffix", _span(suffix))])
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    report = enumerate_stats(args.n, args.k, workers=args.workers)
    formula_as = expected_alternating_length(args.n, args.k)
    formula_zs = expected_zigzag_length(args.n, args.k)
    match = report.average_as == formula_as
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": report.n,
                    "k": report.k,
                    "perm_count": report.perm_count,
                    "sum_as": report.sum_as,
                    "sum_zs": report.sum_zs,
                    "avg_as": _fraction_fields(report.average_as),
                    "avg_zs": _fraction_fields(report.average_zs),
                    "formula_as": _fraction_fields(formula_as),
                    "formula_zs": _fraction_fields(formula_zs),
                    "match": match,
                    "half_split_count": report.half_split_count,
                    "peak_counts": list(report.peak_counts[1:]),
                }
            )
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(ENUMERATE_CSV_COLUMNS)
        writer.writerow(
            [
                report.n,
                report.k,
                report.perm_count,
                report.sum_as,
                report.sum_zs,
                report.average_as.numerator,
                report.average_as.denominator,
                report.average_zs.numerator,
                report.average_zs.denominator,
                formula_as.numerator,
                formula_as.denominator,
                "true" if match else "false",
            ]
        )
    else:
        _print_plain(
            [
                ("n", report.n),
                ("k", report.k),
                ("perm_count", report.perm_count),
                ("sum_as", report.sum_as),
                ("sum_zs", report.sum_zs),
                ("avg_as", f"{report.average_as} = {float(report.average_as)!r}"),
                ("avg_zs", f"{report.average_zs} = {float(report.average_zs)!r}"),
                ("formula_as", str(formula_as)),
                ("formula_zs", str(formula_zs)),
                ("match", "true" if match else "false"),
                ("half_split_count", report.half_split_count),
                ("peak_counts", _joined(report.peak_counts[1:])),
            ]
        )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify_identities(args.max_n, workers=args.workers)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n_max": report.n_max,
                    "pairs_checked": report.pairs_checked,
                    "identities_checked": report.identities_checked,
                    "failure_count": len(report.failures),
                    "ok": report.ok,
                    "failures": [
                        {
                            "identity": f.identity,
                            "n": f.n,
                            "k": f.k,
                            "j": f.j,
                            "expected": f.expected,
                            "actual": f.actual,
                        }
                        for f in report.failures
                    ],
                }
            )
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["n_max", "pairs_checked", "identities_checked", "failure_count", "ok"])
        writer.writerow(
            [
                report.n_max,
                report.pairs_checked,
                report.identities_checked,
                len(report.failures),
                "true" if report.ok else "false",
            ]
        )
    else:
        for f in report.failures:
            where = f"n={f.n} k={f.k}" + (f" j={f.j}" if f.j is not None else "")
            print(f"FAIL {f.identity} at {where}: expected {f.expected}, got {f.actual}")
        status = "OK" if report.ok else f"{len(report.failures)} FAILURES"
        print(
            f"checked {report.identities_checked} identities over "
            f"{report.pairs_checked} (n, k) pairs: {status}"
        )
    return 0 if report.ok else 1


def _cmd_sample(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else random.SystemRandom().getrandbits(64)
    est = estimate_average(
        args.n, args.k, args.trials, seed, statistic=args.statistic, workers=args.workers
    )
    record = {
        "n": est.n,
        "k": est.k,
        "statistic": est.statistic,
        "trials": est.trials,
        "seed": est.seed,
        "workers": est.workers,
        "mean": est.mean,
        "stderr": est.stderr,
    }
    if args.format == "json":
        print(json.dumps(record))
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(list(record))
        writer.writerow([record[key] for key in record])
    else:
        _print_plain(list(record.items()))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kzigzag",
        description="k-alternating and k-zigzagging subsequence statistics of permutations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="json", help="output format")

    def add_perm_source(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--perm", help="one-line permutation, whitespace separated")
        group.add_argument("--input", help="file with one permutation per line, or - for stdin")
        p.add_argument("--k", type=int, required=True, help="gap parameter k >= 1")

    p_stat = sub.add_parser("stat", help="lengths, witness, peaks and valleys of permutations")
    add_perm_source(p_stat)
    add_format(p_stat)
    p_stat.set_defaults(func=_cmd_stat)

    p_dec = sub.add_parser("decompose", help="maximal section chain of permutations")
    add_perm_source(p_dec)
    add_format(p_dec)
    p_dec.set_defaults(func=_cmd_decompose)

    p_enum = sub.add_parser("enumerate", help="exact statistics over all of S_n")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.add_argument("--workers", type=int, default=1)
    add_format(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_ver = sub.add_parser("verify", help="check all closed-form identities exactly")
    p_ver.add_argument("--max-n", type=int, default=9, dest="max_n")
    p_ver.add_argument("--workers", type=int, default=1)
    add_format(p_ver)
    p_ver.set_defaults(func=_cmd_verify)

    p_sam = sub.add_parser("sample", help="seeded Monte Carlo estimate of an average statistic")
    p_sam.add_argument("--n", type=int, required=True)
    p_sam.add_argument("--k", type=int, required=True)
    p_sam.add_argument("--trials", type=int, required=True)
    p_sam.add_argument("--seed", type=int, default=None, help="64-bit seed; generated and recorded if omitted")
    p_sam.add_argument("--workers", type=int, default=1)
    p_sam.add_argument("--statistic", choices=("as", "zs"), default="as")
    add_format(p_sam)
    p_sam.set_defaults(func=_cmd_sample)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidPermutationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
