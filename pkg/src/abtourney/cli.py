"""Command line front end.

Seven subcommands over the library: check, reconstruct, verify,
enumerate, count, gen, and trace.  The CLI owns all text parsing and
formatting, sorts unsorted score input (remembering the permutation so
tables come back out in the original player order), and maps every
outcome onto a fixed exit-code contract:

    0  accepted / verified / success
    1  rejected input or failed verification
    2  usage error or enumeration budget refusal
    3  internal invariant violation (a bug, never expected)

The trace subcommand writes two TSV files (per-pass parameters and the
per-round provisional score vectors) plus a staircase figure rendered
from the same data; --no-plot skips the figure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Sequence
from pathlib import Path

from .bounds import TournamentParams
from .check import Verdict, score_check
from .errors import (
    AlgorithmInvariantError,
    EnumerationBudgetError,
    InfeasibleSequenceError,
)
from .oracle import (
    DEFAULT_BUDGET,
    RandomSpec,
    Violation,
    count_reconstructions,
    enumerate_score_sequences,
    random_tournament,
    verify_table,
)
from .reconstruct import reconstruct, reconstruct_with_trace
from .table import PointTable

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_TOKEN = re.compile(r"[^\s,]+")
_INT = re.compile(r"[+-]?\d+$")
# the paper's tables print the diagonal as a dash; accept both dash forms
_DIAGONAL = {"-", "—"}


class UsageError(Exception):
    """Bad invocation or malformed input; reported on stderr, exit 2."""


def _read_source(path: str | None) -> str:
    """Contents of path, or stdin when path is None or '-'."""
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def parse_scores(text: str) -> list[int]:
    """Whitespace/comma separated integers; '#' comments to end of line.

    Returns the scores in input order.  Raises UsageError with the line
    and column of the first bad token; empty input is an error.
    """
    out: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for m in _TOKEN.finditer(body):
            tok = m.group()
            if not _INT.match(tok):
                raise UsageError(
                    f"line {lineno}, column {m.start() + 1}: "
                    f"{tok!r} is not an integer score"
                )
            value = int(tok)
            if value < 0:
                raise UsageError(
                    f"line {lineno}, column {m.start() + 1}: "
                    f"negative score {value}"
                )
            out.append(value)
    if not out:
        raise UsageError("no scores found in input")
    return out


def parse_point_table(text: str) -> PointTable:
    """n lines of n comma-separated fields; diagonal may be '0' or '-'.

    Blank lines and '#' comments are ignored.  The diagonal is normalized
    to 0; ragged rows, nonzero diagonals, negative or non-integer entries
    raise UsageError.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        rows.append((lineno, [f.strip() for f in body.split(",")]))
    if not rows:
        raise UsageError("no table rows found in input")
    n = len(rows)
    mat: list[list[int]] = []
    for i, (lineno, fields) in enumerate(rows):
        if len(fields) != n:
            raise UsageError(
                f"line {lineno}: expected {n} fields for a {n}x{n} table, "
                f"got {len(fields)}"
            )
        row: list[int] = []
        for j, tok in enumerate(fields):
            if i == j and tok in _DIAGONAL:
                row.append(0)
                continue
            if not _INT.match(tok):
                raise UsageError(
                    f"line {lineno}: {tok!r} is not an integer entry"
                )
            value = int(tok)
            if value < 0:
                raise UsageError(f"line {lineno}: negative entry {value}")
            if i == j and value != 0:
                raise UsageError(
                    f"line {lineno}: diagonal entry must be 0 or '-', "
                    f"got {value}"
                )
            row.append(value)
        mat.append(row)
    return PointTable(mat)


def format_table_csv(t: PointTable) -> str:
    """Comma-separated rows, '0' on the diagonal; parses back equal."""
    return "\n".join(",".join(str(v) for v in row) for row in t) + "\n"


def _sorted_with_order(values: Sequence[int]) -> tuple[tuple[int, ...], list[int]]:
    """Nondecreasing copy of values plus the order: order[j] is the
    original index of sorted position j (stable for ties)."""
    order = sorted(range(len(values)), key=lambda i: (values[i], i))
    return tuple(values[i] for i in order), order


def _to_original_order(table: PointTable, order: list[int]) -> PointTable:
    """Relabel a table built for the sorted sequence back to input order."""
    n = table.n
    pos = [0] * n
    for j, original in enumerate(order):
        pos[original] = j
    return PointTable(
        [[table[pos[x]][pos[y]] for y in range(n)] for x in range(n)]
    )


def _make_params(args: argparse.Namespace, n: int) -> TournamentParams:
    try:
        return TournamentParams(n, args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _print_violations(violations: Sequence[Violation]) -> None:
    for v in violations:
        players = ",".join(str(i) for i in v.indices)
        print(
            f"violation: {v.kind} at player(s) {players}: observed {v.observed}",
            file=sys.stderr,
        )


def _cmd_check(args: argparse.Namespace) -> int:
    values = parse_scores(_read_source(args.scores))
    params = _make_params(args, len(values))
    report = score_check(params, tuple(sorted(values)))
    if args.json:
        payload = {
            "verdict": report.verdict.value,
            "index": report.failing_index,
            "B": list(report.tables.B),
            "S": list(report.tables.S),
            "L": list(report.tables.L),
        }
        print(json.dumps(payload))
    elif report.verdict is Verdict.SCORE_TOO_SMALL:
        print(f"{report.failing_index}-th score is too small")
    elif report.verdict is Verdict.SCORE_TOO_LARGE:
        print(f"{report.failing_index}-th score is too large")
    else:
        print("the sequence satisfies both necessary conditions")
    return EXIT_OK if report.accepted else EXIT_REJECTED


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    values = parse_scores(_read_source(args.scores))
    sorted_values, order = _sorted_with_order(values)
    params = _make_params(args, len(values))
    table = reconstruct(params, sorted_values)
    out = _to_original_order(table, order)
    report = verify_table(params, out, values)
    if not report.passed:
        _print_violations(report.violations)
        print("internal error: reconstructed table failed verification",
              file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(format_table_csv(out))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.table is None:
        raise UsageError("verify needs --table <file>")
    table = parse_point_table(_read_source(args.table))
    values = parse_scores(_read_source(args.scores))
    if len(values) != table.n:
        raise UsageError(
            f"{table.n}x{table.n} table but {len(values)} scores"
        )
    params = _make_params(args, table.n)
    report = verify_table(params, table, values)
    _print_violations(report.violations)
    return EXIT_OK if report.passed else EXIT_REJECTED


def _cmd_enumerate(args: argparse.Namespace) -> int:
    params = _make_params(args, args.n)
    sequences = enumerate_score_sequences(params, budget=args.budget)
    for seq in sorted(sequences):
        print(" ".join(str(v) for v in seq))
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    values = parse_scores(_read_source(args.scores))
    params = _make_params(args, len(values))
    print(count_reconstructions(params, tuple(sorted(values)),
                                budget=args.budget))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    params = _make_params(args, args.n)
    table = random_tournament(RandomSpec(params, seed=args.seed))
    sys.stdout.write(format_table_csv(table))
    return EXIT_OK


def _cmd_trace(args: argparse.Namespace) -> int:
    values = parse_scores(_read_source(args.scores))
    sorted_values, order = _sorted_with_order(values)
    params = _make_params(args, len(values))
    table, trace = reconstruct_with_trace(params, sorted_values)
    out = _to_original_order(table, order)

    outdir = Path(args.trace_dir)
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create {outdir}: {exc}") from None

    params_path = outdir / "trace_params.tsv"
    lines = ["k\tx\tA_pool\tM\tf\td\tm\ty"]
    for rnd in trace.rounds:
        for p in rnd.passes:
            lines.append(
                f"{p.k}\t{p.x}\t{p.a_pool}\t{p.missing}\t{p.f}\t{p.d}"
                f"\t{p.m}\t{p.y}"
            )
    params_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    scores_path = outdir / "trace_scores.tsv"
    n = params.n
    head = "k\t" + "\t".join(f"p{i}" for i in range(1, n + 1))
    rows = [head]
    for k, vec in trace.round_vectors():
        cells = [str(k)] + [str(v) for v in vec] + [""] * (n - len(vec))
        rows.append("\t".join(cells))
    scores_path.write_text("\n".join(rows) + "\n", encoding="utf-8")

    written = [params_path, scores_path]
    if not args.no_plot:
        from .plots import save_staircase

        written.append(save_staircase(trace, outdir / "trace_staircase.png"))

    sys.stdout.write(format_table_csv(out))
    for path in written:
        print(str(path), file=sys.stderr)
    return EXIT_OK


def _add_ab(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", type=int, required=True, metavar="A",
                        help="minimum points exchanged per pair")
    parser.add_argument("--b", type=int, required=True, metavar="B",
                        help="maximum points exchanged per pair")


def _add_scores(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scores", metavar="FILE",
                        help="score file ('-' or omitted: stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abtourney",
        description="Score sequences of complete (a,b)-tournaments: "
        "feasibility checking, table reconstruction, and brute-force "
        "oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a score sequence for feasibility")
    _add_ab(p)
    _add_scores(p)
    p.add_argument("--json", action="store_true",
                   help="emit a machine readable report")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("reconstruct",
                       help="build a point table realizing the scores")
    _add_ab(p)
    _add_scores(p)
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("verify", help="check a point table against scores")
    _add_ab(p)
    _add_scores(p)
    p.add_argument("--table", metavar="FILE", help="point table CSV file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate",
                       help="list every achievable score sequence")
    _add_ab(p)
    p.add_argument("--n", type=int, required=True, help="number of players")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="outcome-space work budget (refuses above this)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count",
                       help="count the labeled tables realizing the scores")
    _add_ab(p)
    _add_scores(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="outcome-space work budget (refuses above this)")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("gen", help="generate a random tournament table")
    _add_ab(p)
    p.add_argument("--n", type=int, required=True, help="number of players")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser(
        "trace",
        help="reconstruct and write per-round TSVs plus a staircase figure",
    )
    _add_ab(p)
    _add_scores(p)
    p.add_argument("--trace-dir", default=".", metavar="DIR",
                   help="directory for the TSV/figure artifacts")
    p.add_argument("--no-plot", action="store_true",
                   help="skip the staircase figure")
    p.set_defaults(func=_cmd_trace)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleSequenceError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except AlgorithmInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
