"""Command-line front end: ``stableskc generate | verify | compare | fano-enumerate | random``."""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .binpoly import BinPoly, default_modulus, is_irreducible, parse_poly
from .fano import build_fano_skc, canonical_plane, enumerate_assignments, format_assignment, parse_assignment
from .galois_skc import TeamMap, build_galois_skc
from .gf2k import FieldCtx
from .schedule import ScheduleFormatError, read_schedule, render_schedule

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

MIN_PLAYERS = 4
MAX_PLAYERS = 1024

# default node-line assignment; yields the golden table1 schedule
TABLE1_ASSIGNMENT = """\
1: 1,4,5
4: 2,4,6
2: 1,2,3
3: 3,5,6
5: 2,5,7
7: 3,4,7
6: 1,6,7
"""


class UsageError(Exception):
    pass


def _players_to_k(n: int) -> int:
    if n < MIN_PLAYERS or n > MAX_PLAYERS or n & (n - 1):
        raise UsageError(f"--players must be a power of 2 in [{MIN_PLAYERS}, {MAX_PLAYERS}], got {n}")
    return n.bit_length() - 1


def _parse_modulus(text: str, k: int) -> BinPoly:
    try:
        q = parse_poly(text)
    except ValueError as exc:
        raise UsageError(f"bad --modulus: {exc}") from None
    if q.degree != k:
        raise UsageError(f"--modulus {q} ({q.hex()}) has degree {q.degree}, but {1 << k} players need degree {k}")
    if not is_irreducible(q):
        raise UsageError(f"--modulus {q} ({q.hex()}) is reducible; GF(2^{k}) needs an irreducible polynomial")
    return q


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    k = _players_to_k(args.players)
    if args.method == "fano":
        if args.players != 8:
            raise UsageError("--method fano only supports --players 8")
        if args.modulus is not None or args.team_map is not None:
            raise UsageError("--modulus and --team-map cannot be combined with --method fano")
        text = Path(args.assignment).read_text() if args.assignment else TABLE1_ASSIGNMENT
        try:
            assignment = parse_assignment(text)
            schedule = build_fano_skc(assignment, canonical_plane())
        except ValueError as exc:
            raise UsageError(f"invalid node-line assignment: {exc}") from None
    else:
        if args.assignment is not None:
            raise UsageError("--assignment requires --method fano")
        modulus = _parse_modulus(args.modulus, k) if args.modulus else default_modulus(k)
        try:
            team_map = TeamMap.named(args.team_map or "identity", k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        schedule = build_galois_skc(FieldCtx(k, modulus), team_map)
    _emit(render_schedule(schedule, args.format), args.out)
    return EXIT_OK


def _write_report(report, path: str) -> None:
    p = Path(path)
    if p.suffix.lower() == ".csv":
        with p.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["round", "x", "y", "count"])
            for i in range(report.k):
                for x in range(report.n):
                    for y in range(x + 1, report.n):
                        writer.writerow([i + 1, x, y, int(report.counts[i, x, y])])
    else:
        p.write_text(json.dumps(report.to_dict(), indent=1) + "\n")


def cmd_verify(args) -> int:
    from .verifier import check_stability

    schedule = read_schedule(args.file)
    if not schedule.seedings:
        raise ScheduleFormatError("no seedings found", source=args.file)
    if not schedule.is_skc_sized():
        print(
            f"warning: {len(schedule)} seedings; an SKC on {schedule.n} players has {schedule.n - 1}."
            " Checking stability of the set anyway.",
            file=sys.stderr,
        )
    report = check_stability(schedule, max_witnesses=args.max_witnesses)
    print(report.summary(max_witnesses=args.max_witnesses))
    if args.report:
        _write_report(report, args.report)
    if args.figure:
        from .plots import plot_report

        plot_report(report, args.figure)
    return EXIT_OK if report.stable else EXIT_FAIL


def cmd_compare(args) -> int:
    from .verifier import compare_schedules

    a = read_schedule(args.first)
    b = read_schedule(args.second)
    try:
        matching = compare_schedules(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if matching is None:
        print("no matching")
        return EXIT_FAIL
    for i, j in matching:
        print(f"{i + 1} -> {j + 1}")
    return EXIT_OK


def cmd_fano_enumerate(args) -> int:
    assignments = enumerate_assignments(canonical_plane())
    blocks = [f"# assignment {i}\n{format_assignment(a)}" for i, a in enumerate(assignments, start=1)]
    sys.stdout.write("\n".join(blocks))
    print(f"# {len(assignments)} assignments", file=sys.stderr)
    return EXIT_OK


def cmd_random(args) -> int:
    from .verifier import random_schedule

    k = _players_to_k(args.players)
    _emit(render_schedule(random_schedule(k, args.seed), args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stableskc", description="Generate and verify stable serial knockout competitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a stable schedule")
    g.add_argument("--players", type=int, required=True)
    g.add_argument("--method", choices=["galois", "fano"], default="galois")
    g.add_argument("--modulus", help="irreducible polynomial, hex bits (0xB) or X^3+X+1")
    g.add_argument("--team-map", choices=["identity", "paper8"])
    g.add_argument("--assignment", help="node-line assignment file for --method fano")
    g.add_argument("--format", choices=["chars", "decimal"], help="seeding format (default: chars up to 32 players)")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check a schedule file for stability")
    v.add_argument("file")
    v.add_argument("--report", help="write the full count report (.json, or .csv for delimited rows)")
    v.add_argument("--figure", help="write per-round count heatmaps (png, pdf, svg)")
    v.add_argument("--max-witnesses", type=int, default=20)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compare", help="match the tournaments of two schedules")
    c.add_argument("first")
    c.add_argument("second")
    c.set_defaults(func=cmd_compare)

    f = sub.add_parser("fano-enumerate", help="list every valid node-line assignment")
    f.set_defaults(func=cmd_fano_enumerate)

    r = sub.add_parser("random", help="emit a random (usually unstable) schedule")
    r.add_argument("--players", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--format", choices=["chars", "decimal"])
    r.add_argument("--out")
    r.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScheduleFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
