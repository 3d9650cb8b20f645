"""Command-line front end.

Subcommands: ``charnum`` evaluates a characteristic number, ``diagrams``
lists floor diagrams with their marking classes and multiplicities,
``hurwitz`` evaluates closed/open Hurwitz numbers (optionally listing the
tropical covers behind an open value), and ``verify`` runs the built-in
check suites.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
inconsistency.  All numbers are printed as exact rationals ("3264", "1/2");
no floating point anywhere.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .characteristic import CharProblem, characteristic_number
from .counting import count_fd, enumerate_diagrams, enumerate_markings, marked_multiplicity
from .diagram import FloorDiagram, Marking
from .errors import IntegralityFailure
from .hurwitz import HurwitzProblem, closed_hurwitz, enumerate_tropical_covers, open_hurwitz
from .verify import SUITES, run_suite

SCHEMA_VERSION = "1"


def _rat(value) -> str:
    """Exact decimal-free rendering: integers plain, otherwise num/den."""
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    items: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            items.append(int(part))
        except ValueError:
            raise ValueError(f"{flag}: {part!r} is not an integer") from None
    return tuple(items)


def _parse_tangencies(text: str) -> tuple[int, ...]:
    """Comma list with power syntax: "2^5" means five tangency degrees 2."""
    items: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        base, _, exponent = part.partition("^")
        try:
            value = int(base)
            repeat = int(exponent) if exponent else 1
        except ValueError:
            raise ValueError(f"--tangencies: cannot parse {part!r}") from None
        if repeat < 0:
            raise ValueError(f"--tangencies: negative repeat in {part!r}")
        items.extend([value] * repeat)
    return tuple(items)


def _emit(document: dict) -> None:
    print(json.dumps(document, indent=2))


def cmd_charnum(args: argparse.Namespace) -> int:
    tangencies = _parse_tangencies(args.tangencies)
    problem = CharProblem(args.degree, args.points, tangencies)
    value = characteristic_number(problem)
    if args.format == "json":
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "request": {
                    "command": "charnum",
                    "degree": args.degree,
                    "points": args.points,
                    "tangencies": list(tangencies),
                },
                "value": _rat(value),
            }
        )
    else:
        print(value)
    return 0


def _diagram_record(diagram: FloorDiagram, markings: list[tuple[Marking, Fraction]]) -> dict:
    vertices = [
        {"id": v, "color": diagram.colors[v], "div": diagram.div[v]}
        for v in range(diagram.n_vertices)
    ]
    edges = [
        {
            "white": w,
            "black": b,
            "weight": diagram.weights[i],
            "orientation": "to_white" if diagram.toward_white[i] else "to_black",
        }
        for i, (w, b) in enumerate(diagram.edges)
    ]
    records = [
        {"assignment": list(m.assignment), "multiplicity": _rat(mu)} for m, mu in markings
    ]
    return {"vertices": vertices, "edges": edges, "markings": records}


def _diagram_text(index: int, diagram: FloorDiagram, markings) -> list[str]:
    lines = [f"diagram {index}: degree {diagram.degree}, {diagram.n_vertices} vertices"]
    vparts = ", ".join(
        f"v{v}={'white' if diagram.is_white(v) else 'black'}({diagram.div[v]:+d})"
        for v in range(diagram.n_vertices)
    )
    lines.append(f"  vertices: {vparts}")
    for i, (w, b) in enumerate(diagram.edges):
        arrow = f"v{b} -> v{w}" if diagram.toward_white[i] else f"v{w} -> v{b}"
        lines.append(f"  edge: {arrow} (weight {diagram.weights[i]})")
    if not markings:
        lines.append("  no valid markings")
    for marking, mu in markings:
        placed = " ".join(f"{j}:v{v}" for j, v in enumerate(marking.assignment, start=1))
        lines.append(f"  marking {placed}  multiplicity {_rat(mu)}")
    return lines


def _diagram_dot(index: int, diagram: FloorDiagram) -> list[str]:
    lines = [f"digraph fd{index} {{", "  rankdir=BT;"]
    for v in range(diagram.n_vertices):
        if diagram.is_white(v):
            lines.append(f'  v{v} [shape=circle, label="{diagram.div[v]:+d}"];')
        else:
            lines.append(f"  v{v} [shape=point, width=0.12];")
    for i, (w, b) in enumerate(diagram.edges):
        src, dst = (b, w) if diagram.toward_white[i] else (w, b)
        lines.append(f'  v{src} -> v{dst} [label="{diagram.weights[i]}"];')
    lines.append("}")
    return lines


def cmd_diagrams(args: argparse.Namespace) -> int:
    lcomb = _parse_int_list(args.lcomb, "--lcomb")
    diagrams = enumerate_diagrams(args.degree)
    listed: list[tuple[FloorDiagram, list[tuple[Marking, Fraction]]]] = []
    total = Fraction(0)
    for diagram in diagrams:
        markings = []
        for marking in sorted(enumerate_markings(diagram, lcomb), key=lambda m: m.assignment):
            mu = marked_multiplicity(diagram, marking)
            markings.append((marking, mu))
            total += mu
        listed.append((diagram, markings))
    check = count_fd(args.degree, lcomb)
    if total != check:
        raise IntegralityFailure(f"listing total {total} != fast total {check}")

    if args.format == "json":
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "request": {
                    "command": "diagrams",
                    "degree": args.degree,
                    "lcomb": sorted(lcomb),
                    "format": "json",
                },
                "degree": args.degree,
                "lcomb": sorted(lcomb),
                "diagrams": [_diagram_record(d, ms) for d, ms in listed],
                "total": _rat(total),
            }
        )
    elif args.format == "dot":
        out: list[str] = []
        for index, (diagram, _) in enumerate(listed):
            out.extend(_diagram_dot(index, diagram))
        print("\n".join(out))
    else:
        out = []
        for index, (diagram, markings) in enumerate(listed):
            out.extend(_diagram_text(index, diagram, markings))
        out.append(f"total {_rat(total)}")
        print("\n".join(out))
    return 0


def cmd_hurwitz(args: argparse.Namespace) -> int:
    if args.closed is not None:
        if args.delta or args.branch:
            raise ValueError("--closed excludes --delta/--branch")
        value = closed_hurwitz(args.closed)
        request = {"command": "hurwitz", "closed": args.closed}
        covers = None
    else:
        if not args.delta or not args.branch:
            raise ValueError("need either --closed D or both --delta and --branch")
        delta = _parse_int_list(args.delta, "--delta")
        branch = _parse_int_list(args.branch, "--branch")
        problem = HurwitzProblem(delta, branch)
        value = open_hurwitz(problem)
        request = {"command": "hurwitz", "delta": list(delta), "branch": list(branch)}
        covers = None
        if args.covers:
            covers = (
                sorted(enumerate_tropical_covers(problem), key=lambda c: c.key)
                if problem.feasible
                else []
            )

    if args.format == "json":
        document = {"schema": SCHEMA_VERSION, "request": request, "value": _rat(value)}
        if covers is not None:
            document["covers"] = [
                {
                    "mu": _rat(cover.mu),
                    "aut_order": cover.aut_order,
                    "edges": [
                        {"weight": w, "birth": birth, "death": death}
                        for w, birth, death in cover.edges
                    ],
                    "events": [list(event) for event in cover.events],
                }
                for cover in covers
            ]
        _emit(document)
    else:
        print(_rat(value))
        if covers is not None:

            def _pos(p) -> str:
                return p if isinstance(p, str) else f"{p[0]}{p[1]}"

            for index, cover in enumerate(covers):
                edges = ", ".join(f"w={w}[{_pos(b)},{_pos(e)}]" for w, b, e in cover.edges)
                print(f"cover {index}: muH {_rat(cover.mu)}, autOrder {cover.aut_order}, {edges}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = [args.suite] if args.suite else list(SUITES)
    failed = False
    for name in names:
        print(f"suite {name}:")
        for result in run_suite(name, jobs=args.jobs):
            if result.passed:
                print(f"  ok   {result.name}")
            else:
                failed = True
                print(f"  FAIL {result.name}: {result.detail}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeuthen",
        description="Characteristic numbers of plane rational curves via floor diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charnum", help="compute one characteristic number")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("-k", "--points", type=int, required=True, help="number of point constraints")
    p.add_argument(
        "--tangencies",
        default="",
        help='tangency degrees, comma list with power syntax, e.g. "2^5" or "3,1,1"',
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_charnum)

    p = sub.add_parser("diagrams", help="list floor diagrams, markings, multiplicities")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("--lcomb", default="", help='labels constrained by lines, e.g. "4,5"')
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.set_defaults(func=cmd_diagrams)

    p = sub.add_parser("hurwitz", help="closed or open Hurwitz numbers")
    p.add_argument("--closed", type=int, default=None, metavar="D")
    p.add_argument("--delta", default="", help='boundary profile, e.g. "2,0"')
    p.add_argument("--branch", default="", help='branch point counts, e.g. "1,0"')
    p.add_argument("--covers", action="store_true", help="also list the tropical covers")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("verify", help="run built-in verification suites")
    p.add_argument("--suite", choices=tuple(SUITES), default=None, help="default: all suites")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except IntegralityFailure as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
