# ruff: noqa: T201
"""Command line interface.

Usage:
    usl make k3 -o k3.usg
    usl make --family full --field "gf(3)" --n 2 --unary mp -o m2.usg
    usl make --rees t1.rees -o t1.usg
    usl info k3.usg --json
    usl check k3.usg "x x' x = x"
    usl isoterm tb.usg "x y x" --max-len 5
    usl sapir --k 1 --depth 3 --identity "x x = x x x"
    usl verify --tier fast --json report.json --no-timings
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, cast

from .claim import TIERS, ClaimReport, ClaimVerdict, Tier
from .config import DEFAULT_SETTINGS, Settings
from .constructions.named import named_semigroup, named_structures
from .constructions.rees import rees_matrix, rees_spec_read
from .core import classify_unary, validate_structure
from .matrices.families import FamilyName, UnaryKind, build_matrix_family
from .matrices.field import parse_field
from .sapir import SapirSystem, find_square, model_check_identity, twisted_model
from .semigroup import StructureError, UnarySemigroup
from .terms import check_identity, isoterm_search, parse_identity
from .terms import parse_word as parse_involutory_word
from .usg import usg_dumps, usg_read, usg_write
from .verify import run_all

_logger = logging.getLogger(__name__)

# Exit codes of ``check`` and ``sapir --identity``
_EXIT_CODES = {"holds": 0, "fails": 1, "inconclusive": 2}

_VERDICTS: tuple[ClaimVerdict, ...] = ("pass", "fail", "inconclusive")


def _settings(args: argparse.Namespace) -> Settings:
    changes: dict[str, int] = {}
    if args.threads is not None:
        changes["threads"] = args.threads
    if args.budget is not None:
        changes |= {
            "assignment_budget": args.budget,
            "morphism_node_budget": args.budget,
            "isoterm_budget": args.budget,
        }
    return DEFAULT_SETTINGS.replace(**changes)


def _make(args: argparse.Namespace, settings: Settings) -> int:
    s: UnarySemigroup
    if args.rees is not None:
        spec = rees_spec_read(Path(args.rees).read_text(encoding="utf-8"))
        s = rees_matrix(spec, settings)
    elif args.family is not None:
        field = parse_field(args.field) if args.field else None
        s = build_matrix_family(
            cast(FamilyName, args.family),
            args.n,
            field,
            cast(UnaryKind, args.unary),
            settings=settings,
        ).semigroup
    elif args.name is not None:
        s = named_semigroup(args.name)
    else:
        raise StructureError("Give a structure name, --family or --rees.")

    if args.output is None:
        sys.stdout.write(usg_dumps(s, settings))
    else:
        usg_write(s, args.output, settings)
        _logger.info("Wrote %d elements to %s", s.size, args.output)
    return 0


def _info(args: argparse.Namespace, settings: Settings) -> int:
    s = usg_read(args.file)
    violations = validate_structure(s, settings)
    flags = classify_unary(s) if s.arity else ()

    info: dict[str, Any] = {
        "size": s.size,
        "unary": s.arity,
        "zero": None if s.zero_id is None else s.label(s.zero_id),
        "identity": None if s.identity_id is None else s.label(s.identity_id),
        "associative": not any(v.kind == "associativity" for v in violations),
        "violations": [v.detail for v in violations],
        "operations": [
            {
                "index": f.index,
                "involution": f.involution,
                "anti_automorphism": f.anti_automorphism,
                "regular": f.regular,
                "involutory": f.involutory,
            }
            for f in flags
        ],
    }
    if args.json:
        print(json.dumps(info, indent=2))
        return 0

    print(f"size {s.size}")
    print(f"unary operations {s.arity}")
    for name in ("zero", "identity"):
        if info[name] is not None:
            print(f"{name} {info[name]}")
    print("associative" if info["associative"] else "not associative")
    for detail in info["violations"]:
        print(f"  {detail}")
    for f in flags:
        laws = [
            law
            for law in ("involutory", "involution", "anti_automorphism", "regular")
            if getattr(f, law)
        ]
        print(f"operation {f.index}: {', '.join(laws) or 'no involutory laws'}")
    return 0


def _check(args: argparse.Namespace, settings: Settings) -> int:
    s = usg_read(args.file)
    lhs, rhs = parse_identity(args.identity, s.arity)
    result = check_identity(s, lhs, rhs, settings)

    if result.verdict == "fails":
        print(f"fails: {result.describe(s)}")
    else:
        print(f"{result.verdict} ({result.checked} of {result.total} assignments)")
    return _EXIT_CODES[result.verdict]


def _isoterm(args: argparse.Namespace, settings: Settings) -> int:
    s = usg_read(args.file)
    report = isoterm_search(s, parse_involutory_word(args.word), args.max_len, settings)

    for match in report.matches:
        print(f"{report.word} = {match}")
    print(f"{report.verdict}: {report.examined} candidates, {report.caveat}")
    if not report.complete:
        return 2
    return 1 if report.matches else 0


def _sapir(args: argparse.Namespace, settings: Settings) -> int:
    system = SapirSystem(args.k)
    word = system.iterate(args.depth, settings)
    square = find_square(word)
    if args.print_word:
        print(system.format_word(word))
    if square is None:
        print(f"gamma^{args.depth}(a1.1): {len(word)} letters, square-free")
    else:
        print(f"gamma^{args.depth}(a1.1): square at {square[0]}, period {square[1]}")

    if args.identity is None:
        return 0 if square is None else 1

    model = twisted_model(system, args.max_length, args.depth, settings)
    result = model_check_identity(
        model, parse_identity(args.identity, 1), args.max_word_len, settings
    )
    if result.verdict == "fails":
        print(f"fails: {result.describe(model)}")
    else:
        print(
            f"{result.verdict} ({result.checked} assignments, "
            f"{result.overflowed} overflowed, stabilized={result.stabilized})"
        )
    if not result.within_k:
        print(f"note: more than k={system.k} variables")
    return _EXIT_CODES[result.verdict]


def _print_report(report: ClaimReport) -> None:
    timing = "" if report.ms is None else f" {report.ms:10.1f} ms"
    print(f"{report.claim_id:>4} {report.verdict:<12}{timing}  {report.title}")
    if report.verdict != "pass":
        print(f"     {json.dumps(report.witness)}")


def _verify(args: argparse.Namespace, settings: Settings) -> int:
    tier: Tier | None = None if args.tier == "all" else cast(Tier, args.tier)
    reports = run_all(tier, settings, args.claims or None)
    if args.no_timings:
        reports = [report.without_timing() for report in reports]

    for report in reports:
        _print_report(report)

    counts = {v: sum(r.verdict == v for r in reports) for v in _VERDICTS}
    print(", ".join(f"{count} {verdict}" for verdict, count in counts.items()))

    if args.json is not None:
        payload = json.dumps([r.to_json() for r in reports], indent=2)
        Path(args.json).write_text(payload + "\n", encoding="utf-8")
    return 1 if counts["fail"] else 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="usl",
        description="Build, inspect and verify finite unary semigroups.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--threads", type=int, metavar="N", help="Worker threads.")
    parser.add_argument(
        "--budget",
        type=int,
        metavar="N",
        help="Assignment, morphism and isoterm search budget.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log at INFO (-v) or DEBUG (-vv).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    make = commands.add_parser("make", help="Write a structure as .usg.")
    make.add_argument(
        "name", nargs="?", help=f"One of {', '.join(named_structures())}."
    )
    make.add_argument("--family", help="A matrix family, e.g. full or hall.")
    make.add_argument("--field", help="Entry field, e.g. gf(3).")
    make.add_argument("--n", type=int, default=2, help="Matrix size.")
    make.add_argument("--unary", default="transpose", help="Unary operation.")
    make.add_argument("--rees", metavar="FILE", help="A Rees matrix spec file.")
    make.add_argument("-o", "--output", metavar="FILE", help="Output file.")
    make.set_defaults(handler=_make)

    info = commands.add_parser("info", help="Describe a .usg structure.")
    info.add_argument("file")
    info.add_argument("--json", action="store_true", help="Print JSON.")
    info.set_defaults(handler=_info)

    check = commands.add_parser("check", help="Check an identity.")
    check.add_argument("file")
    check.add_argument("identity", help="E.g. \"x x' x = x\".")
    check.set_defaults(handler=_check)

    isoterm = commands.add_parser("isoterm", help="Bounded isoterm search.")
    isoterm.add_argument("file")
    isoterm.add_argument("word", help="E.g. \"x y x\".")
    isoterm.add_argument("--max-len", type=int, default=5, help="Longest candidate.")
    isoterm.set_defaults(handler=_isoterm)

    sapir = commands.add_parser("sapir", help="Square-free words and their model.")
    sapir.add_argument("--k", type=int, default=1, help="Number of variables.")
    sapir.add_argument("--depth", type=int, default=3, help="Iteration depth m.")
    sapir.add_argument("--print-word", action="store_true", help="Print the word.")
    sapir.add_argument("--identity", help="Identity to check on the model.")
    sapir.add_argument("--max-length", type=int, default=8, help="Factor bound.")
    sapir.add_argument(
        "--max-word-len", type=int, default=2, help="Longest factor assigned."
    )
    sapir.set_defaults(handler=_sapir)

    verify = commands.add_parser("verify", help="Run the claim registry.")
    verify.add_argument("claims", nargs="*", help="Claim ids; default the tier.")
    verify.add_argument("--tier", choices=[*TIERS, "all"], default="fast")
    verify.add_argument("--json", metavar="PATH", help="Write the report array.")
    verify.add_argument(
        "--no-timings", action="store_true", help="Write null timings."
    )
    verify.set_defaults(handler=_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args, _settings(args))
    except ValueError as error:
        print(f"usl: {error}", file=sys.stderr)
    except KeyError as error:
        print(f"usl: {error.args[0]}", file=sys.stderr)
    except OSError as error:
        print(f"usl: {error}", file=sys.stderr)
    return 3


if __name__ == "__main__":
    sys.exit(main())
