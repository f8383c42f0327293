# ruff: noqa: T201
"""Profiler for the usl claim registry.

Each claim is run on its own, single threaded, so the timings are not mixed with
pool scheduling. The wall-clock table lists the slowest claims first; cProfile
then shows where the time goes.

Usage:
    python tests/profiler.py
    python tests/profiler.py --claim C14
    python tests/profiler.py --tier all --repeats 3 --top 30
"""

import argparse
import cProfile
import pstats
import time

from usl.claim import TIERS, Claim
from usl.config import Settings
from usl.verify import get_all_claims, select_claims

_SETTINGS = Settings(threads=1)


def _parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Profile usl claims.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "--claim",
        metavar="ID",
        help="Profile only this claim (e.g. C14).",
    )
    parser.add_argument(
        "--tier",
        choices=[*TIERS, "all"],
        default="fast",
        help="Claims to profile when --claim is not given.",
    )
    parser.add_argument(
        "--repeats",
        type=int,
        default=1,
        metavar="N",
        help="Runs per claim.",
    )
    parser.add_argument(
        "--top",
        type=int,
        default=30,
        metavar="N",
        help="Number of functions to show in cProfile output.",
    )
    return parser.parse_args()


def _run_timing(
    claims: list[type[Claim]], repeats: int
) -> list[tuple[str, str, float]]:
    """Return per-claim ``(id, verdict, elapsed_s)``, slowest first."""
    results: list[tuple[str, str, float]] = []
    for claim in claims:
        verdict = ""
        start = time.perf_counter()
        for _ in range(repeats):
            verdict = claim.run(_SETTINGS).verdict
        elapsed = time.perf_counter() - start
        results.append((claim.claim_id, verdict, elapsed / repeats))

    return sorted(results, key=lambda r: r[2], reverse=True)


def main() -> None:
    args = _parse_args()
    all_claims = get_all_claims()

    if args.claim:
        if args.claim not in all_claims:
            available = ", ".join(all_claims)
            print(f"Unknown claim '{args.claim}'. Available: {available}")
            return
        claims = [all_claims[args.claim]]
    else:
        claims = select_claims(None if args.tier == "all" else args.tier)

    print(f"Profiling {len(claims)} claim(s), {args.repeats} run(s) each\n")

    timing = _run_timing(claims, args.repeats)
    header = f"{'Claim':<6} {'Verdict':<13} {'Seconds':>10}"
    rule = "-" * len(header)
    print(header)
    print(rule)
    for claim_id, verdict, elapsed in timing:
        print(f"{claim_id:<6} {verdict:<13} {elapsed:>10.3f}")
    print(rule)
    print(f"{'Total':<20} {sum(e for _, _, e in timing):>10.3f}\n")

    print(f"cProfile top {args.top} functions by tottime:")
    print(rule)

    with cProfile.Profile() as pr:
        for claim in claims:
            claim.run(_SETTINGS)

    pstats.Stats(pr).sort_stats("tottime").print_stats(args.top)


if __name__ == "__main__":
    main()
