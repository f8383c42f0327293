"""Claim registry and runner.

This module provides ``get_all_claims()``, which discovers every concrete claim in
``usl.claims``, and the two entry points used by ``usl verify``: ``run_claim`` for a
single id and ``run_all`` for a whole tier.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from inspect import getmembers, isclass

from . import claims
from .claim import Claim, ClaimReport, Tier
from .config import DEFAULT_SETTINGS, Settings

_logger = logging.getLogger(__name__)


class UnknownClaimError(KeyError):
    """Raised for a claim id that is not in the registry."""


def get_all_claims() -> dict[str, type[Claim]]:
    """Discovers and returns all available claims.

    Returns:
        A dictionary mapping claim ids to their Claim subclasses, ordered by the
            numeric part of the id, e.g.

            {'C1': <class 'usl.claims.rank_one.RankOneIdentity'>,
             'C2': <class 'usl.claims.rank_one.RankOneCorollary'>,
             }

    Raises:
        ValueError: If two claims share an id

    Examples:
        >>> all_claims = get_all_claims()
        >>> list(all_claims)[:3]
        ['C1', 'C2', 'C3']
        >>> all_claims['C7'].title
        'TB is realized by six 0/1 matrices'
        >>> all_claims['C23'].tier
        'slow'
    """
    found: dict[str, type[Claim]] = {}

    for module_name in getattr(claims, "__all__", []):
        module = getattr(claims, module_name)

        for _, obj in getmembers(module):
            if not isclass(obj) or not issubclass(obj, Claim) or obj is Claim:
                continue
            existing = found.setdefault(obj.claim_id, obj)
            if existing is not obj:
                raise ValueError(
                    f"Claim id {obj.claim_id} is used by {existing.__name__} and {obj.__name__}."  # noqa: E501
                )

    return dict(sorted(found.items(), key=lambda item: item[1].number))


def run_claim(claim_id: str, settings: Settings = DEFAULT_SETTINGS) -> ClaimReport:
    """Runs one claim.

    Args:
        claim_id: Id such as ``"C7"``
        settings: Budgets for the scans and searches involved

    Raises:
        UnknownClaimError: If no claim has this id

    Examples:
        >>> run_claim("C7").verdict
        'pass'
        >>> run_claim("C99")
        Traceback (most recent call last):
            ...
        usl.verify.UnknownClaimError: 'Unknown claim C99.'
    """
    registry = get_all_claims()
    if claim_id not in registry:
        raise UnknownClaimError(f"Unknown claim {claim_id}.")
    return registry[claim_id].run(settings)


def select_claims(
    tier: Tier | None = "fast", ids: list[str] | None = None
) -> list[type[Claim]]:
    """Claims of a tier, or the named ones, in registry order.

    Args:
        tier: ``"fast"`` or ``"slow"``; None selects both tiers
        ids: Explicit ids; when given, ``tier`` is ignored

    Raises:
        UnknownClaimError: If an id is not in the registry
    """
    registry = get_all_claims()
    if ids:
        unknown = [claim_id for claim_id in ids if claim_id not in registry]
        if unknown:
            raise UnknownClaimError(f"Unknown claims {', '.join(unknown)}.")
        return [claim for claim_id, claim in registry.items() if claim_id in ids]
    return [
        claim for claim in registry.values() if tier is None or claim.tier == tier
    ]


def run_all(
    tier: Tier | None = "fast",
    settings: Settings = DEFAULT_SETTINGS,
    ids: list[str] | None = None,
) -> list[ClaimReport]:
    """Runs every selected claim concurrently.

    Claims share a pool of ``settings.threads`` workers. Reports come back in
    registry order whatever the completion order, and verdicts do not depend on the
    number of threads.

    Args:
        tier: ``"fast"`` or ``"slow"``; None runs both tiers
        settings: Budgets and parallelism
        ids: Explicit ids to run instead of a tier

    Returns:
        One report per claim

    Raises:
        UnknownClaimError: If an id is not in the registry
    """
    selected = select_claims(tier, ids)
    _logger.info("Running %d claims on %d threads", len(selected), settings.threads)

    with ThreadPoolExecutor(max_workers=settings.threads) as pool:
        futures = [pool.submit(claim.run, settings) for claim in selected]
        return [future.result() for future in futures]
