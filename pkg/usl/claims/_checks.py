"""Shared steps of claim checks.

Each helper either returns the value a claim goes on with or the ``Outcome`` that
ends the check, so a claim reads as a list of steps::

    result = expect_identity(s, identity, "holds", "K3", settings)
    if isinstance(result, Outcome):
        return result
"""

from typing import Literal

from ..claim import Outcome
from ..config import Settings
from ..core import MorphismResult
from ..matrices.realizations import Realization
from ..semigroup import UnarySemigroup
from ..terms import Identity, IdentityResult, check_identity, format_identity


def expect_identity(
    s: UnarySemigroup,
    identity: Identity,
    expected: Literal["holds", "fails"],
    where: str,
    settings: Settings,
) -> IdentityResult | Outcome:
    """Scans an identity and compares the verdict with the expected one."""
    result = check_identity(s, *identity, settings)
    text = format_identity(identity)

    if result.verdict == "inconclusive":
        return Outcome.inconclusive(
            "assignment_budget",
            structure=where,
            identity=text,
            assignments=result.total,
        )
    if result.verdict != expected:
        return Outcome.failed(
            f"expected the identity to {expected.removesuffix('s')} in {where}",
            identity=text,
            counterexample=result.describe(s),
        )
    return result


def expect_found(result: MorphismResult, what: str) -> Outcome | None:
    """None when a morphism was found, the ending outcome otherwise."""
    match result.verdict:
        case "found":
            return None
        case "inconclusive":
            return Outcome.inconclusive(
                "morphism_node_budget", morphism=what, nodes=result.nodes
            )
        case "none":
            return Outcome.failed(f"no {what}", detail=result.reason)


def verify_realization(
    realization: Realization, settings: Settings
) -> dict[str, str] | Outcome:
    """Verifies a realization and returns its correspondence by labels."""
    result = realization.verify(settings)
    ending = expect_found(result, realization.name)
    if ending is not None:
        return ending

    target = realization.target
    return {
        str(matrix): target.label(image)
        for matrix, image in zip(
            realization.matrices, realization.images, strict=True
        )
    }
