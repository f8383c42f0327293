"""Abstract base class for machine-checked claims.

A claim is a finite assertion about concrete structures: an identity that holds or
fails, a set of matrices that realizes a named structure, a construction whose
self-checks pass. Each concrete claim is a subclass of ``Claim`` carrying its
metadata in class variables and implementing ``check``, which rebuilds everything
it needs from the constructions and returns an ``Outcome``.
"""

import logging
import re
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar, Literal

from .config import DEFAULT_SETTINGS, Settings
from .semigroup import ConstructionError, StructureError

_logger = logging.getLogger(__name__)

type ClaimVerdict = Literal["pass", "fail", "inconclusive"]
type Tier = Literal["fast", "slow"]
type Witness = dict[str, Any]

TIERS: tuple[Tier, ...] = ("fast", "slow")

_CLAIM_ID = re.compile(r"C([1-9]\d*)")


@dataclass(frozen=True, slots=True)
class Outcome:
    """What a claim's check established.

    A failing outcome always names a witness, an inconclusive one always names the
    budget that ran out.

    Attributes:
        verdict: ``"pass"``, ``"fail"`` or ``"inconclusive"``
        witness: JSON-compatible certificate or counterexample

    Examples:
        >>> Outcome.passed(size=10).witness
        {'size': 10}
        >>> Outcome("fail", {})
        Traceback (most recent call last):
            ...
        ValueError: A failing outcome needs a witness.
    """

    verdict: ClaimVerdict
    witness: Witness = field(default_factory=dict[str, Any])

    def __post_init__(self) -> None:
        if self.verdict == "fail" and not self.witness:
            raise ValueError("A failing outcome needs a witness.")
        if self.verdict == "inconclusive" and "budget" not in self.witness:
            raise ValueError("An inconclusive outcome must name its budget.")

    @classmethod
    def passed(cls, **witness: Any) -> "Outcome":
        return cls("pass", witness)

    @classmethod
    def failed(cls, reason: str, **witness: Any) -> "Outcome":
        return cls("fail", {"reason": reason, **witness})

    @classmethod
    def inconclusive(cls, budget: str, **witness: Any) -> "Outcome":
        return cls("inconclusive", {"budget": budget, **witness})


@dataclass(frozen=True, slots=True)
class ClaimReport:
    """One entry of a verification report.

    Attributes:
        claim_id: The claim id, e.g. ``"C7"``
        title: Short title of the claim
        verdict: ``"pass"``, ``"fail"`` or ``"inconclusive"``
        witness: The certificate or counterexample
        ms: Elapsed wall time in milliseconds, None when timings are suppressed
        tier: ``"fast"`` or ``"slow"``
    """

    claim_id: str
    title: str
    verdict: ClaimVerdict
    witness: Witness
    ms: float | None
    tier: Tier

    def to_json(self) -> dict[str, Any]:
        """The report as a JSON object with keys in schema order."""
        return {
            "id": self.claim_id,
            "title": self.title,
            "verdict": self.verdict,
            "witness": self.witness,
            "ms": None if self.ms is None else round(self.ms, 3),
            "tier": self.tier,
        }

    def without_timing(self) -> "ClaimReport":
        return ClaimReport(
            self.claim_id, self.title, self.verdict, self.witness, None, self.tier
        )


class Claim(ABC):
    """Abstract base class for claims.

    Subclasses set the class variables and implement ``check``. Ids have the form
    ``C<number>`` and order the registry numerically.

    Attributes:
        claim_id: Unique id of the form ``C<number>``
        title: One-line title
        statement: The assertion being checked, in words
        tier: ``"fast"`` claims run by default, ``"slow"`` ones only on request
    """

    claim_id: ClassVar[str]
    title: ClassVar[str]
    statement: ClassVar[str]
    tier: ClassVar[Tier] = "fast"

    # Numeric part of ``claim_id``, for ordering
    number: ClassVar[int]

    def __init_subclass__(cls, **kwargs: Any) -> None:
        """Validates the metadata of concrete claims and precalculates ``number``."""
        super().__init_subclass__(**kwargs)

        if getattr(cls.check, "__isabstractmethod__", False):
            return

        for name in ("claim_id", "title", "statement"):
            if not isinstance(getattr(cls, name, None), str):
                raise TypeError(f"{cls.__name__} must define the class variable {name}.")  # noqa: E501

        match = _CLAIM_ID.fullmatch(cls.claim_id)
        if match is None:
            raise TypeError(
                f"{cls.__name__}.claim_id must look like 'C12', got {cls.claim_id!r}."
            )
        if cls.tier not in TIERS:
            raise TypeError(f"{cls.__name__}.tier must be one of {TIERS}.")

        cls.number = int(match.group(1))

    @classmethod
    @abstractmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        """Rebuilds the structures involved and checks the claim.

        Args:
            settings: Budgets for the scans and searches involved

        Returns:
            The outcome; exhausting a budget gives ``"inconclusive"``, never
                ``"pass"``
        """
        ...

    @classmethod
    def run(cls, settings: Settings = DEFAULT_SETTINGS) -> ClaimReport:
        """Runs ``check`` and times it.

        A construction that fails its self-check or rejects its input turns into a
        failing report naming the error.
        """
        _logger.info("Running %s: %s", cls.claim_id, cls.title)
        start = time.perf_counter()
        try:
            outcome = cls.check(settings)
        except (ConstructionError, StructureError) as error:
            outcome = Outcome.failed("construction failed", error=str(error))
        ms = (time.perf_counter() - start) * 1000

        _logger.info("%s: %s in %.1f ms", cls.claim_id, outcome.verdict, ms)
        return ClaimReport(
            cls.claim_id, cls.title, outcome.verdict, outcome.witness, ms, cls.tier
        )
