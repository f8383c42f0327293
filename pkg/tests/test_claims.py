"""Tests for the claim registry.

Every registered claim is run and must pass. Slow claims are marked and skipped
unless pytest is run with ``-m slow``.
"""

import pytest

from usl.claim import Claim, ClaimReport, Outcome
from usl.config import DEFAULT_SETTINGS, Settings
from usl.semigroup import StructureError
from usl.verify import (
    UnknownClaimError,
    get_all_claims,
    run_all,
    run_claim,
    select_claims,
)

CLAIMS: list[type[Claim]] = list(get_all_claims().values())


def _param(claim: type[Claim]) -> object:
    marks = [pytest.mark.slow] if claim.tier == "slow" else []
    return pytest.param(claim, id=claim.claim_id, marks=marks)


class _BrokenConstruction(Claim):
    claim_id = "C900"
    title = "A construction that rejects its input"
    statement = "Never holds."

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:  # noqa: ARG003
        raise StructureError("The sandwich matrix must be square and non-empty.")


@pytest.mark.parametrize("claim", [_param(c) for c in CLAIMS])
def test_claim_passes(claim: type[Claim]) -> None:
    report = claim.run()
    assert report.verdict == "pass", report.witness
    assert report.claim_id == claim.claim_id
    assert report.ms is not None


def test_get_all_claims() -> None:
    claims = get_all_claims()
    assert list(claims) == [f"C{n}" for n in range(1, 24)]
    assert all(claims[claim_id].claim_id == claim_id for claim_id in claims)
    assert [c.claim_id for c in select_claims("slow")] == ["C23"]
    assert len(select_claims(None)) == len(claims)


def test_select_by_id() -> None:
    selected = select_claims("slow", ["C12", "C3"])
    assert [c.claim_id for c in selected] == ["C3", "C12"]
    with pytest.raises(UnknownClaimError, match="C0"):
        select_claims(ids=["C3", "C0"])
    with pytest.raises(UnknownClaimError):
        run_claim("C99")


def test_threads_do_not_change_reports() -> None:
    ids = ["C7", "C12", "C16"]
    serial = [r.without_timing() for r in run_all(None, Settings(threads=1), ids)]
    pooled = [r.without_timing() for r in run_all(None, Settings(threads=3), ids)]
    assert serial == pooled


def test_rank_one_scalars() -> None:
    witness = run_claim("C4").witness
    assert witness["rank_one_matrices"] == 32  # noqa: PLR2004
    assert set(witness["scalars"]) <= {"1", "2"}
    assert sum(witness["scalars"].values()) == witness["rank_one_matrices"]


class TestOutcome:
    def test_witness_rules(self) -> None:
        with pytest.raises(ValueError, match="witness"):
            Outcome("fail")
        with pytest.raises(ValueError, match="budget"):
            Outcome("inconclusive", {"assignments": 10})
        assert Outcome.inconclusive("assignment_budget").witness == {
            "budget": "assignment_budget"
        }
        assert Outcome.failed("no morphism", nodes=3).witness == {
            "reason": "no morphism",
            "nodes": 3,
        }

    def test_construction_errors_fail(self) -> None:
        report = _BrokenConstruction.run()
        assert report.verdict == "fail"
        assert report.witness["reason"] == "construction failed"
        assert "square" in report.witness["error"]


class TestReport:
    def test_json_keys(self) -> None:
        report = ClaimReport("C1", "title", "pass", {"size": 10}, 1.23456, "fast")
        assert report.to_json() == {
            "id": "C1",
            "title": "title",
            "verdict": "pass",
            "witness": {"size": 10},
            "ms": 1.235,
            "tier": "fast",
        }
        assert report.without_timing().to_json()["ms"] is None


class TestMetadata:
    """Claim subclasses are validated when they are defined."""

    def test_missing_statement(self) -> None:
        with pytest.raises(TypeError, match="statement"):

            class _NoStatement(Claim):  # pyright: ignore[reportUnusedClass]
                claim_id = "C901"
                title = "No statement"

                @classmethod
                def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:  # noqa: ARG003
                    return Outcome.passed()

    def test_malformed_id(self) -> None:
        with pytest.raises(TypeError, match="claim_id"):

            class _BadId(Claim):  # pyright: ignore[reportUnusedClass]
                claim_id = "claim-1"
                title = "Bad id"
                statement = "Bad id."

                @classmethod
                def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:  # noqa: ARG003
                    return Outcome.passed()

    def test_number(self) -> None:
        assert _BrokenConstruction.number == 900  # noqa: PLR2004
