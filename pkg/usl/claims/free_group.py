"""Freeness evidence for the subgroup of ``SL_2(Z)`` generated by ``zeta`` and its
transpose."""

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..matrices.sl2z import sl2z_free_probe


class FreeTransposePair(Claim):
    claim_id = "C22"
    title = "zeta and zeta^T generate a free group (words up to length 10)"
    statement = (
        "No two distinct reduced words of length at most 10 over zeta = [[1,0],[2,1]], "
        "eta = zeta^T and their inverses have the same value in SL_2(Z)."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        probe = sl2z_free_probe(10, settings=settings)
        if probe.collision is not None:
            return Outcome.failed(
                "two reduced words are equal", words=list(probe.collision)
            )
        return Outcome.passed(
            max_length=probe.max_length, words=probe.words, caveat="bounded search"
        )
