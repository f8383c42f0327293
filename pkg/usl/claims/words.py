"""Square-free substitution words and the twisted model built on their factors."""

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..sapir import (
    SapirSystem,
    find_square,
    model_check_identity,
    twisted_model,
)
from ..terms import parse_identity

# Identity text and the longest factor each variable ranges over.
_MODEL_IDENTITIES = (
    ("x x = x x x", 2),
    ("x x = y y", 1),
    ("x x' = y y'", 1),
    ("x x' y = x x'", 1),
    ("y x x' = x x'", 1),
)


class SquareFreeTwistedModel(Claim):
    claim_id = "C21"
    title = "gamma^m(a11) is square-free and the twisted model kills squares"
    statement = (
        "For k = 1 the words gamma^m(a(1,1)), m <= 3, contain no square, and in the "
        "twisted 0-direct union of their factors every x x* and every x^2 equals "
        "the zero."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        system = SapirSystem(1)
        lengths: list[int] = []
        for m in range(4):
            word = system.iterate(m, settings)
            square = find_square(word)
            if square is not None:
                start, length = square
                return Outcome.failed(
                    f"gamma^{m}(a11) contains a square",
                    square=system.format_word(word[start : start + 2 * length]),
                )
            lengths.append(len(word))

        model = twisted_model(system, 8, 3, settings)
        checked: dict[str, int] = {}
        for text, max_word_len in _MODEL_IDENTITIES:
            result = model_check_identity(
                model, parse_identity(text, 1), max_word_len, settings
            )
            if result.verdict == "fails":
                return Outcome.failed(
                    "the twisted model fails an identity",
                    identity=text,
                    counterexample=result.describe(model),
                )
            if result.verdict == "inconclusive":
                budget = "max_length" if result.overflowed else "assignment_budget"
                return Outcome.inconclusive(budget, identity=text)
            checked[text] = result.checked

        return Outcome.passed(
            word_lengths=lengths,
            factors=len(model.factors),
            stabilized=model.factors.stabilized,
            assignments=checked,
            caveat="bounded model",
        )
