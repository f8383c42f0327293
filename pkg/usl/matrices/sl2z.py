"""A bounded freeness probe for two matrices of ``SL_2(Z)``.

``ZETA = [[1,0],[2,1]]`` and ``ETA = [[1,2],[0,1]] = ZETA^T`` generate a free
group. The probe evaluates every reduced word up to a length bound with exact
integers and reports the first two words with equal values; finding none is
evidence, not proof.
"""

import logging
from dataclasses import dataclass

from ..config import DEFAULT_SETTINGS, Settings
from ..semigroup import StructureError

_logger = logging.getLogger(__name__)

type Matrix2 = tuple[int, int, int, int]

MAX_LENGTH = 20

ZETA: Matrix2 = (1, 0, 2, 1)
ETA: Matrix2 = (1, 2, 0, 1)

# Letters in lower case, their inverses in upper case.
_LETTERS: dict[str, Matrix2] = {
    "z": ZETA,
    "e": ETA,
    "Z": (1, 0, -2, 1),
    "E": (1, -2, 0, 1),
}


def _mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def transpose(a: Matrix2) -> Matrix2:
    return (a[0], a[2], a[1], a[3])


@dataclass(frozen=True, slots=True)
class FreeProbe:
    """Outcome of ``sl2z_free_probe``.

    Attributes:
        max_length: The length bound
        positive: Whether only words without inverse letters were tried
        words: Number of words evaluated
        collision: Two distinct words with equal values, if found
    """

    max_length: int
    positive: bool
    words: int
    collision: tuple[str, str] | None

    @property
    def distinct(self) -> bool:
        return self.collision is None


def _word_count(max_length: int, *, positive: bool) -> int:
    if positive:
        return 2 ** (max_length + 1) - 1
    return 1 + sum(4 * 3 ** (k - 1) for k in range(1, max_length + 1))


def sl2z_free_probe(
    max_length: int, *, positive: bool = False, settings: Settings = DEFAULT_SETTINGS
) -> FreeProbe:
    """Evaluates all reduced words over ``zeta, eta`` and their inverses.

    Args:
        max_length: Longest word, at most 20
        positive: Only use ``zeta`` and ``eta``
        settings: ``element_cap`` bounds the number of words

    Returns:
        The probe; words are written as space-separated letters ``z``, ``e`` with
            ``Z``, ``E`` for the inverses

    Raises:
        StructureError: If the bound is out of range or too many words are needed

    Examples:
        >>> sl2z_free_probe(3).distinct, sl2z_free_probe(3, positive=True).words
        (True, 15)
    """
    if not 0 <= max_length <= MAX_LENGTH:
        raise StructureError(f"Word length must lie in [0, {MAX_LENGTH}], got {max_length}.")  # noqa: E501

    count = _word_count(max_length, positive=positive)
    if count > settings.element_cap:
        raise StructureError(
            f"{count} words exceed element_cap={settings.element_cap}."
        )

    letters = "ze" if positive else "zeZE"
    seen: dict[Matrix2, str] = {(1, 0, 0, 1): ""}
    layer: list[tuple[str, Matrix2]] = [("", (1, 0, 0, 1))]
    words = 1

    for _ in range(max_length):
        following: list[tuple[str, Matrix2]] = []
        for word, value in layer:
            last = word[-1:] if word else ""
            for letter in letters:
                if last and letter == last.swapcase():
                    continue
                extended = f"{word} {letter}" if word else letter
                product = _mul(value, _LETTERS[letter])
                words += 1
                if product in seen:
                    _logger.debug("Collision after %d words", words)
                    collision = (seen[product], extended)
                    return FreeProbe(max_length, positive, words, collision)
                seen[product] = extended
                following.append((extended, product))
        layer = following

    return FreeProbe(max_length, positive, words, None)
