"""Square-free substitution words and the twisted 0-direct union built on them.

For ``k >= 1`` let ``r = 6k + 2``. The alphabet has ``r^2`` letters ``a(i,j)``,
stored as ids ``(i - 1) r + (j - 1)``. Row ``t`` of the ``r^2 x r`` matrix ``M``
holds ``i`` in its odd columns and ``j`` in its even ones, where
``t = (i - 1) r + j``. Replacing the number ``i`` in column ``j`` by ``a(i,j)``
gives ``M_A``, and the substitution ``gamma`` sends letter ``t`` to row ``t`` of
``M_A``. The words ``gamma^m(a(1,1))`` are prefixes of one another and contain no
square.

The factors of these words form a partial semigroup under concatenation. Joining
it with an anti-isomorphic copy and a shared zero gives a unary semigroup in which
``x x* = x^2 = 0``. Only factors up to a fixed length are enumerated, so products
that grow past that length are reported as ``OVERFLOW`` unless a short factor
already rules them out.
"""

import itertools
import logging
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from numpy.typing import NDArray

from .config import DEFAULT_SETTINGS, Settings
from .semigroup import StructureError
from .terms import Identity, Verdict, compile_terms

_logger = logging.getLogger(__name__)

type Word = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SapirSystem:
    """The substitution ``gamma`` for a fixed ``k``.

    Attributes:
        k: Number of variables the model is built against

    Examples:
        >>> system = SapirSystem(1)
        >>> system.r, system.alphabet_size
        (8, 64)
        >>> system.format_word(system.image(0))
        'a1.1 a1.2 a1.3 a1.4 a1.5 a1.6 a1.7 a1.8'
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise StructureError(f"k must be positive, got {self.k}.")

    @property
    def r(self) -> int:
        return 6 * self.k + 2

    @property
    def alphabet_size(self) -> int:
        return self.r**2

    @cached_property
    def matrix_rows(self) -> NDArray[np.int64]:
        """The numeric matrix ``M``, one row per letter."""
        r = self.r
        t = np.arange(r * r)
        i, j = t // r + 1, t % r + 1
        odd = np.arange(r) % 2 == 0
        return np.where(odd[None, :], i[:, None], j[:, None])

    @cached_property
    def letter_rows(self) -> NDArray[np.int64]:
        """``M_A`` as letter ids; row ``t`` is ``gamma`` of letter ``t``."""
        columns = np.arange(self.r)
        return (self.matrix_rows - 1) * self.r + columns[None, :]

    def letter(self, i: int, j: int) -> int:
        """The id of ``a(i,j)`` for one-based ``i`` and ``j``."""
        if not (1 <= i <= self.r and 1 <= j <= self.r):
            raise StructureError(f"a({i},{j}) is outside the alphabet for r={self.r}.")
        return (i - 1) * self.r + (j - 1)

    def letter_label(self, letter: int) -> str:
        i, j = divmod(letter, self.r)
        return f"a{i + 1}.{j + 1}"

    def format_word(self, word: Sequence[int] | NDArray[np.int64]) -> str:
        return " ".join(self.letter_label(int(letter)) for letter in word)

    def image(self, letter: int) -> Word:
        """``gamma`` of one letter."""
        return tuple(int(x) for x in self.letter_rows[letter])

    def apply(self, word: NDArray[np.int64]) -> NDArray[np.int64]:
        """``gamma`` of a word given as an array of letter ids."""
        return self.letter_rows[word].ravel()

    def iterate(
        self, m: int, settings: Settings = DEFAULT_SETTINGS
    ) -> NDArray[np.int64]:
        """``gamma^m(a(1,1))``, of length ``r^m``.

        Raises:
            StructureError: If ``m`` is negative or the word exceeds
                ``settings.element_cap``

        Examples:
            >>> system = SapirSystem(1)
            >>> word = system.iterate(2)
            >>> len(word), bool((word[:8] == system.iterate(1)).all())
            (64, True)
        """
        if m < 0:
            raise StructureError(f"Depth must be non-negative, got {m}.")

        if self.r**m > settings.element_cap:
            raise StructureError(
                f"gamma^{m} has {self.r**m} letters, above element_cap={settings.element_cap}."  # noqa: E501
            )

        word = np.zeros(1, dtype=np.int64)
        for _ in range(m):
            word = self.apply(word)
        return word


# Factors


def _windows(word: NDArray[np.int64], length: int) -> set[Word]:
    if length > len(word):
        return set()
    unique = np.unique(sliding_window_view(word, length), axis=0)
    return {tuple(int(x) for x in row) for row in unique}


def _factors(word: NDArray[np.int64], max_length: int) -> frozenset[Word]:
    found: set[Word] = set()
    for length in range(1, max_length + 1):
        found |= _windows(word, length)
    return frozenset(found)


@dataclass(frozen=True, slots=True)
class FactorSet:
    """The factors of length at most ``max_length`` of ``gamma^depth(a(1,1))``.

    Attributes:
        words: The factors
        max_length: The length bound ``L``
        depth: The iteration depth the factors were read from
        stabilized: Whether depth ``depth - 1`` gave the same factors
    """

    words: frozenset[Word]
    max_length: int
    depth: int
    stabilized: bool

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    def of_length(self, length: int) -> list[Word]:
        return sorted(w for w in self.words if len(w) == length)

    def up_to(self, length: int) -> list[Word]:
        """Factors of length at most ``length``, shortest first."""
        return sorted(
            (w for w in self.words if len(w) <= length), key=lambda w: (len(w), w)
        )


def factors_upto(
    system: SapirSystem,
    max_length: int,
    m_max: int,
    settings: Settings = DEFAULT_SETTINGS,
) -> FactorSet:
    """Collects every factor of length at most ``max_length`` of ``gamma^m_max``.

    Since each ``gamma^m(a(1,1))`` is a prefix of the next, these are the factors of
    all depths up to ``m_max``. The set is stabilized when the prefix of depth
    ``m_max - 1`` already has the same factors.

    Raises:
        StructureError: If ``max_length`` or ``m_max`` is below 1

    Examples:
        >>> system = SapirSystem(1)
        >>> letters = factors_upto(system, 1, 4)
        >>> len(letters), letters.stabilized
        (64, True)
        >>> factors_upto(system, 1, 2).stabilized
        False
    """
    if max_length < 1 or m_max < 1:
        raise StructureError(
            f"Need max_length >= 1 and m_max >= 1, got {max_length} and {m_max}."
        )

    word = system.iterate(m_max, settings)
    words = _factors(word, max_length)
    previous = _factors(word[: system.r ** (m_max - 1)], max_length)
    stabilized = previous == words

    if not stabilized:
        _logger.info(
            "Factors up to length %d grew from %d to %d between depths %d and %d",
            max_length,
            len(previous),
            len(words),
            m_max - 1,
            m_max,
        )
    return FactorSet(words, max_length, m_max, stabilized)


def find_square(word: Sequence[Hashable] | NDArray[np.int64]) -> tuple[int, int] | None:
    """Finds the leftmost shortest square ``w w`` in a word.

    Returns:
        ``(start, period)`` of the square, or ``None`` if the word is square-free

    Examples:
        >>> find_square("abcbc"), find_square("abc")
        ((1, 2), None)
    """
    if isinstance(word, np.ndarray):
        codes = word
    else:
        ids: dict[Hashable, int] = {}
        codes = np.asarray([ids.setdefault(x, len(ids)) for x in word], dtype=np.int64)

    n = len(codes)
    for period in range(1, n // 2 + 1):
        equal = codes[:-period] == codes[period:]
        runs = np.concatenate(([0], np.cumsum(equal)))
        hits = np.flatnonzero(runs[period:] - runs[:-period] == period)
        if hits.size:
            return int(hits[0]), period
    return None


def is_square_free(word: Sequence[Hashable] | NDArray[np.int64]) -> bool:
    """Whether no factor of the word has the form ``w w``.

    Examples:
        >>> is_square_free("aba"), is_square_free("abab")
        (True, False)
    """
    return find_square(word) is None


# The twisted model


@dataclass(frozen=True, slots=True)
class Plain:
    word: Word


@dataclass(frozen=True, slots=True)
class Starred:
    word: Word


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class Overflow:
    pass


ZERO = Zero()
OVERFLOW = Overflow()

type TwistedElement = Plain | Starred | Zero
type TwistedValue = TwistedElement | Overflow


@dataclass(frozen=True, eq=False)
class TwistedModel:
    """Factors, their starred copies and a zero, truncated at ``factors.max_length``.

    Examples:
        >>> model = twisted_model(SapirSystem(1), 4, 3)
        >>> x = model.element([0])
        >>> model.mul(x, model.star(x)), model.mul(x, x)
        (Zero(), Zero())
        >>> model.label(model.mul(x, model.element([1])))
        'a1.1 a1.2'
    """

    system: SapirSystem
    factors: FactorSet

    @property
    def max_length(self) -> int:
        return self.factors.max_length

    def element(self, word: Sequence[int], *, starred: bool = False) -> TwistedElement:
        """Wraps a factor as an element.

        Raises:
            StructureError: If the word is not a known factor
        """
        key = tuple(int(x) for x in word)
        if key not in self.factors:
            raise StructureError(
                f"{self.system.format_word(key)!r} is not a factor of length <= {self.max_length}."  # noqa: E501
            )
        return Starred(key) if starred else Plain(key)

    def elements(self, max_word_len: int) -> list[TwistedElement]:
        """Zero, then every plain factor up to a length, then their stars."""
        words = self.factors.up_to(max_word_len)
        return [ZERO, *(Plain(w) for w in words), *(Starred(w) for w in words)]

    def _join(self, word: Word, kind: type[Plain] | type[Starred]) -> TwistedValue:
        length = self.max_length
        if len(word) <= length:
            return kind(word) if word in self.factors else ZERO
        for start in range(len(word) - length + 1):
            if word[start : start + length] not in self.factors:
                return ZERO
        return OVERFLOW

    def mul(self, a: TwistedValue, b: TwistedValue) -> TwistedValue:
        match a, b:
            case (Zero(), _) | (_, Zero()):
                return ZERO
            case (Overflow(), _) | (_, Overflow()):
                return OVERFLOW
            case Plain(u), Plain(v):
                return self._join(u + v, Plain)
            case Starred(u), Starred(v):
                return self._join(v + u, Starred)
            case _:
                return ZERO

    def star(self, a: TwistedValue) -> TwistedValue:
        match a:
            case Plain(word):
                return Starred(word)
            case Starred(word):
                return Plain(word)
            case _:
                return a

    def label(self, value: TwistedValue) -> str:
        match value:
            case Plain(word):
                return self.system.format_word(word)
            case Starred(word):
                return f"({self.system.format_word(word)})'"
            case Zero():
                return "0"
            case _:
                return "OVERFLOW"


def twisted_model(
    system: SapirSystem,
    max_length: int = 16,
    m_max: int = 4,
    settings: Settings = DEFAULT_SETTINGS,
) -> TwistedModel:
    """Builds the truncated model on the factors of ``gamma^m_max(a(1,1))``."""
    return TwistedModel(system, factors_upto(system, max_length, m_max, settings))


@dataclass(frozen=True, slots=True)
class ModelCheck:
    """Outcome of ``model_check_identity``.

    Attributes:
        verdict: ``"holds"`` on every tested assignment, ``"fails"`` with a
            witness, or ``"inconclusive"`` when some evaluation overflowed or the
            budget ran out
        variables: Variable names in order of first occurrence
        witness: The first failing assignment, aligned with ``variables``
        values: Both sides under the witness
        checked: Assignments evaluated
        overflowed: Assignments with an ``OVERFLOW`` side
        stabilized: Whether the underlying factor set was stabilized
        within_k: Whether the identity has at most ``k`` variables, the range the
            construction speaks about
    """

    verdict: Verdict
    variables: tuple[str, ...]
    witness: tuple[TwistedElement, ...] | None
    values: tuple[TwistedValue, ...]
    checked: int
    overflowed: int
    stabilized: bool
    within_k: bool

    def describe(self, model: TwistedModel) -> str:
        if self.witness is None:
            return self.verdict
        bound = ", ".join(
            f"{name}={model.label(value)}"
            for name, value in zip(self.variables, self.witness, strict=True)
        )
        shown = " vs ".join(model.label(value) for value in self.values)
        return f"{bound}: {shown}"


def model_check_identity(
    model: TwistedModel,
    identity: Identity,
    max_word_len: int = 2,
    settings: Settings = DEFAULT_SETTINGS,
) -> ModelCheck:
    """Checks an identity on the truncated model.

    Every variable ranges over zero and the plain and starred factors of length at
    most ``max_word_len``. A failing assignment is a certified witness; an
    assignment where either side overflows only makes the result inconclusive.
    Identities in more than ``k`` variables are evaluated too and flagged through
    ``within_k``.

    Raises:
        StructureError: If the identity uses a second unary operation

    Examples:
        >>> from usl.terms import parse_identity
        >>> model = twisted_model(SapirSystem(1), 8, 3)
        >>> model_check_identity(model, parse_identity("x x = x x x")).verdict
        'holds'
        >>> check = model_check_identity(model, parse_identity("x = x x"))
        >>> check.verdict, check.describe(model)
        ('fails', 'x=a1.1: a1.1 vs 0')
    """
    program = compile_terms(*identity)
    names = program.variables
    within_k = len(names) <= model.system.k

    def star(value: TwistedValue, index: int) -> TwistedValue:
        if index != 1:
            raise StructureError("The twisted model has a single unary operation.")
        return model.star(value)

    candidates = model.elements(max_word_len)
    total = len(candidates) ** len(names)
    stabilized = model.factors.stabilized
    if total > settings.assignment_budget:
        _logger.info("%d assignments exceed the budget", total)
        return ModelCheck("inconclusive", names, None, (), 0, 0, stabilized, within_k)

    checked = overflowed = 0
    for values in itertools.product(candidates, repeat=len(names)):
        assignment = dict(zip(names, values, strict=True))
        sides = tuple(program.run(assignment.__getitem__, model.mul, star))
        checked += 1
        if OVERFLOW in sides:
            overflowed += 1
        elif sides[0] != sides[1]:
            return ModelCheck(
                "fails",
                names,
                values,
                sides,
                checked,
                overflowed,
                stabilized,
                within_k,
            )

    verdict: Verdict = "inconclusive" if overflowed else "holds"
    return ModelCheck(
        verdict, names, None, (), checked, overflowed, stabilized, within_k
    )
