"""Tests for usl.sapir."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from usl.config import Settings
from usl.sapir import (
    OVERFLOW,
    ZERO,
    Plain,
    SapirSystem,
    Starred,
    factors_upto,
    find_square,
    is_square_free,
    model_check_identity,
    twisted_model,
)
from usl.semigroup import StructureError
from usl.terms import parse_identity

SYSTEM = SapirSystem(1)


class TestSubstitution:
    """The substitution and its iterates."""

    def test_alphabet(self) -> None:
        assert SYSTEM.letter(1, 1) == 0
        assert SYSTEM.letter(8, 8) == 63  # noqa: PLR2004
        assert SYSTEM.letter_label(9) == "a2.2"
        assert SapirSystem(2).r == 14  # noqa: PLR2004
        with pytest.raises(StructureError):
            SYSTEM.letter(9, 1)
        with pytest.raises(StructureError, match="positive"):
            SapirSystem(0)

    def test_image(self) -> None:
        assert SYSTEM.image(0) == tuple(range(8))
        assert SYSTEM.image(1) == (0, 9, 2, 11, 4, 13, 6, 15)
        assert SYSTEM.format_word(SYSTEM.image(1)[:2]) == "a1.1 a2.2"

    def test_iterates_are_prefixes(self) -> None:
        third = SYSTEM.iterate(3)
        assert len(third) == 512  # noqa: PLR2004
        assert np.array_equal(third[:64], SYSTEM.iterate(2))
        assert SYSTEM.iterate(0).tolist() == [0]

    def test_iterate_bounds(self) -> None:
        with pytest.raises(StructureError, match="non-negative"):
            SYSTEM.iterate(-1)
        with pytest.raises(StructureError, match="element_cap"):
            SYSTEM.iterate(3, Settings(element_cap=100))

    def test_iterates_are_square_free(self) -> None:
        assert is_square_free(SYSTEM.iterate(3))
        assert is_square_free(SapirSystem(2).iterate(2))


class TestSquares:
    def test_examples(self) -> None:
        assert find_square("abcbc") == (1, 2)
        assert find_square("aa") == (0, 1)
        assert find_square(np.asarray([3, 1, 2, 1, 2, 3])) == (1, 2)
        assert find_square("") is None
        assert is_square_free("abcacb")

    @given(st.lists(st.integers(0, 2), max_size=12))
    def test_against_slicing(self, word: list[int]) -> None:
        squares = [
            (start, period)
            for period in range(1, len(word) // 2 + 1)
            for start in range(len(word) - 2 * period + 1)
            if word[start : start + period] == word[start + period : start + 2 * period]  # noqa: E501
        ]
        assert find_square(word) == (squares[0] if squares else None)


class TestFactors:
    def test_letters_stabilize(self) -> None:
        letters = factors_upto(SYSTEM, 1, 4)
        assert len(letters) == 64  # noqa: PLR2004
        assert letters.stabilized
        assert not factors_upto(SYSTEM, 1, 2).stabilized

    def test_lengths(self) -> None:
        factors = factors_upto(SYSTEM, 3, 3)
        assert (0, 1, 2) in factors
        assert (0, 2) not in factors
        assert all(len(w) == 2 for w in factors.of_length(2))  # noqa: PLR2004
        shortest = factors.up_to(2)
        assert shortest[0] == (0,)
        assert len(shortest[-1]) == 2  # noqa: PLR2004

    def test_bounds(self) -> None:
        with pytest.raises(StructureError):
            factors_upto(SYSTEM, 0, 2)
        with pytest.raises(StructureError):
            factors_upto(SYSTEM, 2, 0)


class TestTwistedModel:
    """Products in the truncated model."""

    def test_products(self) -> None:
        model = twisted_model(SYSTEM, 4, 3)
        x, y = model.element([0]), model.element([1])
        assert model.mul(x, y) == Plain((0, 1))
        assert model.mul(y, x) == ZERO
        assert model.mul(model.star(y), model.star(x)) == Starred((0, 1))
        assert model.mul(x, model.star(x)) == ZERO
        assert model.mul(model.star(x), x) == ZERO
        assert model.label(Starred((0, 1))) == "(a1.1 a1.2)'"

    def test_star(self) -> None:
        model = twisted_model(SYSTEM, 4, 3)
        x = model.element([0, 1])
        assert model.star(model.star(x)) == x
        assert model.star(ZERO) == ZERO

    def test_overflow(self) -> None:
        model = twisted_model(SYSTEM, 4, 3)
        head, tail = model.element([0, 1, 2, 3]), model.element([4, 5, 6, 7])
        assert model.mul(head, tail) == OVERFLOW
        assert model.mul(OVERFLOW, head) == OVERFLOW
        assert model.mul(OVERFLOW, ZERO) == ZERO
        assert model.label(OVERFLOW) == "OVERFLOW"

    def test_unknown_factor(self) -> None:
        model = twisted_model(SYSTEM, 4, 3)
        with pytest.raises(StructureError, match="not a factor"):
            model.element([0, 2])

    def test_elements(self) -> None:
        model = twisted_model(SYSTEM, 4, 3)
        elements = model.elements(1)
        assert len(elements) == 129  # noqa: PLR2004
        assert elements[0] == ZERO
        assert elements[1] == Plain((0,))
        assert elements[65] == Starred((0,))


class TestModelCheck:
    """Identity checks on the truncated model."""

    def test_nilpotent_squares(self) -> None:
        model = twisted_model(SYSTEM, 8, 3)
        check = model_check_identity(model, parse_identity("x x = x x x"))
        assert check.verdict == "holds"
        assert check.within_k
        assert check.describe(model) == "holds"

    def test_witness(self) -> None:
        model = twisted_model(SYSTEM, 8, 3)
        check = model_check_identity(model, parse_identity("x y = y x"))
        assert check.verdict == "fails"
        assert check.witness == (Plain((0,)), Plain((1,)))
        assert check.describe(model) == "x=a1.1, y=a1.2: a1.1 a1.2 vs 0"
        assert not check.within_k

    def test_overflow_is_inconclusive(self) -> None:
        model = twisted_model(SYSTEM, 1, 3)
        check = model_check_identity(model, parse_identity("x y = x y"), 1)
        assert check.verdict == "inconclusive"
        assert check.checked == 129**2
        assert check.overflowed > 0

    def test_budget(self) -> None:
        model = twisted_model(SYSTEM, 8, 3)
        check = model_check_identity(
            model, parse_identity("x y = y x"), 2, Settings(assignment_budget=10)
        )
        assert check.verdict == "inconclusive"
        assert check.checked == 0

    def test_second_star(self) -> None:
        model = twisted_model(SYSTEM, 4, 3)
        with pytest.raises(StructureError, match="single unary"):
            model_check_identity(model, parse_identity('x" = x'))
