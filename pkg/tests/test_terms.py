"""Tests for usl.terms.

The vectorized identity scan is compared against a plain loop over assignments in
tests/oracles.py.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from usl.config import Settings
from usl.constructions.groups import cyclic_group
from usl.constructions.named import named_semigroup
from usl.semigroup import FiniteUnarySemigroup, StructureError
from usl.terms import (
    Concat,
    InvolutoryWord,
    Letter,
    Star,
    TermSyntaxError,
    UnaryTerm,
    UnboundVariableError,
    Variable,
    apply_substitution,
    check_identity,
    check_implication,
    evaluate,
    format_identity,
    format_term,
    isoterm_search,
    omega,
    parse_identity,
    parse_term,
    parse_word,
    periodic_identity,
    power,
    prefix_cancellation_implication,
    right_divisibility_identity,
    star_flip,
    term_length,
    variables,
    zimin,
)

from .oracles import naive_evaluate, naive_first_failure, naive_variables
from .strategies import identities, terms, words
from .strategy_factory.factory import make_assignment_strategy, make_structure_strategy

TB = named_semigroup("tb")
C3 = cyclic_group(3).to_semigroup()


class TestParsing:
    """Reading and printing terms, identities and words."""

    @given(terms(arity=2))
    def test_format_then_parse(self, term: UnaryTerm) -> None:
        assert parse_term(format_term(term)) == term

    def test_juxtaposition_associates_right(self) -> None:
        assert parse_term("x y z") == Concat(
            Variable("x"), Concat(Variable("y"), Variable("z"))
        )
        assert format_term(parse_term("(x y) z")) == "(x y) z"

    def test_stars(self) -> None:
        assert parse_term("x'\"") == Star(Star(Variable("x"), 1), 2)
        assert format_term(parse_term("(x y)'")) == "(x y)'"

    def test_power(self) -> None:
        assert format_term(parse_term("x^3")) == "x x x"
        assert term_length(parse_term("(x y')^4")) == 8  # noqa: PLR2004

    @pytest.mark.parametrize(
        ("text", "position"),
        [
            ("", 0),
            ("x )", 2),
            ("x $", 2),
            ("(x y", 4),
            ("x^0", 2),
            ("x^y", 2),
        ],
    )
    def test_syntax_errors(self, text: str, position: int) -> None:
        with pytest.raises(TermSyntaxError) as info:
            parse_term(text)
        assert info.value.position == position

    def test_second_star_needs_arity_two(self) -> None:
        with pytest.raises(TermSyntaxError, match="second unary operation"):
            parse_term('x"', arity=1)

    def test_identities(self) -> None:
        identity = parse_identity("x (y z)' = z' y'")
        assert format_identity(identity) == "x (y z)' = z' y'"
        with pytest.raises(TermSyntaxError):
            parse_identity("x = y = z")
        with pytest.raises(TermSyntaxError):
            parse_identity("x y")

    def test_words(self) -> None:
        word = parse_word("x1 x2' x1")
        assert word.letters == (Letter("x1"), Letter("x2", True), Letter("x1"))
        assert str(word.star()) == "x1' x2 x1'"
        with pytest.raises(TermSyntaxError):
            parse_word("x''")
        with pytest.raises(TermSyntaxError):
            parse_word("  ")

    def test_empty_word(self) -> None:
        with pytest.raises(ValueError, match="non-empty"):
            InvolutoryWord(())

    @given(terms())
    def test_variables_in_order_of_occurrence(self, term: UnaryTerm) -> None:
        assert list(variables(term)) == naive_variables(term)


class TestBuilders:
    """Zimin words, substitutions and the derived identities."""

    def test_zimin(self) -> None:
        assert str(zimin(1)) == "x1"
        assert str(zimin(3)) == "x1 x2 x1 x3 x1 x2 x1"
        assert len(zimin(4)) == 15  # noqa: PLR2004
        assert str(zimin(2, "prefix")) == "x1 x2"

    def test_zimin_bounds(self) -> None:
        with pytest.raises(ValueError, match="n=1"):
            zimin(0)
        with pytest.raises(ValueError, match="proper prefix"):
            zimin(1, "prefix")

    @given(words())
    def test_star_flip_is_an_involution(self, word: InvolutoryWord) -> None:
        flip = star_flip(word)
        once = apply_substitution(word, flip)
        assert len(once) == len(word)
        assert apply_substitution(once, flip) == word

    @given(words())
    def test_star_of_star(self, word: InvolutoryWord) -> None:
        assert word.star().star() == word

    def test_substitution_into_terms(self) -> None:
        result = apply_substitution(
            parse_term("x y'"),
            {"x": parse_term("y y'"), "y": parse_word("x z")},
        )
        assert format_term(result) == "(y y') (x z)'"

    def test_unbound_substitution(self) -> None:
        with pytest.raises(UnboundVariableError):
            apply_substitution(parse_word("x y"), {"x": parse_word("y")})
        with pytest.raises(UnboundVariableError):
            apply_substitution(parse_term("x y"), {"y": parse_term("x")})

    def test_omega(self) -> None:
        x = Variable("x")
        assert format_term(omega(x, 1)) == "x'"
        assert format_term(omega(x, 2)) == "x' x x'"
        assert term_length(omega(x, 5)) == 9  # noqa: PLR2004

    def test_periodic_identity(self) -> None:
        lhs, rhs = periodic_identity(2, 3)
        assert term_length(lhs) == 2  # noqa: PLR2004
        assert term_length(rhs) == 5  # noqa: PLR2004

    def test_power_is_shared(self) -> None:
        term = power(Variable("x"), 8)
        assert term_length(term) == 8  # noqa: PLR2004
        assert isinstance(term, Concat)
        assert term.left is term.right


class TestEvaluate:
    def test_unbound_variable(self) -> None:
        with pytest.raises(UnboundVariableError):
            evaluate(parse_term("x y"), TB, {"x": 0})

    def test_missing_unary_operation(self) -> None:
        with pytest.raises(StructureError):
            evaluate(parse_term('x"'), TB, {"x": 0})

    @given(st.data())
    def test_matches_recursive_evaluation(self, data: st.DataObject) -> None:
        s = data.draw(make_structure_strategy())
        term = data.draw(terms())
        names = tuple(naive_variables(term))
        assignment = data.draw(make_assignment_strategy(s, names))
        assert evaluate(term, s, assignment) == naive_evaluate(term, s, assignment)


class TestCheckIdentity:
    """Exhaustive identity scans."""

    def test_witness(self) -> None:
        result = check_identity(TB, *parse_identity("x y = y x"))
        assert result.verdict == "fails"
        assert result.witness == (0, 1)
        assert result.assignment() == {"x": 0, "y": 1}
        assert result.values == (4, 0)
        assert result.checked == 2  # noqa: PLR2004
        assert result.total == 36  # noqa: PLR2004

    def test_holds(self) -> None:
        result = check_identity(TB, *periodic_identity(2, 1))
        assert result.holds
        assert result.witness is None
        assert result.describe(TB) == "holds"
        assert result.checked == result.total

    def test_k3_is_regular(self) -> None:
        k3 = named_semigroup("k3")
        assert check_identity(k3, *parse_identity("x x' x = x")).holds

    def test_tb_is_not_regular(self) -> None:
        result = check_identity(TB, *parse_identity("x x' x = x"))
        assert result.describe(TB) == "x=(1,1): 0 vs (1,1)"

    def test_budget(self) -> None:
        result = check_identity(
            TB, *parse_identity("x y = y x"), Settings(assignment_budget=35)
        )
        assert result.verdict == "inconclusive"
        assert result.checked == 0
        assert result.total == 36  # noqa: PLR2004

    def test_blocks_and_threads_agree(self) -> None:
        identity = parse_identity("x y z = z y x")
        serial = check_identity(TB, *identity, Settings(threads=1))
        for threads in (2, 4):
            blocked = check_identity(
                TB, *identity, Settings(threads=threads, chunk_size=6)
            )
            assert blocked == serial

    @settings(max_examples=50)
    @given(make_structure_strategy(), identities(names=("x", "y")))
    def test_least_witness(
        self,
        s: FiniteUnarySemigroup,
        identity: tuple[UnaryTerm, UnaryTerm],
    ) -> None:
        result = check_identity(s, *identity, Settings(threads=2, chunk_size=8))
        expected = naive_first_failure(s, *identity)
        assert result.witness == expected
        assert result.holds == (expected is None)


class TestCheckImplication:
    def test_groups_are_cancellative(self) -> None:
        premise = parse_identity("x y = x z")
        conclusion = parse_identity("y = z")
        assert check_implication(C3, premise, conclusion).holds

    def test_tb_is_not_cancellative(self) -> None:
        result = check_implication(
            TB, parse_identity("x y = x z"), parse_identity("y = z")
        )
        assert result.witness == (0, 0, 1)
        assert result.values == (4, 4, 0, 1)

    def test_derived_laws_hold_in_groups(self) -> None:
        assert check_implication(C3, *prefix_cancellation_implication(2)).holds
        assert check_identity(C3, *right_divisibility_identity(2, 1)).holds


class TestIsotermSearch:
    def test_zimin_word_in_tb(self) -> None:
        report = isoterm_search(TB, zimin(2), 3)
        assert report.matches == ()
        assert report.complete
        assert report.verdict == "complete"
        assert [str(x) for x in report.alphabet] == ["x1", "x1'", "x2", "x2'"]

    def test_inverse_commutes_in_groups(self) -> None:
        report = isoterm_search(C3, parse_word("x x'"), 2)
        assert [str(match) for match in report.matches] == ["x' x"]
        assert report.examined == 6  # noqa: PLR2004

    def test_budget(self) -> None:
        report = isoterm_search(TB, zimin(2), 3, Settings(isoterm_budget=1))
        assert not report.complete
        assert report.verdict == "inconclusive"
        assert report.last is not None
        assert "bounded" in report.caveat

    def test_chunk_size(self) -> None:
        report = isoterm_search(TB, zimin(3), 3, Settings(chunk_size=100))
        assert report.verdict == "inconclusive"
        assert report.matches == ()
        assert report.examined == 0
        assert report.last is None

    def test_unconfirmed_match(self) -> None:
        report = isoterm_search(
            C3, parse_word("x x'"), 2, Settings(assignment_budget=2)
        )
        assert report.verdict == "inconclusive"
        assert report.matches == ()
        assert str(report.last) == "x' x"

    def test_everything_collapses_in_trivial(self) -> None:
        trivial = FiniteUnarySemigroup.from_tables([[0]], zero_id=0)
        report = isoterm_search(trivial, zimin(2), 2)
        assert report.complete
        assert [str(match) for match in report.matches] == [
            "x1",
            "x1 x1",
            "x1 x2",
            "x2",
            "x2 x1",
            "x2 x2",
        ]
