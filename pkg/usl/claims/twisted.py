"""The twisted Brandt monoid ``TB``, its relative ``TA``, and their matrix
realizations."""

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..constructions.named import named_semigroup
from ..core import (
    direct_product,
    find_morphism,
    generated_closure,
    validate_structure,
)
from ..matrices.field import field_make
from ..matrices.realizations import (
    PAIR_IDS,
    ta_degree_three,
    ta_degree_two,
    tb_symplectic,
)
from ..semigroup import FiniteUnarySemigroup
from ..terms import isoterm_search, zimin
from ._checks import expect_found, verify_realization


def _labelled(
    s: FiniteUnarySemigroup, t: FiniteUnarySemigroup, mapping: tuple[int, ...] | None
) -> dict[str, str]:
    return {s.label(a): t.label(b) for a, b in enumerate(mapping or ())}


def _matrix_isomorphism(name: str, settings: Settings) -> dict[str, str] | Outcome:
    named = named_semigroup(name)
    matrices = named_semigroup(f"{name}_matrices")

    violations = validate_structure(matrices, settings)
    if violations:
        return Outcome.failed(
            f"the {name} matrices are not a semigroup", detail=violations[0].detail
        )

    result = find_morphism(named, matrices, "isomorphism", settings=settings)
    ending = expect_found(result, f"isomorphism {name} -> {name}_matrices")
    if ending is not None:
        return ending
    return _labelled(named, matrices, result.mapping)


class TwistedBrandtMatrices(Claim):
    claim_id = "C7"
    title = "TB is realized by six 0/1 matrices"
    statement = (
        "The zero and identity matrices with E_11, E_12, E_21, E_22 under the twisted "
        "star form a unary monoid isomorphic to TB; with plain transposition they "
        "do not."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        isomorphism = _matrix_isomorphism("tb", settings)
        if isinstance(isomorphism, Outcome):
            return isomorphism

        plain = find_morphism(
            named_semigroup("tb"),
            named_semigroup("b21_transpose"),
            "isomorphism",
            settings=settings,
        )
        if plain.verdict != "none":
            return Outcome.failed(
                "TB is isomorphic to B21 with transposition", verdict=plain.verdict
            )
        return Outcome.passed(isomorphism=isomorphism, transpose_reason=plain.reason)


class TwistedAMatrices(Claim):
    claim_id = "C8"
    title = "TA is realized by matrices and TB is an image of a subsemigroup of TA^2"
    statement = (
        "TA is isomorphic to its six matrices, and the unary subsemigroup of TA x TA "
        "generated by (1, 1), ((1,1), (2,2)) and ((2,2), (1,1)) maps onto TB."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        isomorphism = _matrix_isomorphism("ta", settings)
        if isinstance(isomorphism, Outcome):
            return isomorphism

        ta, tb = named_semigroup("ta"), named_semigroup("tb")
        square = direct_product(ta, ta, settings)
        generators = [
            PAIR_IDS[a] * ta.size + PAIR_IDS[b]
            for a, b in ((1, 1), ((1, 1), (2, 2)), ((2, 2), (1, 1)))
        ]
        closure = generated_closure(square, generators, settings)

        result = find_morphism(closure.semigroup, tb, "onto", settings=settings)
        ending = expect_found(result, "morphism of the TA^2 subsemigroup onto TB")
        if ending is not None:
            return ending

        return Outcome.passed(
            isomorphism=isomorphism,
            generators=[square.label(g) for g in generators],
            subsemigroup_size=closure.size,
            onto_tb=_labelled(closure.semigroup, tb, result.mapping),
        )


class TwistedADegreeTwo(Claim):
    claim_id = "C12"
    title = "TA inside M_2(K) when 1 + x^2 = 0"
    statement = (
        "Over GF(2) with x = 1 and GF(5) with x = 2, the six matrices built from x "
        "are closed in M_2(K) with transposition and isomorphic to TA."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        realizations: dict[str, dict[str, str]] = {}
        for q, x in ((2, 1), (5, 2)):
            f = field_make(q)
            correspondence = verify_realization(ta_degree_two(f, x, settings), settings)
            if isinstance(correspondence, Outcome):
                return correspondence
            realizations[f.name] = correspondence
        return Outcome.passed(**realizations)


class TwistedADegreeThree(Claim):
    claim_id = "C13"
    title = "TA inside M_3(GF(3)) from 1 + 1 + 1 = 0"
    statement = (
        "Over GF(3) with x = y = 1, the six matrices built from x and y are closed in "
        "M_3(GF(3)) with transposition and isomorphic to TA."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        realization = ta_degree_three(field_make(3), (1, 1), settings)
        correspondence = verify_realization(realization, settings)
        if isinstance(correspondence, Outcome):
            return correspondence
        return Outcome.passed(correspondence=correspondence)


class SymplecticTwistedBrandt(Claim):
    claim_id = "C15"
    title = "TB is an image of block matrices under the symplectic transpose"
    statement = (
        "In M_2(GF(3)) with the symplectic transpose, the signed matrix units "
        "together with 0 and I form a unary subsemigroup mapping onto TB."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        realization = tb_symplectic(field_make(3), 1, settings)
        correspondence = verify_realization(realization, settings)
        if isinstance(correspondence, Outcome):
            return correspondence
        return Outcome.passed(matrices=realization.size, correspondence=correspondence)


class ZiminIsoterms(Claim):
    claim_id = "C19"
    title = "Zimin words are isoterms for TB (bounded)"
    statement = (
        "No involutory word z other than Z_2 of length at most 5, and none other than "
        "Z_3 of length at most 7, over the letters of the Zimin word and their stars, "
        "gives an identity Z_n = z of TB."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        tb = named_semigroup("tb")
        examined: dict[str, int] = {}

        for n, max_length in ((2, 5), (3, 7)):
            report = isoterm_search(tb, zimin(n), max_length, settings)
            if not report.complete:
                return Outcome.inconclusive(
                    "isoterm_budget", word=str(report.word), last=str(report.last)
                )
            if report.matches:
                return Outcome.failed(
                    f"Z_{n} is not an isoterm",
                    word=str(report.word),
                    matches=[str(z) for z in report.matches],
                )
            examined[str(report.word)] = report.examined

        return Outcome.passed(examined=examined, caveat="bounded search")
