"""Tests for usl.core.

Structure checks, closures, quotients, morphisms and Green's R-order on the named
structures, with property-based checks over generated structures.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from usl.config import Settings
from usl.constructions.groups import cyclic_group
from usl.constructions.named import named_semigroup
from usl.core import (
    ElementPartition,
    adjoin_identity,
    classify_unary,
    direct_product,
    element_powers,
    find_morphism,
    generated_closure,
    green_r_height,
    hermitian_part,
    idempotents,
    index_period,
    power_part,
    quotient_by_partition,
    satisfies_periodicity,
    substructure,
    validate_structure,
    verify_index_period,
    verify_morphism,
)
from usl.semigroup import FiniteUnarySemigroup, StructureError

from .strategy_factory.factory import make_structure_strategy

TB = named_semigroup("tb")
K3 = named_semigroup("k3")


class TestValidateStructure:
    """Associativity and recorded zero and identity."""

    @pytest.mark.parametrize("name", ["k3", "tb", "ta", "b21_transpose"])
    def test_named_structures_are_valid(self, name: str) -> None:
        assert validate_structure(named_semigroup(name)) == []

    def test_left_zero_band_with_wrong_identity(self) -> None:
        s = FiniteUnarySemigroup.from_tables([[0, 0], [1, 1]], identity_id=0)
        (violation,) = validate_structure(s)
        assert violation.kind == "identity"
        assert violation.elements == (0, 1)

    def test_false_zero(self) -> None:
        s = FiniteUnarySemigroup.from_tables([[0, 1], [1, 0]], zero_id=0)
        assert {v.kind for v in validate_structure(s)} == {"zero"}

    def test_violation_cap(self) -> None:
        bad = FiniteUnarySemigroup.from_tables([[1, 1], [0, 0]])
        capped = validate_structure(bad, Settings(violation_cap=2))
        assert len(capped) == 2  # noqa: PLR2004
        assert capped == validate_structure(bad)[:2]

    @given(make_structure_strategy())
    def test_generated_structures_are_valid(self, s: FiniteUnarySemigroup) -> None:
        assert validate_structure(s) == []


class TestClassifyUnary:
    def test_k3_is_regular(self) -> None:
        (flags,) = classify_unary(K3)
        assert flags.regular_star
        assert flags.witness is None

    def test_tb_is_not_regular(self) -> None:
        (flags,) = classify_unary(TB)
        assert flags.involutory
        assert not flags.regular
        assert flags.witness == (0,)

    def test_non_involution(self) -> None:
        s = FiniteUnarySemigroup.from_tables([[0, 0], [0, 0]], [[1, 1]])
        (flags,) = classify_unary(s)
        assert not flags.involution
        assert flags.witness == (0,)

    def test_two_operations(self) -> None:
        first, second = classify_unary(named_semigroup("k3_double"))
        assert (first.index, second.index) == (1, 2)
        assert first.regular_star
        assert second.regular_star

    def test_plain_semigroup(self) -> None:
        with pytest.raises(StructureError):
            classify_unary(FiniteUnarySemigroup.from_tables([[0]]))


class TestClosures:
    """Generated unary subsemigroups and their relatives."""

    def test_closure_of_a_zero_divisor(self) -> None:
        closure = generated_closure(TB, [0])
        assert closure.embedding == (0, 4)
        assert closure.semigroup.zero_id == 1

    def test_closure_in_k3(self) -> None:
        closure = generated_closure(K3, [K3.id_of_label("(1,2)")])
        assert closure.embedding == (0, 1, 3, 4)
        assert closure.semigroup.zero_id is None
        assert validate_structure(closure.semigroup) == []

    def test_local_ids(self) -> None:
        closure = generated_closure(TB, [0])
        assert closure.local_ids() == {0: 0, 4: 1}

    def test_substructure_rejects_open_sets(self) -> None:
        with pytest.raises(StructureError):
            substructure(TB, [0])

    def test_element_cap(self) -> None:
        with pytest.raises(StructureError):
            generated_closure(K3, [0, 4, 8], Settings(element_cap=2))

    def test_hermitian_part(self) -> None:
        assert hermitian_part(TB).embedding == (4, 5)
        assert hermitian_part(cyclic_group(5).to_semigroup()).size == 1

    def test_power_part(self) -> None:
        c6 = cyclic_group(6).to_semigroup()
        assert power_part(c6, 2).embedding == (0, 2, 4)
        assert power_part(c6, 6).size == 1

    def test_idempotents(self) -> None:
        assert idempotents(TB).tolist() == [1, 2, 4, 5]

    def test_element_powers(self) -> None:
        c6 = cyclic_group(6).to_semigroup()
        assert element_powers(c6, [1, 2, 5], 4).tolist() == [4, 2, 2]
        with pytest.raises(ValueError, match="positive"):
            element_powers(c6, [1], 0)

    @given(make_structure_strategy(), st.data())
    def test_closure_is_closed(
        self, s: FiniteUnarySemigroup, data: st.DataObject
    ) -> None:
        generators = data.draw(
            st.lists(st.integers(0, s.size - 1), min_size=1, max_size=3)
        )
        closure = generated_closure(s, generators)
        assert set(generators) <= set(closure.embedding)
        # the embedding is a morphism into the parent
        assert verify_morphism(closure.semigroup, s, closure.embedding) == []


class TestProducts:
    def test_direct_product_ids(self) -> None:
        product = direct_product(TB, K3)
        assert product.size == 60  # noqa: PLR2004
        assert product.zero_id == 4 * 10 + 9
        assert product.identity_id is None
        assert product.product(5 * 10 + 1, 0 * 10 + 3) == 0 * 10 + K3.product(1, 3)

    def test_arity_mismatch(self) -> None:
        with pytest.raises(StructureError):
            direct_product(TB, named_semigroup("k3_double"))

    def test_tabulate_limit(self) -> None:
        with pytest.raises(StructureError):
            direct_product(TB, K3, Settings(tabulate_limit=50))

    @settings(max_examples=25)
    @given(
        make_structure_strategy("group", "monogenic"),
        make_structure_strategy("group", "monogenic"),
    )
    def test_direct_product_is_valid(
        self, s: FiniteUnarySemigroup, t: FiniteUnarySemigroup
    ) -> None:
        assert validate_structure(direct_product(s, t)) == []

    def test_adjoin_identity(self) -> None:
        b2 = named_semigroup("b2")
        monoid = adjoin_identity(b2)
        assert monoid == TB
        assert monoid.label(monoid.identity_id or 0) == "1"
        assert monoid.star_of(b2.size) == b2.size


class TestQuotients:
    def test_rees_quotient(self) -> None:
        partition = ElementPartition.from_blocks(6, [[0, 1, 2, 3, 4], [5]])
        result = quotient_by_partition(TB, partition)
        assert result.is_congruence
        assert result.quotient is not None
        assert result.quotient.size == 2  # noqa: PLR2004
        assert result.quotient.zero_id == 0
        assert result.quotient.identity_id == 1

    def test_first_violation(self) -> None:
        partition = ElementPartition.from_blocks(6, [[0, 1], [2], [3], [4], [5]])
        result = quotient_by_partition(TB, partition)
        assert result.quotient is None
        assert result.violation is not None
        assert result.violation.operation == "multiply"
        assert result.violation.first == (1, 0)
        assert result.violation.second == (0, 0)

    def test_partition_size(self) -> None:
        with pytest.raises(StructureError):
            quotient_by_partition(TB, ElementPartition((0, 0)))

    def test_partition_errors(self) -> None:
        with pytest.raises(StructureError, match="two classes"):
            ElementPartition.from_blocks(3, [[0, 1], [1, 2]])
        with pytest.raises(StructureError, match="no class"):
            ElementPartition.from_blocks(3, [[0, 1]])

    @given(make_structure_strategy())
    def test_trivial_partitions(self, s: FiniteUnarySemigroup) -> None:
        identity = quotient_by_partition(s, ElementPartition(tuple(range(s.size))))
        assert identity.quotient is not None
        assert np.array_equal(identity.quotient.table, s.table)

        collapse = quotient_by_partition(s, ElementPartition((0,) * s.size))
        assert collapse.quotient is not None
        assert collapse.quotient.size == 1


class TestMorphisms:
    def test_identity_map(self) -> None:
        assert verify_morphism(TB, TB, range(6), "isomorphism") == []

    def test_constant_map_is_not_onto(self) -> None:
        constant = [4] * 6
        assert verify_morphism(TB, TB, constant) == []
        kinds = [v.detail for v in verify_morphism(TB, TB, constant, "onto")]
        assert kinds == ["the map is not onto"]

    def test_bad_map(self) -> None:
        violations = verify_morphism(TB, TB, [1, 0, 2, 3, 4, 5])
        assert violations
        assert {v.kind for v in violations} == {"morphism"}

    def test_wrong_length(self) -> None:
        with pytest.raises(StructureError):
            verify_morphism(TB, TB, [0, 1])

    def test_tb_is_realized_by_matrices(self) -> None:
        target = named_semigroup("tb_matrices")
        result = find_morphism(TB, target)
        assert result.verdict == "found"
        assert result.mapping is not None
        assert verify_morphism(TB, target, result.mapping, "isomorphism") == []

    def test_tb_is_not_the_transpose_monoid(self) -> None:
        result = find_morphism(TB, named_semigroup("b21_transpose"))
        assert result.verdict == "none"

    def test_invariant_shortcut(self) -> None:
        result = find_morphism(TB, K3)
        assert result.verdict == "none"
        assert result.nodes == 0
        assert "sizes differ" in result.reason

    def test_node_budget(self) -> None:
        result = find_morphism(
            TB,
            named_semigroup("tb_matrices"),
            settings=Settings(morphism_node_budget=1),
        )
        assert result.verdict == "inconclusive"
        assert result.mapping is None

    def test_seed_that_does_not_extend(self) -> None:
        # the zero must go to the zero
        result = find_morphism(TB, TB, seed={4: 5})
        assert result.verdict == "none"

    def test_homomorphism_onto_a_quotient(self) -> None:
        partition = ElementPartition.from_blocks(6, [[0, 1, 2, 3, 4], [5]])
        quotient = quotient_by_partition(TB, partition).quotient
        assert quotient is not None
        result = find_morphism(TB, quotient, "onto")
        assert result.verdict == "found"
        assert result.mapping == (0, 0, 0, 0, 0, 1)

    @settings(max_examples=25)
    @given(make_structure_strategy("group", "monogenic", "closure"))
    def test_every_structure_is_isomorphic_to_itself(
        self, s: FiniteUnarySemigroup
    ) -> None:
        result = find_morphism(s, s)
        assert result.verdict == "found"


class TestGreen:
    def test_tb(self) -> None:
        report = green_r_height(TB)
        assert report.height == 3  # noqa: PLR2004
        assert report.chain[0] == TB.zero_id
        assert report.chain[-1] == TB.identity_id

    def test_k3(self) -> None:
        report = green_r_height(K3)
        assert report.partition.count == 4  # noqa: PLR2004
        assert report.height == 2  # noqa: PLR2004

    def test_group(self) -> None:
        report = green_r_height(cyclic_group(4).to_semigroup())
        assert report.height == 1
        assert report.order == frozenset()


class TestIndexPeriod:
    def test_cyclic_group(self) -> None:
        result = index_period(cyclic_group(6).to_semigroup())
        assert (result.index, result.period) == (1, 6)

    def test_tb(self) -> None:
        result = index_period(TB)
        assert (result.index, result.period) == (2, 1)
        assert verify_index_period(TB, 2, 1)
        assert not verify_index_period(TB, 3, 1)
        assert not verify_index_period(TB, 2, 2)
        assert not verify_index_period(TB, 1, 1)

    @given(st.integers(1, 5), st.integers(1, 6))
    def test_monogenic(self, index: int, period: int) -> None:
        top = index + period - 1

        def reduce(power: int) -> int:
            return power if power <= top else index + (power - index) % period

        s = FiniteUnarySemigroup.from_operations(
            list(range(1, top + 1)), lambda a, b: reduce(a + b)
        )
        result = index_period(s)
        assert (result.index, result.period) == (index, period)
        assert verify_index_period(s, index, period)

    @given(make_structure_strategy())
    def test_computed_pair_is_least(self, s: FiniteUnarySemigroup) -> None:
        result = index_period(s)
        assert satisfies_periodicity(s, result.index, result.period)
        assert verify_index_period(s, result.index, result.period)
