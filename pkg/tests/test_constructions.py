"""Tests for usl.constructions: groups, Rees matrix semigroups, the critical
semigroups and the named structures."""

import numpy as np
import pytest

from usl.config import Settings
from usl.constructions.critical import (
    CriticalSpec,
    WordVariant,
    critical_identity,
    critical_sandwich,
    critical_substitution,
    critical_Tk,
    normalize_sandwich,
    restrict_Tk,
    sapir_witness_words,
    staircase_tuples,
)
from usl.constructions.groups import (
    GroupTable,
    cyclic_group,
    group_from_generators,
    permutation_cyclic_group,
    symmetric_group,
)
from usl.constructions.named import named_semigroup, named_structures, register_named
from usl.constructions.rees import (
    ZERO_ENTRY,
    ReesSemigroup,
    ReesSpec,
    group_times_rees_map,
    rees_isomorphism_map,
    rees_matrix,
    rees_spec_read,
    rees_spec_write,
    trivialize,
)
from usl.core import classify_unary, direct_product, validate_structure, verify_morphism
from usl.semigroup import StructureError
from usl.terms import evaluate, parse_identity

S3 = symmetric_group(3)
TRANSPOSITIONS = (S3.element("(1 2)"), S3.element("(1 3)"))


class TestGroups:
    def test_cyclic(self) -> None:
        g = cyclic_group(4)
        assert g.is_abelian()
        assert g.exponent() == 4  # noqa: PLR2004
        assert g.inverse.tolist() == [0, 3, 2, 1]
        assert g.label(3) == "3"

    def test_symmetric(self) -> None:
        assert S3.size == 6  # noqa: PLR2004
        assert not S3.is_abelian()
        assert S3.exponent() == 6  # noqa: PLR2004
        assert S3.label(S3.identity) == "e"
        assert S3.order(TRANSPOSITIONS[0]) == 2  # noqa: PLR2004

    def test_permutation_groups(self) -> None:
        assert permutation_cyclic_group(4).exponent() == 4  # noqa: PLR2004
        generated = group_from_generators(3, [[1, 0, 2], [0, 2, 1]])
        assert generated.size == 6  # noqa: PLR2004

    def test_round_trip_through_semigroup(self) -> None:
        s = S3.to_semigroup()
        (flags,) = classify_unary(s)
        assert flags.regular_star
        assert s.identity_id == S3.identity
        assert np.array_equal(GroupTable.from_semigroup(s).table, S3.table)

    def test_unknown_label(self) -> None:
        with pytest.raises(KeyError):
            S3.element("(1 2 3 4)")

    @pytest.mark.parametrize(
        ("table", "identity", "message"),
        [
            ([[0, 1], [1, 0]], 1, "not an identity"),
            ([[0, 1], [1, 1]], 0, "no inverse"),
            (
                [
                    [0, 1, 2, 3, 4],
                    [1, 0, 3, 4, 2],
                    [2, 4, 0, 1, 3],
                    [3, 2, 4, 0, 1],
                    [4, 3, 1, 2, 0],
                ],
                0,
                "not associative",
            ),
            ([[0, 2], [1, 0]], 0, "element ids"),
        ],
    )
    def test_invalid_tables(
        self, table: list[list[int]], identity: int, message: str
    ) -> None:
        with pytest.raises(StructureError, match=message):
            GroupTable(np.asarray(table), identity)

    def test_cyclic_order(self) -> None:
        with pytest.raises(StructureError):
            cyclic_group(0)


class TestReesSpec:
    def test_ids_and_labels(self) -> None:
        spec = ReesSpec(cyclic_group(2), np.array([[0, 1], [1, ZERO_ENTRY]]))
        assert spec.size == 9  # noqa: PLR2004
        assert spec.decode(spec.element_id(1, 1, 0)) == (1, 1, 0)
        assert spec.label(spec.element_id(1, 1, 0)) == "(2,1,1)"
        assert spec.decode(spec.zero_id) is None
        assert not spec.is_regular_star()

    @pytest.mark.parametrize(
        "sandwich",
        [
            [[0, 0]],
            [[0, 3], [3, 0]],
            [[0, 1], [ZERO_ENTRY, 0]],
            [[0, 1], [1, 0]],
        ],
    )
    def test_invalid_sandwich(self, sandwich: list[list[int]]) -> None:
        with pytest.raises(StructureError):
            ReesSpec(cyclic_group(3), np.asarray(sandwich))

    def test_multiplication(self) -> None:
        spec = ReesSpec(cyclic_group(3), np.array([[0, 1], [2, ZERO_ENTRY]]))
        s = rees_matrix(spec)
        # (1,g1,1)(1,g1,2) = (1, g1 p11 g1, 2)
        a, b = spec.element_id(0, 1, 0), spec.element_id(0, 1, 1)
        assert s.product(a, b) == spec.element_id(0, 2, 1)
        # p22 is zero
        c = spec.element_id(1, 0, 1)
        assert s.product(c, c) == spec.zero_id
        assert s.star_of(a) == spec.element_id(0, 2, 0)

    def test_lazy_semigroup(self) -> None:
        spec = ReesSpec(cyclic_group(3), np.array([[0, 1], [2, ZERO_ENTRY]]))
        lazy = rees_matrix(spec, Settings(tabulate_limit=5))
        assert isinstance(lazy, ReesSemigroup)
        assert lazy.tabulate() == rees_matrix(spec)
        with pytest.raises(StructureError):
            lazy.tabulate(Settings(tabulate_limit=5))
        with pytest.raises(StructureError):
            lazy.star(0, 2)

    def test_element_cap(self) -> None:
        spec = ReesSpec(cyclic_group(3), np.array([[0, 1], [2, ZERO_ENTRY]]))
        with pytest.raises(StructureError):
            rees_matrix(spec, Settings(element_cap=10))

    def test_structure_laws(self) -> None:
        spec = ReesSpec(S3, critical_sandwich(CriticalSpec(S3, TRANSPOSITIONS, 1)))
        s = rees_matrix(spec.submatrix(range(4)))
        assert validate_structure(s.tabulate()) == []
        (flags,) = classify_unary(s.tabulate())
        assert flags.regular_star

    def test_trivialize(self) -> None:
        spec = ReesSpec(cyclic_group(3), np.array([[0, 1], [2, ZERO_ENTRY]]))
        shape = trivialize(spec)
        assert shape.group.size == 1
        assert shape.sandwich.tolist() == [[0, 0], [0, ZERO_ENTRY]]


class TestReesSpecText:
    def test_write(self) -> None:
        spec = ReesSpec(cyclic_group(2), np.array([[0, 1], [1, ZERO_ENTRY]]))
        assert rees_spec_write(spec).splitlines() == [
            "rees 2 2",
            "1 2",
            "2 1",
            "1 2",
            "2 0",
        ]

    def test_read(self) -> None:
        spec = rees_spec_read("rees 2 3\n1 2 3\n2 3 1\n3 1 2\n\n1 2\n3 0\n")
        assert spec.group.size == 3  # noqa: PLR2004
        assert spec.group.identity == 0
        assert spec.sandwich.tolist() == [[0, 1], [2, ZERO_ENTRY]]

    def test_read_what_was_written(self) -> None:
        spec = ReesSpec(S3, critical_sandwich(CriticalSpec(S3, TRANSPOSITIONS, 1)))
        again = rees_spec_read(rees_spec_write(spec))
        assert np.array_equal(again.sandwich, spec.sandwich)
        assert np.array_equal(again.group.table, spec.group.table)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "rees 2",
            "matrix 1 1\n1\n1",
            "rees 1 one\n1\n1",
            "rees 2 1\n1\n1 1",
            "rees 1 2\n1 2\n2 2\n1",
        ],
    )
    def test_malformed(self, text: str) -> None:
        with pytest.raises(StructureError):
            rees_spec_read(text)


class TestReesMaps:
    def test_scaling_is_an_isomorphism(self) -> None:
        c3 = cyclic_group(3)
        source = ReesSpec(c3, np.array([[0, 1], [2, 0]]))
        target = ReesSpec(c3, np.array([[0, 0], [0, 0]]))
        mapping = rees_isomorphism_map(source, target, (0, 1))
        violations = verify_morphism(
            rees_matrix(source), rees_matrix(target), mapping, "isomorphism"
        )
        assert violations == []

    def test_group_times_shape(self) -> None:
        c2 = cyclic_group(2)
        target = ReesSpec(c2, np.array([[0, ZERO_ENTRY], [ZERO_ENTRY, 0]]))
        shape = trivialize(target)
        product = direct_product(c2.to_semigroup(), rees_matrix(shape))
        mapping = group_times_rees_map(c2, shape, target)
        assert verify_morphism(product, rees_matrix(target), mapping, "onto") == []


class TestCritical:
    """The semigroups T_k and their restrictions."""

    def test_sizes(self) -> None:
        spec = CriticalSpec(S3, TRANSPOSITIONS, k=3)
        assert (spec.m, spec.n, spec.index_size) == (2, 7, 14)
        assert spec.size == 14 * 14 * 6 + 1

    @pytest.mark.parametrize(
        ("witnesses", "k", "identity"),
        [
            (TRANSPOSITIONS, 0, "x1 x2 = x2 x1"),
            (TRANSPOSITIONS[:1], 1, "x1 = x1"),
            ((TRANSPOSITIONS[0], TRANSPOSITIONS[0]), 1, "x1 x2 = x2 x1"),
            (TRANSPOSITIONS, 1, "x1 x3 = x3 x1"),
        ],
    )
    def test_invalid_specs(
        self, witnesses: tuple[int, ...], k: int, identity: str
    ) -> None:
        with pytest.raises(StructureError):
            CriticalSpec(S3, witnesses, k, parse_identity(identity))

    def test_sandwich_shape(self) -> None:
        spec = CriticalSpec(S3, TRANSPOSITIONS, k=1)
        sandwich = critical_sandwich(spec)
        e = S3.identity
        assert sandwich.shape == (8, 8)
        assert np.all(np.diagonal(sandwich) == e)
        assert sandwich[0, 1] == TRANSPOSITIONS[0]
        assert sandwich[4, 5] == TRANSPOSITIONS[1]
        assert sandwich[3, 4] == e
        assert sandwich[0, 7] == e
        assert sandwich[0, 2] == ZERO_ENTRY

    def test_witness_word_errors(self) -> None:
        with pytest.raises(ValueError, match="m >= 2"):
            sapir_witness_words(1, 4)

    @pytest.mark.parametrize(
        ("variant", "exponent"), [("hermitian", 1), ("power", S3.exponent())]
    )
    def test_words_pick_out_the_witnesses(
        self, variant: WordVariant, exponent: int
    ) -> None:
        spec = CriticalSpec(S3, TRANSPOSITIONS, k=1)
        tk, rees = critical_Tk(spec)
        assignment = critical_substitution(rees)
        words = sapir_witness_words(spec.m, spec.n, variant, exponent)
        last = rees.index_size - 1
        for word, g in zip(words, TRANSPOSITIONS, strict=True):
            assert evaluate(word, tk, assignment) == rees.element_id(0, g, last)

    def test_substituted_commutator_fails(self) -> None:
        spec = CriticalSpec(S3, TRANSPOSITIONS, k=1)
        tk, rees = critical_Tk(spec)
        assignment = critical_substitution(rees)
        lhs, rhs = critical_identity(spec)
        assert evaluate(lhs, tk, assignment) != evaluate(rhs, tk, assignment)

    def test_staircase(self) -> None:
        tuples = list(staircase_tuples(4, 2))
        assert len(tuples) == 16  # noqa: PLR2004
        assert tuples[0] == (1, 5)
        assert tuples[-1] == (4, 8)

    def test_restriction_normalizes(self) -> None:
        spec = CriticalSpec(S3, TRANSPOSITIONS, k=1)
        _, rees = critical_Tk(spec)
        restricted = restrict_Tk(rees, (4, 6), spec.n)
        assert restricted.kept == (0, 1, 2, 4, 6, 7)
        normalized, scaling = normalize_sandwich(restricted, TRANSPOSITIONS, spec.n)
        entries = normalized.sandwich[normalized.sandwich != ZERO_ENTRY]
        assert np.all(entries == S3.identity)
        mapping = rees_isomorphism_map(restricted.spec, normalized, scaling)
        violations = verify_morphism(
            rees_matrix(restricted.spec),
            rees_matrix(normalized),
            mapping,
            "isomorphism",
        )
        assert violations == []

    @pytest.mark.parametrize("deleted", [(4,), (5, 6), (1, 4)])
    def test_invalid_restrictions(self, deleted: tuple[int, ...]) -> None:
        _, rees = critical_Tk(CriticalSpec(S3, TRANSPOSITIONS, k=1))
        with pytest.raises(StructureError):
            restrict_Tk(rees, deleted, 4)


class TestNamed:
    @pytest.mark.parametrize("name", named_structures())
    def test_laws(self, name: str) -> None:
        s = named_semigroup(name)
        assert validate_structure(s) == []
        assert all(flags.involutory for flags in classify_unary(s))

    @pytest.mark.parametrize(
        ("name", "size"),
        [("k3", 10), ("a2", 5), ("b2", 5), ("tb", 6), ("ta", 6), ("b21_transpose", 6)],
    )
    def test_sizes(self, name: str, size: int) -> None:
        assert named_semigroup(name).size == size

    def test_labels(self) -> None:
        k3 = named_semigroup("k3")
        assert k3.labels()[:4] == ("(1,1)", "(1,2)", "(1,3)", "(2,1)")
        assert k3.label(k3.zero_id or 0) == "0"
        tb = named_semigroup("tb")
        assert tb.label(tb.identity_id or 0) == "1"

    def test_cached(self) -> None:
        assert named_semigroup("tb") is named_semigroup("tb")

    def test_unknown(self) -> None:
        with pytest.raises(KeyError, match="Unknown structure"):
            named_semigroup("k4")

    def test_duplicate(self) -> None:
        with pytest.raises(ValueError, match="already registered"):
            register_named("tb")(lambda: named_semigroup("tb"))
