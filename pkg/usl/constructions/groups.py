"""Finite groups as tables, for use as structure groups of Rees matrix semigroups."""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import CyclicGroup, SymmetricGroup

from ..semigroup import ID_DTYPE, FiniteUnarySemigroup, IdArray, StructureError


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its multiplication table.

    Attributes:
        table: The multiplication table
        identity: Id of the identity element
        element_labels: Optional display labels

    Examples:
        >>> g = cyclic_group(3)
        >>> g.product(1, 2), g.inverse_of(1), g.exponent()
        (0, 2, 3)
    """

    table: IdArray
    identity: int = 0
    element_labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        table = np.array(self.table, dtype=ID_DTYPE)
        size = table.shape[0]

        if table.ndim != 2 or table.shape[1] != size or size == 0:  # noqa: PLR2004
            raise StructureError("A group table must be square and non-empty.")

        ids = np.arange(size)
        if np.any((table < 0) | (table >= size)):
            raise StructureError("Group table entries must be element ids.")

        e = self.identity
        if not (np.array_equal(table[e], ids) and np.array_equal(table[:, e], ids)):
            raise StructureError(f"Element {e} is not an identity.")

        if not np.all(np.sort(table, axis=1) == ids):
            raise StructureError("Some element has no inverse.")

        for a in range(size):
            if not np.array_equal(table[table[a]], table[a][table]):
                raise StructureError(
                    f"Group table is not associative at element {a}."
                )

        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    @property
    def inverse(self) -> IdArray:
        """Inverse of every element."""
        return np.argmax(self.table == self.identity, axis=1).astype(ID_DTYPE)

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse_of(self, a: int) -> int:
        return int(self.inverse[a])

    def multiply(self, a: ArrayLike, b: ArrayLike) -> IdArray:
        return self.table[a, b]

    def label(self, element: int) -> str:
        if self.element_labels is None:
            return "e" if element == self.identity else f"g{element}"
        return self.element_labels[element]

    def element(self, label: str) -> int:
        """Returns the id of the element with the given label."""
        for i in range(self.size):
            if self.label(i) == label:
                return i
        raise KeyError(label)

    def order(self, element: int) -> int:
        power, count = element, 1
        while power != self.identity:
            power = self.product(power, element)
            count += 1
        return count

    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        return math.lcm(*(self.order(g) for g in range(self.size)))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def to_semigroup(self) -> FiniteUnarySemigroup:
        """The group as a unary semigroup, with inversion as its star."""
        return FiniteUnarySemigroup.from_tables(
            self.table,
            [self.inverse],
            [self.label(i) for i in range(self.size)],
            None,
            self.identity,
        )

    @classmethod
    def from_permutation_group(cls, group: PermutationGroup) -> "GroupTable":
        """Tabulates a sympy permutation group, identity first.

        Elements are ordered by their array forms and labelled in one-based cycle
        notation.
        """
        elements: list[Any] = sorted(
            group.elements,  # pyright: ignore[reportUnknownMemberType, reportUnknownArgumentType]
            key=lambda p: (not p.is_Identity, p.array_form),  # pyright: ignore[reportUnknownLambdaType, reportUnknownMemberType]
        )
        index = {tuple(p.array_form): i for i, p in enumerate(elements)}
        table = [[index[tuple((a * b).array_form)] for b in elements] for a in elements]
        return cls(np.asarray(table), 0, tuple(_cycle_label(p) for p in elements))

    @classmethod
    def from_semigroup(cls, s: FiniteUnarySemigroup) -> "GroupTable":
        """Reads a group off a semigroup that happens to be one.

        Raises:
            StructureError: If ``s`` has no identity or is not a group
        """
        ids = s.ids()
        candidates = [
            e
            for e in range(s.size)
            if np.array_equal(s.table[e], ids) and np.array_equal(s.table[:, e], ids)
        ]
        if not candidates:
            raise StructureError("The semigroup has no identity.")
        return cls(s.table, candidates[0], s.labels())


def _cycle_label(permutation: Permutation) -> str:
    cycles: list[list[int]] = permutation.cyclic_form  # pyright: ignore[reportUnknownMemberType, reportAssignmentType]
    if not cycles:
        return "e"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def cyclic_group(n: int) -> GroupTable:
    """Returns the cyclic group of order ``n`` with ``a b = a + b mod n``."""
    if n < 1:
        raise StructureError(f"Group order must be positive, got {n}.")
    ids = np.arange(n)
    return GroupTable((ids[:, None] + ids[None, :]) % n, 0, tuple(map(str, range(n))))


def symmetric_group(n: int) -> GroupTable:
    """Returns the symmetric group on ``n`` points.

    Examples:
        >>> g = symmetric_group(3)
        >>> g.size, g.is_abelian(), g.label(g.element("(1 2)"))
        (6, False, '(1 2)')
    """
    return GroupTable.from_permutation_group(SymmetricGroup(n))


def permutation_cyclic_group(n: int) -> GroupTable:
    """Returns the cyclic group of order ``n`` generated by an ``n``-cycle."""
    return GroupTable.from_permutation_group(CyclicGroup(n))


def group_from_generators(
    degree: int, generators: Sequence[Sequence[int]]
) -> GroupTable:
    """Generates a permutation group from array forms of its generators."""
    return GroupTable.from_permutation_group(
        PermutationGroup([Permutation(list(g), size=degree) for g in generators])
    )


def trivial_group() -> GroupTable:
    return cyclic_group(1)
