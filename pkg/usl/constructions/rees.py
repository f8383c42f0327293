"""Unary Rees matrix semigroups.

Given a group ``G`` and an ``I x I`` sandwich matrix ``P`` with entries in
``G ∪ {0}``, the elements are the triples ``(i, g, j)`` and a zero, with

    (i, g, j)(k, h, l) = (i, g p_jk h, l)    if p_jk != 0, and 0 otherwise
    (i, g, j)* = (j, g^-1, i)

The star is an involution exactly when ``p_ij = p_ji^-1`` for all non-zero
entries. Indices are zero-based in code and one-based in labels; the triple
``(i, g, j)`` has id ``(i * |G| + g) * |I| + j`` and the zero has id
``|I|^2 |G|``.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ..config import DEFAULT_SETTINGS, Settings
from ..semigroup import (
    ID_DTYPE,
    FiniteUnarySemigroup,
    IdArray,
    StructureError,
    UnarySemigroup,
)
from .groups import GroupTable, cyclic_group

_logger = logging.getLogger(__name__)

ZERO_ENTRY = -1


@dataclass(frozen=True, eq=False)
class ReesSpec:
    """A structure group with a symmetric sandwich matrix.

    Attributes:
        group: The structure group
        sandwich: Square matrix of group element ids, ``ZERO_ENTRY`` for zero

    Examples:
        >>> spec = ReesSpec(cyclic_group(1), np.array([[-1, 0], [0, -1]]))
        >>> spec.size, spec.label(spec.element_id(0, 0, 1)), spec.label(spec.zero_id)
        (5, '(1,2)', '0')
        >>> ReesSpec(cyclic_group(3), np.array([[0, 1], [1, 0]]))
        Traceback (most recent call last):
            ...
        usl.semigroup.StructureError: Sandwich entries (1,2) and (2,1) are not mutually inverse.
    """  # noqa: E501

    group: GroupTable
    sandwich: IdArray

    def __post_init__(self) -> None:
        sandwich = np.array(self.sandwich, dtype=ID_DTYPE)

        if sandwich.ndim != 2 or sandwich.shape[0] != sandwich.shape[1] or sandwich.size == 0:  # noqa: E501, PLR2004
            raise StructureError("The sandwich matrix must be square and non-empty.")

        if np.any((sandwich < ZERO_ENTRY) | (sandwich >= self.group.size)):
            raise StructureError("Sandwich entries must be group ids or zero.")

        inverse = self.group.inverse
        for i, j in np.argwhere(sandwich != ZERO_ENTRY):
            p, q = int(sandwich[i, j]), int(sandwich[j, i])
            if q == ZERO_ENTRY or int(inverse[q]) != p:
                raise StructureError(
                    f"Sandwich entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not mutually inverse."  # noqa: E501
                )

        sandwich.flags.writeable = False
        object.__setattr__(self, "sandwich", sandwich)

    @property
    def index_size(self) -> int:
        return int(self.sandwich.shape[0])

    @property
    def size(self) -> int:
        return self.index_size**2 * self.group.size + 1

    @property
    def zero_id(self) -> int:
        return self.size - 1

    def is_regular_star(self) -> bool:
        """Whether ``x x* x = x`` holds, i.e. every diagonal entry is the identity."""
        return bool(np.all(np.diagonal(self.sandwich) == self.group.identity))

    def element_id(self, i: int, g: int, j: int) -> int:
        return (i * self.group.size + g) * self.index_size + j

    def decode(self, element: int) -> tuple[int, int, int] | None:
        """Returns ``(i, g, j)`` for an element id, or None for the zero."""
        if element == self.zero_id:
            return None
        rest, j = divmod(element, self.index_size)
        i, g = divmod(rest, self.group.size)
        return i, g, j

    def label(self, element: int) -> str:
        triple = self.decode(element)
        if triple is None:
            return "0"
        i, g, j = triple
        if self.group.size == 1:
            return f"({i + 1},{j + 1})"
        return f"({i + 1},{self.group.label(g)},{j + 1})"

    def submatrix(self, kept: Sequence[int]) -> "ReesSpec":
        """Restricts the sandwich matrix to the given indices."""
        rows = np.asarray(kept)
        return ReesSpec(self.group, self.sandwich[np.ix_(rows, rows)])

    def multiply(self, a: ArrayLike, b: ArrayLike) -> IdArray:
        """Vectorized Rees multiplication of element ids."""
        a_, b_ = np.broadcast_arrays(
            np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        )
        order, groups = self.index_size, self.group.size
        zero = self.zero_id

        rest_a, j_a = np.divmod(np.minimum(a_, zero - 1), order)
        i_a, g_a = np.divmod(rest_a, groups)
        rest_b, j_b = np.divmod(np.minimum(b_, zero - 1), order)
        i_b, g_b = np.divmod(rest_b, groups)

        p = self.sandwich[j_a, i_b]
        g = self.group.table[self.group.table[g_a, np.maximum(p, 0)], g_b]
        result = (i_a * groups + g) * order + j_b

        null = (a_ == zero) | (b_ == zero) | (p == ZERO_ENTRY)
        return np.where(null, zero, result).astype(ID_DTYPE)

    def star(self, a: ArrayLike) -> IdArray:
        """Vectorized ``(i, g, j) -> (j, g^-1, i)``."""
        a_ = np.asarray(a, dtype=np.int64)
        order, groups = self.index_size, self.group.size
        zero = self.zero_id

        rest, j = np.divmod(np.minimum(a_, zero - 1), order)
        i, g = np.divmod(rest, groups)
        result = (j * groups + self.group.inverse[g]) * order + i
        return np.where(a_ == zero, zero, result).astype(ID_DTYPE)


@dataclass(frozen=True, eq=False)
class ReesSemigroup(UnarySemigroup):
    """A Rees matrix semigroup multiplied from its spec rather than a table."""

    spec: ReesSpec

    @property
    def size(self) -> int:  # pyright: ignore[reportIncompatibleVariableOverride]
        return self.spec.size

    @property
    def arity(self) -> int:  # pyright: ignore[reportIncompatibleVariableOverride]
        return 1

    @property
    def zero_id(self) -> int:  # pyright: ignore[reportIncompatibleVariableOverride]
        return self.spec.zero_id

    @property
    def identity_id(self) -> None:  # pyright: ignore[reportIncompatibleVariableOverride]
        return None

    def multiply(self, a: ArrayLike, b: ArrayLike) -> IdArray:
        return self.spec.multiply(a, b)

    def star(self, a: ArrayLike, index: int = 1) -> IdArray:
        self._check_star_index(index)
        return self.spec.star(a)

    def label(self, element: int) -> str:
        return self.spec.label(element)

    def tabulate(self, settings: Settings = DEFAULT_SETTINGS) -> FiniteUnarySemigroup:
        size = self.size
        if size > settings.tabulate_limit:
            raise StructureError(
                f"A structure of size {size} exceeds tabulate_limit={settings.tabulate_limit}."  # noqa: E501
            )
        ids = self.ids()
        return FiniteUnarySemigroup.from_tables(
            self.multiply(ids[:, None], ids[None, :]),
            [self.star(ids)],
            self.labels(),
            self.zero_id,
        )


def rees_matrix(
    spec: ReesSpec, settings: Settings = DEFAULT_SETTINGS
) -> FiniteUnarySemigroup | ReesSemigroup:
    """Builds the unary Rees matrix semigroup of a spec.

    Structures up to ``settings.tabulate_limit`` elements are tabulated; larger
    ones multiply on the fly.

    Raises:
        StructureError: If the structure exceeds ``settings.element_cap``

    Examples:
        >>> k3 = rees_matrix(ReesSpec(cyclic_group(1), np.array([[0, 0, 0], [0, 0, -1], [0, -1, 0]])))
        >>> k3.size, k3.label(k3.product(1, 3))
        (10, '(1,1)')
    """  # noqa: E501
    if spec.size > settings.element_cap:
        raise StructureError(
            f"A Rees matrix semigroup of size {spec.size} exceeds element_cap={settings.element_cap}."  # noqa: E501
        )

    lazy = ReesSemigroup(spec)
    if spec.size > settings.tabulate_limit:
        _logger.debug("Keeping Rees matrix semigroup of size %d lazy", spec.size)
        return lazy
    return lazy.tabulate(settings)


def trivialize(spec: ReesSpec) -> ReesSpec:
    """Replaces the group by the trivial group, keeping the zero pattern."""
    return ReesSpec(
        cyclic_group(1),
        np.where(spec.sandwich == ZERO_ENTRY, ZERO_ENTRY, 0),
    )


def rees_isomorphism_map(
    source: ReesSpec, target: ReesSpec, scaling: Sequence[int]
) -> tuple[int, ...]:
    """The map ``(i, g, j) -> (i, u_i g u_j^-1, j)`` between two specs over the same
    group and index set."""
    inverse = source.group.inverse
    table = source.group.table
    mapping: list[int] = []
    for element in range(source.size):
        triple = source.decode(element)
        if triple is None:
            mapping.append(target.zero_id)
            continue
        i, g, j = triple
        image = int(table[table[scaling[i], g], inverse[scaling[j]]])
        mapping.append(target.element_id(i, image, j))
    return tuple(mapping)


def group_times_rees_map(
    group: GroupTable, shape: ReesSpec, target: ReesSpec
) -> tuple[int, ...]:
    """The map ``G x R(1; P') -> R(G; P)``, ``(g, (i, j)) -> (i, g, j)``.

    Ids of the source follow ``core.direct_product`` of ``group.to_semigroup()`` and
    ``rees_matrix(shape)``; every pair involving the zero goes to the zero.
    """
    mapping: list[int] = []
    for g in range(group.size):
        for element in range(shape.size):
            triple = shape.decode(element)
            if triple is None:
                mapping.append(target.zero_id)
            else:
                i, _, j = triple
                mapping.append(target.element_id(i, g, j))
    return tuple(mapping)


def rees_spec_write(spec: ReesSpec) -> str:
    """Serializes a spec.

    The header gives ``|I|`` and ``|G|``; the group table follows, then the sandwich
    rows. Group elements are written one-based and ``0`` stands for the zero.

    Examples:
        >>> print(rees_spec_write(ReesSpec(cyclic_group(2), np.array([[0, 1], [1, -1]]))))
        rees 2 2
        1 2
        2 1
        1 2
        2 0
    """  # noqa: E501
    lines = [f"rees {spec.index_size} {spec.group.size}"]
    lines.extend(" ".join(str(int(x) + 1) for x in row) for row in spec.group.table)
    lines.extend(" ".join(str(int(x) + 1) for x in row) for row in spec.sandwich)
    return "\n".join(lines)


def rees_spec_read(text: str) -> ReesSpec:
    """Parses the output of ``rees_spec_write``.

    The group identity is read off the table.

    Raises:
        StructureError: If the text is malformed
    """
    lines = [line.split() for line in text.splitlines() if line.strip()]

    if not lines or len(lines[0]) != 3 or lines[0][0] != "rees":  # noqa: PLR2004
        raise StructureError("Expected the header 'rees <index size> <group size>'.")

    try:
        index, order = int(lines[0][1]), int(lines[0][2])
        table = [[int(x) - 1 for x in row] for row in lines[1 : 1 + order]]
        sandwich = [[int(x) - 1 for x in row] for row in lines[1 + order :]]
    except ValueError as error:
        raise StructureError(f"Malformed Rees spec: {error}") from error

    if len(table) != order or len(sandwich) != index:
        raise StructureError(
            f"Expected {order} group rows and {index} sandwich rows."
        )

    identity = next(
        (e for e, row in enumerate(table) if row == list(range(order))), 0
    )
    return ReesSpec(GroupTable(np.asarray(table), identity), np.asarray(sandwich))
