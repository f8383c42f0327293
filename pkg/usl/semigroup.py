"""Carriers for finite unary semigroups.

A unary semigroup is a finite semigroup together with zero, one or two unary
operations called stars. Elements are the integers ``0 .. size - 1`` and every
operation is vectorized: ``multiply`` and ``star`` accept numpy arrays of element
ids of any broadcastable shape and return arrays of the same shape.

Two carriers implement the ``UnarySemigroup`` interface:

* ``FiniteUnarySemigroup`` stores dense Cayley tables.
* ``EncodedSemigroup`` keeps a sorted array of integer codes and multiplies through
  code-level functions, for structures too large to tabulate.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .config import DEFAULT_SETTINGS, Settings

_logger = logging.getLogger(__name__)

ID_DTYPE = np.int32

type IdArray = NDArray[np.int32]
type CodeArray = NDArray[np.int64]
type CodeProduct = Callable[[CodeArray, CodeArray], CodeArray]
type CodeStar = Callable[[CodeArray], CodeArray]


class StructureError(ValueError):
    """Raised when tables or arguments do not describe a valid structure."""


class ConstructionError(RuntimeError):
    """Raised when a construction step fails a self-check it is known to satisfy."""


def as_ids(values: ArrayLike) -> IdArray:
    """Converts scalars or sequences of element ids to an id array."""
    return np.asarray(values, dtype=ID_DTYPE)


class UnarySemigroup(ABC):
    """Interface shared by every finite unary semigroup carrier.

    Attributes:
        size: Number of elements
        arity: Number of unary operations (0, 1 or 2)
        zero_id: Id of the zero element, if one is recorded
        identity_id: Id of the identity element, if one is recorded
    """

    size: int
    arity: int
    zero_id: int | None
    identity_id: int | None

    @abstractmethod
    def multiply(self, a: ArrayLike, b: ArrayLike) -> IdArray:
        """Multiplies element ids elementwise, with numpy broadcasting."""
        ...

    @abstractmethod
    def star(self, a: ArrayLike, index: int = 1) -> IdArray:
        """Applies unary operation ``index`` (1 or 2) elementwise."""
        ...

    @abstractmethod
    def label(self, element: int) -> str:
        """Returns the display label of an element."""
        ...

    @abstractmethod
    def tabulate(self, settings: Settings = DEFAULT_SETTINGS) -> "FiniteUnarySemigroup":
        """Returns an equivalent structure with materialized tables.

        Raises:
            StructureError: If the structure is larger than ``settings.tabulate_limit``
        """
        ...

    def product(self, a: int, b: int) -> int:
        """Multiplies two element ids."""
        return int(self.multiply(a, b))

    def star_of(self, a: int, index: int = 1) -> int:
        """Applies unary operation ``index`` to a single element id."""
        return int(self.star(a, index))

    def labels(self) -> tuple[str, ...]:
        """Returns the labels of all elements in id order."""
        return tuple(self.label(i) for i in range(self.size))

    def ids(self) -> IdArray:
        """Returns every element id in ascending order."""
        return np.arange(self.size, dtype=ID_DTYPE)

    def _check_star_index(self, index: int) -> None:
        if not 1 <= index <= self.arity:
            raise StructureError(
                f"Unary operation {index} is not defined; the structure has {self.arity}."  # noqa: E501
            )


def _read_only(array: NDArray[Any]) -> NDArray[Any]:
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class FiniteUnarySemigroup(UnarySemigroup):
    """A unary semigroup stored as dense Cayley tables.

    Tables are validated for shape and range on construction and are made read-only.
    Associativity and the unary laws are not assumed; see ``core.validate_structure``
    and ``core.classify_unary``.

    Attributes:
        table: The ``size x size`` multiplication table
        star_tables: One row per unary operation, shape ``(arity, size)``
        element_labels: Optional display labels, one per element
        zero_id: Id of the zero element, if one is recorded
        identity_id: Id of the identity element, if one is recorded

    Examples:
        >>> s = FiniteUnarySemigroup.from_tables([[0, 0], [0, 1]], [[0, 1]])
        >>> s.size, s.arity, s.product(1, 1)
        (2, 1, 1)
        >>> FiniteUnarySemigroup.from_tables([[0, 2], [0, 1]])
        Traceback (most recent call last):
            ...
        usl.semigroup.StructureError: Multiplication table entry 2 is not an element id.
    """

    table: IdArray
    star_tables: IdArray
    element_labels: tuple[str, ...] | None = None
    zero_id: int | None = None
    identity_id: int | None = None

    def __post_init__(self) -> None:
        try:
            table = np.array(self.table, dtype=ID_DTYPE)
        except ValueError as error:
            raise StructureError("Multiplication table is ragged.") from error

        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.size == 0:  # noqa: PLR2004
            raise StructureError(
                f"Multiplication table must be square and non-empty, got shape {table.shape}."  # noqa: E501
            )

        size = table.shape[0]

        try:
            stars = np.array(self.star_tables, dtype=ID_DTYPE).reshape(-1, size)
        except ValueError as error:
            raise StructureError(
                f"Unary tables must each have {size} entries."
            ) from error

        if stars.shape[0] > 2:  # noqa: PLR2004
            raise StructureError(
                f"At most two unary operations are supported, got {stars.shape[0]}."
            )

        for name, values in (("Multiplication table", table), ("Unary table", stars)):
            bad = values[(values < 0) | (values >= size)]
            if bad.size:
                raise StructureError(
                    f"{name} entry {int(bad[0])} is not an element id."
                )

        if self.element_labels is not None and len(self.element_labels) != size:
            raise StructureError(
                f"Expected {size} labels, got {len(self.element_labels)}."
            )

        for name, element in (("zero", self.zero_id), ("identity", self.identity_id)):
            if element is not None and not 0 <= element < size:
                raise StructureError(f"The {name} id {element} is not an element id.")

        object.__setattr__(self, "table", _read_only(table))
        object.__setattr__(self, "star_tables", _read_only(stars))

    @classmethod
    def from_tables(
        cls,
        table: ArrayLike,
        stars: ArrayLike = (),
        labels: Sequence[str] | None = None,
        zero_id: int | None = None,
        identity_id: int | None = None,
    ) -> "FiniteUnarySemigroup":
        """Builds a structure from a multiplication table and unary tables.

        Args:
            table: Square table, ``table[a][b]`` being the product ``a b``
            stars: Zero, one or two unary tables
            labels: Optional element labels
            zero_id: Id of the zero element, if any
            identity_id: Id of the identity element, if any

        Returns:
            The structure

        Raises:
            StructureError: If a table has the wrong shape or an out-of-range entry
        """
        table_ = np.asarray(table, dtype=ID_DTYPE)
        stars_ = np.asarray(stars, dtype=ID_DTYPE).reshape(-1, table_.shape[-1])
        return cls(
            table_,
            stars_,
            None if labels is None else tuple(labels),
            zero_id,
            identity_id,
        )

    @classmethod
    def from_operations[T: Hashable](  # noqa: PLR0913
        cls,
        elements: Sequence[T],
        multiply: Callable[[T, T], T],
        stars: Sequence[Callable[[T], T]] = (),
        labels: Sequence[str] | Callable[[T], str] | None = None,
        zero: T | None = None,
        identity: T | None = None,
    ) -> "FiniteUnarySemigroup":
        """Tabulates operations given on a finite set of hashable elements.

        Args:
            elements: The carrier; ids follow this order
            multiply: The binary operation
            stars: The unary operations
            labels: Labels, or a function producing a label from an element
            zero: The zero element, if any
            identity: The identity element, if any

        Returns:
            The tabulated structure

        Raises:
            StructureError: If an operation leaves the carrier

        Examples:
            >>> s = FiniteUnarySemigroup.from_operations(
            ...     [0, 1, 2], lambda a, b: (a + b) % 3, [lambda a: -a % 3]
            ... )
            >>> s.star_of(1), s.labels()
            (2, ('0', '1', '2'))
        """
        index = {element: i for i, element in enumerate(elements)}

        if len(index) != len(elements):
            raise StructureError("Elements must be distinct.")

        def position(value: T, context: str) -> int:
            try:
                return index[value]
            except KeyError:
                raise StructureError(
                    f"{context} gives {value!r}, which is not an element."
                ) from None

        table = [
            [position(multiply(a, b), f"Product of {a!r} and {b!r}") for b in elements]
            for a in elements
        ]
        star_tables = [
            [position(op(a), f"Unary operation {k + 1} of {a!r}") for a in elements]
            for k, op in enumerate(stars)
        ]

        if labels is None:
            names = tuple(str(element) for element in elements)
        elif callable(labels):
            names = tuple(labels(element) for element in elements)
        else:
            names = tuple(labels)

        return cls.from_tables(
            table,
            np.asarray(star_tables, dtype=ID_DTYPE).reshape(len(stars), len(elements)),
            names,
            None if zero is None else position(zero, "Zero"),
            None if identity is None else position(identity, "Identity"),
        )

    @property
    def size(self) -> int:  # pyright: ignore[reportIncompatibleVariableOverride]
        return int(self.table.shape[0])

    @property
    def arity(self) -> int:  # pyright: ignore[reportIncompatibleVariableOverride]
        return int(self.star_tables.shape[0])

    def multiply(self, a: ArrayLike, b: ArrayLike) -> IdArray:
        return self.table[a, b]

    def product(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def star(self, a: ArrayLike, index: int = 1) -> IdArray:
        self._check_star_index(index)
        return self.star_tables[index - 1][a]

    def star_table(self, index: int = 1) -> IdArray:
        """Returns the table of unary operation ``index``."""
        self._check_star_index(index)
        return self.star_tables[index - 1]

    def label(self, element: int) -> str:
        if self.element_labels is None:
            return str(element)
        return self.element_labels[element]

    def id_of_label(self, label: str) -> int:
        """Returns the id of the element with the given label.

        Raises:
            KeyError: If no element carries the label
        """
        for i in range(self.size):
            if self.label(i) == label:
                return i
        raise KeyError(label)

    def tabulate(self, settings: Settings = DEFAULT_SETTINGS) -> "FiniteUnarySemigroup":  # noqa: ARG002
        return self

    def with_stars(self, stars: ArrayLike) -> "FiniteUnarySemigroup":
        """Returns the same semigroup carrying different unary operations."""
        return FiniteUnarySemigroup.from_tables(
            self.table, stars, self.element_labels, self.zero_id, self.identity_id
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteUnarySemigroup):
            return NotImplemented
        return (
            np.array_equal(self.table, other.table)
            and np.array_equal(self.star_tables, other.star_tables)
            and self.labels() == other.labels()
            and self.zero_id == other.zero_id
            and self.identity_id == other.identity_id
        )

    def __hash__(self) -> int:
        return hash((self.table.tobytes(), self.star_tables.tobytes(), self.size))

    def __repr__(self) -> str:
        return f"FiniteUnarySemigroup(size={self.size}, arity={self.arity})"


@dataclass(frozen=True, eq=False)
class EncodedSemigroup(UnarySemigroup):
    """A unary semigroup whose elements are integer codes, multiplied on the fly.

    Element ``i`` is the code ``codes[i]``; codes are sorted and distinct, so ids
    are recovered with a binary search. Code-level operations receive and return
    int64 arrays.

    Attributes:
        codes: Sorted, distinct element codes
        code_product: Vectorized product of codes
        code_stars: Vectorized unary operations on codes
        code_label: Label of a single code
        zero_id: Id of the zero element, if any
        identity_id: Id of the identity element, if any
    """

    codes: CodeArray
    code_product: CodeProduct
    code_stars: tuple[CodeStar, ...] = ()
    code_label: Callable[[int], str] = str
    zero_id: int | None = None
    identity_id: int | None = None

    def __post_init__(self) -> None:
        codes = np.asarray(self.codes, dtype=np.int64)

        if codes.ndim != 1 or codes.size == 0:
            raise StructureError("Codes must be a non-empty one-dimensional array.")

        if np.any(np.diff(codes) <= 0):
            raise StructureError("Codes must be sorted and distinct.")

        if len(self.code_stars) > 2:  # noqa: PLR2004
            raise StructureError("At most two unary operations are supported.")

        object.__setattr__(self, "codes", _read_only(codes))

    @property
    def size(self) -> int:  # pyright: ignore[reportIncompatibleVariableOverride]
        return int(self.codes.shape[0])

    @property
    def arity(self) -> int:  # pyright: ignore[reportIncompatibleVariableOverride]
        return len(self.code_stars)

    def id_of_code(self, codes: ArrayLike) -> IdArray:
        """Maps codes back to element ids.

        Raises:
            StructureError: If a code is not an element
        """
        codes_ = np.asarray(codes, dtype=np.int64)
        positions = np.searchsorted(self.codes, codes_)
        clipped = np.minimum(positions, self.size - 1)
        missing = self.codes[clipped] != codes_
        if np.any(missing):
            code = int(codes_[missing].ravel()[0])
            raise StructureError(
                f"Code {code} ({self.code_label(code)}) is not an element."
            )
        return clipped.astype(ID_DTYPE)

    def multiply(self, a: ArrayLike, b: ArrayLike) -> IdArray:
        return self.id_of_code(self.code_product(self.codes[a], self.codes[b]))

    def star(self, a: ArrayLike, index: int = 1) -> IdArray:
        self._check_star_index(index)
        return self.id_of_code(self.code_stars[index - 1](self.codes[a]))

    def label(self, element: int) -> str:
        return self.code_label(int(self.codes[element]))

    def tabulate(self, settings: Settings = DEFAULT_SETTINGS) -> FiniteUnarySemigroup:
        size = self.size

        if size > settings.tabulate_limit:
            raise StructureError(
                f"A structure of size {size} exceeds tabulate_limit={settings.tabulate_limit}."  # noqa: E501
            )

        _logger.debug("Tabulating encoded structure of size %d", size)

        ids = self.ids()
        rows = max(1, settings.chunk_size // size)
        table = np.empty((size, size), dtype=ID_DTYPE)

        for start in range(0, size, rows):
            block = ids[start : start + rows]
            table[start : start + rows] = self.multiply(block[:, None], ids[None, :])

        stars = [self.star(ids, k + 1) for k in range(self.arity)]

        return FiniteUnarySemigroup.from_tables(
            table,
            np.asarray(stars, dtype=ID_DTYPE).reshape(self.arity, size),
            self.labels(),
            self.zero_id,
            self.identity_id,
        )

    def __repr__(self) -> str:
        return f"EncodedSemigroup(size={self.size}, arity={self.arity})"
