"""Structural operations on finite unary semigroups.

Everything here works on element ids and numpy tables: validation of the semigroup
and unary laws, closures, products, quotients, morphism search, Green's R-order and
the index and period of a finite semigroup.
"""

import logging
import math
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from sympy import primefactors

from .config import DEFAULT_SETTINGS, Settings
from .semigroup import (
    ID_DTYPE,
    FiniteUnarySemigroup,
    IdArray,
    StructureError,
    UnarySemigroup,
    as_ids,
)

_logger = logging.getLogger(__name__)

type MorphismMode = Literal["homomorphism", "onto", "isomorphism"]
type ViolationKind = Literal["associativity", "zero", "identity", "morphism"]


@dataclass(frozen=True, slots=True)
class Violation:
    """A single failed law.

    Attributes:
        kind: Which law failed
        elements: The element ids witnessing the failure
        detail: Human readable description
    """

    kind: ViolationKind
    elements: tuple[int, ...]
    detail: str


@dataclass(frozen=True, slots=True)
class UnaryFlags:
    """Laws satisfied by one unary operation.

    Attributes:
        index: Which unary operation (1 or 2)
        involution: ``(x*)* = x`` for every ``x``
        anti_automorphism: ``(xy)* = y* x*`` for every ``x, y``
        regular: ``x x* x = x`` for every ``x``
        witness: The first failing elements, for the first law that fails
    """

    index: int
    involution: bool
    anti_automorphism: bool
    regular: bool
    witness: tuple[int, ...] | None

    @property
    def involutory(self) -> bool:
        """Involution and anti-automorphism together."""
        return self.involution and self.anti_automorphism

    @property
    def regular_star(self) -> bool:
        """An involutory operation that is also regular."""
        return self.involutory and self.regular


@dataclass(frozen=True, slots=True)
class ElementPartition:
    """A partition of ``0 .. size - 1`` into classes.

    Class numbers are normalised so that classes are numbered in order of their
    least element.

    Attributes:
        classes: Class number of every element

    Examples:
        >>> p = ElementPartition.from_blocks(4, [[3, 1], [0], [2]])
        >>> p.classes, p.blocks()
        ((0, 1, 2, 1), ((0,), (1, 3), (2,)))
    """

    classes: tuple[int, ...]

    @classmethod
    def from_assignment(cls, assignment: Iterable[Hashable]) -> "ElementPartition":
        """Builds a partition from any per-element class key."""
        numbering: dict[Hashable, int] = {}
        return cls(
            tuple(numbering.setdefault(key, len(numbering)) for key in assignment)
        )

    @classmethod
    def from_blocks(
        cls, size: int, blocks: Iterable[Iterable[int]]
    ) -> "ElementPartition":
        """Builds a partition from explicit blocks.

        Raises:
            StructureError: If the blocks do not cover every element exactly once
        """
        owner = [-1] * size
        for number, block in enumerate(blocks):
            for element in block:
                if not 0 <= element < size:
                    raise StructureError(f"Element {element} is out of range.")
                if owner[element] != -1:
                    raise StructureError(f"Element {element} is in two classes.")
                owner[element] = number
        if -1 in owner:
            raise StructureError(f"Element {owner.index(-1)} is in no class.")
        return cls.from_assignment(owner)

    @property
    def count(self) -> int:
        return max(self.classes, default=-1) + 1

    @property
    def size(self) -> int:
        return len(self.classes)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        grouped: list[list[int]] = [[] for _ in range(self.count)]
        for element, number in enumerate(self.classes):
            grouped[number].append(element)
        return tuple(tuple(block) for block in grouped)

    def representatives(self) -> tuple[int, ...]:
        """The least element of every class."""
        return tuple(block[0] for block in self.blocks())


@dataclass(frozen=True, slots=True)
class Subsemigroup:
    """A unary subsemigroup, with its embedding into the parent structure.

    Attributes:
        semigroup: The subsemigroup with its own ids ``0 .. k - 1``
        embedding: Parent id of each element, ascending
    """

    semigroup: FiniteUnarySemigroup
    embedding: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.semigroup.size

    def local_ids(self) -> dict[int, int]:
        """Maps parent ids to ids in the subsemigroup."""
        return {parent: i for i, parent in enumerate(self.embedding)}


@dataclass(frozen=True, slots=True)
class CongruenceViolation:
    """Two related pairs whose results land in different classes.

    Attributes:
        operation: ``"multiply"``, ``"star1"`` or ``"star2"``
        first: Operand ids of the first application
        second: Operand ids of the second, class-wise equal, application
        results: The two result ids
    """

    operation: str
    first: tuple[int, ...]
    second: tuple[int, ...]
    results: tuple[int, int]


@dataclass(frozen=True, slots=True)
class QuotientResult:
    """Outcome of ``quotient_by_partition``.

    Attributes:
        quotient: The quotient structure, if the partition is a congruence
        violation: The first counterexample otherwise
        partition: The partition that was used
    """

    quotient: FiniteUnarySemigroup | None
    violation: CongruenceViolation | None
    partition: ElementPartition

    @property
    def is_congruence(self) -> bool:
        return self.violation is None


@dataclass(frozen=True, slots=True)
class MorphismResult:
    """Outcome of ``find_morphism``.

    Attributes:
        verdict: ``"found"``, ``"none"`` or ``"inconclusive"``
        mapping: Target id of every source element, when found
        nodes: Search nodes visited
        reason: Why no morphism exists, when that was decided without searching
    """

    verdict: Literal["found", "none", "inconclusive"]
    mapping: tuple[int, ...] | None
    nodes: int
    reason: str = ""


@dataclass(frozen=True, slots=True)
class RHeightReport:
    """Green's R-order of a finite semigroup.

    Attributes:
        partition: The R-classes
        order: Pairs ``(c, d)`` of class numbers with ``c <_R d``
        height: Length of the longest strict chain
        chain: One element per class along a longest chain, lowest first
    """

    partition: ElementPartition
    order: frozenset[tuple[int, int]]
    height: int
    chain: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class IndexPeriod:
    """Index and period of a finite semigroup.

    ``x^index = x^(index + period)`` holds for every element, and neither number can
    be lowered.

    Attributes:
        index: The least global index
        period: The least global period
        indices: Index of each element
        periods: Period of each element
    """

    index: int
    period: int
    indices: tuple[int, ...]
    periods: tuple[int, ...]


def validate_structure(
    s: FiniteUnarySemigroup, settings: Settings = DEFAULT_SETTINGS
) -> list[Violation]:
    """Checks associativity and the recorded zero and identity.

    Range and shape are checked when ``s`` is built, so only the laws remain.

    Args:
        s: The structure
        settings: ``violation_cap`` bounds the number of reported violations

    Returns:
        Violations in lexicographic order of their elements, empty when valid

    Examples:
        >>> from usl.semigroup import FiniteUnarySemigroup
        >>> s = FiniteUnarySemigroup.from_tables([[1, 0], [0, 1]])
        >>> validate_structure(s)
        []
        >>> bad = FiniteUnarySemigroup.from_tables([[1, 1], [0, 0]])
        >>> validate_structure(bad)[0].elements
        (0, 0, 0)
    """
    cap = settings.violation_cap
    table = s.table
    violations: list[Violation] = []

    for a in range(s.size):
        # (ab)c against a(bc), indexed by (b, c)
        left = table[table[a]]
        right = table[a][table]
        for b, c in np.argwhere(left != right)[: cap - len(violations)]:
            violations.append(
                Violation(
                    "associativity",
                    (a, int(b), int(c)),
                    f"({s.label(a)} {s.label(int(b))}) {s.label(int(c))} = "
                    f"{s.label(int(left[b, c]))} but {s.label(a)} "
                    f"({s.label(int(b))} {s.label(int(c))}) = {s.label(int(right[b, c]))}",  # noqa: E501
                )
            )
        if len(violations) >= cap:
            return violations

    ids = s.ids()

    if s.zero_id is not None:
        z = s.zero_id
        bad = ids[(table[z] != z) | (table[:, z] != z)]
        violations.extend(
            Violation("zero", (z, int(x)), f"{s.label(int(x))} does not absorb zero")
            for x in bad[: cap - len(violations)]
        )

    if s.identity_id is not None:
        e = s.identity_id
        bad = ids[(table[e] != ids) | (table[:, e] != ids)]
        violations.extend(
            Violation(
                "identity", (e, int(x)), f"identity does not fix {s.label(int(x))}"
            )
            for x in bad[: cap - len(violations)]
        )

    return violations


def classify_unary(s: FiniteUnarySemigroup) -> tuple[UnaryFlags, ...]:
    """Reports which involutory laws each unary operation satisfies.

    Args:
        s: A structure with one or two unary operations

    Returns:
        One ``UnaryFlags`` per unary operation

    Raises:
        StructureError: If ``s`` has no unary operation
    """
    if s.arity == 0:
        raise StructureError("A plain semigroup has no unary operation to classify.")

    ids = s.ids()
    table = s.table
    flags: list[UnaryFlags] = []

    for index in range(1, s.arity + 1):
        star = s.star_table(index)
        witness: tuple[int, ...] | None = None

        bad = np.flatnonzero(star[star] != ids)
        involution = bad.size == 0
        if not involution:
            witness = (int(bad[0]),)

        anti = star[table] != table[star[:, None], star[None, :]].T
        bad_pairs = np.argwhere(anti)
        anti_automorphism = bad_pairs.size == 0
        if witness is None and not anti_automorphism:
            witness = (int(bad_pairs[0, 0]), int(bad_pairs[0, 1]))

        bad = np.flatnonzero(table[table[ids, star], ids] != ids)
        regular = bad.size == 0
        if witness is None and not regular:
            witness = (int(bad[0]),)

        flags.append(UnaryFlags(index, involution, anti_automorphism, regular, witness))

    return tuple(flags)


def idempotents(s: UnarySemigroup) -> IdArray:
    """Returns the ids of all idempotents in ascending order."""
    ids = s.ids()
    return ids[s.multiply(ids, ids) == ids]


def element_powers(s: UnarySemigroup, elements: ArrayLike, exponent: int) -> IdArray:
    """Raises element ids to a positive power by repeated squaring.

    Raises:
        ValueError: If the exponent is not positive
    """
    if exponent < 1:
        raise ValueError(f"Exponent must be positive, got {exponent}.")

    base = as_ids(elements)
    result = base
    exponent -= 1

    while exponent:
        if exponent & 1:
            result = s.multiply(result, base)
        exponent >>= 1
        if exponent:
            base = s.multiply(base, base)

    return result


def _grow(
    s: UnarySemigroup,
    members: NDArray[np.bool_],
    frontier: IdArray,
    settings: Settings,
) -> None:
    """Closes ``members`` in place, given that it was closed before ``frontier``
    was added."""
    frontier = np.unique(frontier[~members[frontier]])
    members[frontier] = True

    while frontier.size:
        old = np.flatnonzero(members).astype(ID_DTYPE)
        rows = max(1, settings.chunk_size // max(1, old.size))
        found = [s.star(frontier, k) for k in range(1, s.arity + 1)]

        for start in range(0, frontier.size, rows):
            block = frontier[start : start + rows]
            found.append(s.multiply(block[:, None], old[None, :]).ravel())
            found.append(s.multiply(old[:, None], block[None, :]).ravel())

        candidates = np.unique(np.concatenate(found))
        frontier = candidates[~members[candidates]]
        members[frontier] = True

        if np.count_nonzero(members) > settings.element_cap:
            raise StructureError(
                f"Closure exceeds element_cap={settings.element_cap}."
            )


def closure_members(
    s: UnarySemigroup,
    generators: Iterable[int],
    settings: Settings = DEFAULT_SETTINGS,
) -> IdArray:
    """Returns the ids of the unary subsemigroup generated by ``generators``."""
    members = np.zeros(s.size, dtype=np.bool_)
    _grow(s, members, as_ids(list(generators)), settings)
    return np.flatnonzero(members).astype(ID_DTYPE)


def substructure(
    s: UnarySemigroup,
    members: Sequence[int] | IdArray,
    settings: Settings = DEFAULT_SETTINGS,
) -> Subsemigroup:
    """Restricts ``s`` to a closed set of element ids.

    Raises:
        StructureError: If the set is not closed or too large to tabulate
    """
    ids = np.unique(as_ids(members))

    if ids.size == 0:
        raise StructureError("A substructure needs at least one element.")

    if ids.size > settings.tabulate_limit:
        raise StructureError(
            f"A substructure of size {ids.size} exceeds tabulate_limit={settings.tabulate_limit}."  # noqa: E501
        )

    local = np.full(s.size, -1, dtype=ID_DTYPE)
    local[ids] = np.arange(ids.size, dtype=ID_DTYPE)

    table = local[s.multiply(ids[:, None], ids[None, :])]
    stars = np.asarray(
        [local[s.star(ids, k)] for k in range(1, s.arity + 1)], dtype=ID_DTYPE
    ).reshape(s.arity, ids.size)

    if np.any(table < 0) or np.any(stars < 0):
        raise StructureError("The element set is not closed under the operations.")

    def carried(element: int | None) -> int | None:
        if element is None or local[element] < 0:
            return None
        return int(local[element])

    return Subsemigroup(
        FiniteUnarySemigroup.from_tables(
            table,
            stars,
            [s.label(int(i)) for i in ids],
            carried(s.zero_id),
            carried(s.identity_id),
        ),
        tuple(int(i) for i in ids),
    )


def generated_closure(
    s: UnarySemigroup,
    generators: Iterable[int],
    settings: Settings = DEFAULT_SETTINGS,
) -> Subsemigroup:
    """Returns the unary subsemigroup generated by a set of elements.

    Args:
        s: The parent structure
        generators: Generator ids
        settings: ``chunk_size`` bounds each vectorized block

    Returns:
        The closure under multiplication and every unary operation, with its
            embedding into ``s``

    Examples:
        >>> from usl.constructions.named import named_semigroup
        >>> tb = named_semigroup("tb")
        >>> generated_closure(tb, [0]).embedding
        (0, 4)
    """
    return substructure(s, closure_members(s, generators, settings), settings)


def hermitian_part(
    s: UnarySemigroup, settings: Settings = DEFAULT_SETTINGS
) -> Subsemigroup:
    """Closure of the hermitian elements ``x x*`` under the first unary operation."""
    if s.arity == 0:
        raise StructureError("Hermitian elements need a unary operation.")
    ids = s.ids()
    generators = np.unique(s.multiply(ids, s.star(ids, 1)))
    return generated_closure(s, (int(g) for g in generators), settings)


def power_part(
    s: UnarySemigroup, exponent: int, settings: Settings = DEFAULT_SETTINGS
) -> Subsemigroup:
    """Closure of the powers ``x^exponent``."""
    generators = np.unique(element_powers(s, s.ids(), exponent))
    return generated_closure(s, (int(g) for g in generators), settings)


def direct_product(
    s: UnarySemigroup, t: UnarySemigroup, settings: Settings = DEFAULT_SETTINGS
) -> FiniteUnarySemigroup:
    """Componentwise product of two structures with the same number of stars.

    The pair ``(a, b)`` has id ``a * t.size + b``.

    Raises:
        StructureError: If the arities differ or the product is too large
    """
    if s.arity != t.arity:
        raise StructureError(
            f"Cannot multiply structures with {s.arity} and {t.arity} unary operations."  # noqa: E501
        )

    size = s.size * t.size
    if size > settings.tabulate_limit:
        raise StructureError(
            f"A product of size {size} exceeds tabulate_limit={settings.tabulate_limit}."  # noqa: E501
        )

    left, right = s.tabulate(settings), t.tabulate(settings)
    ids = np.arange(size, dtype=ID_DTYPE)
    a, b = ids // t.size, ids % t.size

    table = left.multiply(a[:, None], a[None, :]) * t.size + right.multiply(
        b[:, None], b[None, :]
    )
    stars = [
        left.star(a, k) * t.size + right.star(b, k) for k in range(1, s.arity + 1)
    ]

    def pair(x: int | None, y: int | None) -> int | None:
        return None if x is None or y is None else x * t.size + y

    return FiniteUnarySemigroup.from_tables(
        table,
        np.asarray(stars, dtype=ID_DTYPE).reshape(s.arity, size),
        [f"({left.label(int(x))}, {right.label(int(y))})" for x, y in zip(a, b, strict=True)],  # noqa: E501
        pair(s.zero_id, t.zero_id),
        pair(s.identity_id, t.identity_id),
    )


def adjoin_identity(s: UnarySemigroup, label: str = "1") -> FiniteUnarySemigroup:
    """Adjoins a new identity element, fixed by every unary operation.

    The new element takes the id ``s.size``.

    Examples:
        >>> from usl.semigroup import FiniteUnarySemigroup
        >>> s = adjoin_identity(FiniteUnarySemigroup.from_tables([[0]], [[0]]))
        >>> s.table.tolist(), s.identity_id
        ([[0, 0], [0, 1]], 1)
    """
    size = s.size
    base = s.tabulate()
    table = np.empty((size + 1, size + 1), dtype=ID_DTYPE)
    table[:size, :size] = base.table
    table[size, :] = np.arange(size + 1)
    table[:, size] = np.arange(size + 1)

    stars = np.empty((s.arity, size + 1), dtype=ID_DTYPE)
    stars[:, :size] = base.star_tables
    stars[:, size] = size

    return FiniteUnarySemigroup.from_tables(
        table, stars, [*base.labels(), label], s.zero_id, size
    )


def quotient_by_partition(
    s: FiniteUnarySemigroup, partition: ElementPartition
) -> QuotientResult:
    """Forms the quotient by a partition, if it is a congruence.

    Each class is represented by its least element. The products and unary images
    of representatives define the quotient; every other member is then compared
    against them in lexicographic order and the first disagreement is reported.

    Args:
        s: The structure
        partition: A partition of its elements

    Returns:
        The quotient, or the first congruence violation

    Raises:
        StructureError: If the partition has the wrong size
    """
    if partition.size != s.size:
        raise StructureError(
            f"Partition covers {partition.size} elements but the structure has {s.size}."  # noqa: E501
        )

    classes = np.asarray(partition.classes, dtype=ID_DTYPE)
    reps = np.asarray(partition.representatives(), dtype=ID_DTYPE)
    rep_of = reps[classes]

    table = classes[s.table[reps[:, None], reps[None, :]]]
    mismatch = np.argwhere(
        classes[s.table] != table[classes[:, None], classes[None, :]]
    )
    if mismatch.size:
        a, b = (int(x) for x in mismatch[0])
        ra, rb = int(rep_of[a]), int(rep_of[b])
        return QuotientResult(
            None,
            CongruenceViolation(
                "multiply",
                (a, b),
                (ra, rb),
                (s.product(a, b), s.product(ra, rb)),
            ),
            partition,
        )

    stars: list[IdArray] = []
    for index in range(1, s.arity + 1):
        star = s.star_table(index)
        bad = np.flatnonzero(classes[star] != classes[star[rep_of]])
        if bad.size:
            a = int(bad[0])
            ra = int(rep_of[a])
            return QuotientResult(
                None,
                CongruenceViolation(
                    f"star{index}", (a,), (ra,), (int(star[a]), int(star[ra]))
                ),
                partition,
            )
        stars.append(classes[star[reps]])

    def carried(element: int | None) -> int | None:
        return None if element is None else int(classes[element])

    quotient = FiniteUnarySemigroup.from_tables(
        table,
        np.asarray(stars, dtype=ID_DTYPE).reshape(s.arity, reps.size),
        [f"[{s.label(int(r))}]" for r in reps],
        carried(s.zero_id),
        carried(s.identity_id),
    )
    _logger.debug("Quotient of size %d by %d classes", s.size, quotient.size)
    return QuotientResult(quotient, None, partition)


def verify_morphism(
    s: UnarySemigroup,
    t: UnarySemigroup,
    mapping: Sequence[int],
    mode: MorphismMode = "homomorphism",
    settings: Settings = DEFAULT_SETTINGS,
) -> list[Violation]:
    """Checks a map of element ids against every operation.

    Args:
        s: The source
        t: The target
        mapping: Target id of every source element
        mode: Also require surjectivity (``"onto"``) or bijectivity
            (``"isomorphism"``)
        settings: ``violation_cap`` bounds the number of reported violations

    Returns:
        Violations, empty when the map is a morphism of the requested kind

    Raises:
        StructureError: If the map has the wrong length or the arities differ
    """
    if len(mapping) != s.size:
        raise StructureError(f"Mapping has {len(mapping)} entries, expected {s.size}.")

    if s.arity != t.arity:
        raise StructureError(
            f"Cannot map {s.arity} unary operations onto {t.arity}."
        )

    source, target = s.tabulate(settings), t.tabulate(settings)
    f = as_ids(mapping)
    cap = settings.violation_cap

    if np.any((f < 0) | (f >= t.size)):
        raise StructureError("Mapping contains an id outside the target.")

    violations: list[Violation] = []
    bad = np.argwhere(f[source.table] != target.table[f[:, None], f[None, :]])
    violations.extend(
        Violation(
            "morphism",
            (int(a), int(b)),
            f"image of {s.label(int(a))} {s.label(int(b))} is not the product of images",  # noqa: E501
        )
        for a, b in bad[:cap]
    )

    for index in range(1, s.arity + 1):
        bad_stars = np.flatnonzero(f[source.star_table(index)] != target.star(f, index))
        violations.extend(
            Violation(
                "morphism",
                (int(a),),
                f"unary operation {index} does not commute with the map at {s.label(int(a))}",  # noqa: E501
            )
            for a in bad_stars[: max(0, cap - len(violations))]
        )

    image = np.unique(f)
    if mode in ("onto", "isomorphism") and image.size != t.size:
        missing = np.setdiff1d(np.arange(t.size), image)
        violations.append(
            Violation("morphism", (int(missing[0]),), "the map is not onto")
        )

    if mode == "isomorphism" and image.size != s.size:
        violations.append(Violation("morphism", (), "the map is not injective"))

    return violations[:cap]


class _BudgetExhaustedError(Exception):
    pass


def _greedy_generators(
    s: FiniteUnarySemigroup, start: Iterable[int], settings: Settings
) -> list[int]:
    members = np.zeros(s.size, dtype=np.bool_)
    generators = list(start)
    _grow(s, members, as_ids(generators), settings)

    for element in range(s.size):
        if not members[element]:
            generators.append(element)
            _grow(s, members, as_ids([element]), settings)

    return generators


def _propagate(
    s: FiniteUnarySemigroup,
    t: FiniteUnarySemigroup,
    f: IdArray,
    injective: bool,
) -> bool:
    """Extends a partial map along products and unary images; False on conflict."""
    while True:
        mapped = np.flatnonzero(f >= 0)
        images = f[mapped]

        sources = [s.table[np.ix_(mapped, mapped)].ravel()]
        targets = [t.table[np.ix_(images, images)].ravel()]
        for index in range(1, s.arity + 1):
            sources.append(s.star_table(index)[mapped])
            targets.append(t.star_table(index)[images])

        source = np.concatenate(sources)
        target = np.concatenate(targets)
        current = f[source]

        known = current >= 0
        if np.any(current[known] != target[known]):
            return False

        source, target = source[~known], target[~known]
        if source.size == 0:
            break

        order = np.lexsort((target, source))
        source, target = source[order], target[order]
        unique, first = np.unique(source, return_index=True)
        if np.any(target != target[first][np.searchsorted(unique, source)]):
            return False

        f[unique] = target[first]

    if injective:
        images = f[f >= 0]
        return np.unique(images).size == images.size

    return True


def _invariant_mismatch(
    s: FiniteUnarySemigroup, t: FiniteUnarySemigroup, mode: MorphismMode
) -> str:
    if mode == "isomorphism":
        if s.size != t.size:
            return f"sizes differ ({s.size} and {t.size})"
        if idempotents(s).size != idempotents(t).size:
            return "idempotent counts differ"
        for index in range(1, s.arity + 1):
            fixed_s = np.count_nonzero(s.star_table(index) == s.ids())
            fixed_t = np.count_nonzero(t.star_table(index) == t.ids())
            if fixed_s != fixed_t:
                return f"unary operation {index} fixes {fixed_s} and {fixed_t} elements"
    elif mode == "onto" and t.size > s.size:
        return f"the target ({t.size}) is larger than the source ({s.size})"
    return ""


def find_morphism(  # noqa: C901
    s: UnarySemigroup,
    t: UnarySemigroup,
    mode: MorphismMode = "isomorphism",
    seed: Mapping[int, int] | None = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> MorphismResult:
    """Searches for a morphism of unary semigroups.

    Generators of ``s`` are chosen greedily in id order, after any seeded elements.
    Images are tried in ascending target id, so the first morphism found is the
    least in lexicographic order of generator images. Each assignment is propagated
    along products and unary images before descending. A found map is re-checked
    with ``verify_morphism``.

    Args:
        s: The source
        t: The target
        mode: ``"homomorphism"``, ``"onto"`` or ``"isomorphism"``
        seed: Images fixed in advance
        settings: ``morphism_node_budget`` bounds the search

    Returns:
        The outcome, with the map when one is found

    Raises:
        StructureError: If the arities differ

    Examples:
        >>> from usl.constructions.named import named_semigroup
        >>> tb = named_semigroup("tb")
        >>> result = find_morphism(tb, named_semigroup("tb_matrices"))
        >>> result.verdict
        'found'
    """
    if s.arity != t.arity:
        raise StructureError(f"Cannot map {s.arity} unary operations onto {t.arity}.")

    source, target = s.tabulate(settings), t.tabulate(settings)

    reason = _invariant_mismatch(source, target, mode)
    if reason:
        return MorphismResult("none", None, 0, reason)

    injective = mode == "isomorphism"
    f = np.full(source.size, -1, dtype=ID_DTYPE)
    seed = dict(seed or {})

    for element, image in seed.items():
        f[element] = image

    if not _propagate(source, target, f, injective):
        return MorphismResult("none", None, 0, "the seed does not extend")

    generators = [
        g for g in _greedy_generators(source, seed, settings) if g not in seed
    ]
    nodes = 0

    def search(position: int, current: IdArray) -> IdArray | None:
        nonlocal nodes

        while position < len(generators) and current[generators[position]] >= 0:
            position += 1

        if position == len(generators):
            image = np.unique(current)
            if mode == "onto" and image.size != target.size:
                return None
            return current

        used = np.zeros(target.size, dtype=np.bool_)
        if injective:
            used[current[current >= 0]] = True

        for candidate in range(target.size):
            if used[candidate]:
                continue
            nodes += 1
            if nodes > settings.morphism_node_budget:
                raise _BudgetExhaustedError
            attempt = current.copy()
            attempt[generators[position]] = candidate
            if _propagate(source, target, attempt, injective):
                found = search(position + 1, attempt)
                if found is not None:
                    return found

        return None

    try:
        found = search(0, f)
    except _BudgetExhaustedError:
        _logger.info("Morphism search stopped after %d nodes", nodes)
        return MorphismResult("inconclusive", None, nodes, "node budget exhausted")

    if found is None:
        return MorphismResult("none", None, nodes)

    mapping = tuple(int(x) for x in found)
    violations = verify_morphism(source, target, mapping, mode, settings)
    if violations:
        raise StructureError(f"Search produced an invalid map: {violations[0].detail}")

    _logger.debug("Morphism found after %d nodes", nodes)
    return MorphismResult("found", mapping, nodes)


def green_r_height(
    s: UnarySemigroup, settings: Settings = DEFAULT_SETTINGS
) -> RHeightReport:
    """Computes Green's R-classes, their strict order and the longest chain.

    ``a <=_R b`` when ``a`` lies in ``b S^1``. The order on classes is strict; the
    height is the number of classes on a longest chain.

    Examples:
        >>> from usl.constructions.named import named_semigroup
        >>> green_r_height(named_semigroup("tb")).height
        3
    """
    table = s.tabulate(settings).table
    size = table.shape[0]

    reach = np.eye(size, dtype=np.bool_)
    reach[np.repeat(np.arange(size), size), table.ravel()] = True

    same = reach & reach.T
    partition = ElementPartition.from_assignment(
        int(x) for x in np.argmax(same, axis=1)
    )
    reps = np.asarray(partition.representatives())

    # below[c, d]: class c sits strictly under class d
    below = reach[reps[None, :], reps[:, None]] & ~reach[reps[:, None], reps[None, :]]
    order = frozenset((int(c), int(d)) for c, d in np.argwhere(below))

    ideal = reach[reps].sum(axis=1)
    height = [1] * reps.size
    previous = [-1] * reps.size

    for d in np.argsort(ideal, kind="stable"):
        for c in np.flatnonzero(below[:, d]):
            if height[c] + 1 > height[d]:
                height[d] = height[c] + 1
                previous[d] = int(c)

    top = int(np.argmax(height))
    chain = [top]
    while previous[chain[-1]] != -1:
        chain.append(previous[chain[-1]])

    return RHeightReport(
        partition,
        order,
        height[top],
        tuple(int(reps[c]) for c in reversed(chain)),
    )


def index_period(
    s: UnarySemigroup, settings: Settings = DEFAULT_SETTINGS
) -> IndexPeriod:
    """Computes the least index and period of a finite semigroup.

    Examples:
        >>> from usl.constructions.groups import cyclic_group
        >>> result = index_period(cyclic_group(6).to_semigroup())
        >>> result.index, result.period
        (1, 6)
    """
    table = s.tabulate(settings).table.tolist()
    indices: list[int] = []
    periods: list[int] = []

    for x in range(len(table)):
        seen: dict[int, int] = {}
        power, exponent = x, 1
        while power not in seen:
            seen[power] = exponent
            power = table[power][x]
            exponent += 1
        indices.append(seen[power])
        periods.append(exponent - seen[power])

    return IndexPeriod(
        max(indices), math.lcm(*periods), tuple(indices), tuple(periods)
    )


def satisfies_periodicity(
    s: UnarySemigroup, index: int, period: int, settings: Settings = DEFAULT_SETTINGS
) -> bool:
    """Checks ``x^index = x^(index + period)`` for every element."""
    ids = s.tabulate(settings).ids()
    return bool(
        np.array_equal(
            element_powers(s, ids, index), element_powers(s, ids, index + period)
        )
    )


def verify_index_period(
    s: UnarySemigroup, index: int, period: int, settings: Settings = DEFAULT_SETTINGS
) -> bool:
    """Independently confirms that ``(index, period)`` is the least pair.

    The identity must hold, and must fail both with ``index - 1`` and with
    ``period / p`` for every prime ``p`` dividing the period.
    """
    if not satisfies_periodicity(s, index, period, settings):
        return False
    if index > 1 and satisfies_periodicity(s, index - 1, period, settings):
        return False
    return not any(
        satisfies_periodicity(s, index, period // p, settings)
        for p in primefactors(period)
    )
