"""Critical semigroups ``T_k`` and their restricted subsemigroups.

A ``CriticalSpec`` fixes a group ``G``, witnesses ``g_1 .. g_m`` that falsify an
identity ``u = v`` in ``G``, and a bound ``k``. The semigroup ``T_k`` is the unary
Rees matrix semigroup over ``G`` whose sandwich matrix has ``m`` diagonal blocks of
size ``n = max(4, 2k + 1)``; block ``i`` carries ``g_i`` and consecutive blocks are
linked through single identity entries. The words ``w_1 .. w_m`` of
``sapir_witness_words`` evaluate to ``(1, g_j, mn)`` under ``x_r -> (r, e, r)``, so
``u(w) = v(w)`` fails in ``T_k``.

Deleting one index per block gives a subsemigroup whose sandwich matrix can be
scaled to contain only identity entries, which makes it a homomorphic image of
``G`` times a Rees matrix semigroup over the trivial group.
"""

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from ..config import DEFAULT_SETTINGS, Settings
from ..semigroup import (
    ID_DTYPE,
    ConstructionError,
    FiniteUnarySemigroup,
    IdArray,
    StructureError,
)
from ..terms import (
    Concat,
    Identity,
    Star,
    UnaryTerm,
    Variable,
    apply_substitution,
    evaluate,
    format_identity,
    parse_identity,
    power,
    product,
)
from .groups import GroupTable
from .rees import ZERO_ENTRY, ReesSemigroup, ReesSpec, rees_matrix

_logger = logging.getLogger(__name__)

type WordVariant = Literal["hermitian", "power"]


def _commutator() -> Identity:
    return parse_identity("x1 x2 = x2 x1")


@dataclass(frozen=True, eq=False)
class CriticalSpec:
    """Parameters of the critical semigroup ``T_k``.

    Attributes:
        group: The structure group
        witnesses: Group element ids ``g_1 .. g_m``
        k: Every ``k`` elements of ``T_k`` lie in one restricted subsemigroup
        identity: The identity over ``x1 .. xm`` falsified by the witnesses

    Examples:
        >>> from usl.constructions.groups import symmetric_group
        >>> g = symmetric_group(3)
        >>> spec = CriticalSpec(g, (g.element("(1 2)"), g.element("(1 3)")), k=1)
        >>> spec.n, spec.index_size
        (4, 8)
    """

    group: GroupTable
    witnesses: tuple[int, ...]
    k: int
    identity: Identity = field(default_factory=_commutator)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise StructureError(f"k must be positive, got {self.k}.")

        if len(self.witnesses) < 2:  # noqa: PLR2004
            raise StructureError("At least two witnesses are needed.")

        group = self.group.to_semigroup()
        assignment = {f"x{i + 1}": g for i, g in enumerate(self.witnesses)}
        try:
            lhs, rhs = (evaluate(side, group, assignment) for side in self.identity)
        except KeyError as error:
            raise StructureError(
                f"The identity uses {error} beyond x1..x{self.m}."
            ) from None

        if lhs == rhs:
            raise StructureError(
                f"The witnesses do not falsify {format_identity(self.identity)} in the group."  # noqa: E501
            )

    @property
    def m(self) -> int:
        return len(self.witnesses)

    @property
    def n(self) -> int:
        return max(4, 2 * self.k + 1)

    @property
    def index_size(self) -> int:
        return self.m * self.n

    @property
    def size(self) -> int:
        return self.index_size**2 * self.group.size + 1


def critical_sandwich(spec: CriticalSpec) -> IdArray:
    """Assembles the block sandwich matrix of ``T_k``.

    Diagonal blocks are ``M_n(g_i)``: identity on the diagonal, the band and the two
    corners, with ``g_i`` at local ``(1, 2)`` and its inverse at ``(2, 1)``.
    Super-diagonal blocks carry one identity at local ``(n, 1)``, sub-diagonal blocks
    at ``(1, n)``; the corner blocks close the cycle, the top-right at ``(1, n)`` and
    the bottom-left at ``(n, 1)``.
    """
    n, m = spec.n, spec.m
    e = spec.group.identity
    inverse = spec.group.inverse
    sandwich = np.full((n * m, n * m), ZERO_ENTRY, dtype=ID_DTYPE)

    for block, g in enumerate(spec.witnesses):
        base = block * n
        for a in range(n):
            sandwich[base + a, base + a] = e
            if a + 1 < n:
                sandwich[base + a, base + a + 1] = e
                sandwich[base + a + 1, base + a] = e
        sandwich[base, base + n - 1] = e
        sandwich[base + n - 1, base] = e
        sandwich[base, base + 1] = g
        sandwich[base + 1, base] = inverse[g]

    for block in range(m - 1):
        last, first = block * n + n - 1, (block + 1) * n
        sandwich[last, first] = e
        sandwich[first, last] = e

    sandwich[0, n * m - 1] = e
    sandwich[n * m - 1, 0] = e
    return sandwich


def critical_Tk(
    spec: CriticalSpec, settings: Settings = DEFAULT_SETTINGS
) -> tuple[FiniteUnarySemigroup | ReesSemigroup, ReesSpec]:
    """Builds ``T_k`` with the Rees spec it comes from.

    Raises:
        StructureError: If the sandwich matrix fails the Rees symmetry check, or
            ``T_k`` exceeds ``settings.element_cap``
    """
    rees = ReesSpec(spec.group, critical_sandwich(spec))
    _logger.debug(
        "Built T_%d over a group of order %d: %d elements",
        spec.k,
        spec.group.size,
        rees.size,
    )
    return rees_matrix(rees, settings), rees


def critical_substitution(spec: ReesSpec) -> dict[str, int]:
    """The assignment ``x_r -> (r, e, r)`` for every index ``r``."""
    e = spec.group.identity
    return {f"x{r + 1}": spec.element_id(r, e, r) for r in range(spec.index_size)}


def _hermitian(term: UnaryTerm) -> UnaryTerm:
    return Concat(term, Star(term))


def sapir_witness_words(
    m: int, n: int, variant: WordVariant = "hermitian", exponent: int = 1
) -> list[UnaryTerm]:
    """Returns ``w_1 .. w_m`` over ``x1 .. x(mn)``.

    Word ``w_j`` is a product of ``m`` blocks of ``n`` variables. Block ``j`` is
    unbundled, each variable wrapped on its own; every other block is bundled,
    wrapped as a whole. The hermitian variant wraps with ``h(t) = t t*`` and a
    bundled block reads ``h(x_s .. x_t) h(x_t)``; the power variant wraps with
    ``t^exponent``.

    Raises:
        ValueError: If ``m`` or ``n`` is below 2

    Examples:
        >>> from usl.terms import format_term
        >>> [format_term(w) for w in sapir_witness_words(2, 2, "power", 2)]
        ['((x1 x1) x2 x2) (x3 x4) x3 x4', '((x1 x2) x1 x2) (x3 x3) x4 x4']
    """
    if m < 2 or n < 2:  # noqa: PLR2004
        raise ValueError(f"Need m >= 2 and n >= 2, got m={m}, n={n}.")

    blocks = [
        [Variable(f"x{b * n + a + 1}") for a in range(n)] for b in range(m)
    ]

    def unbundled(block: list[Variable]) -> UnaryTerm:
        if variant == "hermitian":
            return product([_hermitian(x) for x in block])
        return product([power(x, exponent) for x in block])

    def bundled(block: list[Variable]) -> UnaryTerm:
        if variant == "hermitian":
            return Concat(_hermitian(product(block)), _hermitian(block[-1]))
        return power(product(block), exponent)

    return [
        product([unbundled(b) if i == j else bundled(b) for i, b in enumerate(blocks)])
        for j in range(m)
    ]


def critical_identity(
    spec: CriticalSpec, variant: WordVariant = "hermitian", exponent: int = 1
) -> Identity:
    """Substitutes ``w_1 .. w_m`` into the spec's identity."""
    words = sapir_witness_words(spec.m, spec.n, variant, exponent)

    def substitute(term: UnaryTerm) -> UnaryTerm:
        return apply_substitution(
            term, {f"x{i + 1}": w for i, w in enumerate(words)}
        )

    lhs, rhs = spec.identity
    return substitute(lhs), substitute(rhs)


@dataclass(frozen=True, eq=False)
class RestrictedRees:
    """A restricted subsemigroup of ``T_k``.

    Attributes:
        spec: The Rees spec on the kept indices
        kept: Kept indices of ``T_k``, ascending and zero-based
        deleted: The deleted indices ``lambda_1 .. lambda_m``, one-based
    """

    spec: ReesSpec
    kept: tuple[int, ...]
    deleted: tuple[int, ...]


def staircase_tuples(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Every one-based ``(lambda_1 .. lambda_m)`` with ``(i-1)n < lambda_i <= in``."""
    return itertools.product(*(range(i * n + 1, (i + 1) * n + 1) for i in range(m)))


def restrict_Tk(rees: ReesSpec, deleted: Sequence[int], n: int) -> RestrictedRees:
    """Deletes index ``lambda_i`` from block ``i`` for every ``i``.

    Args:
        rees: The spec of ``T_k``
        deleted: One-based ``lambda_1 .. lambda_m``
        n: Block size

    Returns:
        The restricted spec with its kept indices

    Raises:
        StructureError: If some ``lambda_i`` lies outside block ``i``
    """
    m = rees.index_size // n
    if len(deleted) != m:
        raise StructureError(f"Expected {m} deleted indices, got {len(deleted)}.")

    for i, value in enumerate(deleted):
        if not i * n < value <= (i + 1) * n:
            raise StructureError(
                f"lambda_{i + 1} = {value} must lie in ({i * n}, {(i + 1) * n}]."
            )

    gone = {value - 1 for value in deleted}
    kept = tuple(r for r in range(rees.index_size) if r not in gone)
    return RestrictedRees(rees.submatrix(kept), kept, tuple(deleted))


def normalize_sandwich(
    restricted: RestrictedRees, witnesses: Sequence[int], n: int
) -> tuple[ReesSpec, tuple[int, ...]]:
    """Scales a restricted sandwich matrix so that every non-zero entry is ``e``.

    For each block ``i`` with local deleted position ``l > 2``, rows and columns
    ``2 .. l - 1`` of the block are scaled by ``g_i`` from the left and ``g_i^-1``
    from the right; other indices are left alone.

    Returns:
        The normalized spec and the scaling element ``u_r`` of every kept index

    Raises:
        ConstructionError: If some non-zero entry is not the identity afterwards
    """
    spec = restricted.spec
    group = spec.group
    e = group.identity
    scaling: list[int] = []

    for r in restricted.kept:
        block, local = divmod(r, n)
        deleted = restricted.deleted[block] - block * n
        scaling.append(witnesses[block] if 1 <= local < deleted - 1 else e)

    u = np.asarray(scaling)
    inverse = group.inverse
    sandwich = spec.sandwich
    entries = np.maximum(sandwich, 0)
    scaled = group.table[group.table[u[:, None], entries], inverse[u][None, :]]
    normalized = np.where(sandwich == ZERO_ENTRY, ZERO_ENTRY, scaled)

    if np.any((normalized != ZERO_ENTRY) & (normalized != e)):
        i, j = np.argwhere((normalized != ZERO_ENTRY) & (normalized != e))[0]
        raise ConstructionError(
            f"Normalization left entry ({restricted.kept[i] + 1},{restricted.kept[j] + 1}) non-trivial."  # noqa: E501
        )

    return ReesSpec(group, normalized), tuple(scaling)
