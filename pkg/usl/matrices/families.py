"""Semigroups of matrices.

Every family is enumerated by integer codes: a field matrix is encoded by its
entries as base-``q`` digits, row-major with the top-left entry most significant;
a Boolean matrix by its bits in the same order. Families up to
``Settings.tabulate_limit`` elements are tabulated, larger ones multiply codes on
the fly.

    >>> from usl.matrices.field import field_make
    >>> family = build_matrix_family("full", 2, field_make(3), "mp")
    >>> family.size, family.semigroup.arity
    (81, 1)
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..config import DEFAULT_SETTINGS, Settings
from ..core import generated_closure
from ..semigroup import (
    CodeArray,
    CodeStar,
    EncodedSemigroup,
    FiniteUnarySemigroup,
    StructureError,
    UnarySemigroup,
)
from ..terms import IdentityResult, check_implication, parse_identity
from . import boolean
from .boolean import BoolMatrix
from .field import FieldError, InvolutiveField, norm_form_solution
from .matrix import FieldMatrix, mat_inverse, matmul_entries, mp_inverse

_logger = logging.getLogger(__name__)

type FamilyName = Literal[
    "full",
    "gl",
    "orthogonal",
    "star_orthogonal",
    "rank_one",
    "singular",
    "boolean",
    "hall",
    "bool_upper",
    "bool_reflexive",
    "bool_unitriangular",
    "bool_submonoid",
]
type UnaryKind = Literal[
    "none",
    "transpose",
    "conjugate",
    "star",
    "sigma_transpose",
    "inverse",
    "mp",
    "mp_and_conj",
    "symplectic",
    "anti_diagonal",
]

FIELD_FAMILIES: tuple[FamilyName, ...] = (
    "full",
    "gl",
    "orthogonal",
    "star_orthogonal",
    "rank_one",
    "singular",
)
BOOLEAN_FAMILIES: tuple[FamilyName, ...] = (
    "boolean",
    "hall",
    "bool_upper",
    "bool_reflexive",
    "bool_unitriangular",
    "bool_submonoid",
)
UNARY_KINDS: tuple[UnaryKind, ...] = (
    "none",
    "transpose",
    "conjugate",
    "star",
    "sigma_transpose",
    "inverse",
    "mp",
    "mp_and_conj",
    "symplectic",
    "anti_diagonal",
)


class PartialOperationError(StructureError):
    """Raised when a unary operation is undefined on some member of a family.

    Attributes:
        witness: A description of the offending element
    """

    def __init__(self, message: str, witness: str) -> None:
        super().__init__(message)
        self.witness = witness


class _FieldCodec:
    """Base-``q`` codes of ``n x n`` matrices over a field."""

    def __init__(self, f: InvolutiveField, n: int) -> None:
        self.field = f
        self.n = n
        self.count = f.order ** (n * n)
        if self.count >= 1 << 62:
            raise FieldError(f"M_{n}(GF({f.order})) cannot be encoded in 64 bits.")
        self.weights = (
            f.order ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
        ).reshape(n, n)
        self.identity = int(self.encode(np.eye(n, dtype=np.int64)))

    def decode(self, codes: ArrayLike) -> NDArray[np.int64]:
        c = np.asarray(codes, dtype=np.int64)
        return (c[..., None, None] // self.weights) % self.field.order

    def encode(self, entries: NDArray[np.int64]) -> CodeArray:
        return np.sum(entries * self.weights, axis=(-2, -1), dtype=np.int64)

    def product(self, a: CodeArray, b: CodeArray) -> CodeArray:
        return self.encode(matmul_entries(self.field, self.decode(a), self.decode(b)))

    def matrix(self, code: int) -> FieldMatrix:
        return FieldMatrix(self.field, self.decode(code))

    def label(self, code: int) -> str:
        return str(self.matrix(code))

    def transform(self, kind: UnaryKind) -> CodeStar:  # noqa: C901
        f, n = self.field, self.n

        def transpose(a: CodeArray) -> CodeArray:
            return self.encode(np.swapaxes(self.decode(a), -1, -2))

        def conjugate(a: CodeArray) -> CodeArray:
            return self.encode(f.conj(self.decode(a)))

        def star(a: CodeArray) -> CodeArray:
            return self.encode(np.swapaxes(f.conj(self.decode(a)), -1, -2))

        frobenius = f.frobenius(f.involution_power)

        def sigma(a: CodeArray) -> CodeArray:
            return self.encode(np.swapaxes(frobenius[self.decode(a)], -1, -2))

        def anti_diagonal(a: CodeArray) -> CodeArray:
            return self.encode(np.swapaxes(self.decode(a)[..., ::-1, ::-1], -1, -2))

        match kind:
            case "transpose":
                return transpose
            case "conjugate":
                return conjugate
            case "star":
                return star
            case "sigma_transpose":
                return sigma
            case "anti_diagonal":
                return anti_diagonal
            case "symplectic":
                if n % 2:
                    raise FieldError(f"The symplectic involution needs even n, got {n}.")  # noqa: E501
                half = n // 2
                j = np.zeros((n, n), dtype=np.int64)
                j[:half, half:] = np.eye(half, dtype=np.int64)
                j[half:, :half] = f.neg(np.eye(half, dtype=np.int64))
                j_inverse = f.neg(j)

                def symplectic(a: CodeArray) -> CodeArray:
                    flipped = np.swapaxes(self.decode(a), -1, -2)
                    return self.encode(
                        matmul_entries(f, matmul_entries(f, j_inverse, flipped), j)
                    )

                return symplectic
            case _:
                raise ValueError(f"{kind!r} is not an entrywise transform.")

    def ranks(self, codes: CodeArray) -> NDArray[np.int64]:
        """Rank of every encoded matrix."""
        entries = self.decode(codes)
        f = self.field
        if self.n == 1:
            return (entries[..., 0, 0] != 0).astype(np.int64)
        if self.n == 2:  # noqa: PLR2004
            det = f.sub(
                f.mul(entries[..., 0, 0], entries[..., 1, 1]),
                f.mul(entries[..., 0, 1], entries[..., 1, 0]),
            )
            nonzero = np.any(entries != 0, axis=(-2, -1))
            return np.where(det != 0, 2, nonzero.astype(np.int64))
        return np.asarray(
            [self.matrix(int(c)).rank() for c in np.ravel(codes)], dtype=np.int64
        ).reshape(np.shape(codes))


class _BoolCodec:
    """Bit codes of ``n x n`` Boolean matrices."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.count = 1 << (n * n)
        self.identity = BoolMatrix.identity(n).code

    def product(self, a: CodeArray, b: CodeArray) -> CodeArray:
        return boolean.product_codes(a, b, self.n)

    def matrix(self, code: int) -> BoolMatrix:
        return BoolMatrix(self.n, code)

    def label(self, code: int) -> str:
        return str(self.matrix(code))

    def transform(self, kind: UnaryKind) -> CodeStar:
        n = self.n
        match kind:
            case "transpose":
                return lambda a: boolean.transpose_codes(a, n)
            case "anti_diagonal":
                return lambda a: boolean.anti_diagonal_codes(a, n)
            case _:
                raise ValueError(f"{kind!r} is not defined on Boolean matrices.")

    def masks(self) -> tuple[int, int]:
        """Bits strictly below the diagonal, and bits on it."""
        lower = diagonal = 0
        for i in range(self.n):
            for j in range(self.n):
                bit = 1 << (self.n * self.n - 1 - (i * self.n + j))
                if i > j:
                    lower |= bit
                elif i == j:
                    diagonal |= bit
        return lower, diagonal


@dataclass(frozen=True, eq=False)
class MatrixFamily:
    """A semigroup of matrices with the codes of its elements.

    Attributes:
        name: The family name
        n: Matrix size
        field: The entry field, None for Boolean families
        unary: The unary operation kind
        codes: Sorted codes; element ``i`` of ``semigroup`` has code ``codes[i]``
        semigroup: The structure itself
    """

    name: FamilyName
    n: int
    field: InvolutiveField | None
    unary: UnaryKind
    codes: CodeArray
    semigroup: UnarySemigroup

    @property
    def size(self) -> int:
        return int(self.codes.shape[0])

    def _codec(self) -> "_FieldCodec | _BoolCodec":
        if self.field is None:
            return _BoolCodec(self.n)
        return _FieldCodec(self.field, self.n)

    def matrix(self, element: int) -> FieldMatrix | BoolMatrix:
        return self._codec().matrix(int(self.codes[element]))

    def id_of(self, matrix: FieldMatrix | BoolMatrix) -> int:
        """The element id of a matrix.

        Raises:
            KeyError: If the matrix is not a member
        """
        if isinstance(matrix, BoolMatrix):
            code = matrix.code
        else:
            codec = _FieldCodec(matrix.field, matrix.n)
            code = int(codec.encode(np.asarray(matrix.entries)))
        position = int(np.searchsorted(self.codes, code))
        if position == self.size or int(self.codes[position]) != code:
            raise KeyError(str(matrix))
        return position

    def ids_of(self, matrices: Sequence[FieldMatrix | BoolMatrix]) -> tuple[int, ...]:
        return tuple(self.id_of(m) for m in matrices)


def _lookup(members: CodeArray, images: CodeArray) -> CodeStar:
    def apply(a: CodeArray) -> CodeArray:
        return images[np.searchsorted(members, a)]

    return apply


def _pointwise(
    members: CodeArray,
    operation: Callable[[int], int | None],
    what: str,
    label: Callable[[int], str],
) -> CodeStar:
    images = np.empty_like(members)
    for position, code in enumerate(members.tolist()):
        image = operation(code)
        if image is None:
            raise PartialOperationError(
                f"{label(code)} has no {what}.", label(code)
            )
        images[position] = image
    return _lookup(members, images)


def _field_members(
    codec: _FieldCodec, name: FamilyName, settings: Settings
) -> CodeArray:
    if codec.count > settings.element_cap:
        raise StructureError(
            f"M_{codec.n}(GF({codec.field.order})) has {codec.count} elements, beyond element_cap={settings.element_cap}."  # noqa: E501
        )
    codes = np.arange(codec.count, dtype=np.int64)
    n = codec.n
    f = codec.field

    match name:
        case "full":
            return codes
        case "gl":
            return codes[codec.ranks(codes) == n]
        case "singular":
            return codes[codec.ranks(codes) < n]
        case "rank_one":
            keep = (codec.ranks(codes) <= 1) | (codes == codec.identity)
            return codes[keep]
        case "orthogonal":
            flipped = codec.transform("transpose")(codes)
            return codes[codec.product(flipped, codes) == codec.identity]
        case "star_orthogonal":
            adjoint = codec.encode(np.swapaxes(f.conj(codec.decode(codes)), -1, -2))
            return codes[codec.product(adjoint, codes) == codec.identity]
        case _:
            raise ValueError(f"{name!r} is not a field family.")


def _bool_members(codec: _BoolCodec, name: FamilyName) -> CodeArray:
    codes = np.arange(codec.count, dtype=np.int64)
    lower, diagonal = codec.masks()

    match name:
        case "boolean":
            return codes
        case "hall":
            keep = [boolean.is_hall(codec.matrix(c)) for c in codes.tolist()]
            return codes[np.asarray(keep, dtype=bool)]
        case "bool_upper":
            return codes[(codes & lower) == 0]
        case "bool_reflexive":
            return codes[(codes & diagonal) == diagonal]
        case "bool_unitriangular":
            return codes[((codes & lower) == 0) & ((codes & diagonal) == diagonal)]
        case _:
            raise ValueError(f"{name!r} is not a Boolean family.")


def _field_stars(
    codec: _FieldCodec, name: FamilyName, members: CodeArray, unary: UnaryKind
) -> list[CodeStar]:
    f = codec.field

    def mp(code: int) -> int | None:
        inverse = mp_inverse(codec.matrix(code))
        if inverse is None:
            return None
        return int(codec.encode(np.asarray(inverse.entries)))

    def inverse(code: int) -> int | None:
        result = mat_inverse(codec.matrix(code))
        return None if result is None else int(codec.encode(np.asarray(result.entries)))

    match unary:
        case "none":
            return []
        case "mp" | "mp_and_conj":
            solution = norm_form_solution(f, codec.n) if name == "full" else None
            if solution is not None:
                raise PartialOperationError(
                    f"The Moore-Penrose inverse is partial on M_{codec.n}({f.name}): {solution} solves sum x_i conj(x_i) = 0.",  # noqa: E501
                    str(solution),
                )
            stars = [_pointwise(members, mp, "Moore-Penrose inverse", codec.label)]
            if unary == "mp_and_conj":
                stars.append(codec.transform("star"))
            return stars
        case "inverse":
            return [_pointwise(members, inverse, "inverse", codec.label)]
        case _:
            return [codec.transform(unary)]


def build_matrix_family(  # noqa: PLR0913
    name: FamilyName,
    n: int,
    field: InvolutiveField | None = None,
    unary: UnaryKind = "transpose",
    generators: Sequence[BoolMatrix] = (),
    settings: Settings = DEFAULT_SETTINGS,
) -> MatrixFamily:
    """Enumerates a matrix family as a unary semigroup.

    Args:
        name: The family; field families need ``field``, ``bool_submonoid`` needs
            ``generators`` and closes them with the identity under the product and
            ``unary`` inside the upper triangular Boolean matrices
        n: Matrix size
        field: Entry field of field families
        unary: The unary operation
        generators: Generators of ``bool_submonoid``
        settings: Size caps

    Returns:
        The family

    Raises:
        PartialOperationError: If the unary operation is undefined on some member
        StructureError: If a family is too large or not closed under the operation
        FieldError: If the field is missing or does not fit the family
    """
    if name in FIELD_FAMILIES:
        if field is None:
            raise FieldError(f"The family {name!r} needs a field.")
        codec: _FieldCodec | _BoolCodec = _FieldCodec(field, n)
        members = _field_members(codec, name, settings)
        stars = _field_stars(codec, name, members, unary)
    else:
        if n > boolean.MAX_N:
            raise StructureError(f"Boolean families need n <= {boolean.MAX_N}, got {n}.")  # noqa: E501
        codec = _BoolCodec(n)
        if name == "bool_submonoid":
            return _bool_submonoid(codec, unary, generators, settings)
        members = _bool_members(codec, name)
        stars = [] if unary == "none" else [codec.transform(unary)]

    return _assemble(name, n, field, unary, codec, members, stars, settings)


def _assemble(  # noqa: PLR0913
    name: FamilyName,
    n: int,
    field: InvolutiveField | None,
    unary: UnaryKind,
    codec: "_FieldCodec | _BoolCodec",
    members: CodeArray,
    stars: list[CodeStar],
    settings: Settings,
) -> MatrixFamily:
    def position(code: int) -> int | None:
        index = int(np.searchsorted(members, code))
        return index if index < members.size and members[index] == code else None

    encoded = EncodedSemigroup(
        members,
        codec.product,
        tuple(stars),
        codec.label,
        position(0),
        position(codec.identity),
    )
    for k in range(encoded.arity):
        encoded.star(encoded.ids(), k + 1)

    semigroup: UnarySemigroup = encoded
    if encoded.size <= settings.tabulate_limit:
        semigroup = encoded.tabulate(settings)

    _logger.debug("Built matrix family %s (n=%d): %d elements", name, n, encoded.size)
    return MatrixFamily(name, n, field, unary, members, semigroup)


def _bool_submonoid(
    codec: _BoolCodec,
    unary: UnaryKind,
    generators: Sequence[BoolMatrix],
    settings: Settings,
) -> MatrixFamily:
    if not generators:
        raise StructureError("A generated submonoid needs generators.")

    parent = build_matrix_family(
        "bool_upper", codec.n, None, unary, settings=settings
    )
    gens = [*parent.ids_of(generators), parent.id_of(BoolMatrix.identity(codec.n))]
    closure = generated_closure(parent.semigroup, gens, settings)
    codes = parent.codes[np.asarray(closure.embedding, dtype=np.int64)]
    sub: FiniteUnarySemigroup = closure.semigroup
    return MatrixFamily("bool_submonoid", codec.n, None, unary, codes, sub)


def build_matrix_semigroup(  # noqa: PLR0913
    name: FamilyName,
    n: int,
    field: InvolutiveField | None = None,
    unary: UnaryKind = "transpose",
    generators: Sequence[BoolMatrix] = (),
    settings: Settings = DEFAULT_SETTINGS,
) -> UnarySemigroup:
    """``build_matrix_family(...).semigroup``."""
    return build_matrix_family(name, n, field, unary, generators, settings).semigroup


@dataclass(frozen=True)
class CancellationReport:
    """Outcome of ``check_cancellation``.

    Attributes:
        null_witness: A non-zero ``x`` with ``x* x = 0``, if any
        left: The check of ``x* x y = x* x z => x y = x z``
    """

    null_witness: int | None
    left: IdentityResult

    @property
    def holds(self) -> bool:
        return self.null_witness is None and self.left.holds


def check_cancellation(
    s: UnarySemigroup, settings: Settings = DEFAULT_SETTINGS
) -> CancellationReport:
    """Checks ``x* x = 0 => x = 0`` and ``x* x y = x* x z => x y = x z``.

    Raises:
        StructureError: If ``s`` has no zero or no unary operation
    """
    if s.zero_id is None or s.arity == 0:
        raise StructureError("Cancellation needs a zero and a unary operation.")

    ids = s.ids()
    vanishing = s.multiply(s.star(ids), ids) == s.zero_id
    null = np.flatnonzero(vanishing & (ids != s.zero_id))
    premise = parse_identity("x' x y = x' x z")
    conclusion = parse_identity("x y = x z")
    return CancellationReport(
        int(null[0]) if null.size else None,
        check_implication(s, premise, conclusion, settings),
    )
