"""Square matrices over an involutive field and their unary operations."""

import json
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray

from .field import FieldError, InvolutiveField

type Entries = NDArray[np.int64]
type TransformKind = Literal[
    "transpose", "conjugate", "star", "sigma_transpose", "symplectic", "anti_diagonal"
]


class FormulaInapplicableError(ValueError):
    """Raised when a closed formula does not apply to its input."""


@dataclass(frozen=True, eq=False)
class FieldMatrix:
    """An ``n x n`` matrix with entries in an involutive field.

    Attributes:
        field: The entry field
        entries: Row-major entries, read-only

    Examples:
        >>> from usl.matrices.field import field_make
        >>> a = parse_matrix("[[1,2],[0,1]]", field_make(3))
        >>> str(a @ a), a.rank()
        ('[[1,1],[0,1]]', 2)
    """

    field: InvolutiveField
    entries: Entries

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.size == 0:  # noqa: E501, PLR2004
            raise FieldError("A matrix must be square and non-empty.")
        if np.any((entries < 0) | (entries >= self.field.order)):
            raise FieldError(f"Matrix entries must lie in GF({self.field.order}).")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    @classmethod
    def identity(cls, f: InvolutiveField, n: int) -> "FieldMatrix":
        return cls(f, np.eye(n, dtype=np.int64))

    @classmethod
    def zero(cls, f: InvolutiveField, n: int) -> "FieldMatrix":
        return cls(f, np.zeros((n, n), dtype=np.int64))

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        return mat_mul(self, other)

    def rank(self) -> int:
        return mat_rank(self)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.entries.T)

    def conjugate(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.field.conj(self.entries))

    def star(self) -> "FieldMatrix":
        """The conjugate transpose."""
        return FieldMatrix(self.field, self.field.conj(self.entries).T)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.field, self.entries.tobytes()))

    def __str__(self) -> str:
        return json.dumps(self.entries.tolist(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.field.name}, {self})"


def parse_matrix(text: str, f: InvolutiveField) -> FieldMatrix:
    """Parses a literal such as ``[[1,0],[2,1]]``.

    Raises:
        FieldError: If the literal is malformed or an entry is out of range
    """
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as error:
        raise FieldError(f"Malformed matrix {text!r}: {error.msg}.") from error

    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):  # pyright: ignore[reportUnknownVariableType]
        raise FieldError(f"Malformed matrix {text!r}: expected a list of rows.")
    try:
        return FieldMatrix(f, np.asarray(rows, dtype=np.int64))
    except (TypeError, ValueError) as error:
        if isinstance(error, FieldError):
            raise
        raise FieldError(f"Malformed matrix {text!r}.") from error


def _check_fields(*matrices: FieldMatrix) -> InvolutiveField:
    f = matrices[0].field
    if any(m.field != f for m in matrices):
        raise FieldError("Matrices over different fields cannot be combined.")
    return f


def matmul_entries(f: InvolutiveField, x: Entries, y: Entries) -> Entries:
    """Multiplies rectangular entry arrays, or stacks of them, over ``f``."""
    products = f.mul(x[..., :, :, None], y[..., None, :, :])
    total = products[..., :, 0, :]
    for k in range(1, x.shape[-1]):
        total = f.add(total, products[..., :, k, :])
    return total


def mat_mul(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    f = _check_fields(a, b)
    if a.n != b.n:
        raise FieldError(f"Cannot multiply {a.n}x{a.n} by {b.n}x{b.n}.")
    return FieldMatrix(f, matmul_entries(f, a.entries, b.entries))


def row_reduce(f: InvolutiveField, x: Entries) -> tuple[Entries, list[int]]:
    """Reduced row echelon form of a rectangular array, with its pivot columns."""
    r = np.array(x, dtype=np.int64)
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0

    for col in range(cols):
        if row == rows:
            break
        nonzero = np.flatnonzero(r[row:, col])
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        r[[row, pivot]] = r[[pivot, row]]
        r[row] = f.mul(r[row], f.inv(r[row, col]))
        for other in range(rows):
            if other != row and r[other, col]:
                r[other] = f.sub(r[other], f.mul(r[other, col], r[row]))
        pivots.append(col)
        row += 1

    return r, pivots


def mat_rank(a: FieldMatrix) -> int:
    return len(row_reduce(a.field, a.entries)[1])


def _inverse_entries(f: InvolutiveField, x: Entries) -> Entries | None:
    n = x.shape[0]
    reduced, pivots = row_reduce(f, np.hstack([x, np.eye(n, dtype=np.int64)]))
    if pivots[:n] != list(range(n)):
        return None
    return reduced[:, n:]


def mat_inverse(a: FieldMatrix) -> FieldMatrix | None:
    """The inverse of ``a``, or None if ``a`` is singular."""
    inverse = _inverse_entries(a.field, a.entries)
    return None if inverse is None else FieldMatrix(a.field, inverse)


def sigma_transpose(a: FieldMatrix, power: int) -> FieldMatrix:
    """Transpose composed with the entrywise Frobenius ``x -> x^(p^power)``."""
    return FieldMatrix(a.field, a.field.frobenius(power)[a.entries].T)


def symplectic(a: FieldMatrix) -> FieldMatrix:
    """``J^-1 A^T J`` with ``J = [[0, I], [-I, 0]]``.

    Raises:
        FieldError: If ``n`` is odd
    """
    n = a.n
    if n % 2:
        raise FieldError(f"The symplectic involution needs even n, got {n}.")
    f = a.field
    half = n // 2
    j = np.zeros((n, n), dtype=np.int64)
    j[:half, half:] = np.eye(half, dtype=np.int64)
    j[half:, :half] = f.neg(np.eye(half, dtype=np.int64))
    j_inverse = f.neg(j)
    left = matmul_entries(f, j_inverse, a.entries.T)
    return FieldMatrix(f, matmul_entries(f, left, j))


def anti_diagonal(a: FieldMatrix) -> FieldMatrix:
    """``J A^T J`` with ``J`` the anti-diagonal permutation matrix."""
    return FieldMatrix(a.field, a.entries[::-1, ::-1].T)


def unary_transform(a: FieldMatrix, kind: TransformKind) -> FieldMatrix:
    """Applies a named involution; ``sigma_transpose`` uses the field's involution power.

    Examples:
        >>> from usl.matrices.field import field_make
        >>> a = parse_matrix("[[1,2],[0,1]]", field_make(3))
        >>> str(unary_transform(a, "anti_diagonal")), str(unary_transform(a, "symplectic"))
        ('[[1,2],[0,1]]', '[[1,1],[0,1]]')
    """  # noqa: E501
    match kind:
        case "transpose":
            return a.transpose()
        case "conjugate":
            return a.conjugate()
        case "star":
            return a.star()
        case "sigma_transpose":
            return sigma_transpose(a, a.field.involution_power)
        case "symplectic":
            return symplectic(a)
        case "anti_diagonal":
            return anti_diagonal(a)


def penrose_holds(a: FieldMatrix, x: FieldMatrix) -> bool:
    """Whether ``x`` satisfies the four Penrose equations for ``a``.

    ``a x a = a``, ``x a x = x``, ``(a x)* = a x`` and ``(x a)* = x a``, with ``*``
    the conjugate transpose.
    """
    ax, xa = a @ x, x @ a
    return ax @ a == a and xa @ x == x and ax.star() == ax and xa.star() == xa


def mp_inverse(a: FieldMatrix) -> FieldMatrix | None:
    """The Moore-Penrose inverse of ``a`` with respect to the conjugate transpose.

    Uses the rank factorization ``a = B C``: when ``C C*`` and ``B* B`` are
    invertible the inverse is ``C* (C C*)^-1 (B* B)^-1 B*``, and otherwise none
    exists. The candidate is certified against the Penrose equations.

    Examples:
        >>> from usl.matrices.field import field_make
        >>> gf3, gf5 = field_make(3), field_make(5)
        >>> str(mp_inverse(parse_matrix("[[1,1],[0,0]]", gf3)))
        '[[2,0],[2,0]]'
        >>> mp_inverse(parse_matrix("[[1,2],[0,0]]", gf5)) is None
        True
    """
    f = a.field
    reduced, pivots = row_reduce(f, a.entries)
    rank = len(pivots)
    if rank == 0:
        return FieldMatrix.zero(f, a.n)

    c = reduced[:rank]
    b = a.entries[:, pivots]
    c_star = f.conj(c).T
    b_star = f.conj(b).T

    left = _inverse_entries(f, matmul_entries(f, c, c_star))
    right = _inverse_entries(f, matmul_entries(f, b_star, b))
    if left is None or right is None:
        return None

    candidate = FieldMatrix(
        f,
        matmul_entries(
            f, matmul_entries(f, c_star, left), matmul_entries(f, right, b_star)
        ),
    )
    return candidate if penrose_holds(a, candidate) else None


@dataclass(frozen=True)
class RankOneFactors:
    """``a = b c`` with a column ``b`` and a row ``c``."""

    column: Entries
    row: Entries


def rank_one_factors(a: FieldMatrix) -> RankOneFactors:
    """Factors a rank one matrix.

    Raises:
        FormulaInapplicableError: If the rank is not one
    """
    f = a.field
    reduced, pivots = row_reduce(f, a.entries)
    if len(pivots) != 1:
        raise FormulaInapplicableError(f"Expected rank 1, got rank {len(pivots)}.")
    return RankOneFactors(a.entries[:, pivots[0]].copy(), reduced[0].copy())


def mp_rank1(a: FieldMatrix) -> FieldMatrix:
    """The closed form ``(b* b)^-1 (c c*)^-1 c* b*`` for ``a = b c`` of rank one.

    Raises:
        FormulaInapplicableError: If the rank is not one or ``b* b`` or ``c c*``
            vanishes

    Examples:
        >>> from usl.matrices.field import field_make
        >>> str(mp_rank1(parse_matrix("[[1,1],[0,0]]", field_make(3))))
        '[[2,0],[2,0]]'
    """
    f = a.field
    factors = rank_one_factors(a)
    b, c = factors.column, factors.row

    bb = _dot(f, f.conj(b), b)
    cc = _dot(f, c, f.conj(c))
    if bb == 0 or cc == 0:
        raise FormulaInapplicableError(
            f"The rank one formula needs b*b and cc* non-zero, got {bb} and {cc}."
        )

    scalar = f.inv(f.mul(bb, cc))
    outer = f.mul(f.conj(c)[:, None], f.conj(b)[None, :])
    return FieldMatrix(f, f.mul(scalar, outer))


def _dot(f: InvolutiveField, x: Entries, y: Entries) -> int:
    return int(matmul_entries(f, x[None, :], y[:, None])[0, 0])


def symplectic_embedding(a: FieldMatrix) -> FieldMatrix:
    """``diag(A, A)``, which embeds ``M_n(K)`` with transposition into ``M_2n(K)``
    with the symplectic transpose."""
    n = a.n
    entries = np.zeros((2 * n, 2 * n), dtype=np.int64)
    entries[:n, :n] = a.entries
    entries[n:, n:] = a.entries
    return FieldMatrix(a.field, entries)
