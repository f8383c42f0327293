"""Boolean matrices over the semiring ``({0, 1}, max, min)``.

A matrix is encoded as the integer whose binary digits, most significant first, are
its entries in row-major order. The code functions below operate on numpy arrays of
codes so that whole families can be multiplied at once.
"""

import json
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

type Codes = NDArray[np.int64]

MAX_N = 4


class BooleanError(ValueError):
    """Raised for malformed Boolean matrices."""


def _weights(n: int) -> NDArray[np.int64]:
    return (1 << np.arange(n * n - 1, -1, -1, dtype=np.int64)).reshape(n, n)


def decode_codes(codes: ArrayLike, n: int) -> NDArray[np.bool_]:
    """Codes to a ``(..., n, n)`` Boolean array."""
    c = np.asarray(codes, dtype=np.int64)
    return (c[..., None, None] & _weights(n)) != 0


def encode_codes(bits: NDArray[np.bool_]) -> Codes:
    n = bits.shape[-1]
    return np.sum(np.where(bits, _weights(n), 0), axis=(-2, -1), dtype=np.int64)


def product_codes(a: ArrayLike, b: ArrayLike, n: int) -> Codes:
    x, y = decode_codes(a, n), decode_codes(b, n)
    return encode_codes(np.any(x[..., :, :, None] & y[..., None, :, :], axis=-2))


def transpose_codes(a: ArrayLike, n: int) -> Codes:
    return encode_codes(np.swapaxes(decode_codes(a, n), -1, -2))


def anti_diagonal_codes(a: ArrayLike, n: int) -> Codes:
    """``J A^T J``: entry ``(i, j)`` becomes entry ``(n-1-j, n-1-i)``."""
    return encode_codes(np.swapaxes(decode_codes(a, n)[..., ::-1, ::-1], -1, -2))


@dataclass(frozen=True)
class BoolMatrix:
    """A square Boolean matrix.

    Attributes:
        n: Number of rows
        code: Entries as binary digits, row-major with the top-left most significant

    Examples:
        >>> a = BoolMatrix.from_rows([[1, 1], [0, 1]])
        >>> a.code, a.anti_diagonal() == a, str(a.transpose())
        (13, True, '[[1,0],[1,1]]')
    """

    n: int
    code: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise BooleanError(f"Boolean matrices need 1 <= n <= {MAX_N}, got {self.n}.")  # noqa: E501
        if not 0 <= self.code < 1 << (self.n * self.n):
            raise BooleanError(f"{self.code} is not a {self.n}x{self.n} Boolean matrix.")  # noqa: E501

    @classmethod
    def from_rows(cls, rows: ArrayLike) -> "BoolMatrix":
        bits = np.asarray(rows)
        if bits.ndim != 2 or bits.shape[0] != bits.shape[1] or not np.isin(bits, (0, 1)).all():  # noqa: E501, PLR2004
            raise BooleanError("A Boolean matrix must be square with 0/1 entries.")
        return cls(bits.shape[0], int(encode_codes(bits.astype(bool))))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls.from_rows(np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> NDArray[np.bool_]:
        return decode_codes(self.code, self.n)

    def __getitem__(self, index: tuple[int, int]) -> bool:
        return bool(self.rows[index])

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        if self.n != other.n:
            raise BooleanError(f"Cannot multiply {self.n}x{self.n} by {other.n}x{other.n}.")  # noqa: E501
        return BoolMatrix(self.n, int(product_codes(self.code, other.code, self.n)))

    def transpose(self) -> "BoolMatrix":
        return BoolMatrix(self.n, int(transpose_codes(self.code, self.n)))

    def anti_diagonal(self) -> "BoolMatrix":
        return BoolMatrix(self.n, int(anti_diagonal_codes(self.code, self.n)))

    def __str__(self) -> str:
        return "[" + ",".join(
            "[" + ",".join(str(int(b)) for b in row) + "]" for row in self.rows
        ) + "]"


def perfect_matching(a: BoolMatrix) -> tuple[int, ...] | None:
    """Finds columns ``c_i`` with ``a[i, c_i] = 1``, pairwise distinct.

    Augments along alternating paths, one row at a time.

    Returns:
        The column matched to each row, or None if no perfect matching exists
    """
    rows = a.rows
    matched: list[int | None] = [None] * a.n

    def search(row: int, seen: list[bool]) -> bool:
        for col in range(a.n):
            if rows[row, col] and not seen[col]:
                seen[col] = True
                owner = matched[col]
                if owner is None or search(owner, seen):
                    matched[col] = row
                    return True
        return False

    for row in range(a.n):
        if not search(row, [False] * a.n):
            return None

    columns = [0] * a.n
    for col, row in enumerate(matched):
        if row is not None:
            columns[row] = col
    return tuple(columns)


def is_hall(a: BoolMatrix) -> bool:
    """Whether the bipartite graph of ``a`` has a perfect matching.

    Examples:
        >>> is_hall(BoolMatrix.identity(3)), is_hall(BoolMatrix(2, 0))
        (True, False)
        >>> is_hall(BoolMatrix.from_rows([[1, 1], [1, 0]]))
        True
    """
    return perfect_matching(a) is not None


def parse_bool_matrix(text: str) -> BoolMatrix:
    """Parses a literal such as ``[[1,1],[0,1]]``."""
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as error:
        raise BooleanError(f"Malformed matrix {text!r}: {error.msg}.") from error
    return BoolMatrix.from_rows(rows)
