"""The ``.usg`` text format for finite unary semigroups.

A file reads::

    usg 1
    elements N
    unary K
    <N rows of the multiplication table>
    <K rows, one per unary operation>
    zero Z          (optional)
    identity E      (optional)
    # label         (optional, one per element, in id order)

Entries are zero-based element ids separated by whitespace. Blank lines are
ignored. Writing and reading back gives an equal structure.
"""

from pathlib import Path

import numpy as np

from .config import DEFAULT_SETTINGS, Settings
from .semigroup import FiniteUnarySemigroup, StructureError, UnarySemigroup

VERSION = 1


class UsgFormatError(StructureError):
    """Raised when ``.usg`` text is malformed.

    Attributes:
        line: One-based line number of the offending line, or 0 for the whole text
    """

    def __init__(self, message: str, line: int = 0) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def usg_dumps(s: UnarySemigroup, settings: Settings = DEFAULT_SETTINGS) -> str:
    """Serializes a structure, tabulating it first if needed.

    Examples:
        >>> s = FiniteUnarySemigroup.from_tables([[0, 0], [0, 1]], [[0, 1]], ["0", "1"])
        >>> print(usg_dumps(s), end="")
        usg 1
        elements 2
        unary 1
        0 0
        0 1
        0 1
        # 0
        # 1
    """  # noqa: E501
    table = s.tabulate(settings)
    lines = [f"usg {VERSION}", f"elements {table.size}", f"unary {table.arity}"]
    lines.extend(" ".join(str(int(x)) for x in row) for row in table.table)
    lines.extend(" ".join(str(int(x)) for x in row) for row in table.star_tables)

    if table.zero_id is not None:
        lines.append(f"zero {table.zero_id}")
    if table.identity_id is not None:
        lines.append(f"identity {table.identity_id}")
    if table.element_labels is not None:
        lines.extend(f"# {label}" for label in table.element_labels)
    return "\n".join(lines) + "\n"


def _header(
    rows: list[tuple[int, str]], position: int, keyword: str
) -> tuple[int, int]:
    if position >= len(rows):
        raise UsgFormatError(f"Expected '{keyword} <n>' but the text ended.")
    number, line = rows[position]
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit():  # noqa: PLR2004
        raise UsgFormatError(f"Expected '{keyword} <n>', got {line!r}.", number)
    return number, int(parts[1])


def _row(rows: list[tuple[int, str]], position: int, width: int) -> list[int]:
    if position >= len(rows):
        raise UsgFormatError("The text ended inside a table.")
    number, line = rows[position]
    try:
        values = [int(x) for x in line.split()]
    except ValueError:
        raise UsgFormatError(f"Non-integer entry in {line!r}.", number) from None
    if len(values) != width:
        raise UsgFormatError(f"Expected {width} entries, got {len(values)}.", number)
    return values


def usg_loads(text: str) -> FiniteUnarySemigroup:  # noqa: C901
    """Parses ``.usg`` text.

    Raises:
        UsgFormatError: If the text is malformed or the tables are invalid

    Examples:
        >>> usg_loads("usg 1\\nelements 1\\nunary 0\\n0\\n").size
        1
        >>> usg_loads("usg 2\\nelements 1\\nunary 0\\n0\\n")
        Traceback (most recent call last):
            ...
        usl.usg.UsgFormatError: line 1: Unsupported version 2.
    """
    rows = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), 1)
        if line.strip()
    ]

    number, version = _header(rows, 0, "usg")
    if version != VERSION:
        raise UsgFormatError(f"Unsupported version {version}.", number)
    _, size = _header(rows, 1, "elements")
    number, arity = _header(rows, 2, "unary")
    if size == 0:
        raise UsgFormatError("A structure needs at least one element.", rows[1][0])
    if arity > 2:  # noqa: PLR2004
        raise UsgFormatError(f"At most two unary operations, got {arity}.", number)

    position = 3
    table = [_row(rows, position + a, size) for a in range(size)]
    position += size
    stars = [_row(rows, position + k, size) for k in range(arity)]
    position += arity

    marked: dict[str, int] = {}
    labels: list[str] = []
    for number, line in rows[position:]:
        keyword, _, rest = line.partition(" ")
        if keyword == "#":
            labels.append(rest.strip())
        elif keyword in ("zero", "identity") and not labels:
            if keyword in marked or not rest.strip().isdigit():
                raise UsgFormatError(f"Malformed {keyword} line {line!r}.", number)
            marked[keyword] = int(rest)
        else:
            raise UsgFormatError(f"Unexpected line {line!r}.", number)

    if labels and len(labels) != size:
        raise UsgFormatError(f"Expected {size} labels, got {len(labels)}.")

    try:
        return FiniteUnarySemigroup.from_tables(
            np.asarray(table),
            np.asarray(stars).reshape(arity, size),
            labels or None,
            marked.get("zero"),
            marked.get("identity"),
        )
    except StructureError as error:
        raise UsgFormatError(str(error)) from error


def usg_write(
    s: UnarySemigroup, path: Path | str, settings: Settings = DEFAULT_SETTINGS
) -> None:
    Path(path).write_text(usg_dumps(s, settings), encoding="utf-8")


def usg_read(path: Path | str) -> FiniteUnarySemigroup:
    """Reads a ``.usg`` file.

    Raises:
        UsgFormatError: If the file is malformed
        OSError: If the file cannot be read
    """
    return usg_loads(Path(path).read_text(encoding="utf-8"))
