"""Small unary semigroups realized inside matrix families.

Each builder picks a set of matrices in a family together with the element of a
named target structure that every matrix stands for. ``Realization.verify``
restricts the family to the set and checks that the correspondence is a morphism
of unary semigroups.

    >>> r = tb_boolean()
    >>> r.size, r.verify().verdict
    (6, 'found')
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_SETTINGS, Settings
from ..constructions.named import named_semigroup
from ..core import (
    MorphismMode,
    MorphismResult,
    Subsemigroup,
    substructure,
    verify_morphism,
)
from ..semigroup import FiniteUnarySemigroup, StructureError
from .boolean import BoolMatrix
from .families import FamilyName, MatrixFamily, UnaryKind, build_matrix_family
from .field import FieldError, InvolutiveField
from .matrix import FieldMatrix

_logger = logging.getLogger(__name__)

type Matrix = FieldMatrix | BoolMatrix

# Element ids of the named structures "tb" and "ta".
PAIR_IDS = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3, 0: 4, 1: 5}


@dataclass(frozen=True, eq=False)
class Realization:
    """Matrices standing for the elements of a target structure.

    Attributes:
        name: Short description
        family: The ambient matrix family
        matrices: The chosen matrices
        images: The target element of every matrix
        target: The target structure
        mode: ``"isomorphism"`` when the matrices are in bijection with the target,
            ``"onto"`` when several matrices share an image
    """

    name: str
    family: MatrixFamily
    matrices: tuple[Matrix, ...]
    images: tuple[int, ...]
    target: FiniteUnarySemigroup
    mode: MorphismMode

    @property
    def size(self) -> int:
        return len(self.matrices)

    def ids(self) -> tuple[int, ...]:
        return self.family.ids_of(self.matrices)

    def substructure(self, settings: Settings = DEFAULT_SETTINGS) -> Subsemigroup:
        """The matrices as a unary subsemigroup of the family.

        Raises:
            StructureError: If the matrices are not closed under the operations
        """
        return substructure(self.family.semigroup, self.ids(), settings)

    def mapping(self, sub: Subsemigroup) -> tuple[int, ...]:
        """The correspondence on the local ids of ``sub``."""
        local = sub.local_ids()
        out = [0] * sub.size
        for element, image in zip(self.ids(), self.images, strict=True):
            out[local[element]] = image
        return tuple(out)

    def verify(self, settings: Settings = DEFAULT_SETTINGS) -> MorphismResult:
        """Checks the correspondence.

        Returns:
            ``"found"`` with the mapping if it is a morphism of the claimed kind,
            ``"none"`` with the first violation otherwise
        """
        try:
            sub = self.substructure(settings)
        except StructureError as error:
            return MorphismResult("none", None, 0, str(error))

        mapping = self.mapping(sub)
        violations = verify_morphism(
            sub.semigroup, self.target, mapping, self.mode, settings
        )
        if violations:
            return MorphismResult("none", mapping, 0, violations[0].detail)
        _logger.debug("Realization %s verified on %d matrices", self.name, self.size)
        return MorphismResult("found", mapping, 0)


def _field_matrices(
    f: InvolutiveField, rows: Sequence[Sequence[Sequence[int]]]
) -> tuple[FieldMatrix, ...]:
    return tuple(FieldMatrix(f, np.asarray(r, dtype=np.int64)) for r in rows)


def square_root_of_minus_one(f: InvolutiveField) -> int | None:
    """The least ``x`` with ``1 + x^2 = 0``, if any."""
    x = f.elements()
    hits = np.flatnonzero(f.add(1, f.mul(x, x)) == 0)
    return int(hits[0]) if hits.size else None


def sum_of_two_squares_of_minus_one(f: InvolutiveField) -> tuple[int, int]:
    """The least ``(x, y)`` with ``1 + x^2 + y^2 = 0``; one always exists."""
    x = f.elements()
    squares = f.mul(x, x)
    total = f.add(f.add(1, squares[:, None]), squares[None, :])
    i, j = np.argwhere(total == 0)[0]
    return int(i), int(j)


def k3_rank_one(
    f: InvolutiveField,
    unary: UnaryKind = "mp",
    settings: Settings = DEFAULT_SETTINGS,
) -> Realization:
    """The sets ``H_ij`` of rank one matrices of ``M_2(K)`` standing for ``K_3``.

    ``H_11`` holds the matrices with all entries equal to a non-zero ``x``; the
    other sets keep the positions of ``x`` shown in ``_K3_PATTERNS``. With
    ``unary="mp_and_conj"`` the target is ``K_3`` with its star taken twice.

    Raises:
        PartialOperationError: If the Moore-Penrose inverse is partial on ``M_2(K)``
    """
    family = build_matrix_family("full", 2, f, unary, settings=settings)
    k3 = named_semigroup("k3_double" if unary == "mp_and_conj" else "k3")

    matrices: list[Matrix] = [FieldMatrix.zero(f, 2)]
    images = [9]  # the zero of K_3
    for (i, j), pattern in _K3_PATTERNS.items():
        for x in range(1, f.order):
            matrices.append(FieldMatrix(f, np.asarray(pattern, dtype=np.int64) * x))
            images.append(3 * (i - 1) + (j - 1))

    return Realization(
        f"K3 in M2({f.name}) with {unary}",
        family,
        tuple(matrices),
        tuple(images),
        k3,
        "onto",
    )


_K3_PATTERNS = {
    (1, 1): [[1, 1], [1, 1]],
    (1, 2): [[1, 0], [1, 0]],
    (1, 3): [[0, 1], [0, 1]],
    (2, 1): [[1, 1], [0, 0]],
    (2, 2): [[1, 0], [0, 0]],
    (2, 3): [[0, 1], [0, 0]],
    (3, 1): [[0, 0], [1, 1]],
    (3, 2): [[0, 0], [1, 0]],
    (3, 3): [[0, 0], [0, 1]],
}


def ta_degree_two(
    f: InvolutiveField, x: int | None = None, settings: Settings = DEFAULT_SETTINGS
) -> Realization:
    """``TA`` inside ``M_2(K)`` with transposition, from ``1 + x^2 = 0``.

    Raises:
        FieldError: If ``-1`` is not a square in ``K``
    """
    if x is None:
        x = square_root_of_minus_one(f)
    if x is None or int(f.add(1, f.mul(x, x))) != 0:
        raise FieldError(f"1 + x^2 = 0 has no solution x in {f.name}.")

    xx = int(f.mul(x, x))
    rows = {
        (1, 1): [[1, x], [x, xx]],
        (1, 2): [[1, 0], [x, 0]],
        (2, 1): [[1, x], [0, 0]],
        (2, 2): [[1, 0], [0, 0]],
        1: [[1, 0], [0, 1]],
        0: [[0, 0], [0, 0]],
    }
    family = build_matrix_family("full", 2, f, "transpose", settings=settings)
    return Realization(
        f"TA in M2({f.name}) with x={x}",
        family,
        _field_matrices(f, list(rows.values())),
        tuple(PAIR_IDS[key] for key in rows),
        named_semigroup("ta"),
        "isomorphism",
    )


def ta_degree_three(
    f: InvolutiveField,
    xy: tuple[int, int] | None = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> Realization:
    """``TA`` inside ``M_3(K)`` with transposition, from ``1 + x^2 + y^2 = 0``."""
    x, y = sum_of_two_squares_of_minus_one(f) if xy is None else xy
    if int(f.add(f.add(1, f.mul(x, x)), f.mul(y, y))) != 0:
        raise FieldError(f"1 + {x}^2 + {y}^2 is not zero in {f.name}.")

    xx, yy, xy_ = (int(f.mul(a, b)) for a, b in ((x, x), (y, y), (x, y)))
    rows = {
        (1, 1): [[1, x, y], [x, xx, xy_], [y, xy_, yy]],
        (1, 2): [[1, 0, 0], [x, 0, 0], [y, 0, 0]],
        (2, 1): [[1, x, y], [0, 0, 0], [0, 0, 0]],
        (2, 2): [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
        1: np.eye(3, dtype=np.int64).tolist(),
        0: np.zeros((3, 3), dtype=np.int64).tolist(),
    }
    family = build_matrix_family("full", 3, f, "transpose", settings=settings)
    return Realization(
        f"TA in M3({f.name}) with x={x}, y={y}",
        family,
        _field_matrices(f, list(rows.values())),
        tuple(PAIR_IDS[key] for key in rows),
        named_semigroup("ta"),
        "isomorphism",
    )


def tb_symplectic(
    f: InvolutiveField, m: int = 1, settings: Settings = DEFAULT_SETTINGS
) -> Realization:
    """``TB`` as an image of ``±`` block matrices in ``M_2m(K)`` with the symplectic
    transpose."""
    n = 2 * m
    eye = np.eye(m, dtype=np.int64)
    blocks = {(1, 1): (0, 1), (1, 2): (0, 0), (2, 1): (1, 1), (2, 2): (1, 0)}

    matrices: list[Matrix] = []
    images: list[int] = []
    for key, (row, col) in blocks.items():
        base = np.zeros((n, n), dtype=np.int64)
        base[row * m : (row + 1) * m, col * m : (col + 1) * m] = eye
        for sign in sorted({1, f.p - 1}):
            matrices.append(FieldMatrix(f, f.mul(base, sign)))
            images.append(PAIR_IDS[key])

    matrices += [FieldMatrix.identity(f, n), FieldMatrix.zero(f, n)]
    images += [PAIR_IDS[1], PAIR_IDS[0]]

    family = build_matrix_family("full", n, f, "symplectic", settings=settings)
    return Realization(
        f"TB from M{n}({f.name}) with the symplectic transpose",
        family,
        tuple(matrices),
        tuple(images),
        named_semigroup("tb"),
        "onto",
    )


BOOLEAN_TB = {
    (1, 1): [[0, 1], [1, 1]],
    (1, 2): [[1, 0], [1, 1]],
    (2, 1): [[1, 1], [0, 1]],
    (2, 2): [[1, 1], [1, 0]],
    0: [[1, 1], [1, 1]],
    1: [[1, 0], [0, 1]],
}


def tb_boolean(
    family_name: FamilyName = "boolean", settings: Settings = DEFAULT_SETTINGS
) -> Realization:
    """``TB`` inside ``B_2`` (or the Hall matrices) with transposition; the all-ones
    matrix plays the zero."""
    family = build_matrix_family(family_name, 2, None, "transpose", settings=settings)
    return Realization(
        f"TB in {family_name} 2x2",
        family,
        tuple(BoolMatrix.from_rows(rows) for rows in BOOLEAN_TB.values()),
        tuple(PAIR_IDS[key] for key in BOOLEAN_TB),
        named_semigroup("tb"),
        "isomorphism",
    )


def triangular_generators(n: int) -> tuple[BoolMatrix, BoolMatrix]:
    """``X`` with ones at both diagonal corners; ``Y`` with ones along the first row
    except its end, and along the last column below it."""
    if n < 3:  # noqa: PLR2004
        raise StructureError(f"The generators need n >= 3, got {n}.")
    x = np.zeros((n, n), dtype=np.int64)
    x[0, 0] = x[n - 1, n - 1] = 1
    y = np.zeros((n, n), dtype=np.int64)
    y[0, : n - 1] = 1
    y[1:, n - 1] = 1
    return BoolMatrix.from_rows(x), BoolMatrix.from_rows(y)


def ta_triangular(n: int = 3, settings: Settings = DEFAULT_SETTINGS) -> Realization:
    """``TA`` as an image of the submonoid of ``BT_n`` generated by ``X`` and ``Y``
    under the anti-diagonal reflection.

    Matrices with a one in the top-right corner form an ideal and go to the zero;
    ``I, X, Y, XY, YX`` go to ``1, (2,2), (1,1), (2,1), (1,2)``.
    """
    x, y = triangular_generators(n)
    family = build_matrix_family(
        "bool_submonoid", n, None, "anti_diagonal", (x, y), settings
    )
    named = {
        BoolMatrix.identity(n): PAIR_IDS[1],
        x: PAIR_IDS[(2, 2)],
        y: PAIR_IDS[(1, 1)],
        x @ y: PAIR_IDS[(2, 1)],
        y @ x: PAIR_IDS[(1, 2)],
    }

    matrices: list[Matrix] = []
    images: list[int] = []
    for element in range(family.size):
        matrix = BoolMatrix(n, int(family.codes[element]))
        matrices.append(matrix)
        images.append(PAIR_IDS[0] if matrix[0, n - 1] else named[matrix])

    return Realization(
        f"TA from the BT{n} submonoid on X, Y",
        family,
        tuple(matrices),
        tuple(images),
        named_semigroup("ta"),
        "onto",
    )


def ideal_complement(realization: Realization) -> tuple[BoolMatrix, ...]:
    """Members of a ``ta_triangular`` realization outside the corner ideal."""
    return tuple(
        m
        for m, image in zip(realization.matrices, realization.images, strict=True)
        if isinstance(m, BoolMatrix) and image != PAIR_IDS[0]
    )
