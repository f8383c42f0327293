"""Small named structures used throughout the claims.

Every builder is registered under a short name with ``register_named`` and is
retrieved with ``named_semigroup``:

    >>> sorted(named_structures())[:3]
    ['a2', 'b2', 'b21_transpose']
"""

from collections.abc import Callable
from functools import cache

import numpy as np

from ..core import adjoin_identity
from ..semigroup import FiniteUnarySemigroup
from .groups import trivial_group
from .rees import ReesSpec, rees_matrix

type Matrix2 = tuple[tuple[int, int], tuple[int, int]]

_REGISTRY: dict[str, Callable[[], FiniteUnarySemigroup]] = {}


def register_named(name: str):
    """Function decorator - registers a builder of a named structure.

    Args:
        name: The name to register the builder under. Each name must be unique.

    Returns:
        A decorator to register a builder
    """

    def decorator(
        builder: Callable[[], FiniteUnarySemigroup],
    ) -> Callable[[], FiniteUnarySemigroup]:
        if name in _REGISTRY:
            raise ValueError(f"A structure named {name!r} is already registered.")
        _REGISTRY[name] = cache(builder)
        return builder

    return decorator


def named_structures() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def named_semigroup(name: str) -> FiniteUnarySemigroup:
    """Returns a named structure.

    Raises:
        KeyError: If no structure has the name
    """
    try:
        builder = _REGISTRY[name]
    except KeyError:
        raise KeyError(
            f"Unknown structure {name!r}; expected one of {', '.join(_REGISTRY)}."
        ) from None
    return builder()


def _brandt(sandwich: list[list[int]]) -> FiniteUnarySemigroup:
    return rees_matrix(ReesSpec(trivial_group(), np.asarray(sandwich))).tabulate()


@register_named("k3")
def _k3() -> FiniteUnarySemigroup:
    return _brandt([[0, 0, 0], [0, 0, -1], [0, -1, 0]])


@register_named("k3_double")
def _k3_double() -> FiniteUnarySemigroup:
    k3 = _k3()
    return k3.with_stars([k3.star_table(1), k3.star_table(1)])


@register_named("a2")
def _a2() -> FiniteUnarySemigroup:
    return _brandt([[-1, 0], [0, 0]])


@register_named("b2")
def _b2() -> FiniteUnarySemigroup:
    return _brandt([[-1, 0], [0, -1]])


@register_named("tb")
def _tb() -> FiniteUnarySemigroup:
    return adjoin_identity(_b2())


@register_named("ta")
def _ta() -> FiniteUnarySemigroup:
    return adjoin_identity(_a2())


def matrix_label(matrix: Matrix2) -> str:
    return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in matrix) + "]"


def _mul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _transpose(a: Matrix2) -> Matrix2:
    return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))


ZERO: Matrix2 = ((0, 0), (0, 0))
IDENTITY: Matrix2 = ((1, 0), (0, 1))
E11: Matrix2 = ((1, 0), (0, 0))
E12: Matrix2 = ((0, 1), (0, 0))
E21: Matrix2 = ((0, 0), (1, 0))
E22: Matrix2 = ((0, 0), (0, 1))
LEFT_ONES: Matrix2 = ((1, 0), (1, 0))
RIGHT_ONES: Matrix2 = ((0, 1), (0, 1))


def _matrix_monoid(
    elements: list[Matrix2], star: Callable[[Matrix2], Matrix2]
) -> FiniteUnarySemigroup:
    return FiniteUnarySemigroup.from_operations(
        elements, _mul, [star], matrix_label, ZERO, IDENTITY
    )


@register_named("b21_transpose")
def _b21_transpose() -> FiniteUnarySemigroup:
    return _matrix_monoid([E11, E12, E21, E22, ZERO, IDENTITY], _transpose)


@register_named("tb_matrices")
def _tb_matrices() -> FiniteUnarySemigroup:
    swap = {E11: E22, E22: E11}
    return _matrix_monoid(
        [E12, E11, E22, E21, ZERO, IDENTITY], lambda a: swap.get(a, a)
    )


@register_named("ta_matrices")
def _ta_matrices() -> FiniteUnarySemigroup:
    swap = {E11: RIGHT_ONES, RIGHT_ONES: E11}
    return _matrix_monoid(
        [E12, E11, RIGHT_ONES, LEFT_ONES, ZERO, IDENTITY], lambda a: swap.get(a, a)
    )
