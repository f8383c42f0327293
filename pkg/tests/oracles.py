"""
Slow reference implementations used as test oracles.

Nothing here is vectorized or memoized: terms are evaluated by plain recursion on
the Cayley tables and identities by looping over every assignment.
"""

import itertools
from collections.abc import Mapping

import numpy as np

from usl.matrices.field import InvolutiveField
from usl.matrices.matrix import FieldMatrix, penrose_holds
from usl.semigroup import FiniteUnarySemigroup
from usl.terms import Concat, Star, UnaryTerm, Variable


def naive_evaluate(
    term: UnaryTerm, s: FiniteUnarySemigroup, assignment: Mapping[str, int]
) -> int:
    match term:
        case Variable(name):
            return assignment[name]
        case Concat(left, right):
            return s.product(
                naive_evaluate(left, s, assignment),
                naive_evaluate(right, s, assignment),
            )
        case Star(child, index):
            return s.star_of(naive_evaluate(child, s, assignment), index)


def naive_variables(term: UnaryTerm) -> list[str]:
    match term:
        case Variable(name):
            return [name]
        case Concat(left, right):
            return list(dict.fromkeys(naive_variables(left) + naive_variables(right)))
        case Star(child, _):
            return naive_variables(child)


def naive_first_failure(
    s: FiniteUnarySemigroup, lhs: UnaryTerm, rhs: UnaryTerm
) -> tuple[int, ...] | None:
    """The lexicographically least assignment separating the two sides."""
    names = list(dict.fromkeys(naive_variables(lhs) + naive_variables(rhs)))
    for values in itertools.product(range(s.size), repeat=len(names)):
        assignment = dict(zip(names, values, strict=True))
        if naive_evaluate(lhs, s, assignment) != naive_evaluate(rhs, s, assignment):
            return values
    return None


def all_matrices(f: InvolutiveField, n: int) -> list[FieldMatrix]:
    entries = itertools.product(range(f.order), repeat=n * n)
    return [FieldMatrix(f, np.asarray(e).reshape(n, n)) for e in entries]


def penrose_solutions(a: FieldMatrix) -> list[FieldMatrix]:
    """Every matrix satisfying the four Penrose equations for ``a``."""
    return [x for x in all_matrices(a.field, a.n) if penrose_holds(a, x)]
