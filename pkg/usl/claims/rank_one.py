"""Rank one matrices: the identity ``A^2 B A = A B A^2`` and the rank one formula
for the Moore-Penrose inverse."""

import numpy as np

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..matrices.families import build_matrix_family
from ..matrices.field import field_make
from ..matrices.matrix import (
    FieldMatrix,
    FormulaInapplicableError,
    mp_inverse,
    mp_rank1,
    penrose_holds,
)
from ..terms import parse_identity
from ._checks import expect_identity


class RankOneIdentity(Claim):
    claim_id = "C1"
    title = "A^2 B A = A B A^2 for rank one A"
    statement = (
        "For every matrix A of rank at most one and every matrix B in M_2(GF(2)) and "
        "M_2(GF(3)), A^2 B A = A B A^2."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        pairs = 0
        for q in (2, 3):
            f = field_make(q)
            full = build_matrix_family("full", 2, f, "none", settings=settings)
            rank_one = build_matrix_family("rank_one", 2, f, "none", settings=settings)
            s = full.semigroup

            # Full family codes are the element ids.
            a = rank_one.codes[:, None]
            b = full.codes[None, :]
            aa = s.multiply(a, a)
            lhs = s.multiply(s.multiply(aa, b), a)
            rhs = s.multiply(s.multiply(a, b), aa)

            bad = np.argwhere(lhs != rhs)
            if bad.size:
                i, j = bad[0]
                return Outcome.failed(
                    f"A^2 B A differs from A B A^2 over {f.name}",
                    A=s.label(int(rank_one.codes[i])),
                    B=s.label(int(j)),
                )
            pairs += int(lhs.size)

        return Outcome.passed(pairs=pairs)


class RankOneCorollary(Claim):
    claim_id = "C2"
    title = "L^1_2(GF(q)) satisfies x x y x = x y x x"
    statement = (
        "The semigroup of 2x2 matrices of rank at most one together with the "
        "identity matrix satisfies x^2 y x = x y x^2 over GF(2), GF(3) and GF(5)."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        identity = parse_identity("x x y x = x y x x", 0)
        sizes: dict[str, int] = {}
        for q in (2, 3, 5):
            f = field_make(q)
            family = build_matrix_family("rank_one", 2, f, "none", settings=settings)
            result = expect_identity(
                family.semigroup, identity, "holds", f"L1_2({f.name})", settings
            )
            if isinstance(result, Outcome):
                return result
            sizes[f.name] = family.size
        return Outcome.passed(sizes=sizes)


class RankOneMoorePenrose(Claim):
    claim_id = "C4"
    title = "Rank one Moore-Penrose formula"
    statement = (
        "For every rank one A = b c in M_2(GF(3)), (b* b)^-1 (c c*)^-1 c* b* is the "
        "Moore-Penrose inverse of A and is a scalar multiple of A*."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        f = field_make(3)
        family = build_matrix_family("rank_one", 2, f, "none", settings=settings)
        scalars = f.elements()[1:]
        checked = 0
        # scalar c -> number of matrices with A^+ = c A*
        multiples: dict[str, int] = {}

        for element in range(family.size):
            a = family.matrix(element)
            if not isinstance(a, FieldMatrix) or a.rank() != 1:
                continue
            try:
                formula = mp_rank1(a)
            except FormulaInapplicableError as error:
                return Outcome.failed(str(error), A=str(a))

            if not penrose_holds(a, formula) or formula != mp_inverse(a):
                return Outcome.failed(
                    "the rank one formula is not the Moore-Penrose inverse",
                    A=str(a),
                    formula=str(formula),
                )

            adjoint = a.star().entries
            scalar = next(
                (
                    int(c)
                    for c in scalars
                    if np.array_equal(f.mul(c, adjoint), formula.entries)
                ),
                None,
            )
            if scalar is None:
                return Outcome.failed(
                    "the inverse is not a multiple of A*",
                    A=str(a),
                    formula=str(formula),
                )
            multiples[str(scalar)] = multiples.get(str(scalar), 0) + 1
            checked += 1

        return Outcome.passed(rank_one_matrices=checked, scalars=multiples)
