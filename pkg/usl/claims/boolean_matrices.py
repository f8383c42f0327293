"""Boolean matrices: ``TB`` among Hall matrices and ``TA`` from triangular ones."""

import numpy as np

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..matrices.boolean import BoolMatrix, is_hall, product_codes, transpose_codes
from ..matrices.families import build_matrix_family
from ..matrices.realizations import (
    BOOLEAN_TB,
    ideal_complement,
    ta_triangular,
    tb_boolean,
    triangular_generators,
)
from ._checks import verify_realization


class BooleanTwistedBrandt(Claim):
    claim_id = "C16"
    title = "TB inside B_2 with transposition"
    statement = (
        "Six 2x2 Boolean matrices, with the all-ones matrix as zero, form a unary "
        "submonoid of B_2 with transposition isomorphic to TB."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        correspondence = verify_realization(tb_boolean(settings=settings), settings)
        if isinstance(correspondence, Outcome):
            return correspondence
        return Outcome.passed(correspondence=correspondence)


class HallClosure(Claim):
    claim_id = "C17"
    title = "Hall matrices are closed under product and transpose"
    statement = (
        "The Hall matrices of B_2 and B_3 are closed under the Boolean product and "
        "transposition, and the six matrices realizing TB are Hall matrices."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        sizes: dict[str, int] = {}
        for n in (2, 3):
            family = build_matrix_family("hall", n, None, "none", settings=settings)
            codes = family.codes

            products = product_codes(codes[:, None], codes[None, :], n)
            outside = np.argwhere(~np.isin(products, codes))
            if outside.size:
                i, j = outside[0]
                return Outcome.failed(
                    "a product of Hall matrices is not Hall",
                    left=str(BoolMatrix(n, int(codes[i]))),
                    right=str(BoolMatrix(n, int(codes[j]))),
                )

            flipped = ~np.isin(transpose_codes(codes, n), codes)
            if flipped.any():
                code = int(codes[np.flatnonzero(flipped)[0]])
                return Outcome.failed(
                    "a transposed Hall matrix is not Hall",
                    matrix=str(BoolMatrix(n, code)),
                )
            sizes[f"B{n}"] = family.size

        for rows in BOOLEAN_TB.values():
            matrix = BoolMatrix.from_rows(rows)
            if not is_hall(matrix):
                return Outcome.failed("a TB matrix is not Hall", matrix=str(matrix))

        return Outcome.passed(hall_sizes=sizes)


class TriangularTwistedA(Claim):
    claim_id = "C18"
    title = "TA as an image of the submonoid of BT_3 generated by X and Y"
    statement = (
        "In the upper triangular Boolean 3x3 matrices with the anti-diagonal "
        "reflection, the submonoid generated by X and Y has exactly I, X, Y, XY and "
        "YX outside the ideal of matrices with a one in the top-right corner, and "
        "maps onto TA."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        realization = ta_triangular(3, settings)
        x, y = triangular_generators(3)
        expected = {BoolMatrix.identity(3), x, y, x @ y, y @ x}

        complement = set(ideal_complement(realization))
        if complement != expected:
            return Outcome.failed(
                "unexpected matrices outside the ideal",
                found=sorted(str(m) for m in complement),
            )

        correspondence = verify_realization(realization, settings)
        if isinstance(correspondence, Outcome):
            return correspondence
        return Outcome.passed(
            submonoid_size=realization.size,
            complement=sorted(str(m) for m in complement),
        )
