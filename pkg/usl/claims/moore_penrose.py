"""The Moore-Penrose inverse on ``M_2(GF(q))``: when it is total, the copy of
``K_3`` it carries, and the Hermitian part it generates."""

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..core import (
    ElementPartition,
    hermitian_part,
    quotient_by_partition,
    verify_morphism,
)
from ..matrices.families import PartialOperationError, build_matrix_family
from ..matrices.field import field_make, norm_form_solution
from ..matrices.matrix import FieldMatrix, mp_inverse, parse_matrix
from ..matrices.realizations import k3_rank_one
from ..terms import parse_identity
from ._checks import expect_identity, verify_realization


class K3InRankOneMatrices(Claim):
    claim_id = "C3"
    title = "K3 is a quotient of 19 matrices in M_2(GF(3))"
    statement = (
        "The zero matrix and the sets H_ij of rank one matrices form a unary "
        "subsemigroup of M_2(GF(3)) with the Moore-Penrose inverse; identifying "
        "each H_ij gives a 10-element quotient isomorphic to K_3."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        realization = k3_rank_one(field_make(3), "mp", settings)
        sub = realization.substructure(settings)
        mapping = realization.mapping(sub)

        result = quotient_by_partition(
            sub.semigroup, ElementPartition.from_assignment(mapping)
        )
        if result.quotient is None:
            return Outcome.failed(
                "the sets H_ij are not a congruence", violation=str(result.violation)
            )

        quotient, k3 = result.quotient, realization.target
        induced = [mapping[r] for r in result.partition.representatives()]
        violations = verify_morphism(quotient, k3, induced, "isomorphism", settings)
        if violations:
            return Outcome.failed(
                "the quotient is not K3", detail=violations[0].detail
            )

        bijection = {
            quotient.label(c): k3.label(image) for c, image in enumerate(induced)
        }
        return Outcome.passed(matrices=sub.size, bijection=bijection)


class MoorePenroseTotality(Claim):
    claim_id = "C5"
    title = "Moore-Penrose inverse total on M_2(GF(3)), partial on M_2(GF(5))"
    statement = (
        "Every matrix in M_2(GF(3)) has a Moore-Penrose inverse; over GF(5), where "
        "1 + 2^2 = 0, a matrix with identical rows (1, 2) has none."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        gf3, gf5 = field_make(3), field_make(5)
        family = build_matrix_family("full", 2, gf3, "mp", settings=settings)
        if family.size != 81:  # noqa: PLR2004
            return Outcome.failed("M_2(GF(3)) is not complete", size=family.size)

        try:
            build_matrix_family("full", 2, gf5, "mp", settings=settings)
        except PartialOperationError as error:
            partial = error.witness
        else:
            return Outcome.failed("M_2(GF(5)) accepted the Moore-Penrose inverse")

        solution = norm_form_solution(gf5)
        witness = parse_matrix("[[1,2],[1,2]]", gf5)
        if solution != (1, 2) or mp_inverse(witness) is not None:
            return Outcome.failed(
                "expected [[1,2],[1,2]] to lack an inverse over GF(5)",
                solution=str(solution),
            )

        return Outcome.passed(
            gf3_size=family.size,
            gf5_solution=list(solution),
            gf5_witness=str(witness),
            gf5_detail=partial,
        )


class HermitianPart(Claim):
    claim_id = "C9"
    title = "Hermitian part of M_2(GF(3)) with the Moore-Penrose inverse"
    statement = (
        "The unary subsemigroup generated by all A A-dagger in M_2(GF(3)) consists of "
        "matrices of rank at most one and the identity, and satisfies x^2 y x = "
        "x y x^2, which fails in GL_2(GF(3))."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        f = field_make(3)
        identity = parse_identity("x x y x = x y x x", 1)
        family = build_matrix_family("full", 2, f, "mp", settings=settings)
        part = hermitian_part(family.semigroup, settings)
        eye = FieldMatrix.identity(f, 2)

        for element in part.embedding:
            matrix = family.matrix(element)
            if matrix != eye and isinstance(matrix, FieldMatrix) and matrix.rank() > 1:
                return Outcome.failed(
                    "an invertible matrix other than I is Hermitian-generated",
                    matrix=str(matrix),
                )

        result = expect_identity(part.semigroup, identity, "holds", "H(M2)", settings)
        if isinstance(result, Outcome):
            return result

        gl = build_matrix_family("gl", 2, f, "none", settings=settings)
        plain = parse_identity("x x y x = x y x x", 0)
        failure = expect_identity(gl.semigroup, plain, "fails", "GL2", settings)
        if isinstance(failure, Outcome):
            return failure

        return Outcome.passed(
            hermitian_size=part.size, gl_counterexample=failure.describe(gl.semigroup)
        )


class BothOperations(Claim):
    claim_id = "C10"
    title = "The two unary operations of M_2 and K3 taken twice"
    statement = (
        "The matrices A of M_2(GF(3)) with A-dagger = A* include the non-commuting "
        "pair [[0,1],[1,0]], [[0,2],[1,0]]; the sets H_ij with both operations map "
        "onto K_3 endowed twice with its unary operation."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        f = field_make(3)
        family = build_matrix_family(
            "star_orthogonal", 2, f, "star", settings=settings
        )
        pair = [parse_matrix("[[0,1],[1,0]]", f), parse_matrix("[[0,2],[1,0]]", f)]

        try:
            a, b = family.ids_of(pair)
        except KeyError as error:
            return Outcome.failed("a matrix is not unitary", matrix=str(error))

        s = family.semigroup
        if s.product(a, b) == s.product(b, a):
            return Outcome.failed("the pair commutes", pair=[str(m) for m in pair])

        for element in (a, b):
            matrix = family.matrix(element)
            if not isinstance(matrix, FieldMatrix):
                continue
            if mp_inverse(matrix) != matrix.star():
                return Outcome.failed("A-dagger differs from A*", matrix=str(matrix))

        correspondence = verify_realization(
            k3_rank_one(f, "mp_and_conj", settings), settings
        )
        if isinstance(correspondence, Outcome):
            return correspondence

        return Outcome.passed(
            unitary_size=family.size,
            products=[s.label(s.product(a, b)), s.label(s.product(b, a))],
            k3_double=correspondence,
        )

