"""Matrices over finite involutive fields and over the Boolean semiring."""

from .boolean import (
    BooleanError,
    BoolMatrix,
    is_hall,
    parse_bool_matrix,
    perfect_matching,
)
from .families import (
    BOOLEAN_FAMILIES,
    FIELD_FAMILIES,
    UNARY_KINDS,
    CancellationReport,
    FamilyName,
    MatrixFamily,
    PartialOperationError,
    UnaryKind,
    build_matrix_family,
    build_matrix_semigroup,
    check_cancellation,
)
from .field import (
    FieldError,
    InvolutiveField,
    field_make,
    norm_form_solution,
    parse_field,
)
from .matrix import (
    FieldMatrix,
    FormulaInapplicableError,
    anti_diagonal,
    mat_inverse,
    mat_mul,
    mat_rank,
    mp_inverse,
    mp_rank1,
    parse_matrix,
    penrose_holds,
    sigma_transpose,
    symplectic,
    symplectic_embedding,
    unary_transform,
)
from .realizations import (
    Realization,
    k3_rank_one,
    ta_degree_three,
    ta_degree_two,
    ta_triangular,
    tb_boolean,
    tb_symplectic,
)
from .sl2z import ETA, ZETA, FreeProbe, sl2z_free_probe

__all__ = [
    "BOOLEAN_FAMILIES",
    "ETA",
    "FIELD_FAMILIES",
    "UNARY_KINDS",
    "ZETA",
    "BoolMatrix",
    "BooleanError",
    "CancellationReport",
    "FamilyName",
    "FieldError",
    "FieldMatrix",
    "FormulaInapplicableError",
    "FreeProbe",
    "InvolutiveField",
    "MatrixFamily",
    "PartialOperationError",
    "Realization",
    "UnaryKind",
    "anti_diagonal",
    "build_matrix_family",
    "build_matrix_semigroup",
    "check_cancellation",
    "field_make",
    "is_hall",
    "k3_rank_one",
    "mat_inverse",
    "mat_mul",
    "mat_rank",
    "mp_inverse",
    "mp_rank1",
    "norm_form_solution",
    "parse_bool_matrix",
    "parse_field",
    "parse_matrix",
    "penrose_holds",
    "perfect_matching",
    "sigma_transpose",
    "sl2z_free_probe",
    "symplectic",
    "symplectic_embedding",
    "ta_degree_three",
    "ta_degree_two",
    "ta_triangular",
    "tb_boolean",
    "tb_symplectic",
    "unary_transform",
]
