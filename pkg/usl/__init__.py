from . import claims, constructions, matrices
from .claim import Claim, ClaimReport, Outcome
from .config import DEFAULT_SETTINGS, Settings
from .constructions import GroupTable, ReesSpec, named_semigroup, rees_matrix
from .core import (
    adjoin_identity,
    classify_unary,
    direct_product,
    find_morphism,
    generated_closure,
    green_r_height,
    hermitian_part,
    idempotents,
    index_period,
    power_part,
    quotient_by_partition,
    validate_structure,
    verify_index_period,
    verify_morphism,
)
from .matrices import (
    FieldError,
    FormulaInapplicableError,
    PartialOperationError,
    build_matrix_family,
    field_make,
)
from .sapir import SapirSystem, model_check_identity, twisted_model
from .semigroup import (
    ConstructionError,
    EncodedSemigroup,
    FiniteUnarySemigroup,
    StructureError,
    UnarySemigroup,
)
from .terms import (
    TermSyntaxError,
    UnboundVariableError,
    check_identity,
    check_implication,
    evaluate,
    isoterm_search,
    parse_identity,
    parse_term,
    zimin,
)
from .usg import UsgFormatError, usg_dumps, usg_loads, usg_read, usg_write
from .verify import UnknownClaimError, get_all_claims, run_all, run_claim

__all__ = [
    "DEFAULT_SETTINGS",
    "Claim",
    "ClaimReport",
    "ConstructionError",
    "EncodedSemigroup",
    "FieldError",
    "FiniteUnarySemigroup",
    "FormulaInapplicableError",
    "GroupTable",
    "Outcome",
    "PartialOperationError",
    "ReesSpec",
    "SapirSystem",
    "Settings",
    "StructureError",
    "TermSyntaxError",
    "UnarySemigroup",
    "UnboundVariableError",
    "UnknownClaimError",
    "UsgFormatError",
    "adjoin_identity",
    "build_matrix_family",
    "check_identity",
    "check_implication",
    "claims",
    "classify_unary",
    "constructions",
    "direct_product",
    "evaluate",
    "field_make",
    "find_morphism",
    "generated_closure",
    "get_all_claims",
    "green_r_height",
    "hermitian_part",
    "idempotents",
    "index_period",
    "isoterm_search",
    "matrices",
    "model_check_identity",
    "named_semigroup",
    "parse_identity",
    "parse_term",
    "power_part",
    "quotient_by_partition",
    "rees_matrix",
    "run_all",
    "run_claim",
    "twisted_model",
    "usg_dumps",
    "usg_loads",
    "usg_read",
    "usg_write",
    "validate_structure",
    "verify_index_period",
    "verify_morphism",
    "zimin",
]
