"""Groups, Rees matrix semigroups, named small structures and critical semigroups."""

from .critical import (
    CriticalSpec,
    RestrictedRees,
    critical_identity,
    critical_sandwich,
    critical_substitution,
    critical_Tk,
    normalize_sandwich,
    restrict_Tk,
    sapir_witness_words,
    staircase_tuples,
)
from .groups import (
    GroupTable,
    cyclic_group,
    group_from_generators,
    symmetric_group,
    trivial_group,
)
from .named import named_semigroup, named_structures, register_named
from .rees import (
    ZERO_ENTRY,
    ReesSemigroup,
    ReesSpec,
    group_times_rees_map,
    rees_isomorphism_map,
    rees_matrix,
    rees_spec_read,
    rees_spec_write,
    trivialize,
)

__all__ = [
    "ZERO_ENTRY",
    "CriticalSpec",
    "GroupTable",
    "ReesSemigroup",
    "ReesSpec",
    "RestrictedRees",
    "critical_Tk",
    "critical_identity",
    "critical_sandwich",
    "critical_substitution",
    "cyclic_group",
    "group_from_generators",
    "group_times_rees_map",
    "named_semigroup",
    "named_structures",
    "normalize_sandwich",
    "register_named",
    "rees_isomorphism_map",
    "rees_matrix",
    "rees_spec_read",
    "rees_spec_write",
    "restrict_Tk",
    "sapir_witness_words",
    "staircase_tuples",
    "symmetric_group",
    "trivial_group",
    "trivialize",
]
