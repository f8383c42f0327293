from ..claims import (
    boolean_matrices,
    critical,
    free_group,
    moore_penrose,
    rank_one,
    transpose,
    twisted,
    words,
)

__all__ = [
    "boolean_matrices",
    "critical",
    "free_group",
    "moore_penrose",
    "rank_one",
    "transpose",
    "twisted",
    "words",
]
