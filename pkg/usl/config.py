"""Runtime settings shared by scans, searches and builders.

Every long-running operation in ``usl`` takes a ``settings`` argument defaulting to
``DEFAULT_SETTINGS``. The command line derives its own instance from ``--threads``
and ``--budget``; nothing is read from the environment.
"""

import os
from dataclasses import dataclass, field, fields, replace


def _logical_cores() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True, slots=True)
class Settings:
    """Budgets, caps and parallelism for exhaustive work.

    Attributes:
        threads: Worker threads for partitioned scans and for running claims
        assignment_budget: Maximum number of assignments an identity scan may visit
            before it reports ``inconclusive``
        morphism_node_budget: Maximum number of search nodes for ``find_morphism``
        isoterm_budget: Maximum number of candidate words for ``isoterm_search``
        tabulate_limit: Largest structure whose Cayley table is materialized;
            larger structures multiply on the fly
        element_cap: Largest structure that may be built at all
        chunk_size: Number of assignments evaluated per vectorized block
        violation_cap: Maximum number of violations reported by a validation scan
    """

    threads: int = field(default_factory=_logical_cores)
    assignment_budget: int = 200_000_000
    morphism_node_budget: int = 100_000_000
    isoterm_budget: int = 5_000_000
    tabulate_limit: int = 5_000
    element_cap: int = 10_000_000
    chunk_size: int = 1 << 21
    violation_cap: int = 20

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if value < 1:
                raise ValueError(f"Setting {item.name} must be positive, got {value}.")

    def replace(self, **changes: int) -> "Settings":
        """Returns a copy with the given settings changed.

        Examples:
            >>> Settings(threads=4).replace(threads=1).threads
            1
            >>> Settings(threads=0)
            Traceback (most recent call last):
                ...
            ValueError: Setting threads must be positive, got 0.
        """
        return replace(self, **changes)


DEFAULT_SETTINGS = Settings()
