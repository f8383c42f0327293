"""
Public API for the strategy factory.

Usage
-----
    from factory import make_structure_strategy

    # Every registered kind
    strategy = make_structure_strategy()

    # Only some kinds
    strategy = make_structure_strategy("rees", "group")

    # Use in a test
    @given(make_structure_strategy())
    def test_something(s):
        ...
"""

from hypothesis import strategies as st
from hypothesis.strategies import SearchStrategy, one_of

from usl.semigroup import FiniteUnarySemigroup

from . import builders


def make_structure_strategy(*kinds: str) -> SearchStrategy[FiniteUnarySemigroup]:
    """
    Build a Hypothesis strategy drawing structures of the given kinds.

    Args:
        kinds: Registered kinds, e.g. ``"rees"`` or ``"monogenic"``; none means all.

    Returns:
        A Hypothesis SearchStrategy over associative structures with an involution
    """
    selected = kinds or builders.registered_kinds()
    return one_of(*(builders.get_builder(kind).build() for kind in selected))


def make_assignment_strategy(
    s: FiniteUnarySemigroup, names: tuple[str, ...]
) -> SearchStrategy[dict[str, int]]:
    """
    Build a strategy of assignments of elements of ``s`` to variable names.
    """
    return st.fixed_dictionaries(
        {name: st.integers(0, s.size - 1) for name in names}
    )
