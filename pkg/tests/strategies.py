from hypothesis import strategies as st

from usl.terms import Concat, InvolutoryWord, Letter, Star, UnaryTerm, Variable

NAMES = ("x", "y", "z")


def terms(
    names: tuple[str, ...] = NAMES, arity: int = 1, max_leaves: int = 8
) -> st.SearchStrategy[UnaryTerm]:
    """Generate unary terms over the given variables.

    Args:
        names: Variable names to draw from.
        arity: Number of unary operations the terms may use (0, 1 or 2).
        max_leaves: Rough bound on the size of the generated trees.

    Returns:
        A strategy of terms built from Variable, Concat and Star nodes.
    """
    leaves = st.sampled_from(names).map(Variable)

    def extend(children: st.SearchStrategy[UnaryTerm]) -> st.SearchStrategy[UnaryTerm]:
        concat = st.builds(Concat, children, children)
        if arity == 0:
            return concat
        return concat | st.builds(Star, children, st.integers(1, arity))

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def identities(
    names: tuple[str, ...] = NAMES, arity: int = 1
) -> st.SearchStrategy[tuple[UnaryTerm, UnaryTerm]]:
    return st.tuples(terms(names, arity, 6), terms(names, arity, 6))


def words(
    names: tuple[str, ...] = NAMES, max_size: int = 8
) -> st.SearchStrategy[InvolutoryWord]:
    """Generate non-empty involutory words over letters and their stars."""
    letters = st.builds(Letter, st.sampled_from(names), st.booleans())
    return st.lists(letters, min_size=1, max_size=max_size).map(
        lambda xs: InvolutoryWord(tuple(xs))
    )
