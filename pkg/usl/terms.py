"""Unary semigroup terms, identities and involutory words.

Terms are trees of variables, concatenations and star applications. They are
written with juxtaposition for multiplication, ``'`` for the first unary
operation and ``"`` for the second:

    >>> format_term(parse_term("x (y z)' x"))
    "x (y z)' x"

Identities are checked exhaustively: every assignment of elements to variables is
evaluated, in vectorized blocks, and the lexicographically least failing assignment
is reported. Subterms shared between the two sides, or repeated within one side, are
evaluated once per block.
"""

import logging
import re
import threading
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Literal, overload

import numpy as np
from numpy.typing import NDArray

from .config import DEFAULT_SETTINGS, Settings
from .semigroup import ID_DTYPE, IdArray, StructureError, UnarySemigroup, as_ids

_logger = logging.getLogger(__name__)


class TermSyntaxError(ValueError):
    """Raised for malformed terms, with the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}.")
        self.position = position


class UnboundVariableError(KeyError):
    """Raised when an assignment or substitution misses a variable."""


@dataclass(frozen=True, slots=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Concat:
    left: "UnaryTerm"
    right: "UnaryTerm"

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True, slots=True)
class Star:
    child: "UnaryTerm"
    index: int = 1

    def __post_init__(self) -> None:
        if self.index not in (1, 2):
            raise ValueError(f"Star index must be 1 or 2, got {self.index}.")

    def __str__(self) -> str:
        return format_term(self)


type UnaryTerm = Variable | Concat | Star
type Identity = tuple[UnaryTerm, UnaryTerm]


# Parsing and printing

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<number>\d+)|(?P<symbol>[()'\"^=]))"
)


def _tokenize(text: str) -> Iterator[tuple[str, str, int]]:
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            return
        match = _TOKEN.match(text, position)
        if match is None:
            offset = len(text) - len(text[position:].lstrip())
            raise TermSyntaxError(f"Unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup or "symbol"
        yield kind, match.group(kind), match.start(kind)
        position = match.end()


class _Parser:
    def __init__(self, text: str, arity: int) -> None:
        self.tokens = [*_tokenize(text), ("end", "", len(text))]
        self.position = 0
        self.arity = arity

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.position]

    def take(self) -> tuple[str, str, int]:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def expect(self, value: str) -> None:
        kind, text, at = self.take()
        if text != value or kind == "end":
            raise TermSyntaxError(f"Expected {value!r}", at)

    def term(self) -> UnaryTerm:
        factors: list[UnaryTerm] = []
        while True:
            kind, text, at = self.peek()
            if kind == "name" or text == "(":
                factors.append(self.factor())
            elif not factors:
                raise TermSyntaxError("Expected a variable or '('", at)
            else:
                return product(factors)

    def factor(self) -> UnaryTerm:
        kind, text, at = self.take()
        result: UnaryTerm
        if kind == "name":
            result = Variable(text)
        elif text == "(":
            result = self.term()
            self.expect(")")
        else:
            raise TermSyntaxError("Expected a variable or '('", at)

        while True:
            _, text, at = self.peek()
            if text == "'":
                self.take()
                result = Star(result, 1)
            elif text == '"':
                if self.arity < 2:  # noqa: PLR2004
                    raise TermSyntaxError(
                        "The second unary operation is not available", at
                    )
                self.take()
                result = Star(result, 2)
            elif text == "^":
                self.take()
                kind, exponent, at = self.take()
                if kind != "number" or int(exponent) < 1:
                    raise TermSyntaxError("Expected a positive exponent", at)
                result = power(result, int(exponent))
            else:
                return result

    def finish(self) -> None:
        kind, text, at = self.peek()
        if kind != "end":
            raise TermSyntaxError(f"Unexpected {text!r}", at)


def parse_term(text: str, arity: int = 2) -> UnaryTerm:
    """Parses a term.

    Juxtaposition multiplies and associates to the right, ``'`` and ``"`` apply the
    first and second unary operation, and ``t^n`` abbreviates ``t t ... t``.

    Args:
        text: The term
        arity: Number of unary operations available

    Returns:
        The parsed term

    Raises:
        TermSyntaxError: If the text is not a term

    Examples:
        >>> parse_term("x x' x")
        Concat(left=Variable(name='x'), right=Concat(left=Star(child=Variable(name='x'), index=1), right=Variable(name='x')))
        >>> parse_term('x (x x")', arity=1)
        Traceback (most recent call last):
            ...
        usl.terms.TermSyntaxError: The second unary operation is not available at position 6.
    """  # noqa: E501
    parser = _Parser(text, arity)
    term = parser.term()
    parser.finish()
    return term


def parse_identity(text: str, arity: int = 2) -> Identity:
    """Parses an identity written ``u = v``.

    Examples:
        >>> lhs, rhs = parse_identity("x y = y x")
        >>> format_term(lhs), format_term(rhs)
        ('x y', 'y x')
    """
    parser = _Parser(text, arity)
    lhs = parser.term()
    parser.expect("=")
    rhs = parser.term()
    parser.finish()
    return lhs, rhs


def _format_operand(term: UnaryTerm) -> str:
    if isinstance(term, Concat):
        return f"({format_term(term)})"
    return format_term(term)


def format_term(term: UnaryTerm) -> str:
    """Prints a term in canonical form, the inverse of ``parse_term``."""
    parts: list[str] = []
    node = term
    while isinstance(node, Concat):
        parts.append(_format_operand(node.left))
        node = node.right

    match node:
        case Variable(name):
            parts.append(name)
        case Star(child, index):
            parts.append(_format_operand(child) + ("'" if index == 1 else '"'))

    return " ".join(parts)


def format_identity(identity: Identity) -> str:
    return f"{format_term(identity[0])} = {format_term(identity[1])}"


# Building terms


def product(factors: Sequence[UnaryTerm]) -> UnaryTerm:
    """Multiplies factors left to right, associating to the right."""
    if not factors:
        raise ValueError("A product needs at least one factor.")
    result = factors[-1]
    for factor in reversed(factors[:-1]):
        result = Concat(factor, result)
    return result


def power(term: UnaryTerm, exponent: int) -> UnaryTerm:
    """Returns ``term^exponent``, sharing subterms by repeated squaring.

    Examples:
        >>> format_term(power(Variable("x"), 3))
        'x x x'
    """
    if exponent < 1:
        raise ValueError(f"Exponent must be positive, got {exponent}.")

    if exponent == 1:
        return term
    half = power(term, exponent // 2)
    square = Concat(half, half)
    return Concat(term, square) if exponent % 2 else square


def omega(term: UnaryTerm, exponent: int, index: int = 1) -> UnaryTerm:
    """Returns ``t* (t t*)^(exponent - 1)``, a pseudo-inverse of ``t``.

    With ``exponent`` a multiple of the period of ``t t*``, ``t omega(t) t = t``
    holds wherever ``t`` is regular.
    """
    starred = Star(term, index)
    if exponent == 1:
        return starred
    return Concat(starred, power(Concat(term, starred), exponent - 1))


def variables(*terms: UnaryTerm) -> tuple[str, ...]:
    """Returns the variable names of the terms in order of first occurrence."""
    return _compile(terms).variables


def term_length(term: UnaryTerm) -> int:
    """Returns the number of leaves of a term."""
    count = 0
    stack = [term]
    while stack:
        node = stack.pop()
        match node:
            case Variable():
                count += 1
            case Star(child):
                stack.append(child)
            case Concat(left, right):
                stack.extend((right, left))
    return count


# Evaluation


@dataclass(frozen=True, slots=True)
class _Step:
    operation: Literal["var", "star", "mul"]
    name: str = ""
    left: int = -1
    right: int = -1
    index: int = 1


@dataclass(frozen=True, slots=True)
class TermProgram:
    """Terms flattened into a shared sequence of steps.

    Structurally equal subterms share one step, and each intermediate value is
    dropped after its last use.
    """

    steps: tuple[_Step, ...]
    outputs: tuple[int, ...]
    variables: tuple[str, ...]
    release: tuple[tuple[int, ...], ...] = field(default=())

    def run[T](
        self,
        leaf: Callable[[str], T],
        concat: Callable[[T, T], T],
        star: Callable[[T, int], T],
    ) -> list[T]:
        values: dict[int, T] = {}
        for position, step in enumerate(self.steps):
            match step.operation:
                case "var":
                    values[position] = leaf(step.name)
                case "star":
                    values[position] = star(values[step.left], step.index)
                case "mul":
                    values[position] = concat(values[step.left], values[step.right])
            for slot in self.release[position]:
                del values[slot]
        return [values[slot] for slot in self.outputs]

    def evaluate(
        self, s: UnarySemigroup, assignment: Mapping[str, IdArray]
    ) -> list[IdArray]:
        def leaf(name: str) -> IdArray:
            try:
                return assignment[name]
            except KeyError:
                raise UnboundVariableError(name) from None

        return self.run(leaf, s.multiply, s.star)


def _compile(terms: Iterable[UnaryTerm]) -> TermProgram:  # noqa: C901
    keys: dict[tuple[str, str, int, int, int], int] = {}
    slot_of: dict[int, int] = {}
    steps: list[_Step] = []
    names: dict[str, None] = {}
    outputs: list[int] = []

    def emit(step: _Step) -> int:
        key = (step.operation, step.name, step.left, step.right, step.index)
        slot = keys.get(key)
        if slot is None:
            slot = keys[key] = len(steps)
            steps.append(step)
        return slot

    for term in terms:
        stack: list[UnaryTerm] = [term]
        while stack:
            node = stack[-1]
            if id(node) in slot_of:
                stack.pop()
                continue
            match node:
                case Variable(name):
                    names.setdefault(name)
                    slot_of[id(node)] = emit(_Step("var", name=name))
                    stack.pop()
                case Star(child, index):
                    if id(child) in slot_of:
                        slot_of[id(node)] = emit(
                            _Step("star", left=slot_of[id(child)], index=index)
                        )
                        stack.pop()
                    else:
                        stack.append(child)
                case Concat(left, right):
                    pending = [c for c in (right, left) if id(c) not in slot_of]
                    if pending:
                        stack.extend(pending)
                    else:
                        slot_of[id(node)] = emit(
                            _Step(
                                "mul",
                                left=slot_of[id(left)],
                                right=slot_of[id(right)],
                            )
                        )
                        stack.pop()
        outputs.append(slot_of[id(term)])

    return TermProgram(
        tuple(steps), tuple(outputs), tuple(names), _release_schedule(steps, outputs)
    )


def _release_schedule(
    steps: list[_Step], outputs: list[int]
) -> tuple[tuple[int, ...], ...]:
    """Slots that can be dropped after each step; outputs are kept to the end."""
    last_use = {slot: slot for slot in range(len(steps))}
    for position, step in enumerate(steps):
        for slot in (step.left, step.right):
            if slot >= 0:
                last_use[slot] = position
    for slot in outputs:
        last_use[slot] = len(steps)

    release: list[list[int]] = [[] for _ in steps]
    for slot, position in last_use.items():
        if position < len(steps):
            release[position].append(slot)
    return tuple(tuple(slots) for slots in release)


def compile_terms(*terms: UnaryTerm) -> TermProgram:
    """Flattens terms once for repeated ``TermProgram.run`` calls.

    Examples:
        >>> program = compile_terms(parse_term("x x'"), parse_term("x"))
        >>> program.variables, program.run(len, lambda a, b: a + b, lambda a, _: a)
        (('x',), [2, 1])
    """
    return _compile(terms)


def fold_term[T](
    term: UnaryTerm,
    leaf: Callable[[str], T],
    concat: Callable[[T, T], T],
    star: Callable[[T, int], T],
) -> T:
    """Evaluates a term in any algebra given by three callables.

    Repeated subterms are evaluated once.

    Examples:
        >>> fold_term(parse_term("x y' x"), len, lambda a, b: a + b, lambda a, _: a)
        3
    """
    return _compile((term,)).run(leaf, concat, star)[0]


def evaluate(
    term: UnaryTerm, s: UnarySemigroup, assignment: Mapping[str, int]
) -> int:
    """Evaluates a term under an assignment of element ids.

    Raises:
        UnboundVariableError: If a variable is unassigned
        StructureError: If the term uses a unary operation ``s`` lacks

    Examples:
        >>> from usl.constructions.named import named_semigroup
        >>> k3 = named_semigroup("k3")
        >>> k3.label(evaluate(parse_term("x x'"), k3, {"x": k3.id_of_label("(1,2)")}))
        '(1,1)'
    """
    values = {name: as_ids(value) for name, value in assignment.items()}
    return int(_compile((term,)).evaluate(s, values)[0])


# Exhaustive identity checking


type Verdict = Literal["holds", "fails", "inconclusive"]


@dataclass(frozen=True, slots=True)
class IdentityResult:
    """Outcome of an exhaustive identity or implication check.

    Attributes:
        verdict: ``"holds"``, ``"fails"`` or ``"inconclusive"``
        variables: Variable names in order of first occurrence
        witness: Element ids of the least failing assignment, aligned with
            ``variables``
        values: Values of the compared terms under the witness
        checked: Assignments covered, in lexicographic order
        total: Size of the assignment space
    """

    verdict: Verdict
    variables: tuple[str, ...]
    witness: tuple[int, ...] | None
    values: tuple[int, ...]
    checked: int
    total: int

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def assignment(self) -> dict[str, int]:
        """The witness as a mapping from variable names to element ids."""
        if self.witness is None:
            return {}
        return dict(zip(self.variables, self.witness, strict=True))

    def describe(self, s: UnarySemigroup) -> str:
        """Renders the witness with element labels."""
        if self.witness is None:
            return self.verdict
        bound = ", ".join(
            f"{name}={s.label(value)}" for name, value in self.assignment().items()
        )
        shown = " vs ".join(s.label(value) for value in self.values)
        return f"{bound}: {shown}"


def _digits(value: int, base: int, length: int) -> list[int]:
    out = [0] * length
    for position in range(length - 1, -1, -1):
        value, out[position] = divmod(value, base)
    return out


def _scan(  # noqa: C901
    s: UnarySemigroup,
    program: TermProgram,
    failing: Callable[[list[IdArray]], NDArray[np.bool_]],
    settings: Settings,
) -> IdentityResult:
    names = program.variables
    size, count = s.size, len(names)
    total = size**count

    if total > settings.assignment_budget:
        _logger.info(
            "Assignment space %d exceeds assignment_budget=%d",
            total,
            settings.assignment_budget,
        )
        return IdentityResult("inconclusive", names, None, (), 0, total)

    trailing = 0
    while trailing < count and size ** (trailing + 1) <= settings.chunk_size:
        trailing += 1
    leading = count - trailing
    block_length = size**trailing
    blocks = size**leading

    grid = (
        np.indices((size,) * trailing, dtype=ID_DTYPE).reshape(trailing, block_length)
        if trailing
        else np.zeros((0, 1), dtype=ID_DTYPE)
    )

    lock = threading.Lock()
    best = blocks

    def scan_block(block: int) -> int | None:
        nonlocal best
        if block > best:
            return None

        assignment = {
            name: np.asarray(digit, dtype=ID_DTYPE)
            for name, digit in zip(
                names[:leading], _digits(block, size, leading), strict=True
            )
        }
        assignment.update(zip(names[leading:], grid, strict=True))

        bad = np.broadcast_to(
            failing(program.evaluate(s, assignment)), (block_length,)
        )
        hits = np.flatnonzero(bad)
        if hits.size == 0:
            return None

        with lock:
            best = min(best, block)
        return int(hits[0])

    _logger.debug(
        "Scanning %d assignments in %d blocks of %d", total, blocks, block_length
    )

    found: tuple[int, int] | None = None
    if settings.threads == 1 or blocks == 1:
        for block in range(blocks):
            local = scan_block(block)
            if local is not None:
                found = (block, local)
                break
    else:
        with ThreadPoolExecutor(max_workers=settings.threads) as pool:
            for block, local in enumerate(pool.map(scan_block, range(blocks))):
                if local is not None:
                    found = (block, local)
                    break

    if found is None:
        return IdentityResult("holds", names, None, (), total, total)

    flat = found[0] * block_length + found[1]
    witness = tuple(_digits(flat, size, count))
    values = program.evaluate(
        s, {name: as_ids(v) for name, v in zip(names, witness, strict=True)}
    )
    return IdentityResult(
        "fails", names, witness, tuple(int(v) for v in values), flat + 1, total
    )


def check_identity(
    s: UnarySemigroup,
    lhs: UnaryTerm,
    rhs: UnaryTerm,
    settings: Settings = DEFAULT_SETTINGS,
) -> IdentityResult:
    """Checks ``lhs = rhs`` under every assignment.

    Args:
        s: The structure
        lhs: Left-hand side
        rhs: Right-hand side
        settings: ``assignment_budget``, ``chunk_size`` and ``threads`` apply

    Returns:
        ``"holds"``, the least failing assignment, or ``"inconclusive"`` when the
            assignment space exceeds the budget. The outcome does not depend on
            the number of threads.

    Examples:
        >>> from usl.constructions.named import named_semigroup
        >>> tb = named_semigroup("tb")
        >>> check_identity(tb, *parse_identity("x x x = x x")).verdict
        'holds'
        >>> result = check_identity(tb, *parse_identity("x y = y x"))
        >>> result.describe(tb)
        'x=(1,1), y=(1,2): 0 vs (1,1)'
    """
    program = _compile((lhs, rhs))
    return _scan(s, program, lambda v: v[0] != v[1], settings)


def check_implication(
    s: UnarySemigroup,
    premise: Identity,
    conclusion: Identity,
    settings: Settings = DEFAULT_SETTINGS,
) -> IdentityResult:
    """Checks the quasi-identity ``premise => conclusion`` under every assignment.

    The values of a failing witness are the two premise sides followed by the two
    conclusion sides.
    """
    program = _compile((*premise, *conclusion))
    return _scan(s, program, lambda v: (v[0] == v[1]) & (v[2] != v[3]), settings)


# Involutory words


@dataclass(frozen=True, slots=True, order=True)
class Letter:
    """A variable, possibly starred."""

    name: str
    starred: bool = False

    def star(self) -> "Letter":
        return Letter(self.name, not self.starred)

    def to_term(self) -> UnaryTerm:
        return Star(Variable(self.name)) if self.starred else Variable(self.name)

    def __str__(self) -> str:
        return f"{self.name}'" if self.starred else self.name


@dataclass(frozen=True, slots=True)
class InvolutoryWord:
    """A non-empty word over variables and their starred forms.

    Starring a word reverses it and flips every letter:

        >>> str(parse_word("x y'").star())
        "y x'"
    """

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("An involutory word must be non-empty.")

    @classmethod
    def of(cls, *names: str) -> "InvolutoryWord":
        return cls(tuple(Letter(name) for name in names))

    def star(self) -> "InvolutoryWord":
        return InvolutoryWord(tuple(letter.star() for letter in reversed(self.letters)))

    def variables(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(letter.name for letter in self.letters))

    def to_term(self) -> UnaryTerm:
        return product([letter.to_term() for letter in self.letters])

    def __add__(self, other: "InvolutoryWord") -> "InvolutoryWord":
        return InvolutoryWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


def parse_word(text: str) -> InvolutoryWord:
    """Parses a word such as ``x1 x2' x1``.

    Raises:
        TermSyntaxError: If a letter is malformed
    """
    letters: list[Letter] = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        name = token.removesuffix("'")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise TermSyntaxError(f"Malformed letter {token!r}", match.start())
        letters.append(Letter(name, token.endswith("'")))
    if not letters:
        raise TermSyntaxError("Expected at least one letter", 0)
    return InvolutoryWord(tuple(letters))


def zimin(n: int, variant: Literal["full", "prefix"] = "full") -> InvolutoryWord:
    """Returns the Zimin word ``Z_n`` over ``x1 .. xn``, or ``Z_n`` without its last
    letter.

    Examples:
        >>> str(zimin(2))
        'x1 x2 x1'
        >>> str(zimin(3, "prefix"))
        'x1 x2 x1 x3 x1 x2'
    """
    if n < 1:
        raise ValueError(f"Zimin words start at n=1, got {n}.")

    letters = [Letter("x1")]
    for k in range(2, n + 1):
        letters = [*letters, Letter(f"x{k}"), *letters]

    if variant == "prefix":
        if n == 1:
            raise ValueError("Z_1 has no proper prefix.")
        letters.pop()

    return InvolutoryWord(tuple(letters))


type Substitution = Mapping[str, UnaryTerm] | Mapping[str, InvolutoryWord]


def _substitute_word(
    word: InvolutoryWord, substitution: Mapping[str, InvolutoryWord]
) -> InvolutoryWord:
    letters: list[Letter] = []
    for letter in word.letters:
        try:
            image = substitution[letter.name]
        except KeyError:
            raise UnboundVariableError(letter.name) from None
        letters.extend((image.star() if letter.starred else image).letters)
    return InvolutoryWord(tuple(letters))


def _substitute_term(
    term: UnaryTerm, substitution: Mapping[str, UnaryTerm | InvolutoryWord]
) -> UnaryTerm:
    def leaf(name: str) -> UnaryTerm:
        try:
            image = substitution[name]
        except KeyError:
            raise UnboundVariableError(name) from None
        return image.to_term() if isinstance(image, InvolutoryWord) else image

    return fold_term(term, leaf, Concat, Star)


@overload
def apply_substitution(
    target: InvolutoryWord, substitution: Mapping[str, InvolutoryWord]
) -> InvolutoryWord: ...


@overload
def apply_substitution(
    target: UnaryTerm, substitution: Mapping[str, UnaryTerm | InvolutoryWord]
) -> UnaryTerm: ...


def apply_substitution(
    target: InvolutoryWord | UnaryTerm,
    substitution: Mapping[str, InvolutoryWord]
    | Mapping[str, UnaryTerm | InvolutoryWord],
) -> InvolutoryWord | UnaryTerm:
    """Replaces every variable by its image.

    On words the star of a variable maps to the star of its image, reversed with
    every letter flipped.

    Raises:
        UnboundVariableError: If a variable has no image

    Examples:
        >>> p = parse_word("x y'")
        >>> str(apply_substitution(p, star_flip(p)))
        'x y'
    """
    if isinstance(target, InvolutoryWord):
        words = {
            name: image
            for name, image in substitution.items()
            if isinstance(image, InvolutoryWord)
        }
        return _substitute_word(target, words)
    return _substitute_term(target, substitution)


def star_flip(word: InvolutoryWord) -> dict[str, InvolutoryWord]:
    """Maps each variable occurring starred in ``word`` to its star, and every other
    variable to itself.

    The substitution is an involution: applying it twice gives back ``word``.
    """
    starred = {letter.name for letter in word.letters if letter.starred}
    return {
        name: InvolutoryWord((Letter(name, name in starred),))
        for name in word.variables()
    }


def right_divisibility_identity(n: int, exponent: int) -> Identity:
    """Returns ``Z_n w(Z_n) Z_n' w(Z_n') = Z_n' w(Z_n')`` with ``w = omega(., exponent)``."""  # noqa: E501
    full = zimin(n).to_term()
    prefix = zimin(n, "prefix").to_term()
    tail = Concat(prefix, omega(prefix, exponent))
    return Concat(Concat(full, omega(full, exponent)), tail), tail


def prefix_cancellation_implication(n: int) -> tuple[Identity, Identity]:
    """Returns ``x Z_n = y Z_n => x Z_n' = y Z_n'``."""
    x, y = Variable("x"), Variable("y")
    full = zimin(n).to_term()
    prefix = zimin(n, "prefix").to_term()
    return (Concat(x, full), Concat(y, full)), (Concat(x, prefix), Concat(y, prefix))


def periodic_identity(index: int, period: int) -> Identity:
    """Returns ``x^index = x^(index + period)``."""
    x = Variable("x")
    return power(x, index), power(x, index + period)


# Bounded isoterm search


@dataclass(frozen=True, slots=True)
class IsotermReport:
    """Outcome of ``isoterm_search``.

    Attributes:
        word: The word searched for
        max_length: Longest candidate considered
        alphabet: Candidate letters, the letters of ``word`` and their stars
        matches: Candidates ``z != word`` with ``word = z`` holding, each verified
            by a full assignment scan
        examined: Candidates covered, including those skipped by pruning
        complete: Whether the bounded candidate space was exhausted
        last: The last candidate visited when the search stopped early
    """

    word: InvolutoryWord
    max_length: int
    alphabet: tuple[Letter, ...]
    matches: tuple[InvolutoryWord, ...]
    examined: int
    complete: bool
    last: InvolutoryWord | None = None

    @property
    def verdict(self) -> Literal["complete", "inconclusive"]:
        return "complete" if self.complete else "inconclusive"

    @property
    def caveat(self) -> str:
        return (
            "bounded: candidates of length at most "
            f"{self.max_length} over {' '.join(str(x) for x in self.alphabet)}"
        )


def isoterm_search(  # noqa: C901
    s: UnarySemigroup,
    word: InvolutoryWord,
    max_length: int,
    settings: Settings = DEFAULT_SETTINGS,
) -> IsotermReport:
    """Lists the words ``z != word`` with ``|z| <= max_length`` such that ``s``
    satisfies ``word = z``.

    Candidates are enumerated depth first in lexicographic order over the letters
    of ``word`` and their stars. Each prefix carries its value under every
    assignment; a prefix that is identically zero is not extended unless ``word``
    is identically zero too.

    Args:
        s: The structure
        word: The word
        max_length: Longest candidate
        settings: ``isoterm_budget`` bounds the number of visited candidates and
            ``chunk_size`` the number of assignments; exceeding either leaves the
            report incomplete

    Returns:
        The matches found, with a completeness flag

    Examples:
        >>> from usl.constructions.named import named_semigroup
        >>> isoterm_search(named_semigroup("tb"), zimin(2), 3).matches
        ()
    """
    names = word.variables()
    alphabet = tuple(
        letter
        for name in names
        for letter in (Letter(name), Letter(name, True))
        if s.arity or not letter.starred
    )
    size, count = s.size, len(names)

    if size**count > settings.chunk_size:
        _logger.info(
            "Isoterm search skipped: %d^%d assignments exceed chunk_size=%d",
            size,
            count,
            settings.chunk_size,
        )
        return IsotermReport(word, max_length, alphabet, (), 0, False)

    grid = np.indices((size,) * count, dtype=ID_DTYPE).reshape(count, -1)
    columns = dict(zip(names, grid, strict=True))
    values = {
        letter: s.star(columns[letter.name]) if letter.starred else columns[letter.name]
        for letter in alphabet
    }

    def value_of(candidate: Sequence[Letter]) -> IdArray:
        result = values[candidate[0]]
        for letter in candidate[1:]:
            result = s.multiply(result, values[letter])
        return result

    target = value_of(word.letters)
    zero = s.zero_id
    prunable = zero is not None and not np.all(target == zero)
    # subtree[d]: candidates strictly below a prefix of length max_length - d
    subtree = [0]
    for _ in range(max_length):
        subtree.append(len(alphabet) * (1 + subtree[-1]))

    matches: list[InvolutoryWord] = []
    examined = visited = 0
    stack: list[tuple[tuple[Letter, ...], IdArray]] = [
        ((letter,), values[letter]) for letter in reversed(alphabet)
    ]

    while stack:
        candidate, value = stack.pop()
        examined += 1
        visited += 1

        if visited > settings.isoterm_budget:
            _logger.info("Isoterm search stopped after %d candidates", visited)
            return IsotermReport(
                word,
                max_length,
                alphabet,
                tuple(matches),
                examined,
                False,
                InvolutoryWord(candidate),
            )

        if candidate != word.letters and np.array_equal(value, target):
            found = InvolutoryWord(candidate)
            verdict = check_identity(
                s, word.to_term(), found.to_term(), settings
            ).verdict
            if verdict == "inconclusive":
                _logger.info("Re-verification of %s was inconclusive", found)
                return IsotermReport(
                    word, max_length, alphabet, tuple(matches), examined, False, found
                )
            if verdict == "fails":
                raise StructureError(f"Candidate {found} failed re-verification.")
            matches.append(found)

        if len(candidate) == max_length:
            continue

        if prunable and np.all(value == zero):
            examined += subtree[max_length - len(candidate)]
            continue

        stack.extend(
            (candidate + (letter,), s.multiply(value, values[letter]))
            for letter in reversed(alphabet)
        )

    return IsotermReport(word, max_length, alphabet, tuple(matches), examined, True)
