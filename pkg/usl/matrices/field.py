"""Finite fields with an involution.

Elements of ``GF(p^e)`` are the integers ``0 .. p^e - 1``; the base-``p`` digits of
an element, least significant first, are the coefficients of its polynomial modulo
an irreducible polynomial. Multiplication goes through exponential and logarithm
tables built from a primitive element. The involution is either trivial or the
Frobenius power ``x -> x^(p^(e/2))``.

All arithmetic is vectorized over numpy arrays of elements.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike, NDArray
from sympy import Poly, factorint, primitive_root, symbols, sympify

_logger = logging.getLogger(__name__)

MAX_ORDER = 1 << 16

type Elements = NDArray[np.int64]
type Involution = Literal["trivial", "frobenius"]

_T = symbols("t")


class FieldError(ValueError):
    """Raised for invalid field parameters or mismatched field arithmetic."""


def _digits(value: int, p: int, e: int) -> list[int]:
    out: list[int] = []
    for _ in range(e):
        value, digit = divmod(value, p)
        out.append(digit)
    return out


def _is_irreducible(coefficients: list[int], p: int) -> bool:
    return bool(Poly(list(reversed(coefficients)), _T, modulus=p).is_irreducible)  # pyright: ignore[reportUnknownMemberType, reportUnknownArgumentType]


def _first_irreducible(p: int, e: int) -> tuple[int, ...]:
    for code in range(p**e):
        coefficients = [*_digits(code, p, e), 1]
        if coefficients[0] and _is_irreducible(coefficients, p):
            return tuple(coefficients)
    raise FieldError(f"No irreducible polynomial of degree {e} over GF({p}).")


def _poly_format(coefficients: tuple[int, ...]) -> str:
    terms: list[str] = []
    for degree in range(len(coefficients) - 1, -1, -1):
        c = coefficients[degree]
        if not c:
            continue
        if degree == 0:
            terms.append(str(c))
        else:
            base = "t" if degree == 1 else f"t^{degree}"
            terms.append(base if c == 1 else f"{c}{base}")
    return "+".join(terms)


@dataclass(frozen=True, eq=False)
class InvolutiveField:
    """A finite field ``GF(p^e)`` with an involution.

    Attributes:
        p: The characteristic
        e: The degree over the prime field
        modulus: Coefficients of the monic irreducible modulus, constant term first
        involution_power: ``s`` with ``conj(x) = x^(p^s)``; 0 for the trivial
            involution

    Examples:
        >>> f = field_make(4, involution="frobenius")
        >>> f.name, f.conj(np.arange(4)).tolist()
        ('gf(4,t^2+t+1,frob)', [0, 1, 3, 2])
    """

    p: int
    e: int
    modulus: tuple[int, ...]
    involution_power: int = 0
    _exp: Elements = field(init=False, repr=False)
    _log: Elements = field(init=False, repr=False)
    _conj: Elements = field(init=False, repr=False)

    def __post_init__(self) -> None:
        exp, log = self._tables()
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "_conj", self.frobenius(self.involution_power))
        self._check_involution()

    @property
    def order(self) -> int:
        return self.p**self.e

    @property
    def name(self) -> str:
        if self.e == 1:
            base = f"gf({self.p}"
        else:
            base = f"gf({self.order},{_poly_format(self.modulus)}"
        return base + (",frob)" if self.involution_power else ")")

    def elements(self) -> Elements:
        return np.arange(self.order, dtype=np.int64)

    def _poly_times(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        x, y = _digits(a, p, e), _digits(b, p, e)
        product = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                product[i + j] = (product[i + j] + xi * yj) % p
        for degree in range(2 * e - 2, e - 1, -1):
            c = product[degree]
            if c:
                for k in range(e + 1):
                    product[degree - e + k] = (
                        product[degree - e + k] - c * self.modulus[k]
                    ) % p
        return sum(c * p**i for i, c in enumerate(product[:e]))

    def _tables(self) -> tuple[Elements, Elements]:
        q = self.order
        if self.e == 1:
            candidates = [int(primitive_root(self.p))] if q > 2 else [1]  # noqa: PLR2004
        else:
            candidates = [self.p, *range(2, q)]

        for g in candidates:
            exp = np.empty(q - 1, dtype=np.int64)
            power = 1
            for k in range(q - 1):
                exp[k] = power
                if self.e == 1:
                    power = (power * g) % self.p
                else:
                    power = self._poly_times(power, g)
                if power == 1 and k < q - 2:
                    break
            else:
                log = np.zeros(q, dtype=np.int64)
                log[exp] = np.arange(q - 1)
                return exp, log

        raise FieldError(f"No primitive element found for {self.modulus}.")

    def frobenius(self, power: int) -> Elements:
        """The table of ``x -> x^(p^power)``."""
        q = self.order
        table = np.zeros(q, dtype=np.int64)
        nonzero = np.arange(1, q)
        table[nonzero] = self._exp[(self._log[nonzero] * self.p**power) % (q - 1)]
        return table

    def _check_involution(self) -> None:
        x = self.elements()
        if not np.array_equal(self.conj(self.conj(x)), x):
            raise FieldError("The involution does not have order dividing 2.")
        for k in range(self.e):
            basis = self.p**k
            if not np.array_equal(
                self.conj(self.add(x, basis)), self.add(self.conj(x), self.conj(basis))
            ):
                raise FieldError("The involution is not additive.")
        generator = int(self._exp[1]) if self.order > 2 else 1  # noqa: PLR2004
        if not np.array_equal(
            self.conj(self.mul(x, generator)),
            self.mul(self.conj(x), self.conj(generator)),
        ):
            raise FieldError("The involution is not multiplicative.")

    def _split(self, a: NDArray[np.int64]) -> list[NDArray[np.int64]]:
        return [(a // self.p**k) % self.p for k in range(self.e)]

    def _join(self, digits: list[NDArray[np.int64]]) -> Elements:
        return sum(
            (d * self.p**k for k, d in enumerate(digits)),
            start=np.zeros_like(digits[0]),
        )

    def add(self, a: ArrayLike, b: ArrayLike) -> Elements:
        a_, b_ = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a_ + b_) % self.p
        return self._join(
            [(x + y) % self.p for x, y in zip(self._split(a_), self._split(b_), strict=True)]  # noqa: E501
        )

    def neg(self, a: ArrayLike) -> Elements:
        a_ = np.asarray(a, dtype=np.int64)
        if self.e == 1:
            return (-a_) % self.p
        return self._join([(-x) % self.p for x in self._split(a_)])

    def sub(self, a: ArrayLike, b: ArrayLike) -> Elements:
        return self.add(a, self.neg(b))

    def mul(self, a: ArrayLike, b: ArrayLike) -> Elements:
        a_, b_ = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a_ * b_) % self.p
        product = self._exp[(self._log[a_] + self._log[b_]) % (self.order - 1)]
        return np.where((a_ == 0) | (b_ == 0), 0, product)

    def inv(self, a: ArrayLike) -> Elements:
        """Multiplicative inverse.

        Raises:
            FieldError: If some element is zero
        """
        a_ = np.asarray(a, dtype=np.int64)
        if np.any(a_ == 0):
            raise FieldError("Zero has no inverse.")
        return self._exp[(-self._log[a_]) % (self.order - 1)]

    def conj(self, a: ArrayLike) -> Elements:
        """Applies the involution."""
        return self._conj[np.asarray(a, dtype=np.int64)]

    def norm(self, a: ArrayLike) -> Elements:
        """``x conj(x)``."""
        return self.mul(a, self.conj(a))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InvolutiveField):
            return NotImplemented
        return (self.p, self.e, self.modulus, self.involution_power) == (
            other.p,
            other.e,
            other.modulus,
            other.involution_power,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus, self.involution_power))

    def __repr__(self) -> str:
        return f"InvolutiveField({self.name})"


def field_make(
    order: int,
    modulus: tuple[int, ...] | None = None,
    involution: Involution = "trivial",
) -> InvolutiveField:
    """Builds ``GF(order)``.

    Args:
        order: A prime power at most ``2^16``
        modulus: Monic irreducible modulus, constant term first; defaults to the
            first irreducible polynomial in lexicographic order of coefficients
        involution: ``"trivial"`` or ``"frobenius"``

    Returns:
        The field

    Raises:
        FieldError: If the order is not a prime power, the modulus is not
            irreducible, or the Frobenius involution is requested for odd degree

    Examples:
        >>> field_make(6)
        Traceback (most recent call last):
            ...
        usl.matrices.field.FieldError: 6 is not a prime power.
        >>> field_make(5).mul([2, 3], 4).tolist()
        [3, 2]
    """
    if order < 2 or order > MAX_ORDER:  # noqa: PLR2004
        raise FieldError(f"Field order must lie in [2, {MAX_ORDER}], got {order}.")

    factors: dict[int, int] = factorint(order)  # pyright: ignore[reportAssignmentType]
    if len(factors) != 1:
        raise FieldError(f"{order} is not a prime power.")
    ((p, e),) = factors.items()

    if e == 1:
        modulus = (0, 1)
    elif modulus is None:
        modulus = _first_irreducible(p, e)
    elif len(modulus) != e + 1 or modulus[-1] != 1:
        raise FieldError(f"The modulus must be monic of degree {e}.")
    elif not _is_irreducible(list(modulus), p):
        raise FieldError(f"{_poly_format(modulus)} is reducible over GF({p}).")

    power = 0
    if involution == "frobenius":
        if e % 2:
            raise FieldError(
                f"GF({order}) has no Frobenius involution: the degree {e} is odd."
            )
        power = e // 2

    _logger.debug("Building GF(%d) with modulus %s", order, modulus)
    return InvolutiveField(p, e, modulus, power)


_FIELD = re.compile(
    r"gf\(\s*(?P<order>\d+)\s*(?:,\s*(?P<modulus>[t0-9^+*\s]+))?\s*(?:,\s*(?P<involution>frob|frobenius|trivial))?\s*\)"  # noqa: E501
)


def parse_field(text: str) -> InvolutiveField:
    """Parses ``gf(q)``, ``gf(q,<modulus>)`` or ``gf(q,<modulus>,frob)``.

    Examples:
        >>> parse_field("gf(3)").name
        'gf(3)'
        >>> parse_field("gf(9,t^2+1,frob)").involution_power
        1
    """
    match = _FIELD.fullmatch(text.strip().lower())
    if match is None:
        raise FieldError(f"Malformed field {text!r}; expected e.g. 'gf(4,t^2+t+1,frob)'.")  # noqa: E501

    order = int(match["order"])
    involution: Involution = "frobenius" if match["involution"] in ("frob", "frobenius") else "trivial"  # noqa: E501
    modulus: tuple[int, ...] | None = None

    if match["modulus"]:
        factors: dict[int, int] = factorint(order)  # pyright: ignore[reportAssignmentType]
        if len(factors) != 1:
            raise FieldError(f"{order} is not a prime power.")
        (p,) = factors
        try:
            expression = sympify(match["modulus"].replace("^", "**"))
            polynomial = Poly(expression, _T, modulus=p)  # pyright: ignore[reportUnknownMemberType, reportUnknownArgumentType]
        except (ValueError, TypeError, SyntaxError) as error:
            raise FieldError(f"Malformed modulus {match['modulus']!r}.") from error
        coefficients: list[int] = [int(c) % p for c in polynomial.all_coeffs()]  # pyright: ignore[reportUnknownMemberType, reportUnknownVariableType, reportUnknownArgumentType]
        modulus = tuple(reversed(coefficients))

    return field_make(order, modulus, involution)


def norm_form_solution(f: InvolutiveField, n: int = 2) -> tuple[int, ...] | None:
    """Returns the least non-zero ``x`` in ``K^n`` with ``sum x_i conj(x_i) = 0``.

    Vectors are ordered lexicographically. None means only the zero vector solves
    the equation, which is when the Moore-Penrose inverse is total on ``M_n(K)``.

    Examples:
        >>> norm_form_solution(field_make(3)) is None
        True
        >>> norm_form_solution(field_make(5))
        (1, 2)
    """
    q = f.order
    if q**n > 1 << 24:
        raise FieldError(f"K^{n} over GF({q}) is too large to search.")

    grid = np.indices((q,) * n, dtype=np.int64).reshape(n, -1)
    total = f.norm(grid[0])
    for row in grid[1:]:
        total = f.add(total, f.norm(row))

    hits = np.flatnonzero(total[1:] == 0)
    if hits.size == 0:
        return None
    return tuple(int(x) for x in grid[:, hits[0] + 1])
