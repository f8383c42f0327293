"""Identities of ``M_n(GF(q))`` with transposition."""

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..constructions.groups import GroupTable
from ..constructions.named import named_semigroup
from ..core import green_r_height, index_period, power_part, verify_index_period
from ..matrices.families import build_matrix_family
from ..matrices.field import InvolutiveField, field_make
from ..terms import (
    Concat,
    Identity,
    Variable,
    omega,
    parse_identity,
    periodic_identity,
    right_divisibility_identity,
)
from ._checks import expect_identity


def gl_exponent(f: InvolutiveField, settings: Settings) -> int:
    """Least common multiple of the element orders of ``GL_2(f)``."""
    gl = build_matrix_family("gl", 2, f, "none", settings=settings)
    return GroupTable.from_semigroup(gl.semigroup.tabulate(settings)).exponent()


class HermitianPowersCommute(Claim):
    claim_id = "C6"
    title = "(x x')^3 (y y')^3 = (y y')^3 (x x')^3 in M_2(GF(2)) but not in K3"
    statement = (
        "M_2(GF(2)) with transposition satisfies (x x*)^3 (y y*)^3 = "
        "(y y*)^3 (x x*)^3, and K_3 does not."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        identity = parse_identity("(x x')^3 (y y')^3 = (y y')^3 (x x')^3", 1)
        family = build_matrix_family("full", 2, field_make(2), settings=settings)

        s = family.semigroup
        holds = expect_identity(s, identity, "holds", "M2(GF2)", settings)
        if isinstance(holds, Outcome):
            return holds

        k3 = named_semigroup("k3")
        fails = expect_identity(k3, identity, "fails", "K3", settings)
        if isinstance(fails, Outcome):
            return fails

        return Outcome.passed(
            assignments=holds.total,
            k3_witness=fails.describe(k3),
            k3_assignment={
                name: k3.label(value) for name, value in fails.assignment().items()
            },
        )


class OrthogonalPowers(Claim):
    claim_id = "C11"
    title = "Orthogonal group non-abelian, powers part satisfies x x y x = x y x x"
    statement = (
        "The orthogonal group of M_2(GF(3)) is not abelian, and the unary "
        "subsemigroup of M_2(GF(3)) with transposition generated by the d-th powers, "
        "d the exponent of GL_2(GF(3)), satisfies x^2 y x = x y x^2."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        f = field_make(3)
        orthogonal = build_matrix_family("orthogonal", 2, f, settings=settings)
        commuting = expect_identity(
            orthogonal.semigroup,
            parse_identity("x y = y x", 1),
            "fails",
            "O2(GF3)",
            settings,
        )
        if isinstance(commuting, Outcome):
            return commuting

        d = gl_exponent(f, settings)
        full = build_matrix_family("full", 2, f, settings=settings)
        part = power_part(full.semigroup, d, settings)
        result = expect_identity(
            part.semigroup,
            parse_identity("x x y x = x y x x", 1),
            "holds",
            f"P_{d}",
            settings,
        )
        if isinstance(result, Outcome):
            return result

        return Outcome.passed(
            orthogonal_size=orthogonal.size,
            noncommuting=commuting.describe(orthogonal.semigroup),
            exponent=d,
            powers_part_size=part.size,
        )


class TransposeRegularity(Claim):
    claim_id = "C14"
    title = "x = x (x' x)^d in M_2(GF(3))"
    statement = (
        "M_2(GF(3)) with transposition satisfies x = x (x^T x)^d for d the exponent "
        "of GL_2(GF(3))."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        f = field_make(3)
        d = gl_exponent(f, settings)
        family = build_matrix_family("full", 2, f, settings=settings)
        identity = parse_identity(f"x = x (x' x)^{d}", 1)

        s = family.semigroup
        result = expect_identity(s, identity, "holds", "M2(GF3)", settings)
        if isinstance(result, Outcome):
            return result
        return Outcome.passed(exponent=d, elements=family.size)


class RightDivisibility(Claim):
    claim_id = "C23"
    title = "Zimin right divisibility identity in M_2(GF(3))"
    statement = (
        "With h the height of the R-order of M_2(GF(3)), n = h + 1 and "
        "w(x) = x^T (x x^T)^(d-1), M_2(GF(3)) with transposition satisfies "
        "Z_n w(Z_n) Z_n' w(Z_n') = Z_n' w(Z_n') and x = x w(x) x, and its index "
        "and period give a periodic identity."
    )
    tier = "slow"

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        f = field_make(3)
        s = build_matrix_family("full", 2, f, settings=settings).semigroup
        h = green_r_height(s, settings).height
        d = gl_exponent(f, settings)

        x = Variable("x")
        identities: dict[str, Identity] = {
            "zimin": right_divisibility_identity(h + 1, d),
            "regular": (x, Concat(x, Concat(omega(x, d), x))),
        }
        periods = index_period(s, settings)
        if not verify_index_period(s, periods.index, periods.period, settings):
            return Outcome.failed(
                "the index and period are not least",
                index=periods.index,
                period=periods.period,
            )
        identities["periodic"] = periodic_identity(periods.index, periods.period)

        for identity in identities.values():
            result = expect_identity(s, identity, "holds", "M2(GF3)", settings)
            if isinstance(result, Outcome):
                return result

        return Outcome.passed(
            height=h,
            n=h + 1,
            exponent=d,
            index=periods.index,
            period=periods.period,
            assignments=s.size ** (h + 1),
            identities=list(identities),
        )
