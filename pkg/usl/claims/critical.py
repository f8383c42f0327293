"""The critical semigroup ``T_1`` over the symmetric group ``S_3``."""

from ..claim import Claim, Outcome
from ..config import DEFAULT_SETTINGS, Settings
from ..constructions.critical import (
    CriticalSpec,
    critical_identity,
    critical_substitution,
    critical_Tk,
    normalize_sandwich,
    restrict_Tk,
    staircase_tuples,
)
from ..constructions.groups import symmetric_group
from ..constructions.rees import (
    group_times_rees_map,
    rees_isomorphism_map,
    rees_matrix,
    trivialize,
)
from ..core import direct_product, verify_morphism
from ..terms import evaluate, format_identity


class CriticalSemigroup(Claim):
    claim_id = "C20"
    title = "T_1 over S_3 fails the substituted commutator; restrictions are images"
    statement = (
        "For G = S_3 with witnesses (1 2), (1 3) and k = 1, substituting the words "
        "w_1, w_2 into x1 x2 = x2 x1 gives an identity failing in T_1 under "
        "x_r -> (r, e, r); deleting one index from each block gives a subsemigroup "
        "whose sandwich matrix normalizes to identity entries and which is an onto "
        "image of G times a Rees matrix semigroup over the trivial group."
    )

    @classmethod
    def check(cls, settings: Settings = DEFAULT_SETTINGS) -> Outcome:
        group = symmetric_group(3)
        witnesses = (group.element("(1 2)"), group.element("(1 3)"))
        spec = CriticalSpec(group, witnesses, k=1)
        tk, rees = critical_Tk(spec, settings)

        identity = critical_identity(spec)
        assignment = critical_substitution(rees)
        lhs, rhs = (evaluate(side, tk, assignment) for side in identity)
        if lhs == rhs:
            return Outcome.failed(
                "the substituted identity holds at x_r -> (r, e, r)",
                identity=format_identity(identity),
            )

        g = group.to_semigroup()
        restricted_count = 0
        for deleted in staircase_tuples(spec.n, spec.m):
            restricted = restrict_Tk(rees, deleted, spec.n)
            normalized, scaling = normalize_sandwich(restricted, witnesses, spec.n)
            source = rees_matrix(restricted.spec, settings)
            target = rees_matrix(normalized, settings)

            scaled = rees_isomorphism_map(restricted.spec, normalized, scaling)
            violations = verify_morphism(
                source, target, scaled, "isomorphism", settings
            )
            if violations:
                return Outcome.failed(
                    "scaling is not an isomorphism",
                    deleted=list(deleted),
                    detail=violations[0].detail,
                )

            shape = trivialize(normalized)
            product = direct_product(g, rees_matrix(shape, settings), settings)
            onto = group_times_rees_map(group, shape, normalized)
            violations = verify_morphism(product, target, onto, "onto", settings)
            if violations:
                return Outcome.failed(
                    "G x U does not map onto the restriction",
                    deleted=list(deleted),
                    detail=violations[0].detail,
                )
            restricted_count += 1

        return Outcome.passed(
            size=tk.size,
            n=spec.n,
            values=[tk.label(lhs), tk.label(rhs)],
            restrictions=restricted_count,
        )
