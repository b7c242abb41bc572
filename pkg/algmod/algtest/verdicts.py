"""Verdicts on algebraicity and the registry of quoted rules.

A module is algebraic when it satisfies a polynomial with integer
coefficients in the Green ring, i.e. when only finitely many indecomposable
summands occur in its tensor powers.
"""

import typing


ALGEBRAIC = "Algebraic"
NON_ALGEBRAIC_EVIDENCE = "NonAlgebraicEvidence"
INCONCLUSIVE = "Inconclusive"

KINDS = (ALGEBRAIC, NON_ALGEBRAIC_EVIDENCE, INCONCLUSIVE)

# rule identifiers
CLOSED = "tensor-closure-closed"
BUDGET = "tensor-closure-budget"
V4_ODD_SUMMAND = "v4-odd-summand"
V4_NO_ODD_SUMMAND = "v4-no-odd-summand"
OMEGA_SHIFT = "omega-shift"
MPLUS = "square-is-m-plus-algebraic"
HEART = "heart-of-projective-cover"
HEART_TENSOR = "heart-tensor-coprime-dimension"
HEART_TENSOR_SUMMAND = "heart-tensor-unique-coprime-summand"
SMALL_PERIODIC = "small-periodic"
SMALL_NON_PERIODIC = "small-non-periodic"
SQUARE_TRANSFER = "square-transfer"
ONE_DIMENSIONAL = "one-dimensional"
TWO_DIMENSIONAL = "two-dimensional"
TRIVIAL_SOURCE = "trivial-source"
NO_RULE = "no-rule-applies"
UNVERIFIED = "tensor-closure-unverified"

CITATIONS = {
    CLOSED: "tensor powers have finitely many indecomposable summands (definition)",
    BUDGET: "evidence only: summand growth within the closure budgets",
    V4_ODD_SUMMAND: (
        "a module whose restriction to a Klein-four subgroup has a "
        "non-trivial odd-dimensional indecomposable summand is non-algebraic"
    ),
    V4_NO_ODD_SUMMAND: "the Klein-four restriction has no non-trivial odd summand",
    OMEGA_SHIFT: (
        "if M is non-periodic and algebraic, Omega^i(M) is "
        "non-algebraic for all i != 0"
    ),
    MPLUS: "if M (x) M = M + X with X algebraic then M is algebraic",
    HEART: "the heart of the projective cover of k is non-algebraic",
    HEART_TENSOR: "if p does not divide dim M then M (x) E is non-algebraic",
    HEART_TENSOR_SUMMAND: (
        "the unique non-projective summand of p'-dimension of "
        "E (x) N, N algebraic, is non-algebraic"
    ),
    SMALL_PERIODIC: (
        "an absolutely indecomposable module of dimension 3 or 6 for "
        "C3 x C3 over F3 is periodic if and only if it is algebraic"
    ),
    SMALL_NON_PERIODIC: (
        "periodic-iff-algebraic in dimensions 3 and 6, with a certified "
        "non-periodic syzygy sequence"
    ),
    SQUARE_TRANSFER: (
        "S^2(M) and L^2(M) are summands of M (x) M for odd p: if either is "
        "non-algebraic so is M, if M is algebraic so are both"
    ),
    ONE_DIMENSIONAL: "one-dimensional modules have finite order in the Green ring",
    TWO_DIMENSIONAL: "every 2-dimensional kG-module is algebraic",
    TRIVIAL_SOURCE: (
        "trivial source modules are algebraic: the restriction to a Sylow "
        "subgroup is a sum of transitive permutation modules"
    ),
    NO_RULE: "none of the automatic rules applies",
    UNVERIFIED: "the registry closed but a repeated sweep met an unregistered class",
}


class Verdict(object):
    def __init__(
        self,
        kind: str,
        reason: str,
        citation: str = None,
        witness: dict = None,
        proof_backed: bool = None,
    ) -> None:
        """kind: one of ALGEBRAIC, NON_ALGEBRAIC_EVIDENCE, INCONCLUSIVE.

        proof_backed: whether a theorem turns the result into a proof; by
            default everything except budget growth and Inconclusive.
        """
        assert kind in KINDS
        self.__kind = kind
        self.__reason = reason
        self.__citation = CITATIONS.get(reason, "") if citation is None else citation
        self.__witness = dict(witness or {})
        if proof_backed is None:
            proof_backed = kind != INCONCLUSIVE and reason != BUDGET
        self.__proof_backed = proof_backed

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def reason(self) -> str:
        return self.__reason

    @property
    def citation(self) -> str:
        return self.__citation

    @property
    def witness(self) -> dict:
        return self.__witness

    @property
    def proof_backed(self) -> bool:
        return self.__proof_backed

    @property
    def is_algebraic(self) -> bool:
        return self.__kind == ALGEBRAIC

    @property
    def is_non_algebraic(self) -> bool:
        return self.__kind == NON_ALGEBRAIC_EVIDENCE

    @property
    def is_inconclusive(self) -> bool:
        return self.__kind == INCONCLUSIVE

    def __repr__(self) -> str:
        return "Verdict({}, {})".format(self.__kind, self.__reason)

    def to_dict(self) -> dict:
        return {
            "kind": self.__kind,
            "reason": self.__reason,
            "citation": self.__citation,
            "proof_backed": self.__proof_backed,
            "witness": self.__witness,
        }


class Rule(typing.NamedTuple):
    predicate: str
    verdict: str
    citation: str


_RULES = (
    Rule("trivial source", ALGEBRAIC, "trivial source modules are algebraic"),
    Rule(
        "simple module, abelian Sylow 2-subgroup (p = 2)",
        ALGEBRAIC,
        "simple modules of groups with abelian Sylow 2-subgroups are algebraic",
    ),
    Rule(
        "indecomposable with cyclic or Klein-four defect group",
        ALGEBRAIC,
        "modules in blocks with cyclic or Klein-four defect group are algebraic",
    ),
    Rule(
        "restriction to a p'-index subgroup algebraic",
        ALGEBRAIC,
        "M is algebraic if and only if its restriction to H of p'-index is",
    ),
    Rule(
        "restriction to a p'-index subgroup non-algebraic",
        NON_ALGEBRAIC_EVIDENCE,
        "M is algebraic if and only if its restriction to H of p'-index is",
    ),
    Rule(
        "dim 2 in char p",
        ALGEBRAIC,
        "every 2-dimensional kG-module is algebraic",
    ),
    Rule(
        "periodic, dim 3 or 6, C3 x C3 over F3, absolutely indecomposable",
        ALGEBRAIC,
        CITATIONS[SMALL_PERIODIC],
    ),
    Rule(
        "periodic and algebraic M: every Omega^i(M)",
        ALGEBRAIC,
        "for periodic algebraic M all Omega^i(M) are algebraic",
    ),
    Rule(
        "non-periodic algebraic M: Omega^i(M), i != 0",
        NON_ALGEBRAIC_EVIDENCE,
        CITATIONS[OMEGA_SHIFT],
    ),
    Rule(
        "heart of the projective cover of k, p odd, non-cyclic p-group",
        NON_ALGEBRAIC_EVIDENCE,
        CITATIONS[HEART],
    ),
    Rule(
        "lies on the second row of its Auslander-Reiten component",
        NON_ALGEBRAIC_EVIDENCE,
        "such modules are non-algebraic (caller-asserted)",
    ),
)


def rule_registry() -> typing.List[Rule]:
    """Caller-asserted shortcuts; none of the predicates is derived."""
    return list(_RULES)
