"""Arithmetic-progression verdicts on same-order types, and the structural
rules the verification suites re-check on every group.

Each rule is evaluated to one of three statuses: "consistent" (hypothesis
held and so did the conclusion), "violated" (hypothesis held, conclusion
failed -- the failure signal), or "not-applicable".  A violated status on a
valid group is impossible unless the engine is wrong, with one deliberate
exception: the "open-problem" sentinel fires on any non-nilpotent group
whose four-term type is a progression, so that such a discovery is surfaced
loudly instead of logged quietly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import TheoremViolation
from .group import FiniteGroup, StructuralProfile
from .stats import SameOrderType, order_spectrum, same_order_type


class APVerdict(NamedTuple):
    is_ap: bool
    ratio: int | None


def is_arithmetic_progression(tau: SameOrderType) -> APVerdict:
    """Whether a same-order type is an arithmetic progression.

    Singletons count with a null ratio; two-element types report their
    actual difference; longer types need equal consecutive differences.
    """
    if not tau:
        raise ValueError("same-order type must be nonempty")
    if any(b <= a for a, b in zip(tau, tau[1:])):
        raise ValueError("same-order type must be strictly increasing")
    if len(tau) == 1:
        return APVerdict(True, 0)
    differences = {b - a for a, b in zip(tau, tau[1:])}
    if len(differences) == 1:
        return APVerdict(True, differences.pop())
    return APVerdict(False, None)


class TheoremFinding(NamedTuple):
    theorem: str
    status: str  # consistent | violated | not-applicable
    note: str


@dataclass(frozen=True)
class ClassificationRecord:
    label: str
    order: int
    tau: SameOrderType
    verdict: APVerdict
    profile: StructuralProfile
    findings: tuple[TheoremFinding, ...]

    @property
    def tau_size(self) -> int:
        return len(self.tau)

    @property
    def violations(self) -> tuple[TheoremFinding, ...]:
        return tuple(f for f in self.findings if f.status == "violated")


def _rule(theorem: str, applicable: bool, holds: bool, note: str) -> TheoremFinding:
    if not applicable:
        return TheoremFinding(theorem, "not-applicable", "")
    return TheoremFinding(theorem, "consistent" if holds else "violated", note)


def theorem_findings(
    order: int, tau: SameOrderType, verdict: APVerdict, profile: StructuralProfile
) -> tuple[TheoremFinding, ...]:
    """Evaluate every structural rule against one group's computed facts."""
    size = len(tau)
    is_ap = verdict.is_ap
    exempt_2group = profile.p_group_prime == 2 and profile.c2 > 1
    s3_shaped = order == 6 and not profile.is_abelian
    findings = [
        _rule(
            "prop22",
            is_ap,
            size <= 4,
            f"progression of {size} > 4 class sizes",
        ),
        _rule(
            "lemma24",
            order % 2 == 1 and size == 4,
            not is_ap,
            "odd order with a four-term progression",
        ),
        _rule(
            "prop25",
            profile.p_group_prime is not None and size == 4,
            not is_ap,
            "prime-power order with a four-term progression",
        ),
        _rule(
            "thm26",
            profile.is_nilpotent and size == 4,
            not is_ap,
            "nilpotent with a four-term progression",
        ),
        _rule(
            "thm23",
            size == 3 and not exempt_2group,
            is_ap == s3_shaped,
            "three-term progression without the order-6 nonabelian shape"
            if is_ap
            else "order-6 nonabelian group whose type is not a progression",
        ),
        _rule(
            "ratio-parity",
            size == 4 and is_ap,
            verdict.ratio is not None and verdict.ratio % 2 == 1 and verdict.ratio > 3,
            f"four-term progression with ratio {verdict.ratio}",
        ),
        _rule(
            "open-problem",
            size == 4 and is_ap and not profile.is_nilpotent,
            False,
            "non-nilpotent group with a four-term progression: answers the open problem",
        ),
    ]
    return tuple(findings)


def classification_record(group: FiniteGroup) -> ClassificationRecord:
    """Compute type, verdict, profile and rule statuses without raising."""
    tau = same_order_type(order_spectrum(group))
    verdict = is_arithmetic_progression(tau)
    profile = group.structural_profile()
    findings = theorem_findings(group.size, tau, verdict, profile)
    return ClassificationRecord(group.label, group.size, tau, verdict, profile, findings)


def classify(group: FiniteGroup) -> ClassificationRecord:
    """Like classification_record, but a violated rule is raised as a hard failure."""
    record = classification_record(group)
    for finding in record.violations:
        raise TheoremViolation(finding.theorem, group.label, record)
    return record
