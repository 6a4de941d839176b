"""Verification suites over the built-in corpus.

Each suite sweeps the corpus up to a size bound, evaluates a fixed set of
structural rules on every group, and fails loudly on any violation:

    audit   -- per-group divisibility facts (divisor sums, s_p mod p, the
               cubic bound, phi(n) | s_n) plus the odd-order three-type
               distinctness rule
    thm11   -- groups with two class sizes are nilpotent and match one of
               the four known shapes
    thm23   -- among groups with three class sizes that are not 2-groups
               with repeated involutions, a progression pins the group to
               the nonabelian order-6 one
    prop25  -- no prime-power group has a four-term progression
    thm26   -- no nilpotent group has a four-term progression (includes the
               odd-order case)
    prop22  -- a progression never has more than four terms
    search4 -- no group at all has a four-term progression, no type equals
               {1,2,3,4} or {1,4,7,10}, and the three-term witnesses stay
               unique
    all     -- everything above

A suite returns a VerificationReport; nonempty failures raise SuiteFailure
carrying the report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .classify import classification_record
from .corpus import MAX_CORPUS_ORDER, builtin_corpus
from .errors import BadParameter, SuiteFailure
from .expr import eval_expr
from .group import FiniteGroup, StructuralProfile
from .numtheory import prime_divisors
from .stats import OrderSpectrum, divisibility_audit, order_spectrum

SUITE_NAMES = ("audit", "thm11", "thm23", "prop25", "thm26", "prop22", "search4", "all")

_SUITE_CHECKS = {
    "audit": ("lemma21",),
    "thm11": ("thm11",),
    "thm23": ("thm23",),
    "prop25": ("prop25",),
    "thm26": ("thm26", "lemma24"),
    "prop22": ("prop22",),
    "search4": ("open-problem", "ratio-parity", "excluded-types", "thm23"),
}
_SUITE_CHECKS["all"] = tuple(
    dict.fromkeys(key for keys in _SUITE_CHECKS.values() for key in keys)
)

#: Four-term types ruled out by ratio parity and the ratio > 3 bound.
EXCLUDED_TYPES = ((1, 2, 3, 4), (1, 4, 7, 10))


@dataclass
class SuiteFinding:
    """Per-group result row: the computed facts plus one status per rule."""

    label: str
    order: int
    tau: tuple[int, ...]
    is_ap: bool
    ratio: int | None
    statuses: dict[str, str]
    problems: list[str]

    def as_dict(self) -> dict:
        return {
            "group": self.label,
            "order": self.order,
            "tau": list(self.tau),
            "ap": self.is_ap,
            "ratio": self.ratio,
            "theorems": dict(self.statuses),
        }


@dataclass
class VerificationReport:
    suite: str
    groups_checked: int
    findings: list[SuiteFinding]
    failures: list[dict]
    wall_time_ms: int

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "groupsChecked": self.groups_checked,
            "findings": [f.as_dict() for f in self.findings],
            "failures": list(self.failures),
            "wallTimeMs": self.wall_time_ms,
        }


def _two_type_shape(
    order: int, spectrum: OrderSpectrum, profile: StructuralProfile
) -> bool:
    """Whether a group with exactly two class sizes matches one of the four
    known shapes: exponent-p p-group of order >= 3, the order-8 group with a
    unique involution, the cyclic group of order 4, or C_2 times an
    odd-prime exponent-p group."""
    if profile.p_group_prime is not None and order >= 3 and profile.exponent == profile.p_group_prime:
        return True
    if order == 8 and spectrum.counts == {1: 1, 2: 1, 4: 6}:
        return True
    if order == 4 and spectrum.counts == {1: 1, 2: 1, 4: 2}:
        return True
    primes = profile.prime_divisors
    if (
        len(primes) == 2
        and primes[0] == 2
        and order % 2 == 0
        and (order // 2) % primes[1] == 0
        and profile.exponent == 2 * primes[1]
        and spectrum.s(2) == 1
    ):
        odd_part = order // 2
        while odd_part % primes[1] == 0:
            odd_part //= primes[1]
        return odd_part == 1
    return False


def _lemma21_status(
    group: FiniteGroup, spectrum: OrderSpectrum, tau: tuple[int, ...]
) -> tuple[str, list[str]]:
    problems = divisibility_audit(group).failures()
    if group.size % 2 == 1 and len(tau) == 3:
        for p, q in combinations(prime_divisors(group.size), 2):
            if spectrum.s(p) == spectrum.s(q):
                problems.append(f"odd order with three class sizes but s_{p} = s_{q}")
    return ("violated" if problems else "consistent"), problems


def evaluate_group(group: FiniteGroup) -> SuiteFinding:
    """Compute every rule status for one group."""
    record = classification_record(group)
    spectrum = order_spectrum(group)
    statuses = {f.theorem: f.status for f in record.findings}
    problems = [f"{f.theorem}: {f.note}" for f in record.violations]

    lemma21, audit_problems = _lemma21_status(group, spectrum, record.tau)
    statuses["lemma21"] = lemma21
    problems.extend(f"lemma21: {p}" for p in audit_problems)

    if record.tau_size == 2:
        shaped = record.profile.is_nilpotent and _two_type_shape(
            group.size, spectrum, record.profile
        )
        statuses["thm11"] = "consistent" if shaped else "violated"
        if not shaped:
            problems.append("thm11: two class sizes but no known nilpotent shape")
    else:
        statuses["thm11"] = "not-applicable"

    if record.tau in EXCLUDED_TYPES:
        statuses["excluded-types"] = "violated"
        problems.append(f"excluded-types: type {record.tau} should never occur")
    else:
        statuses["excluded-types"] = "consistent"

    return SuiteFinding(
        label=group.label,
        order=group.size,
        tau=record.tau,
        is_ap=record.verdict.is_ap,
        ratio=record.verdict.ratio,
        statuses=statuses,
        problems=problems,
    )


def _collect_failures(findings: list[SuiteFinding], checks: tuple[str, ...]) -> list[dict]:
    failures = []
    for finding in findings:
        for check in checks:
            if finding.statuses.get(check) == "violated":
                details = [p for p in finding.problems if p.startswith(f"{check}:")]
                failures.append(
                    {
                        "group": finding.label,
                        "check": check,
                        "detail": "; ".join(details) or f"{check} violated",
                    }
                )
    return failures


def run_suite(name: str, max_order: int = 256) -> VerificationReport:
    """Run one suite over the corpus; raises SuiteFailure if anything fails."""
    if name not in SUITE_NAMES:
        raise BadParameter(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    if not 1 <= max_order <= MAX_CORPUS_ORDER:
        raise BadParameter(f"max_order must be in 1..{MAX_CORPUS_ORDER}")
    started = time.perf_counter()
    findings = [evaluate_group(eval_expr(e)) for e in builtin_corpus(max_order)]
    findings.sort(key=lambda f: (f.order, f.label))
    checks = _SUITE_CHECKS[name]
    failures = _collect_failures(findings, checks)
    if "thm23" in checks and max_order >= 6:
        if not any(f.statuses.get("thm23") == "consistent" and f.is_ap for f in findings):
            failures.append(
                {
                    "group": "(corpus)",
                    "check": "thm23",
                    "detail": "expected at least one order-6 three-term witness",
                }
            )
    wall_ms = int(round((time.perf_counter() - started) * 1000))
    report = VerificationReport(name, len(findings), findings, failures, wall_ms)
    if failures:
        raise SuiteFailure(report)
    return report
