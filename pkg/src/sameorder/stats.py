"""Order spectra, same-order types, and the divisibility audit.

The spectrum of a group maps each element order n to s_n, the number of
elements of that order; the same-order type is the set of distinct class
sizes appearing in the spectrum (equal counts for different orders collapse
to one entry).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InternalInconsistency
from .group import FiniteGroup
from .numtheory import divisors, euler_phi, prime_divisors


@dataclass(frozen=True)
class OrderSpectrum:
    """Map from element order to the count of elements of that order.

    Only nonzero counts are stored; the key set is exactly the set of
    element orders occurring in the group.
    """

    group_order: int
    counts: dict[int, int]

    def s(self, n: int) -> int:
        return self.counts.get(n, 0)

    def orders(self) -> list[int]:
        return sorted(self.counts)

    def max_count(self) -> int:
        return max(self.counts.values())


def order_spectrum(group: FiniteGroup) -> OrderSpectrum:
    """Exact element-order counts, from the order of every element."""
    counts = Counter(int(o) for o in group.element_orders())
    return OrderSpectrum(group.size, dict(sorted(counts.items())))


SameOrderType = tuple[int, ...]


def same_order_type(spectrum: OrderSpectrum) -> SameOrderType:
    """Strictly increasing tuple of the distinct class sizes in the spectrum."""
    return tuple(sorted(set(spectrum.counts.values())))


def cyclic_subgroup_count(group: FiniteGroup, n: int) -> int:
    """Number of cyclic subgroups of order n, computed two independent ways.

    Route one divides s_n by phi(n); route two enumerates the distinct
    subgroups <x> of size n directly.  A mismatch is an engine bug.
    """
    if n < 1:
        raise ValueError("subgroup order must be positive")
    spectrum = order_spectrum(group)
    s_n = spectrum.s(n)
    phi = euler_phi(n)
    by_count, remainder = divmod(s_n, phi)
    seen: set[frozenset[int]] = set()
    orders = group.element_orders()
    for x in range(group.size):
        if int(orders[x]) != n:
            continue
        member = x
        generated = {group.identity}
        while member != group.identity:
            generated.add(member)
            member = group.mul(member, x)
        seen.add(frozenset(generated))
    if remainder or by_count != len(seen):
        raise InternalInconsistency(
            f"c_{n} of {group.label}: s_n/phi(n) gives {s_n}/{phi} "
            f"but direct enumeration found {len(seen)}"
        )
    return by_count


@dataclass(frozen=True)
class AuditReport:
    """Divisibility facts that hold in every finite group, checked per instance.

    All flags are True on any valid group; a False flag signals an engine
    bug, not a property of the input.
    """

    frobenius_ok: dict[int, bool]  # n | sum of s_m over m dividing n, per divisor n
    sylow_congruence_ok: dict[int, bool]  # s_p = -1 mod p, per prime p dividing |G|
    bound_ok: bool  # |G| <= s(s^2 - 1) for s the largest class size (when s >= 2)
    totient_divisibility_ok: dict[int, bool]  # phi(n) | s_n, per occurring order n

    def failures(self) -> list[str]:
        out = []
        out.extend(f"divisor-sum rule fails at n={n}" for n, ok in self.frobenius_ok.items() if not ok)
        out.extend(f"s_p != -1 mod p at p={p}" for p, ok in self.sylow_congruence_ok.items() if not ok)
        if not self.bound_ok:
            out.append("group order exceeds s(s^2-1)")
        out.extend(
            f"phi({n}) does not divide s_{n}" for n, ok in self.totient_divisibility_ok.items() if not ok
        )
        return out

    @property
    def all_ok(self) -> bool:
        return not self.failures()


def divisibility_audit(group: FiniteGroup) -> AuditReport:
    """Evaluate every audit flag for one group; failures are reported, not raised."""
    spectrum = order_spectrum(group)
    size = group.size
    frobenius = {
        n: sum(spectrum.s(m) for m in divisors(n)) % n == 0 for n in divisors(size)
    }
    sylow = {p: spectrum.s(p) % p == p - 1 for p in (prime_divisors(size) if size > 1 else ())}
    largest = spectrum.max_count()
    # The cubic bound needs a class of size >= 2 to say anything; groups of
    # order 1 and 2 have only singleton classes and are exempt.
    bound_ok = largest < 2 or size <= largest * (largest * largest - 1)
    totient = {n: c % euler_phi(n) == 0 for n, c in spectrum.counts.items()}
    return AuditReport(frobenius, sylow, bound_ok, totient)
