"""Finite groups as dense Cayley tables, plus the structural algorithms built on them.

A group of order n carries its elements as the indices 0..n-1 and a full
n x n multiplication table.  Everything downstream (order spectra,
same-order types, the verification suites) works through this one
representation, so validation here is strict: Latin square, two-sided
identity, two-sided inverses, and (optionally) the cubic associativity
scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import BadParameter, NotAGroup, NotASubgroup, NotNormal
from .numtheory import divisors, prime_divisors, prime_power_base

#: Largest table accepted for the full O(n^3) associativity scan.
FULL_CHECK_LIMIT = 1024


@dataclass(frozen=True)
class StructuralProfile:
    """Coarse structural facts about one group, as used by the classification rules."""

    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    p_group_prime: int | None
    exponent: int
    center_size: int
    c2: int
    prime_divisors: tuple[int, ...]


class FiniteGroup:
    """Immutable finite group over element indices 0..size-1.

    ``table[i, j]`` is the index of the product of elements i and j.  The
    table is frozen after construction; all methods are pure.
    """

    __slots__ = ("size", "table", "identity", "inverses", "label", "_orders")

    def __init__(self, table: np.ndarray, identity: int, inverses: np.ndarray, label: str):
        self.size = int(table.shape[0])
        self.table = table
        self.identity = int(identity)
        self.inverses = inverses
        self.label = label
        self._orders: np.ndarray | None = None
        table.setflags(write=False)
        inverses.setflags(write=False)

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.label!r} order {self.size}>"

    def with_label(self, label: str) -> "FiniteGroup":
        """Same group, new display label (tables are shared)."""
        clone = FiniteGroup(self.table, self.identity, self.inverses, label)
        clone._orders = self._orders
        return clone

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inverse(self, i: int) -> int:
        return int(self.inverses[i])

    def power(self, x: int, k: int) -> int:
        """x**k by binary exponentiation; O(log k) table lookups."""
        if not 0 <= x < self.size:
            raise IndexError(f"element {x} out of range for order-{self.size} group")
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        result = self.identity
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, x: int) -> int:
        """Smallest d with x**d = identity, scanning the sorted divisors of the group order."""
        for d in divisors(self.size):
            if self.power(x, d) == self.identity:
                return d
        raise AssertionError("unreachable: element order divides group order")

    def element_orders(self) -> np.ndarray:
        """Orders of all elements (computed once, then cached)."""
        if self._orders is None:
            self._orders = np.fromiter(
                (self.element_order(x) for x in range(self.size)),
                dtype=np.int64,
                count=self.size,
            )
            self._orders.setflags(write=False)
        return self._orders

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def subgroup_generated(self, seeds: Iterable[int]) -> list[int]:
        """Closure of the seeds and the identity under products and inverses, sorted."""
        members = {self.identity}
        queue = []
        for s in seeds:
            s = int(s)
            if s not in members:
                members.add(s)
                queue.append(s)
        while queue:
            g = queue.pop()
            inv = self.inverse(g)
            if inv not in members:
                members.add(inv)
                queue.append(inv)
            for h in list(members):
                for prod in (self.mul(g, h), self.mul(h, g)):
                    if prod not in members:
                        members.add(prod)
                        queue.append(prod)
        return sorted(members)

    def center(self) -> list[int]:
        """Elements commuting with everything, sorted."""
        table = self.table
        return [z for z in range(self.size) if np.array_equal(table[z], table[:, z])]

    def _derived_of(self, members: Sequence[int]) -> list[int]:
        sub = np.asarray(members, dtype=np.intp)
        inv = self.inverses[sub]
        lefts = self.table[np.ix_(inv, inv)]
        rights = self.table[np.ix_(sub, sub)]
        commutators = np.unique(self.table[lefts, rights])
        return self.subgroup_generated(int(c) for c in commutators)

    def derived_subgroup(self) -> list[int]:
        """Subgroup generated by all commutators i^-1 j^-1 i j, sorted."""
        return self._derived_of(range(self.size))

    def derived_series(self) -> list[list[int]]:
        """Successive derived subgroups down to a fixed point, starting at the whole group."""
        series = [list(range(self.size))]
        while True:
            nxt = self._derived_of(series[-1])
            if len(nxt) == len(series[-1]):
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return len(self.derived_series()[-1]) == 1

    def is_nilpotent(self) -> bool:
        """True iff, for every prime p dividing the order, the elements of
        p-power order are closed under multiplication (i.e. form the unique
        Sylow p-subgroup)."""
        orders = self.element_orders()
        for p in prime_divisors(self.size) if self.size > 1 else ():
            reduced = orders.copy()
            while True:
                mask = reduced % p == 0
                if not mask.any():
                    break
                reduced[mask] //= p
            p_power = reduced == 1
            idx = np.flatnonzero(p_power)
            if not p_power[self.table[np.ix_(idx, idx)]].all():
                return False
        return True

    def quotient(self, members: Iterable[int], label: str | None = None) -> "FiniteGroup":
        """Coset group modulo a normal subgroup; cosets are ordered by their
        minimal representative index."""
        sub = np.asarray(sorted({int(m) for m in members}), dtype=np.intp)
        if sub.size == 0 or self.identity not in sub:
            raise NotASubgroup("subset does not contain the identity")
        in_sub = np.zeros(self.size, dtype=bool)
        in_sub[sub] = True
        if not in_sub[self.table[np.ix_(sub, sub)]].all():
            raise NotASubgroup("subset is not closed under multiplication")
        for g in range(self.size):
            conj = self.table[self.table[g, sub], self.inverse(g)]
            if not in_sub[conj].all():
                raise NotNormal(f"conjugation by element {g} moves the subgroup")
        coset_of = np.full(self.size, -1, dtype=np.intp)
        reps = []
        for i in range(self.size):
            if coset_of[i] < 0:
                coset_of[self.table[i, sub]] = len(reps)
                reps.append(i)
        reps_arr = np.asarray(reps, dtype=np.intp)
        new_table = coset_of[self.table[np.ix_(reps_arr, reps_arr)]]
        if label is None:
            label = f"{self.label}/N{sub.size}"
        return from_cayley_table(new_table, label, check_level="structural")

    def structural_profile(self) -> StructuralProfile:
        orders = self.element_orders()
        distinct = sorted({int(o) for o in orders})
        return StructuralProfile(
            is_abelian=self.is_abelian(),
            is_nilpotent=self.is_nilpotent(),
            is_solvable=self.is_solvable(),
            p_group_prime=prime_power_base(self.size),
            exponent=reduce(math.lcm, distinct, 1),
            center_size=len(self.center()),
            c2=int(np.count_nonzero(orders == 2)),
            prime_divisors=prime_divisors(self.size) if self.size > 1 else (),
        )


def _check_latin(table: np.ndarray) -> None:
    n = table.shape[0]
    expected = np.arange(n)
    if not np.array_equal(np.sort(table, axis=1), np.broadcast_to(expected, table.shape)):
        bad = int(np.flatnonzero(np.sort(table, axis=1) != expected)[0]) // n
        raise NotAGroup(f"row {bad} is not a permutation of 0..{n - 1}")
    if not np.array_equal(np.sort(table, axis=0), np.broadcast_to(expected[:, None], table.shape)):
        bad = int(np.flatnonzero((np.sort(table, axis=0) != expected[:, None]).any(axis=0))[0])
        raise NotAGroup(f"column {bad} is not a permutation of 0..{n - 1}")


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    expected = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], expected) and np.array_equal(table[:, e], expected):
            return e
    raise NotAGroup("no two-sided identity element")


def _find_inverses(table: np.ndarray, identity: int) -> np.ndarray:
    n = table.shape[0]
    inverses = np.empty(n, dtype=np.intp)
    for i in range(n):
        j = int(np.flatnonzero(table[i] == identity)[0])
        if table[j, i] != identity:
            raise NotAGroup(f"element {i} has no two-sided inverse")
        inverses[i] = j
    return inverses


def _check_associative(table: np.ndarray) -> None:
    n = table.shape[0]
    for i in range(n):
        left = table[table[i]]  # (i*j)*k
        right = table[i][table]  # i*(j*k)
        if not np.array_equal(left, right):
            j, k = map(int, np.argwhere(left != right)[0])
            raise NotAGroup(f"associativity fails at triple ({i}, {j}, {k})")


def from_cayley_table(table, label: str = "G", check_level: str = "full") -> FiniteGroup:
    """Validate a multiplication table and wrap it as a FiniteGroup.

    ``check_level="full"`` runs the O(n^3) associativity scan (refused above
    ``FULL_CHECK_LIMIT`` elements); ``"structural"`` stops after the Latin
    square, identity and inverse checks.
    """
    if check_level not in ("full", "structural"):
        raise ValueError(f"unknown check level {check_level!r}")
    table = np.ascontiguousarray(np.asarray(table, dtype=np.intp))
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise NotAGroup(f"table must be square, got shape {table.shape}")
    n = table.shape[0]
    if n == 0:
        raise NotAGroup("table is empty")
    if table.min() < 0 or table.max() >= n:
        raise NotAGroup(f"table entries must lie in 0..{n - 1}")
    if check_level == "full" and n > FULL_CHECK_LIMIT:
        raise BadParameter(
            f"full associativity check refused for order {n} > {FULL_CHECK_LIMIT}; "
            "pass check_level='structural'"
        )
    _check_latin(table)
    identity = _find_identity(table)
    inverses = _find_inverses(table, identity)
    if check_level == "full":
        _check_associative(table)
    return FiniteGroup(table, identity, inverses, label)
