"""Builders for the group families the library studies.

Every constructor returns a validated FiniteGroup with a deterministic
element ordering, so labels, spectra and reports are identical from run to
run.  Tables are capped at CONSTRUCTOR_LIMIT elements.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import AmbiguousCenter, BadParameter, InvalidAction
from .finitefield import GaloisField
from .group import FiniteGroup, from_cayley_table
from .numtheory import euler_phi, is_prime, multiplicative_order

#: Largest group any constructor will build.
CONSTRUCTOR_LIMIT = 512


def _guard_size(n: int, what: str) -> None:
    if n > CONSTRUCTOR_LIMIT:
        raise BadParameter(f"{what} would have {n} > {CONSTRUCTOR_LIMIT} elements")


def _wrap(table: np.ndarray, label: str) -> FiniteGroup:
    # Construction formulas are associative by design; the structural checks
    # (Latin square, identity, inverses) still run on every output.
    return from_cayley_table(table, label, check_level="structural")


def cyclic(n: int) -> FiniteGroup:
    """C_n: residues mod n under addition."""
    if n < 1:
        raise BadParameter("cyclic group order must be positive")
    _guard_size(n, f"C({n})")
    idx = np.arange(n, dtype=np.intp)
    return _wrap(np.add.outer(idx, idx) % n, f"C({n})")


def _two_part_table(order: int, exponent_rule) -> np.ndarray:
    """Table for groups of shape {x^i y^j : 0 <= i < order/2, j in {0,1}}.

    Element x^i y^j sits at index j*(order/2) + i; ``exponent_rule`` maps the
    broadcast pieces (I1, J1, I2) to the x-exponent of the product.
    """
    m = order // 2
    idx = np.arange(order, dtype=np.intp)
    i, j = idx % m, idx // m
    i1, j1 = i[:, None], j[:, None]
    i2, j2 = i[None, :], j[None, :]
    return (exponent_rule(i1, j1, i2, j2) % m) + m * ((j1 + j2) % 2)


def dihedral(order: int) -> FiniteGroup:
    """D_order: rotations r^i at indices 0..m-1 and reflections r^i s at m..2m-1,
    with s r s = r^-1."""
    if order < 4 or order % 2:
        raise BadParameter("dihedral group order must be even and at least 4")
    _guard_size(order, f"D({order})")
    table = _two_part_table(order, lambda i1, j1, i2, j2: i1 + np.where(j1 == 1, -1, 1) * i2)
    return _wrap(table, f"D({order})")


def generalized_quaternion(order: int) -> FiniteGroup:
    """Q_order for order = 2^k, k >= 3: a^i at 0..m-1 and a^i b at m..2m-1,
    with b^2 = a^(m/2) and b a b^-1 = a^-1; has a unique involution."""
    k = order.bit_length() - 1
    if order < 8 or order != 1 << k:
        raise BadParameter("generalized quaternion order must be a power of two, at least 8")
    _guard_size(order, f"Q({order})")
    half_turn = order // 4  # b^2 = a^(order/4) inside C_(order/2)
    table = _two_part_table(
        order,
        lambda i1, j1, i2, j2: i1 + np.where(j1 == 1, -1, 1) * i2 + half_turn * (j1 & j2),
    )
    return _wrap(table, f"Q({order})")


def semidihedral(order: int) -> FiniteGroup:
    """SD_order for order = 2^k, k >= 4: conjugation by y sends x to x^(order/4 - 1)."""
    k = order.bit_length() - 1
    if order < 16 or order != 1 << k:
        raise BadParameter("semidihedral order must be a power of two, at least 16")
    _guard_size(order, f"SD({order})")
    twist = order // 4 - 1
    table = _two_part_table(
        order, lambda i1, j1, i2, j2: i1 + np.where(j1 == 1, twist, 1) * i2
    )
    return _wrap(table, f"SD({order})")


def _permutation_table(perms: list[tuple[int, ...]], label: str) -> FiniteGroup:
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.intp)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[q[k]] for k in range(len(q)))]
    return _wrap(table, label)


def symmetric(n: int) -> FiniteGroup:
    """S_n: all permutations of 0..n-1, ordered lexicographically by one-line notation."""
    if n < 1 or n > 7:
        raise BadParameter("symmetric group degree must be in 1..7")
    _guard_size(math.factorial(n), f"Sym({n})")
    return _permutation_table(list(itertools.permutations(range(n))), f"Sym({n})")


def _parity(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    return inversions % 2


def alternating(n: int) -> FiniteGroup:
    """A_n: even permutations of 0..n-1, ordered lexicographically."""
    if n < 1 or n > 7:
        raise BadParameter("alternating group degree must be in 1..7")
    _guard_size(max(1, math.factorial(n) // 2), f"Alt({n})")
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _permutation_table(perms, f"Alt({n})")


def sl2(p: int) -> FiniteGroup:
    """SL(2, p): 2x2 determinant-1 matrices over Z/p, ordered lexicographically
    by entries (a, b, c, d)."""
    if not is_prime(p) or p > 7:
        raise BadParameter("SL2 parameter must be a prime at most 7")
    _guard_size(p * (p * p - 1), f"SL2({p})")
    elems = [
        (a, b, c, d)
        for a in range(p)
        for b in range(p)
        for c in range(p)
        for d in range(p)
        if (a * d - b * c) % p == 1
    ]
    index = {m: i for i, m in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.intp)
    for i, (a1, b1, c1, d1) in enumerate(elems):
        for j, (a2, b2, c2, d2) in enumerate(elems):
            table[i, j] = index[
                (
                    (a1 * a2 + b1 * c2) % p,
                    (a1 * b2 + b1 * d2) % p,
                    (c1 * a2 + d1 * c2) % p,
                    (c1 * b2 + d1 * d2) % p,
                )
            ]
    return _wrap(table, f"SL2({p})")


def elementary_abelian(p: int, t: int) -> FiniteGroup:
    """(C_p)^t: length-t vectors over Z/p under addition, indexed base-p
    (digit i of the index is coordinate i)."""
    if not is_prime(p):
        raise BadParameter(f"{p} is not prime")
    if t < 1:
        raise BadParameter("exponent t must be positive")
    n = p**t
    _guard_size(n, f"EA({p},{t})")
    idx = np.arange(n, dtype=np.intp)
    table = np.zeros((n, n), dtype=np.intp)
    place = 1
    for _ in range(t):
        digit = (idx // place) % p
        table += ((digit[:, None] + digit[None, :]) % p) * place
        place *= p
    return _wrap(table, f"EA({p},{t})")


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """A x B with the pair (x, y) at index x*|B| + y."""
    n = a.size * b.size
    _guard_size(n, f"{a.label} x {b.label}")
    idx = np.arange(n, dtype=np.intp)
    a1, b1 = (idx // b.size)[:, None], (idx % b.size)[:, None]
    a2, b2 = (idx // b.size)[None, :], (idx % b.size)[None, :]
    table = a.table[a1, a2] * b.size + b.table[b1, b2]
    right = f"({b.label})" if " x " in b.label else b.label
    return _wrap(table, f"{a.label} x {right}")


def _validate_action(normal: FiniteGroup, acting: FiniteGroup, action: np.ndarray) -> None:
    if action.shape != (acting.size, normal.size):
        raise InvalidAction(
            f"action table must have shape ({acting.size}, {normal.size}), got {action.shape}"
        )
    if action.min() < 0 or action.max() >= normal.size:
        raise InvalidAction("action entries out of range")
    expected = np.arange(normal.size)
    if not np.array_equal(action[acting.identity], expected):
        raise InvalidAction("identity of the acting group must act trivially")
    for h in range(acting.size):
        perm = action[h]
        if not np.array_equal(np.sort(perm), expected):
            raise InvalidAction(f"action of element {h} is not a permutation")
        if not np.array_equal(perm[normal.table], normal.table[np.ix_(perm, perm)]):
            raise InvalidAction(f"action of element {h} is not an automorphism")
    for h1 in range(acting.size):
        for h2 in range(acting.size):
            if not np.array_equal(action[acting.mul(h1, h2)], action[h1][action[h2]]):
                raise InvalidAction(f"action is not a homomorphism at pair ({h1}, {h2})")


def semidirect_product(
    normal: FiniteGroup, acting: FiniteGroup, action, label: str | None = None
) -> FiniteGroup:
    """N x| H for an action mapping each H-element to an automorphism of N.

    ``action[h]`` is a permutation of N's indices; the pair (n, h) sits at
    index n*|H| + h and multiplies as (n1, h1)(n2, h2) = (n1 * h1(n2), h1 h2).
    """
    action = np.asarray(action, dtype=np.intp)
    _validate_action(normal, acting, action)
    n = normal.size * acting.size
    _guard_size(n, label or f"{normal.label} : {acting.label}")
    idx = np.arange(n, dtype=np.intp)
    n1, h1 = (idx // acting.size)[:, None], (idx % acting.size)[:, None]
    n2, h2 = (idx // acting.size)[None, :], (idx % acting.size)[None, :]
    table = normal.table[n1, action[h1, n2]] * acting.size + acting.table[h1, h2]
    return _wrap(table, label or f"{normal.label} : {acting.label}")


def frobenius_inversion(p: int, t: int, extension: str) -> FiniteGroup:
    """(C_p)^t extended by C_2 (extension="c2") or C_4 ("c4"), the generator
    acting by negation; the C_4 case acts through its order-2 quotient."""
    if extension not in ("c2", "c4"):
        raise BadParameter("extension must be 'c2' or 'c4'")
    if not is_prime(p) or p == 2:
        raise BadParameter("p must be an odd prime")
    if t < 1:
        raise BadParameter("exponent t must be positive")
    top = 2 if extension == "c2" else 4
    _guard_size(p**t * top, f"FrobInv({p},{t},{extension})")
    kernel = elementary_abelian(p, t)
    negate = np.asarray(kernel.inverses, dtype=np.intp)
    ident = np.arange(kernel.size, dtype=np.intp)
    action = [ident if j % 2 == 0 else negate for j in range(top)]
    return semidirect_product(kernel, cyclic(top), action, f"FrobInv({p},{t},{extension})")


def frobenius_field(p: int, t: int, q: int) -> FiniteGroup:
    """Additive group of GF(p^t) extended by C_q acting as multiplication by a
    field element of multiplicative order q (a fixed-point-free action).

    The acting element is g**((p^t - 1)/q) for the field's reference
    generator g, so the construction is deterministic.
    """
    if not is_prime(p):
        raise BadParameter(f"{p} is not prime")
    if t < 1:
        raise BadParameter("exponent t must be positive")
    if not is_prime(q) or q == 2:
        raise BadParameter("q must be an odd prime")
    size = p**t
    if (size - 1) % q:
        raise BadParameter(f"{q} does not divide {size} - 1")
    _guard_size(size * q, f"FrobF({p},{t},{q})")
    field = GaloisField(p, t)
    scalar = field.pow(field.primitive_element(), (size - 1) // q)
    action = []
    for j in range(q):
        power = field.pow(scalar, j)
        action.append([field.mul(power, v) for v in range(size)])
    kernel = elementary_abelian(p, t)  # same base-p digit indexing as the field
    return semidirect_product(kernel, cyclic(q), action, f"FrobF({p},{t},{q})")


def holomorph_cyclic(n: int) -> FiniteGroup:
    """C_n extended by its full automorphism group: the units mod n under
    multiplication, unit u acting as x -> x*u."""
    if n < 1 or n > 64:
        raise BadParameter("holomorph parameter must be in 1..64")
    units = [u for u in range(n) if math.gcd(u, n) == 1]
    _guard_size(n * len(units), f"Hol({n})")
    index = {u: i for i, u in enumerate(units)}
    m = len(units)
    unit_table = np.empty((m, m), dtype=np.intp)
    for i, u in enumerate(units):
        for j, v in enumerate(units):
            unit_table[i, j] = index[(u * v) % n]
    acting = from_cayley_table(unit_table, f"U({n})", check_level="structural")
    base = np.arange(n, dtype=np.intp)
    action = [(base * u) % n for u in units]
    return semidirect_product(cyclic(n), acting, action, f"Hol({n})")


def central_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """A o B: the direct product modulo the identification of the two unique
    central involutions."""
    def central_involution(g: FiniteGroup) -> int:
        found = [z for z in g.center() if g.element_order(z) == 2]
        if len(found) != 1:
            raise AmbiguousCenter(
                f"{g.label} has {len(found)} central involutions; need exactly one"
            )
        return found[0]

    za, zb = central_involution(a), central_involution(b)
    product = direct_product(a, b)
    fused = product.subgroup_generated([za * b.size + zb])
    return product.quotient(fused, label=f"CP({a.label},{b.label})")


def affine_cyclic(n: int, a: int) -> FiniteGroup:
    """C_n extended by the cyclic group generated by x -> x*a, for a unit a mod n."""
    if n < 1:
        raise BadParameter("modulus must be positive")
    a %= n
    if n > 1 and math.gcd(a, n) != 1:
        raise BadParameter(f"{a} is not a unit mod {n}")
    m = multiplicative_order(a, n)
    _guard_size(n * m, f"Aff({n},{a})")
    base = np.arange(n, dtype=np.intp)
    action = [(base * pow(a, j, n)) % n for j in range(m)]
    return semidirect_product(cyclic(n), cyclic(m), action, f"Aff({n},{a})")
