"""The built-in corpus: a deterministic sweep of every constructible family.

The corpus is constructive rather than exhaustive-by-isomorphism: it
enumerates the named families up to a size bound, which is what the
verification suites sweep.  Duplicate labels are dropped; the list is
sorted by (order, label) and is identical from run to run.
"""

from __future__ import annotations

import math

from .errors import BadParameter
from .expr import Atom, GroupExpr, Product, render
from .numtheory import euler_phi, multiplicative_order, prime_factors, primes_upto

#: Hard ceiling on the corpus sweep (constructors refuse larger tables).
MAX_CORPUS_ORDER = 512


def expr_order(expr: GroupExpr) -> int:
    """Order of the group an expression denotes, without building it."""
    if isinstance(expr, Product):
        return expr_order(expr.left) * expr_order(expr.right)
    name, args = expr.name, expr.args
    if name in ("C", "D", "Q", "SD"):
        return args[0]
    if name == "EA":
        return args[0] ** args[1]
    if name == "Hol":
        return args[0] * euler_phi(args[0])
    if name in ("Sym", "Alt"):
        full = math.factorial(args[0])
        return full if name == "Sym" else max(1, full // 2)
    if name == "SL2":
        return args[0] * (args[0] ** 2 - 1)
    if name == "FrobInv":
        return args[0] ** args[1] * (2 if args[2] == "c2" else 4)
    if name == "FrobF":
        return args[0] ** args[1] * args[2]
    if name == "Aff":
        return args[0] * multiplicative_order(args[1], args[0])
    if name == "CP":
        return expr_order(args[0]) * expr_order(args[1]) // 2
    raise BadParameter(f"cannot size expression atom {name!r}")


def _padded(base: GroupExpr, copies: int) -> GroupExpr:
    """base preceded by a left-associated chain of `copies` C(2) factors."""
    chain: GroupExpr = Atom("C", (2,))
    for _ in range(copies - 1):
        chain = Product(chain, Atom("C", (2,)))
    return Product(chain, base)


def builtin_corpus(max_order: int = 256) -> list[GroupExpr]:
    """Every corpus expression of order at most max_order, sorted by (order, label)."""
    if not 1 <= max_order <= MAX_CORPUS_ORDER:
        raise BadParameter(f"max_order must be in 1..{MAX_CORPUS_ORDER}")
    exprs: list[GroupExpr] = []

    exprs.extend(Atom("C", (n,)) for n in range(1, max_order + 1))
    exprs.extend(Atom("D", (n,)) for n in range(4, max_order + 1, 2))
    exprs.extend(Atom("Q", (2**k,)) for k in range(3, 10) if 2**k <= max_order)
    exprs.extend(Atom("SD", (2**k,)) for k in range(4, 10) if 2**k <= max_order)

    for p in primes_upto(max_order):
        power = p
        t = 1
        while power <= max_order:
            exprs.append(Atom("EA", (p, t)))
            power *= p
            t += 1

    for n in range(1, 6):
        for name in ("Sym", "Alt"):
            e = Atom(name, (n,))
            if expr_order(e) <= max_order:
                exprs.append(e)
    for p in (2, 3, 5):
        e = Atom("SL2", (p,))
        if expr_order(e) <= max_order:
            exprs.append(e)
    for n in range(1, 17):
        e = Atom("Hol", (n,))
        if expr_order(e) <= max_order:
            exprs.append(e)

    for p in primes_upto(max_order // 2):
        if p == 2:
            continue
        power = p
        t = 1
        while 2 * power <= max_order:
            exprs.append(Atom("FrobInv", (p, t, "c2")))
            if 4 * power <= max_order:
                exprs.append(Atom("FrobInv", (p, t, "c4")))
            power *= p
            t += 1

    for p in primes_upto(max_order // 3):
        power = p
        t = 1
        while 3 * power <= max_order:
            for q in sorted(prime_factors(power - 1)):
                if q != 2 and power * q <= max_order:
                    exprs.append(Atom("FrobF", (p, t, q)))
            power *= p
            t += 1

    witnesses = [Atom("Hol", (8,)), Atom("CP", (Atom("D", (8,)), Atom("D", (16,))))]
    for base in witnesses:
        base_order = expr_order(base)
        if base_order <= max_order:
            exprs.append(base)
        copies = 1
        while base_order * 2**copies <= max_order:
            exprs.append(_padded(base, copies))
            copies += 1

    unique: dict[str, GroupExpr] = {}
    for e in exprs:
        unique.setdefault(render(e), e)
    return sorted(unique.values(), key=lambda e: (expr_order(e), render(e)))
