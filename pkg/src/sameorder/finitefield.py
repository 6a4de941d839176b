"""Arithmetic in the finite field with p**t elements.

Elements are indexed 0..p**t-1 by reading the index as base-p digits,
digit i giving the coefficient of x**i of a residue polynomial modulo a
fixed monic irreducible of degree t.  The modulus is chosen as the
irreducible polynomial with the smallest digit encoding, and the reference
generator is the lowest-index element of full multiplicative order, so the
realization is identical from run to run.
"""

from __future__ import annotations

from .numtheory import is_prime


def _poly_from_index(code: int, p: int, t: int) -> list[int]:
    coeffs = []
    for _ in range(t):
        code, c = divmod(code, p)
        coeffs.append(c)
    return coeffs


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic; standard long division, little-endian coefficients
    a = list(a)
    deg_m = len(mod) - 1
    for i in range(len(a) - 1, deg_m - 1, -1):
        c = a[i] % p
        if c:
            shift = i - deg_m
            for j, mj in enumerate(mod):
                a[shift + j] = (a[shift + j] - c * mj) % p
    return a[:deg_m]


def _is_irreducible(poly: list[int], p: int) -> bool:
    t = len(poly) - 1
    for d in range(1, t // 2 + 1):
        for code in range(p**d):
            divisor = _poly_from_index(code, p, d) + [1]
            if not any(_poly_rem(poly, divisor, p)):
                return False
    return True


def irreducible_polynomial(p: int, t: int) -> tuple[int, ...]:
    """Monic irreducible of degree t over Z/p with the smallest digit encoding.

    Returned little-endian including the leading 1.
    """
    for code in range(p**t):
        poly = _poly_from_index(code, p, t) + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {t} over Z/{p}")


class GaloisField:
    """The field GF(p**t) with deterministic element indexing."""

    def __init__(self, p: int, t: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if t < 1:
            raise ValueError("degree must be positive")
        self.p = p
        self.t = t
        self.size = p**t
        self.modulus = irreducible_polynomial(p, t)

    def _encode(self, coeffs: list[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        pa = _poly_from_index(a, self.p, self.t)
        pb = _poly_from_index(b, self.p, self.t)
        return self._encode(_poly_rem(_poly_mul(pa, pb, self.p), list(self.modulus), self.p))

    def pow(self, a: int, k: int) -> int:
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        order = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            order += 1
        return order

    def primitive_element(self) -> int:
        full = self.size - 1
        for g in range(1, self.size):
            if self.multiplicative_order(g) == full:
                return g
        raise AssertionError("field has no generator")
