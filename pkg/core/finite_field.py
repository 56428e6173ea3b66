"""GF(2^m) arithmetic in polynomial basis.

Elements are m-bit integers (bit j = coefficient of x^j); multiplication is
shift-and-reduce modulo the field's defining polynomial. The field context
is immutable and safe to share across worker threads.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from config.settings import FIELD_CONFIG
from core.errors import FieldError
from core.polynomial import BinaryPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FieldElement:
    value: int

    def __int__(self) -> int:
        return self.value


def _prime_factors(n: int) -> List[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def is_irreducible(poly: BinaryPolynomial) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = poly.degree
    if d < 1:
        return False
    for bits in range(2, 1 << (d // 2 + 1)):
        if (poly % BinaryPolynomial(bits)).is_zero():
            return False
    return True


def _mulmod(a: int, b: int, modulus: int, m: int) -> int:
    top = 1 << m
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return out


def _powmod(a: int, e: int, modulus: int, m: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _mulmod(result, a, modulus, m)
        a = _mulmod(a, a, modulus, m)
        e >>= 1
    return result


def x_is_primitive(modulus: BinaryPolynomial) -> bool:
    """True iff the class of x has order 2^m - 1 modulo an irreducible modulus."""
    m = modulus.degree
    order = (1 << m) - 1
    x = 0b10 if m > 1 else 0b1
    if _powmod(x, order, modulus.bits, m) != 1:
        return False
    return all(_powmod(x, order // p, modulus.bits, m) != 1 for p in _prime_factors(order))


def _check_degree(m: int):
    if not FIELD_CONFIG['min_m'] <= m <= FIELD_CONFIG['max_m']:
        raise FieldError(f"out of range: m={m} (supported {FIELD_CONFIG['min_m']}..{FIELD_CONFIG['max_m']})")


@lru_cache(maxsize=None)
def default_modulus(m: int) -> BinaryPolynomial:
    """Smallest-integer primitive polynomial of degree m."""
    _check_degree(m)
    for bits in range((1 << m) + 1, 1 << (m + 1), 2):
        candidate = BinaryPolynomial(bits)
        if is_irreducible(candidate) and x_is_primitive(candidate):
            logger.debug(f"默认模多项式 m={m}: {candidate}")
            return candidate
    raise FieldError(f"no primitive polynomial of degree {m}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) context; alpha is the class of x."""
    m: int
    modulus: BinaryPolynomial
    generator_check: bool = True

    @property
    def order(self) -> int:
        """Size of the multiplicative group, n = 2^m - 1."""
        return (1 << self.m) - 1

    def element(self, value: int) -> FieldElement:
        if not 0 <= value < (1 << self.m):
            raise FieldError(f"value {value} is not an element of GF(2^{self.m})")
        return FieldElement(value)

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(a.value ^ b.value)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return FieldElement(_mulmod(a.value, b.value, self.modulus.bits, self.m))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        if e < 0:
            return self.pow(self.inverse(a), -e)
        return FieldElement(_powmod(a.value, e, self.modulus.bits, self.m))

    def inverse(self, a: FieldElement) -> FieldElement:
        if a.value == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 1)

    def alpha_power(self, i: int) -> FieldElement:
        return FieldElement(_powmod(0b10, i % self.order, self.modulus.bits, self.m))

    def multiplicative_order(self, a: FieldElement) -> int:
        if a.value == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        order = self.order
        for p in _prime_factors(self.order):
            while order % p == 0 and self.pow(a, order // p).value == 1:
                order //= p
        return order


def field_new(m: int, modulus: Optional[BinaryPolynomial] = None) -> FieldSpec:
    """Validate (or pick) the modulus and return an immutable field context."""
    _check_degree(m)
    if modulus is None:
        modulus = default_modulus(m)
    else:
        if modulus.degree != m:
            raise FieldError(f"out of range: modulus {modulus} has degree {modulus.degree}, expected {m}")
        if not is_irreducible(modulus):
            raise FieldError(f"not irreducible: {modulus}")
        if not x_is_primitive(modulus):
            raise FieldError(f"not primitive: x does not generate GF(2^{m})* modulo {modulus}")
    logger.debug(f"构造 GF(2^{m})，模多项式 {modulus}")
    return FieldSpec(m=m, modulus=modulus, generator_check=True)


def mul(a: FieldElement, b: FieldElement, ctx: FieldSpec) -> FieldElement:
    return ctx.mul(a, b)


def cyclotomic_coset(i: int, n: int) -> Tuple[int, ...]:
    """{ i * 2^j mod n }, sorted; the first entry is the coset leader."""
    i %= n
    coset = {i}
    j = (2 * i) % n
    while j not in coset:
        coset.add(j)
        j = (2 * j) % n
    return tuple(sorted(coset))


def minimal_polynomial(i: int, ctx: FieldSpec) -> BinaryPolynomial:
    """Product of (x - alpha^j) over the cyclotomic coset of i, reduced to GF(2)."""
    # 系数为 GF(2^m) 元素，低次在前
    coeffs = [1]
    for j in cyclotomic_coset(i, ctx.order):
        root = ctx.alpha_power(j).value
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] ^= c
            nxt[k] ^= _mulmod(c, root, ctx.modulus.bits, ctx.m)
        coeffs = nxt
    if any(c > 1 for c in coeffs):
        raise FieldError(f"minimal polynomial of alpha^{i} has coefficients outside GF(2)")
    return BinaryPolynomial.from_coefficients(coeffs)
