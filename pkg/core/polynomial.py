"""Polynomials over GF(2) stored as integer bit vectors (bit j = coefficient of x^j)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

ZERO_DEGREE = -1  # 零多项式的次数


@dataclass(frozen=True, order=True)
class BinaryPolynomial:
    bits: int

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError(f"coefficient vector must be nonnegative, got {self.bits}")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> 'BinaryPolynomial':
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int]) -> 'BinaryPolynomial':
        """Build from coefficients listed lowest degree first."""
        bits = 0
        for j, c in enumerate(coefficients):
            if c not in (0, 1):
                raise ValueError(f"coefficient {c} at x^{j} is not binary")
            bits |= c << j
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1 if self.bits else ZERO_DEGREE

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        return BinaryPolynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        a, b, out = self.bits, other.bits, 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return BinaryPolynomial(out)

    def __divmod__(self, other: 'BinaryPolynomial') -> Tuple['BinaryPolynomial', 'BinaryPolynomial']:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem, quo = self.bits, 0
        d = other.degree
        while rem and rem.bit_length() - 1 >= d:
            shift = rem.bit_length() - 1 - d
            quo ^= 1 << shift
            rem ^= other.bits << shift
        return BinaryPolynomial(quo), BinaryPolynomial(rem)

    def __mod__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        return divmod(self, other)[1]

    def __floordiv__(self, other: 'BinaryPolynomial') -> 'BinaryPolynomial':
        return divmod(self, other)[0]

    def divides(self, other: 'BinaryPolynomial') -> bool:
        return (other % self).is_zero()

    def __str__(self) -> str:
        if self.is_zero():
            return '0'
        terms = []
        for j in range(self.degree, -1, -1):
            if (self.bits >> j) & 1:
                terms.append('1' if j == 0 else 'x' if j == 1 else f'x^{j}')
        return ' + '.join(terms)


def x_power_minus_one(n: int) -> BinaryPolynomial:
    """x^n + 1 (= x^n - 1 over GF(2))."""
    return BinaryPolynomial((1 << n) | 1)
