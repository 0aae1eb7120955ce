"""Exact modular and rational arithmetic primitives.

Everything here is pure, stateless and exact (Python integers, no
floats).  Residue classes carry *symmetric* representatives in
(-m/2, m/2], and elements of Q/Z carry reduced representatives in
(-1/2, 1/2]; with these conventions the values printed by the reporting
layer can be compared verbatim against reference tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class NotAUnit(ValueError):
    """Raised when inverting a residue that is not a unit."""


class ZeroDenominator(ZeroDivisionError):
    """Raised when a rational is built with denominator zero."""


@dataclass(frozen=True)
class ResidueClass:
    """An element of Z_m, stored as the symmetric representative.

    Invariants: modulus >= 1 and -modulus/2 < value <= modulus/2.
    """

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        if not (-self.modulus < 2 * self.value <= self.modulus):
            raise ValueError(
                f"{self.value} is not a symmetric representative mod {self.modulus}"
            )

    def __add__(self, other: "ResidueClass") -> "ResidueClass":
        self._check_compatible(other)
        return symmetric_rep(self.value + other.value, self.modulus)

    def __sub__(self, other: "ResidueClass") -> "ResidueClass":
        self._check_compatible(other)
        return symmetric_rep(self.value - other.value, self.modulus)

    def __mul__(self, other: "ResidueClass") -> "ResidueClass":
        self._check_compatible(other)
        return symmetric_rep(self.value * other.value, self.modulus)

    def __neg__(self) -> "ResidueClass":
        return symmetric_rep(-self.value, self.modulus)

    def _check_compatible(self, other: "ResidueClass") -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} != {other.modulus}")

    def is_unit(self) -> bool:
        return math.gcd(self.value, self.modulus) == 1

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def symmetric_rep(x: int, m: int) -> ResidueClass:
    """Reduce x mod m to the representative in (-m/2, m/2]."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    v = x % m
    if 2 * v > m:
        v -= m
    return ResidueClass(v, m)


def mod_inverse(x: ResidueClass) -> ResidueClass:
    """Inverse of a unit in Z_m, as a symmetric representative."""
    g, inv, _ = _ext_gcd(x.value, x.modulus)
    if g != 1:
        raise NotAUnit(f"{x.value} is not a unit mod {x.modulus} (gcd {g})")
    return symmetric_rep(inv, x.modulus)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class RationalModZ:
    """An element of Q/Z: reduced fraction with value in (-1/2, 1/2]."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be >= 1")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError(
                f"{self.numerator}/{self.denominator} is not reduced"
            )
        if not (-self.denominator < 2 * self.numerator <= self.denominator):
            raise ValueError(
                f"{self.numerator}/{self.denominator} is not in (-1/2, 1/2]"
            )

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other: "RationalModZ") -> "RationalModZ":
        s = self.fraction + other.fraction
        return reduce_mod_z(s.numerator, s.denominator)

    def __neg__(self) -> "RationalModZ":
        return reduce_mod_z(-self.numerator, self.denominator)

    def __sub__(self, other: "RationalModZ") -> "RationalModZ":
        return self + (-other)

    def scaled(self, c: int) -> "RationalModZ":
        """The class of c * (self) in Q/Z."""
        return reduce_mod_z(c * self.numerator, self.denominator)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def __str__(self) -> str:
        if self.denominator == 1:
            return "0"
        return f"{self.numerator}/{self.denominator}"


def reduce_mod_z(num: int, den: int) -> RationalModZ:
    """Canonicalize num/den in Q/Z: reduced, representative in (-1/2, 1/2]."""
    if den == 0:
        raise ZeroDenominator("denominator is zero")
    if den < 0:
        num, den = -num, -den
    g = math.gcd(num, den)
    num //= g
    den //= g
    num %= den  # now 0 <= num < den
    if 2 * num > den:
        num -= den
    if num == 0:
        return RationalModZ(0, 1)
    return RationalModZ(num, den)


def rational_mod_z(q: Fraction) -> RationalModZ:
    """Canonicalize an exact Fraction in Q/Z."""
    return reduce_mod_z(q.numerator, q.denominator)


@dataclass(frozen=True)
class FourSquare:
    """A representation n = a1^2 + a2^2 + a3^2 + a4^2, sorted descending."""

    a1: int
    a2: int
    a3: int
    a4: int

    def __post_init__(self):
        if not (self.a1 >= self.a2 >= self.a3 >= self.a4 >= 0):
            raise ValueError("four-square entries must be sorted descending, >= 0")

    @property
    def parts(self) -> tuple[int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4)

    def total(self) -> int:
        return self.a1**2 + self.a2**2 + self.a3**2 + self.a4**2


def _two_square(n: int) -> tuple[int, int] | None:
    """First b1 >= b2 >= 0 with b1^2 + b2^2 = n, b1 descending; None if none."""
    b1 = math.isqrt(n)
    while 2 * b1 * b1 >= n:
        rem = n - b1 * b1
        b2 = math.isqrt(rem)
        if b2 * b2 == rem:
            return (b1, b2)
        b1 -= 1
    return None


def _sum_of_three_squares_possible(n: int) -> bool:
    """Legendre: n is a sum of three squares iff n != 4^a (8b + 7)."""
    while n % 4 == 0 and n > 0:
        n //= 4
    return n % 8 != 7


def four_square(n: int) -> FourSquare:
    """Some representation of n >= 0 as a sum of four squares.

    Bounded brute force: a1 descends from isqrt(n), then a2 ascends with a
    greedy two-square completion.  Deterministic, exact, and fast for the
    sizes that occur here (targets never exceed the H^4 order).
    """
    if n < 0:
        raise ValueError("four_square requires n >= 0")
    if n % 4 == 0 and n > 0:
        half = four_square(n // 4)
        return FourSquare(*(2 * a for a in half.parts))
    a1 = math.isqrt(n)
    while a1 >= 0:
        rem1 = n - a1 * a1
        if _sum_of_three_squares_possible(rem1):
            a2 = 0
            while a2 * a2 <= rem1 and a2 <= a1:
                pair = _two_square(rem1 - a2 * a2)
                if pair is not None and pair[0] <= a1:
                    vals = sorted((a1, a2, *pair), reverse=True)
                    return FourSquare(*vals)
                a2 += 1
        a1 -= 1
    raise AssertionError(f"no four-square decomposition found for {n}")
