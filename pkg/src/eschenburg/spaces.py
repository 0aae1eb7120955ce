"""Eschenburg space parameter vectors and their cheap invariants.

An Eschenburg space M(k,l) is the quotient of SU(3) by the free circle
action  z.A = diag(z^k1, z^k2, z^k3) A diag(z^l1, z^l2, z^l3)^(-1),
specified by six integers with k1+k2+k3 = l1+l2+l3.  This module holds
the parameter bookkeeping and the polynomially computable invariants:

    r     = |sigma2(k) - sigma2(l)|      (order of H^4, always odd)
    s     in Z_r^x                        (determines the linking form)
    sigma in Z_3                          (sigma1 mod 3)
    p1    = 2 sigma1(l)^2 - 6 sigma2(l)  in Z_r   (first Pontryagin class)

Sign convention for s: tables of published invariants print the
symmetric representative of sigma3(l) - sigma3(k) mod r, and this module
follows them so reports can be compared verbatim.  Since all grouping is
performed up to a simultaneous orientation flip, the global sign choice
has no effect on any classification output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from eschenburg.arith import (
    RationalModZ,
    ResidueClass,
    mod_inverse,
    reduce_mod_z,
    symmetric_rep,
)


class DegenerateSpace(ValueError):
    """Raised when sigma2(k) = sigma2(l), i.e. the putative H^4 order is 0."""


Triple = tuple[int, int, int]


def elementary_symmetric(t: Triple, i: int) -> int:
    """The i-th elementary symmetric polynomial of a triple, i in {1,2,3}."""
    a, b, c = t
    if i == 1:
        return a + b + c
    if i == 2:
        return a * b + b * c + a * c
    if i == 3:
        return a * b * c
    raise ValueError(f"i must be 1, 2 or 3, got {i}")


@dataclass(frozen=True, order=True)
class ParameterVector:
    """Six integer parameters (k1,k2,k3,l1,l2,l3) of an Eschenburg space."""

    k1: int
    k2: int
    k3: int
    l1: int
    l2: int
    l3: int

    @property
    def k(self) -> Triple:
        return (self.k1, self.k2, self.k3)

    @property
    def l(self) -> Triple:
        return (self.l1, self.l2, self.l3)

    @classmethod
    def from_sequence(cls, seq) -> "ParameterVector":
        vals = [int(x) for x in seq]
        if len(vals) != 6:
            raise ValueError(f"need six integers, got {len(vals)}")
        return cls(*vals)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.k1, self.k2, self.k3, self.l1, self.l2, self.l3)

    def is_balanced(self) -> bool:
        """Whether sigma1(k) = sigma1(l) (necessary for the action to exist)."""
        return elementary_symmetric(self.k, 1) == elementary_symmetric(self.l, 1)

    def __str__(self) -> str:
        return "({}, {}, {}, {}, {}, {})".format(*self.as_tuple())


def satisfies_standard_form(pv: ParameterVector) -> bool:
    """The positively curved normal form k1 >= k2 > l1 >= l2 >= l3 = 0."""
    return (
        pv.is_balanced()
        and pv.l3 == 0
        and pv.l2 >= 0
        and pv.l1 >= pv.l2
        and pv.k2 > pv.l1
        and pv.k1 >= pv.k2
    )


def is_free_action(pv: ParameterVector) -> bool:
    """Whether the circle action defined by (k,l) is free.

    The action is free iff for every permutation t of the l-entries the
    matched differences k_i - l_{t(i)} are coprime; since the three
    differences sum to zero, checking one pair per permutation suffices.
    """
    if not pv.is_balanced():
        return False
    k = pv.k
    l = pv.l
    for lp in permutations(l):
        if math.gcd(k[0] - lp[0], k[1] - lp[1]) != 1:
            return False
    return True


@dataclass(frozen=True)
class BasicInvariants:
    """The cheap invariants (r, s, sigma, p1) of one Eschenburg space.

    s and sigma carry symmetric representatives; p1 is orientation
    insensitive and is stored as the least nonnegative residue in [0, r),
    the form in which this invariant is conventionally tabulated.
    sigma2_diff = sigma2(k) - sigma2(l) is carried along (signed) because
    the linking number needs it.
    """

    r: int
    s: ResidueClass
    sigma: ResidueClass
    p1: int
    sigma2_diff: int

    def __post_init__(self):
        if self.r % 2 == 0:
            raise AssertionError(f"H^4 order r = {self.r} must be odd")
        if math.gcd(self.s.value, self.r) != 1:
            raise AssertionError(f"s = {self.s.value} must be a unit mod {self.r}")
        if not (0 <= self.p1 < self.r):
            raise AssertionError(f"p1 = {self.p1} out of range for r = {self.r}")


def basic_invariants(pv: ParameterVector) -> BasicInvariants:
    """Compute (r, s, sigma, p1) for a free, balanced parameter vector."""
    if not pv.is_balanced():
        raise ValueError(f"sigma1(k) != sigma1(l) for {pv}")
    s2k = elementary_symmetric(pv.k, 2)
    s2l = elementary_symmetric(pv.l, 2)
    diff = s2k - s2l
    if diff == 0:
        raise DegenerateSpace(f"H^4 order is zero for {pv}")
    r = abs(diff)
    s = symmetric_rep(
        elementary_symmetric(pv.l, 3) - elementary_symmetric(pv.k, 3), r
    )
    sig1 = elementary_symmetric(pv.l, 1)
    sigma = symmetric_rep(sig1, 3)
    p1 = (2 * sig1 * sig1 - 6 * s2l) % r
    return BasicInvariants(r=r, s=s, sigma=sigma, p1=p1, sigma2_diff=diff)


def linking_number(inv: BasicInvariants, sigma2_diff: int | None = None) -> RationalModZ:
    """The linking number -s^(-1) / (sigma2(k) - sigma2(l)) in Q/Z."""
    d = inv.sigma2_diff if sigma2_diff is None else sigma2_diff
    if d == 0:
        raise DegenerateSpace("sigma2 difference is zero")
    s_inv = mod_inverse(inv.s)
    return reduce_mod_z(-s_inv.value, d)


@dataclass(frozen=True)
class OrientedTuple:
    """Invariants that change sign under an orientation flip.

    r and p1 are orientation-insensitive and are carried alongside;
    s, sigma, s22 and s2 flip simultaneously.
    """

    r: int
    s: ResidueClass
    sigma: ResidueClass
    p1: int
    s22: RationalModZ | None = None
    s2: RationalModZ | None = None


def orientation_flip(t: OrientedTuple) -> OrientedTuple:
    return OrientedTuple(
        r=t.r,
        s=-t.s,
        sigma=-t.sigma,
        p1=t.p1,
        s22=None if t.s22 is None else -t.s22,
        s2=None if t.s2 is None else -t.s2,
    )


def _sort_key(t: OrientedTuple):
    key = [t.s.value, t.sigma.value]
    if t.s22 is not None:
        key.append(t.s22.fraction)
    if t.s2 is not None:
        key.append(t.s2.fraction)
    return tuple(key)


def canonical_sign_form(t: OrientedTuple) -> OrientedTuple:
    """The lexicographically smaller of t and its orientation flip.

    Idempotent, and equal for t and flip(t); grouping by this canonical
    form realizes "the invariants agree up to a simultaneous sign change".
    """
    f = orientation_flip(t)
    return t if _sort_key(t) <= _sort_key(f) else f
