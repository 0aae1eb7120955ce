"""Condition (C) and the Kreck-Stolz invariants s2, s22.

For a free parameter vector (k,l), closed evaluation of the Kreck-Stolz
invariants is available when the 3x3 difference matrix d[i][j] = k_i - l_j
has a column or a row whose three entries are nonzero and pairwise
coprime ("condition (C)").  Geometrically such a column presents the
space as a Seifert fibration over a weighted projective plane with three
isolated cyclic singularities, which is what makes the invariants
computable in closed form; rows correspond to the same structure on the
parameter-transposed model of the same space.

s2 lives in Q/Z and is an invariant of oriented homeomorphism type;
s22 = 2*r*s2 is an invariant of oriented homotopy type.  Both are
computed exactly (no floating point anywhere: equality in Q/Z is the
classification predicate).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from eschenburg.arith import RationalModZ, rational_mod_z
from eschenburg.spaces import ParameterVector, basic_invariants, is_free_action


def _pairwise_coprime_nonzero(a: int, b: int, c: int) -> bool:
    if a == 0 or b == 0 or c == 0:
        return False
    return (
        math.gcd(a, b) == 1 and math.gcd(a, c) == 1 and math.gcd(b, c) == 1
    )


def _good_columns(pv: ParameterVector) -> list[int]:
    """Indices j with (k1-lj, k2-lj, k3-lj) nonzero and pairwise coprime."""
    out = []
    for j, lj in enumerate(pv.l):
        if _pairwise_coprime_nonzero(pv.k1 - lj, pv.k2 - lj, pv.k3 - lj):
            out.append(j)
    return out


def _good_rows(pv: ParameterVector) -> list[int]:
    out = []
    for i, ki in enumerate(pv.k):
        if _pairwise_coprime_nonzero(ki - pv.l1, ki - pv.l2, ki - pv.l3):
            out.append(i)
    return out


def condition_c(pv: ParameterVector) -> bool:
    """Whether the closed Kreck-Stolz expressions apply to (k,l)."""
    return bool(_good_columns(pv)) or bool(_good_rows(pv))


@dataclass(frozen=True)
class KreckStolzResult:
    """Outcome of a Kreck-Stolz evaluation.

    s2 and s22 are present exactly when condition_c is True, and then
    satisfy s22 = 2*r*s2 in Q/Z (asserted at construction time).
    """

    condition_c: bool
    s2: RationalModZ | None = None
    s22: RationalModZ | None = None

    def __post_init__(self):
        if self.condition_c and (self.s2 is None or self.s22 is None):
            raise ValueError("condition C holds but invariants are missing")
        if not self.condition_c and (self.s2 is not None or self.s22 is not None):
            raise ValueError("condition C fails but invariants are present")


def kreck_stolz(pv: ParameterVector) -> KreckStolzResult:
    """Exact s2, s22 of M(k,l), or a condition-C failure marker."""
    if not is_free_action(pv):
        raise ValueError(f"action is not free for {pv}")
    if not condition_c(pv):
        return KreckStolzResult(condition_c=False)
    from eschenburg.ks_engine import s2_invariant

    inv = basic_invariants(pv)
    s2 = rational_mod_z(s2_invariant(pv))
    s22 = s2.scaled(2 * inv.r)
    return KreckStolzResult(condition_c=True, s2=s2, s22=s22)
