"""Exact-arithmetic classification of positively curved Eschenburg spaces.

Subpackages / modules:

- ``arith``: residue classes with symmetric representatives, exact Q/Z
  values, four-square decompositions.
- ``spaces``: parameter vectors, the standard positively curved normal
  form, action freeness, and the cheap invariants r, s, sigma, p1.
- ``kreck_stolz``: condition (C) and the Kreck-Stolz invariants s2, s22.
- ``classify``: exhaustive enumeration and the grouping pipeline
  (homotopy / tangential homotopy / homeomorphism classes).
- ``bundles``: stable vector-bundle calculus over spaces with cyclic H^2
  and finite cyclic H^4 (sigma4, line-bundle decompositions, rank bounds).
- ``cli``: the ``esch`` command line tool.
"""

from eschenburg.arith import (
    FourSquare,
    NotAUnit,
    RationalModZ,
    ResidueClass,
    ZeroDenominator,
    four_square,
    mod_inverse,
    reduce_mod_z,
    symmetric_rep,
)
from eschenburg.spaces import (
    BasicInvariants,
    DegenerateSpace,
    OrientedTuple,
    ParameterVector,
    basic_invariants,
    canonical_sign_form,
    elementary_symmetric,
    is_free_action,
    linking_number,
    orientation_flip,
    satisfies_standard_form,
)
from eschenburg.kreck_stolz import KreckStolzResult, condition_c, kreck_stolz

__all__ = [
    "FourSquare",
    "NotAUnit",
    "RationalModZ",
    "ResidueClass",
    "ZeroDenominator",
    "four_square",
    "mod_inverse",
    "reduce_mod_z",
    "symmetric_rep",
    "BasicInvariants",
    "DegenerateSpace",
    "OrientedTuple",
    "ParameterVector",
    "basic_invariants",
    "canonical_sign_form",
    "elementary_symmetric",
    "is_free_action",
    "linking_number",
    "orientation_flip",
    "satisfies_standard_form",
    "KreckStolzResult",
    "condition_c",
    "kreck_stolz",
]
