"""Reference invariants for explicitly known Eschenburg spaces.

Each row: (k1,k2,k3,l1,l2,l3), r, s, sigma, p1, s22, s2 where s22/s2 are
(num, den) pairs in lowest terms with representative in (-1/2, 1/2], or
None when condition (C) fails and the Kreck-Stolz invariants have no
closed evaluation.  These values are frozen oracles; every one of them
must be reproduced exactly.
"""

from fractions import Fraction

# Pairs that are homotopy equivalent but not tangentially homotopy
# equivalent (consecutive rows pair up), smallest r first.
HOMOTOPY_NOT_TANGENTIAL_ROWS = [
    ((8, 7, -5, 6, 4, 0), 43, -21, 1, 13, Fraction(1, 6), Fraction(-59, 516)),
    ((21, 21, -2, 20, 20, 0), 43, -21, 1, 26, Fraction(1, 6), Fraction(55, 516)),
    ((12, 10, -8, 9, 5, 0), 101, -50, -1, 21, Fraction(1, 6), Fraction(565, 1212)),
    ((50, 50, -2, 49, 49, 0), 101, -50, -1, 55, Fraction(1, 6), Fraction(-125, 1212)),
    ((19, 17, -7, 16, 13, 0), 137, -68, -1, 23, Fraction(1, 6), Fraction(-743, 1644)),
    ((68, 68, -2, 67, 67, 0), 137, -68, -1, 73, Fraction(1, 6), Fraction(241, 1644)),
    ((30, 26, -6, 25, 25, 0), 181, -26, -1, 164, Fraction(-1, 6), Fraction(-193, 2172)),
    ((16, 16, -10, 13, 9, 0), 181, 26, 1, 85, Fraction(1, 6), Fraction(-443, 2172)),
    ((15, 14, -11, 12, 6, 0), 181, -43, 0, 35, Fraction(0), Fraction(-55, 181)),
    ((45, 43, -4, 42, 42, 0), 181, -43, 0, 89, Fraction(0), Fraction(36, 181)),
    ((16, 13, -11, 12, 6, 0), 183, -91, 0, 33, Fraction(-1, 6), Fraction(-991, 2196)),
    ((91, 91, -2, 90, 90, 0), 183, -91, 0, 96, Fraction(-1, 6), Fraction(413, 2196)),
]

# Pairs that are tangentially homotopy equivalent but not homeomorphic.
TANGENTIAL_NOT_HOMEO_ROWS = [
    ((58, 54, -34, 39, 39, 0), 2197, 1032, 0, 845, Fraction(1, 2), Fraction(1147, 8788)),
    ((45, 41, -47, 39, 0, 0), 2197, 1032, 0, 845, Fraction(1, 2), Fraction(-3247, 8788)),
    ((81, 69, -84, 56, 10, 0), 7571, 74, 0, 5352, Fraction(1, 2), Fraction(-9219, 30284)),
    ((108, 63, -69, 56, 46, 0), 7571, 74, 0, 5352, Fraction(1, 2), Fraction(5923, 30284)),
    ((88, 61, -107, 30, 12, 0), 10935, -5179, 0, 1368, Fraction(-1, 6), Fraction(55529, 131220)),
    ((77, 77, -106, 30, 18, 0), 10935, 5179, 0, 1368, Fraction(1, 6), Fraction(-11789, 131220)),
    ((79, 58, -131, 6, 0, 0), 13365, -1183, 0, 72, Fraction(1, 3), Fraction(-3794, 8019)),
    ((92, 47, -127, 6, 6, 0), 13365, 1183, 0, 72, Fraction(-1, 3), Fraction(-1552, 8019)),
    ((115, 79, -116, 72, 6, 0), 13851, 1184, 0, 9576, Fraction(-1, 6), Fraction(-77167, 166212)),
    ((128, 107, -97, 72, 66, 0), 13851, -1184, 0, 9576, Fraction(1, 6), Fraction(-61343, 166212)),
    ((1112, 1111, -13, 1110, 1100, 0), 14467, 2246, -1, 11744, Fraction(-1, 6), Fraction(68945, 173604)),
    ((127, 103, -106, 88, 36, 0), 14467, -2246, 1, 11744, Fraction(1, 6), Fraction(17857, 173604)),
]

# Further examples: the minimal condition-C failure (M0), the minimal
# pair whose comparison is blocked by a condition-C failure (M1, M2),
# and a six-tuple of homotopy equivalent spaces with pairwise distinct
# p1 (M3..M8).  None for s22/s2 encodes "condition C fails".
EXAMPLE_ROWS = [
    ((35, 21, -34, 12, 10, 0), 1289, 499, 1, 248, None, None),
    ((440, 168, -320, 159, 129, 0), 141151, -58968, 0, 42822, Fraction(0), Fraction(-35047, 141151)),
    ((400, 168, -352, 165, 51, 0), 141151, -58968, 0, 42822, None, None),
    ((410, 259, -457, 192, 20, 0), 203383, -79707, -1, 66848, Fraction(-1, 6), Fraction(614891, 2440596)),
    ((548, 497, -335, 374, 336, 0), 203383, -79707, -1, 50833, Fraction(-1, 6), Fraction(-621835, 2440596)),
    ((370, 287, -457, 126, 74, 0), 203383, -79707, -1, 24056, Fraction(-1, 6), Fraction(404657, 2440596)),
    ((610, 491, -325, 462, 314, 0), 203383, -79707, -1, 130561, Fraction(-1, 6), Fraction(123017, 2440596)),
    ((650, 491, -305, 432, 404, 0), 203383, -79707, -1, 147241, Fraction(-1, 6), Fraction(659411, 2440596)),
    ((548, 469, -355, 432, 230, 0), 203383, -79707, -1, 76945, Fraction(-1, 6), Fraction(-947995, 2440596)),
]

ALL_ROWS = HOMOTOPY_NOT_TANGENTIAL_ROWS + TANGENTIAL_NOT_HOMEO_ROWS + EXAMPLE_ROWS

# Rows where condition (C) holds and s22/s2 are known exactly.
KS_ROWS = [row for row in ALL_ROWS if row[5] is not None]

# r-multiset of the "first" homotopy-but-not-tangential pairs.
FIRST_HNT_PAIR_ORDERS = [43, 101, 137, 181, 181, 183]
