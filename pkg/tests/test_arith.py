import math

import pytest
from hypothesis import given, strategies as st

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


class TestSymmetricRep:
    def test_known_values(self):
        assert symmetric_rep(-280, 43).value == 21
        assert symmetric_rep(0, 1).value == 0
        assert symmetric_rep(22, 43).value == -21
        assert symmetric_rep(-21, 43).value == -21

    def test_boundary_is_positive_half(self):
        # m/2 itself is kept, -m/2 maps to +m/2
        assert symmetric_rep(2, 4).value == 2
        assert symmetric_rep(-2, 4).value == 2

    @given(st.integers(), st.integers(min_value=1, max_value=10**6))
    def test_congruent_and_in_range(self, x, m):
        rc = symmetric_rep(x, m)
        assert (rc.value - x) % m == 0
        assert -m < 2 * rc.value <= m

    def test_rejects_bad_modulus(self):
        with pytest.raises(ValueError):
            symmetric_rep(1, 0)


class TestModInverse:
    def test_known_values(self):
        assert mod_inverse(symmetric_rep(-21, 43)).value == 2
        assert mod_inverse(symmetric_rep(1, 97)).value == 1

    def test_not_a_unit(self):
        with pytest.raises(NotAUnit):
            mod_inverse(symmetric_rep(3, 9))

    @given(st.integers(min_value=2, max_value=10**5), st.integers())
    def test_involution(self, m, x):
        rc = symmetric_rep(x, m)
        if math.gcd(rc.value, m) != 1:
            return
        inv = mod_inverse(rc)
        assert (inv.value * rc.value) % m == 1 % m
        assert mod_inverse(inv) == rc


class TestReduceModZ:
    def test_known_values(self):
        assert reduce_mod_z(-5074, 516) == RationalModZ(1, 6)
        assert reduce_mod_z(7, 1) == RationalModZ(0, 1)
        assert reduce_mod_z(1, 2) == RationalModZ(1, 2)
        assert reduce_mod_z(-1, 2) == RationalModZ(1, 2)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            reduce_mod_z(1, 0)

    @given(st.integers(), st.integers().filter(lambda d: d != 0))
    def test_idempotent_and_in_range(self, n, d):
        q = reduce_mod_z(n, d)
        again = reduce_mod_z(q.numerator, q.denominator)
        assert q == again
        assert -q.denominator < 2 * q.numerator <= q.denominator
        assert math.gcd(q.numerator, q.denominator) == 1

    @given(st.integers(), st.integers(min_value=1))
    def test_addition_with_negation_is_zero(self, n, d):
        q = reduce_mod_z(n, d)
        assert (q + (-q)).is_zero()

    def test_scaling_matches_fraction_arithmetic(self):
        # s22 = 2 r s2 for the smallest tabulated space
        s2 = reduce_mod_z(-59, 516)
        assert s2.scaled(2 * 43) == RationalModZ(1, 6)


class TestFourSquare:
    def test_known_values(self):
        assert four_square(0).parts == (0, 0, 0, 0)
        assert four_square(7).parts == (2, 1, 1, 1)
        assert four_square(43).parts == (5, 3, 3, 0)
        assert four_square(13).parts == (3, 2, 0, 0)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            four_square(-1)

    @given(st.integers(min_value=0, max_value=10**6))
    def test_exact_sum(self, n):
        fs = four_square(n)
        assert fs.total() == n
        assert fs.a1 >= fs.a2 >= fs.a3 >= fs.a4 >= 0

    def test_ordering_enforced(self):
        with pytest.raises(ValueError):
            FourSquare(1, 2, 0, 0)


class TestResidueAlgebra:
    def test_ring_ops_stay_symmetric(self):
        a = symmetric_rep(20, 43)
        b = symmetric_rep(30, 43)
        assert (a + b).value == 7
        assert (a - b).value == -10
        assert (a * b).value == symmetric_rep(600, 43).value
        assert (-a).value == -20

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            symmetric_rep(1, 5) + symmetric_rep(1, 7)
