import pytest
from hypothesis import given, strategies as st

from eschenburg.arith import RationalModZ, reduce_mod_z, symmetric_rep
from eschenburg.spaces import (
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

from table_data import ALL_ROWS


def pv(*vals) -> ParameterVector:
    return ParameterVector(*vals)


class TestElementarySymmetric:
    def test_known_values(self):
        assert elementary_symmetric((8, 7, -5), 2) == -19
        assert elementary_symmetric((6, 4, 0), 3) == 0
        assert elementary_symmetric((58, 54, -34), 1) == 78

    @given(st.tuples(st.integers(), st.integers(), st.integers()))
    def test_viete(self, t):
        # (x-a)(x-b)(x-c) = x^3 - s1 x^2 + s2 x - s3, checked at x = 1
        s1 = elementary_symmetric(t, 1)
        s2 = elementary_symmetric(t, 2)
        s3 = elementary_symmetric(t, 3)
        a, b, c = t
        assert (1 - a) * (1 - b) * (1 - c) == 1 - s1 + s2 - s3


class TestStandardForm:
    def test_examples(self):
        assert satisfies_standard_form(pv(8, 7, -5, 6, 4, 0))
        assert not satisfies_standard_form(pv(8, 7, -5, 6, 4, 1))
        assert not satisfies_standard_form(pv(7, 8, -5, 6, 4, 0))

    def test_all_table_rows_are_standard(self):
        for row in ALL_ROWS:
            assert satisfies_standard_form(ParameterVector.from_sequence(row[0]))


class TestFreeness:
    def test_examples(self):
        assert is_free_action(pv(8, 7, -5, 6, 4, 0))
        assert is_free_action(pv(35, 21, -34, 12, 10, 0))
        assert not is_free_action(pv(2, 2, -4, 2, -2, 0))

    def test_unbalanced_is_not_free(self):
        assert not is_free_action(pv(1, 1, 1, 1, 1, 0))

    def test_all_table_rows_are_free(self):
        for row in ALL_ROWS:
            assert is_free_action(ParameterVector.from_sequence(row[0]))


class TestBasicInvariants:
    @pytest.mark.parametrize("row", ALL_ROWS, ids=lambda row: str(row[0]))
    def test_table_oracle(self, row):
        params, r, s, sigma, p1, _, _ = row
        inv = basic_invariants(ParameterVector.from_sequence(params))
        assert inv.r == r
        assert inv.s.value == s
        assert inv.sigma.value == sigma
        assert inv.p1 == p1

    def test_aloff_wallach_point(self):
        inv = basic_invariants(pv(2, 1, -3, 0, 0, 0))
        assert (inv.r, inv.s.value, inv.sigma.value, inv.p1) == (7, -1, 0, 0)

    def test_degenerate(self):
        # sigma2(k) = sigma2(l) forces the error, not garbage output
        with pytest.raises(DegenerateSpace):
            basic_invariants(pv(1, 1, 1, 1, 1, 1))

    def test_r_parity_and_s_unit_checked_on_construction(self):
        for row in ALL_ROWS:
            inv = basic_invariants(ParameterVector.from_sequence(row[0]))
            assert inv.r % 2 == 1

    def test_closed_form_for_sigma2_difference(self):
        # under the standard form, sigma2(k)-sigma2(l) =
        #   -(k1^2 + k1 k2 + k2^2 - (k1+k2)(l1+l2) + l1 l2)
        for row in ALL_ROWS:
            p = ParameterVector.from_sequence(row[0])
            closed = -(
                p.k1**2 + p.k1 * p.k2 + p.k2**2
                - (p.k1 + p.k2) * (p.l1 + p.l2)
                + p.l1 * p.l2
            )
            inv = basic_invariants(p)
            assert inv.sigma2_diff == closed
            assert inv.r == -closed


class TestLinkingNumber:
    def test_first_table_row(self):
        inv = basic_invariants(pv(8, 7, -5, 6, 4, 0))
        assert linking_number(inv) == RationalModZ(2, 43)

    def test_unit_s(self):
        inv = basic_invariants(pv(2, 1, -3, 0, 0, 0))
        # s = -1, sigma2 diff = -7: -(s^-1)/(sigma2 diff) = -(-1)/(-7) = -1/7
        assert linking_number(inv) == reduce_mod_z(-1, 7)


def tup(s, sigma, s22=None, s2=None, r=43, p1=13):
    return OrientedTuple(
        r=r,
        s=symmetric_rep(s, r),
        sigma=symmetric_rep(sigma, 3),
        p1=p1 % r,
        s22=None if s22 is None else reduce_mod_z(*s22),
        s2=None if s2 is None else reduce_mod_z(*s2),
    )


class TestOrientation:
    def test_flip_examples(self):
        t = tup(-21, 1, (1, 6))
        f = orientation_flip(t)
        assert (f.s.value, f.sigma.value) == (21, -1)
        assert f.s22 == reduce_mod_z(-1, 6)
        assert f.r == t.r and f.p1 == t.p1

    def test_half_is_self_negative(self):
        t = tup(5, 0, (1, 2))
        assert orientation_flip(t).s22 == reduce_mod_z(1, 2)

    @given(
        st.integers(min_value=-21, max_value=21),
        st.integers(min_value=-1, max_value=1),
        st.integers(min_value=-10, max_value=10),
        st.integers(min_value=1, max_value=12),
    )
    def test_flip_is_involution(self, s, sigma, num, den):
        t = tup(s, sigma, (num, den))
        assert orientation_flip(orientation_flip(t)) == t

    def test_canonical_examples(self):
        t = tup(21, 1, (1, 6))
        c = canonical_sign_form(t)
        assert (c.s.value, c.sigma.value) == (-21, -1)
        assert c.s22 == reduce_mod_z(-1, 6)
        assert canonical_sign_form(c) == c

    @given(
        st.integers(min_value=-21, max_value=21),
        st.integers(min_value=-1, max_value=1),
        st.integers(min_value=-10, max_value=10),
        st.integers(min_value=1, max_value=12),
    )
    def test_canonical_is_flip_invariant(self, s, sigma, num, den):
        t = tup(s, sigma, (num, den))
        assert canonical_sign_form(t) == canonical_sign_form(orientation_flip(t))
