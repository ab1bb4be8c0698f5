import math

import pytest
from hypothesis import given, strategies as st

from dlash.f2 import F2Poly, binom_exact_parity, binom_mod2, poly_sum


class TestBinomMod2:
    def test_small_values(self):
        assert binom_mod2(5, 2) == 0
        assert binom_mod2(5, 1) == 1
        assert binom_mod2(4, 2) == 0
        assert binom_mod2(3, 2) == 1
        assert binom_mod2(0, 0) == 1

    def test_negative_bottom_is_zero(self):
        assert binom_mod2(5, -1) == 0
        assert binom_mod2(-3, -2) == 0

    def test_negative_one_top(self):
        # (1+u)^{-1} = 1 + u + u^2 + ... over F2
        for k in range(0, 40):
            assert binom_mod2(-1, k) == 1

    def test_negative_two_top(self):
        # (1+u)^{-2} = 1 + u^2 + u^4 + ... (Frobenius)
        for k in range(0, 40):
            assert binom_mod2(-2, k) == (1 if k % 2 == 0 else 0)

    @given(st.integers(0, 300), st.integers(0, 300))
    def test_matches_exact_parity(self, n, k):
        assert binom_mod2(n, k) == math.comb(n, k) % 2 if k <= n else binom_mod2(n, k) == 0

    @given(st.integers(-40, -1), st.integers(0, 60))
    def test_negative_top_reflection(self, top, k):
        # C(top, k) = (-1)^k C(k - top - 1, k); signs vanish mod 2
        assert binom_mod2(top, k) == binom_exact_parity(top, k)

    @given(st.integers(-30, 60), st.integers(-5, 60))
    def test_pascal(self, n, k):
        lhs = binom_mod2(n, k)
        rhs = (binom_mod2(n - 1, k) + binom_mod2(n - 1, k - 1)) % 2
        if (n, k) != (0, 0):
            assert lhs == rhs


zeta_monomials = st.lists(
    st.tuples(st.integers(1, 4), st.integers(1, 5)), min_size=0, max_size=3
).map(lambda gens: math.prod((F2Poly.zeta(i, e) for i, e in gens), start=F2Poly.one()))


class TestF2Poly:
    def test_addition_cancels(self):
        z1 = F2Poly.zeta(1)
        assert (z1 + z1).is_zero()
        assert z1 + F2Poly.zero() == z1

    def test_multiplication(self):
        z1, z2 = F2Poly.zeta(1), F2Poly.zeta(2)
        assert str(z1 * z1) == "z1^2"
        assert (z1 + z2) * (z1 + z2) == z1.square() + z2.square()

    def test_square_is_frobenius(self):
        a = F2Poly.zeta(1) + F2Poly.zeta(2) * F2Poly.zeta(1)
        assert a.square() == a * a

    @given(zeta_monomials, zeta_monomials, zeta_monomials)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(zeta_monomials, zeta_monomials)
    def test_commutativity(self, a, b):
        assert a * b == b * a

    def test_pow(self):
        z1 = F2Poly.zeta(1)
        assert z1**0 == F2Poly.one()
        assert z1**5 == z1 * z1 * z1 * z1 * z1

    def test_degrees(self):
        # deg zeta_i = 2^i - 1
        m = F2Poly.zeta(1, 2) * F2Poly.zeta(3)
        assert m.degree_parts() == {9: m}
        assert m.is_homogeneous()

    def test_str_canonical(self):
        a = F2Poly.zeta(2) + F2Poly.zeta(1, 3)
        assert str(a) == "z1^3 + z2"
        assert str(F2Poly.zero()) == "0"
        assert str(F2Poly.one()) == "1"

    def test_augmentation(self):
        assert (F2Poly.one() + F2Poly.zeta(1)).augment() == F2Poly.one()
        assert F2Poly.zeta(2).augment().is_zero()

    def test_poly_sum(self):
        z1 = F2Poly.zeta(1)
        assert poly_sum([z1, z1, z1]) == z1

    def test_hashable(self):
        s = {F2Poly.zeta(1), F2Poly.zeta(1), F2Poly.zero()}
        assert len(s) == 2
