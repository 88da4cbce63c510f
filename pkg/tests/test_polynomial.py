import unittest

from hypothesis import given
from hypothesis import strategies as st

from asdescent import finite_field
from asdescent.base_fields import (
    Polynomial,
    RationalFunction,
    chinese_remainder,
    inverse_mod,
    polynomial_gcd,
    polynomial_xgcd,
)
from asdescent.errors import DivisionByZero

coefficients = st.lists(st.integers(0, 2), max_size=12)
long_coefficients = st.lists(st.integers(0, 2), min_size=32, max_size=48)
short_coefficients = st.lists(st.integers(0, 2), max_size=5)
nonzero_coefficients = st.lists(st.integers(0, 2), min_size=1, max_size=5).filter(any)


def naive_product(field, a, b):
    if not a or not b:
        return Polynomial(field)
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return Polynomial(field, [c % field.p for c in product])


class TestPolynomial(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = Polynomial.t(self.field)

    def test_strips_trailing_zeros(self):
        self.assertEqual(Polynomial(self.field, [1, 0, 0]).degree, 0)
        self.assertEqual(Polynomial(self.field).degree, -1)

    def test_divmod(self):
        a = self.t**3 + 2
        b = self.t + 1
        quotient, remainder = divmod(a, b)
        self.assertEqual(quotient * b + remainder, a)
        self.assertLess(remainder.degree, b.degree)

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            divmod(self.t, Polynomial(self.field))

    def test_gcd_is_monic(self):
        a = (self.t + 1) * (self.t + 2) * 2
        b = (self.t + 1) * self.t
        self.assertEqual(polynomial_gcd(a, b), self.t + 1)

    def test_xgcd(self):
        a = self.t**2 + 1
        b = self.t + 1
        g, s, r = polynomial_xgcd(a, b)
        self.assertEqual(s * a + r * b, g)
        self.assertTrue(g.is_one())

    def test_inverse_mod(self):
        modulus = self.t**2 + 1
        inverse = inverse_mod(self.t + 1, modulus)
        self.assertTrue(((self.t + 1) * inverse % modulus).is_one())

    def test_chinese_remainder(self):
        moduli = [self.t**2, self.t + 1]
        residues = [self.t + 2, Polynomial.constant(self.field, 1)]
        result = chinese_remainder(residues, moduli)
        for residue, modulus in zip(residues, moduli):
            self.assertEqual(result % modulus, residue % modulus)
        self.assertLess(result.degree, 3)

    def test_frobenius_is_pth_power(self):
        a = self.t**2 + self.t * 2 + 1
        self.assertEqual(a.frobenius(), a**3)

    def test_reverse(self):
        a = self.t + 2
        self.assertEqual(a.reverse(2), Polynomial(self.field, [0, 1, 2]))
        with self.assertRaises(ValueError):
            (self.t**3).reverse(2)

    def test_order_at(self):
        a = (self.t + 1) ** 3 * self.t
        self.assertEqual(a.order_at(self.t + 1), 3)
        self.assertEqual(a.order_at(self.t), 1)

    def test_factor(self):
        a = (self.t + 1) ** 2 * (self.t**2 + 1)
        self.assertEqual(dict(a.factor()), {self.t + 1: 2, self.t**2 + 1: 1})

    def test_str(self):
        self.assertEqual(str(self.t**2 * 2 + 1), "2*t^2 + 1")
        self.assertEqual(str(Polynomial(self.field)), "0")

    @given(coefficients, coefficients)
    def test_multiplication_matches_schoolbook(self, a, b):
        product = Polynomial(self.field, a) * Polynomial(self.field, b)
        self.assertEqual(product, naive_product(self.field, a, b))

    @given(long_coefficients, long_coefficients)
    def test_packed_multiplication_matches_schoolbook(self, a, b):
        product = Polynomial(self.field, a) * Polynomial(self.field, b)
        self.assertEqual(product, naive_product(self.field, a, b))

    @given(coefficients, st.integers(0, 2), st.integers(0, 2))
    def test_taylor_shift(self, a, c, x):
        a = Polynomial(self.field, a)
        self.assertEqual(
            a.taylor_shift(c).evaluate(x), a.evaluate(self.field.add(x, c))
        )


class TestRationalFunction(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = RationalFunction.t(self.field)

    def test_canonical_form(self):
        f = RationalFunction(
            Polynomial(self.field, [0, 2]), Polynomial(self.field, [0, 0, 2])
        )
        self.assertEqual(f, 1 / self.t)
        self.assertTrue(f.denominator.is_monic())

    def test_common_factor_cancels(self):
        f = (self.t**2 - 1) / (self.t - 1)
        self.assertEqual(f, self.t + 1)
        self.assertTrue(f.is_polynomial())

    def test_zero_denominator(self):
        with self.assertRaises(DivisionByZero):
            self.t / RationalFunction.zero(self.field)

    def test_invert_variable(self):
        f = (self.t + 1) / self.t**2
        self.assertEqual(f.invert_variable(), self.t**2 + self.t)
        self.assertEqual(f.invert_variable().invert_variable(), f)

    def test_shift(self):
        self.assertEqual((1 / self.t).shift(1), 1 / (self.t + 1))

    def test_wp(self):
        self.assertEqual(self.t.wp(), self.t**3 - self.t)

    def test_str(self):
        self.assertEqual(str((self.t + 1) / self.t**3), "(t + 1) / t^3")
        self.assertEqual(str(2 / self.t), "2 / t")

    def test_integers_coerce(self):
        self.assertEqual(self.t + 3, self.t)
        self.assertEqual(1 - self.t, -(self.t - 1))
        self.assertTrue((self.t - self.t) == 0)

    def rational(self, numerator, denominator, shared=()):
        denominator = Polynomial(self.field, denominator) * Polynomial(self.field, shared or [1])
        return RationalFunction(Polynomial(self.field, numerator), denominator)

    @given(short_coefficients, nonzero_coefficients, short_coefficients, nonzero_coefficients)
    def test_sum_and_product_are_canonical(self, n1, d1, n2, d2):
        for shared in ((), (1, 1), (0, 1), (2, 0, 1)):
            a = self.rational(n1, d1, shared)
            b = self.rational(n2, d2, shared)
            sum_ = a.numerator * b.denominator + b.numerator * a.denominator
            product = a.numerator * b.numerator
            denominator = a.denominator * b.denominator
            self.assertEqual(a + b, RationalFunction(sum_, denominator))
            self.assertEqual(a * b, RationalFunction(product, denominator))
            self.assertEqual(a - a, 0)

    def test_shared_denominator_factors_cancel(self):
        t = self.t
        total = 1 / (t * (t + 1)) + 1 / (t * (t + 2))
        self.assertEqual(total.numerator, Polynomial(self.field, [2]))
        self.assertEqual(total.denominator, ((t + 1) * (t + 2)).numerator)
        self.assertTrue(((t / (t + 1)) * ((t + 1) / t)).is_one())
        self.assertEqual((t**2 / (t + 1)).scale(2).denominator, (t + 1).numerator)
