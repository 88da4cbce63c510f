import unittest

from asdescent import finite_field
from asdescent.base_fields import (
    Place,
    RationalFunction,
    approximate,
    hensel_sth_root,
    local_expand,
    polar_divisor,
    polar_part,
    polar_sum,
    prescribe_valuations,
    wp_local_root,
)
from asdescent.errors import (
    NoResidueRoot,
    NotAUnit,
    PNotCoprime,
    PrecisionNotPositiveOverValuation,
)


class TestLocalExpansion(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)
        self.one = Place.rational(self.field, 1)
        self.infinity = Place.infinity(self.field)

    def test_geometric_series(self):
        expansion = local_expand(1 / (1 - self.t), self.zero, 4)
        self.assertEqual(expansion.start, 0)
        self.assertEqual(expansion.coefficients, (1, 1, 1, 1))

    def test_expansion_at_infinity(self):
        expansion = local_expand(self.t / (self.t + 1), self.infinity, 4)
        self.assertEqual(expansion.coefficients, (1, 2, 1, 2))

    def test_pole(self):
        expansion = local_expand(1 / self.t**2 + self.t, self.zero, 3)
        self.assertEqual(expansion.valuation, -2)
        self.assertEqual(expansion.coefficient(-2), 1)
        self.assertEqual(expansion.coefficient(1), 1)

    def test_precision_below_valuation(self):
        with self.assertRaises(PrecisionNotPositiveOverValuation):
            local_expand(1 / self.t**2, self.zero, -3)

    def test_resum(self):
        f = 1 / (self.t - 1) + self.t
        expansion = local_expand(f, self.one, 3)
        self.assertGreaterEqual(self.one.valuation(expansion.resum() - f), 3)

    def test_inverse(self):
        expansion = local_expand(1 + self.t, self.zero, 5)
        product = expansion * expansion.inverse()
        self.assertEqual(product.coefficients, (1,))


class TestPolarPart(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = RationalFunction.t(self.field)
        self.one = Place.rational(self.field, 1)
        self.infinity = Place.infinity(self.field)

    def test_finite_place(self):
        u = self.t - 1
        f = 1 / u**2 + 2 / u + self.t
        self.assertEqual(polar_part(f, self.one), [(-2, 1), (-1, 2)])

    def test_infinity(self):
        f = self.t**2 * 2 + self.t + 1 / self.t
        self.assertEqual(polar_part(f, self.infinity), [(-2, 2), (-1, 1)])

    def test_remainder_is_integral(self):
        f = (self.t + 2) / ((self.t - 1) ** 3 * self.t)
        terms = polar_part(f, self.one)
        self.assertGreaterEqual(self.one.valuation(f - polar_sum(terms, self.one)), 0)

    def test_integral_function(self):
        self.assertEqual(polar_part(self.t, self.one), [])


class TestHensel(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)

    def test_square_root(self):
        u = local_expand(1 + self.t, self.zero, 6)
        root = hensel_sth_root(u, 2)
        self.assertEqual(root**2, u)
        self.assertEqual(root.coefficient(0), 1)

    def test_exponent_divisible_by_p(self):
        with self.assertRaises(PNotCoprime):
            hensel_sth_root(local_expand(1 + self.t, self.zero, 4), 3)

    def test_not_a_unit(self):
        with self.assertRaises(NotAUnit):
            hensel_sth_root(local_expand(self.t, self.zero, 4), 2)

    def test_missing_residue_root(self):
        field = finite_field(7)
        t = RationalFunction.t(field)
        u = local_expand(3 + t, Place.rational(field, 0), 4)
        with self.assertRaises(NoResidueRoot):
            hensel_sth_root(u, 2)

    def test_wp_local_root(self):
        field = finite_field(2)
        t = RationalFunction.t(field)
        u = local_expand(t + t**3, Place.rational(field, 0), 8)
        root = wp_local_root(u)
        self.assertIsNotNone(root)
        self.assertTrue((root**2 - root - u).is_zero())

    def test_wp_local_root_without_residue_root(self):
        field = finite_field(2)
        u = local_expand(RationalFunction.one(field), Place.rational(field, 0), 4)
        self.assertIsNone(wp_local_root(u))


class TestApproximation(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)
        self.one = Place.rational(self.field, 1)
        self.infinity = Place.infinity(self.field)

    def test_finite_targets(self):
        targets = [(self.zero, 1 / self.t), (self.one, RationalFunction.zero(self.field))]
        f = approximate(targets, 2)
        for place, a in targets:
            self.assertGreater(place.valuation(f - a), 2)

    def test_target_at_infinity(self):
        targets = [(self.infinity, self.t**2), (self.zero, RationalFunction.one(self.field))]
        f = approximate(targets, 1)
        for place, a in targets:
            self.assertGreater(place.valuation(f - a), 1)

    def test_repeated_place(self):
        with self.assertRaises(ValueError):
            approximate([(self.zero, self.t), (self.zero, self.t)], 1)

    def test_prescribe_valuations(self):
        f = prescribe_valuations([self.zero, self.infinity], [1, -2])
        self.assertEqual(self.zero.valuation(f), 1)
        self.assertEqual(self.infinity.valuation(f), -2)

    def test_polar_divisor(self):
        f = polar_divisor([self.zero, self.infinity], [3, 3])
        self.assertEqual(f, 1 / self.t**3 + self.t**3)
        with self.assertRaises(ValueError):
            polar_divisor([self.zero], [0])
