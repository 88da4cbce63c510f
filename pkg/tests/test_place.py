import unittest

from asdescent import finite_field
from asdescent.base_fields import (
    Place,
    Polynomial,
    RationalFunction,
    principal_divisor,
    rational_places,
    wp_preimage,
)
from asdescent.errors import NotAUnit, UnsupportedPlaceDegree


class TestPlace(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)
        self.one = Place.rational(self.field, 1)
        self.infinity = Place.infinity(self.field)
        self.quadratic = Place.finite(Polynomial(self.field, (1, 1, 1)))

    def test_valuations(self):
        f = self.t**2 / (self.t + 1)
        self.assertEqual(self.zero.valuation(f), 2)
        self.assertEqual(self.one.valuation(f), -1)
        self.assertEqual(self.infinity.valuation(f), -1)
        self.assertEqual(self.quadratic.valuation(f), 0)

    def test_uniformizers(self):
        self.assertEqual(self.zero.uniformizer(), self.t)
        self.assertEqual(self.infinity.uniformizer(), 1 / self.t)
        for place in (self.zero, self.one, self.infinity, self.quadratic):
            self.assertEqual(place.valuation(place.uniformizer()), 1)

    def test_residue(self):
        self.assertEqual(self.one.residue_constant(self.t**3), 1)
        self.assertEqual(self.infinity.residue_constant(self.t / (self.t + 1)), 1)
        with self.assertRaises(NotAUnit):
            self.zero.residue(1 / self.t)

    def test_residue_trace_at_a_quadratic_place(self):
        # t is a generator of the residue field F_4, with trace t + t^2 = 1
        residue = self.quadratic.residue(self.t)
        self.assertEqual(self.quadratic.residue_trace(residue), 1)

    def test_rational_only(self):
        with self.assertRaises(UnsupportedPlaceDegree):
            self.quadratic.require_rational()
        with self.assertRaises(UnsupportedPlaceDegree):
            self.quadratic.root

    def test_reducible_place(self):
        with self.assertRaises(ValueError):
            Place.finite(Polynomial(self.field, (1, 0, 1)))

    def test_str(self):
        self.assertEqual(str(self.zero), "t")
        self.assertEqual(str(self.one), "t - 1")
        self.assertEqual(str(self.infinity), "inf")
        self.assertEqual(str(self.quadratic), "irr:t^2 + t + 1")

    def test_rational_places(self):
        self.assertEqual(
            rational_places(self.field), [self.zero, self.one, self.infinity]
        )

    def test_principal_divisor(self):
        divisor = principal_divisor(self.t**2 / (self.t + 1))
        self.assertEqual(divisor, {self.zero: 2, self.one: -1, self.infinity: -1})
        self.assertEqual(sum(place.degree * v for place, v in divisor.items()), 0)


class TestWpPreimage(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = RationalFunction.t(self.field)

    def test_preimage_of_a_wp_value(self):
        f = (1 / self.t + self.t**2).wp()
        g = wp_preimage(f)
        self.assertIsNotNone(g)
        self.assertEqual(g.wp(), f)

    def test_no_preimage(self):
        self.assertIsNone(wp_preimage(1 / self.t))
        self.assertIsNone(wp_preimage(self.t))
        self.assertIsNone(wp_preimage(RationalFunction.constant(self.field, 1)))

    def test_constant_over_an_extension(self):
        field = finite_field(2, 2)
        g = wp_preimage(RationalFunction.constant(field, 1))
        self.assertEqual(g, RationalFunction.constant(field, 2))
