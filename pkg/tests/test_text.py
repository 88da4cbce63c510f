import unittest

from asdescent import finite_field, parse_element, parse_place, parse_tower_element
from asdescent.artin_schreier import ASTower
from asdescent.base_fields import Place, Polynomial, RationalFunction
from asdescent.errors import ParseError
from asdescent.text import parse_field_element


class TestParseElement(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)
        self.t = RationalFunction.t(self.field)

    def test_polynomial(self):
        self.assertEqual(parse_element("t^2 + 2*t + 1", self.field), (self.t + 1) ** 2)

    def test_rational_function(self):
        self.assertEqual(parse_element("(t + 1) / t^3", self.field), (self.t + 1) / self.t**3)
        self.assertEqual(parse_element("t^-2", self.field), 1 / self.t**2)
        self.assertEqual(parse_element("t^(-2)", self.field), 1 / self.t**2)

    def test_unary_minus_and_reduction_mod_p(self):
        self.assertEqual(parse_element("-t + 4", self.field), 2 * self.t + 1)

    def test_round_trip(self):
        for f in (
            (self.t + 1) / self.t**3,
            2 / (self.t**2 + 1),
            RationalFunction.zero(self.field),
            self.t**4 * 2 + self.t,
        ):
            with self.subTest(f=str(f)):
                self.assertEqual(parse_element(str(f), self.field), f)

    def test_vector_elements(self):
        field = finite_field(2, 2)
        f = parse_element("[0,1]*t + [1,1]", field)
        self.assertEqual(f.numerator.coefficients, (3, 2))
        self.assertEqual(str(f), "[0,1]*t + [1,1]")
        self.assertEqual(parse_element(str(f), field), f)

    def test_errors_carry_positions(self):
        for text, position in [("t +", 3), ("t $", 2), ("1/0", 1), ("", 0), ("(t", 2)]:
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as context:
                    parse_element(text, self.field)
                self.assertEqual(context.exception.position, position)

    def test_generators_need_a_tower(self):
        with self.assertRaises(ParseError):
            parse_element("x1", self.field)

    def test_field_element(self):
        self.assertEqual(parse_field_element("5", self.field), 2)
        with self.assertRaises(ParseError):
            parse_field_element("t", self.field)


class TestParseTowerElement(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        place = Place.rational(self.field, 0)
        self.tower = ASTower.over(self.field, [place]).extend(1 / self.t**3)

    def test_round_trip(self):
        inverse = self.tower.tracked[0].inverse_uniformizer()
        self.assertEqual(parse_tower_element(str(inverse), self.tower), inverse)

    def test_lifts_base_elements(self):
        element = parse_tower_element("t", self.tower)
        self.assertEqual(element.index, 1)
        self.assertEqual(element, self.t)

    def test_unknown_generator(self):
        with self.assertRaises(ParseError):
            parse_tower_element("x2", self.tower)
        with self.assertRaises(ParseError):
            parse_tower_element("x1", self.tower, level=0)


class TestParsePlace(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(3)

    def test_rational(self):
        self.assertEqual(parse_place("t", self.field), Place.rational(self.field, 0))
        self.assertEqual(parse_place("t - 1", self.field), Place.rational(self.field, 1))
        self.assertEqual(parse_place("t + 2", self.field), Place.rational(self.field, 1))
        self.assertEqual(parse_place("2*t", self.field), Place.rational(self.field, 0))

    def test_infinity(self):
        self.assertTrue(parse_place("inf", self.field).is_infinity)
        self.assertTrue(parse_place("infinity", self.field).is_infinity)

    def test_irreducible(self):
        place = parse_place("irr:t^2 + 1", self.field)
        self.assertEqual(place, Place.finite(Polynomial(self.field, (1, 0, 1))))
        self.assertEqual(parse_place(str(place), self.field), place)

    def test_higher_degree_needs_prefix(self):
        with self.assertRaises(ParseError):
            parse_place("t^2 + 1", self.field)

    def test_reducible(self):
        with self.assertRaises(ParseError):
            parse_place("irr:t^2 + 2", self.field)

    def test_not_a_polynomial(self):
        with self.assertRaises(ParseError):
            parse_place("1/t", self.field)
