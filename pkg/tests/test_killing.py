import unittest

from asdescent import (
    DescentConfig,
    TorsorData,
    UnipotentPresentation,
    finite_field,
    kill_class,
    kill_class_multi,
    kill_higher,
    kill_presentation,
    verify_certificate,
)
from asdescent.artin_schreier import ASTower, LayerData, LayerStrategy, tower_valuation
from asdescent.base_fields import Place, RationalFunction, prescribe_valuations
from asdescent.descent import (
    layer_function,
    matched_global_uniformizer,
    matched_uniformizer,
    reduce_in_tower,
)
from asdescent.errors import NoResidueRoot


class TestKillClass(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)

    def test_one_over_t(self):
        certificate = kill_class(1 / self.t, self.zero)
        tower = certificate.tower
        entry = certificate.entries[0]
        self.assertEqual(certificate.degree, 2)
        self.assertEqual([str(f) for f in tower.defining_elements()], ["1 / t^3"])
        self.assertEqual(tower.tracked[0].layers, (LayerData(3, 1, 2),))
        self.assertEqual(str(entry.h), "t*x1 + t")
        self.assertEqual(str(entry.g), "t^2*x1 + t^2")
        self.assertEqual(tower_valuation(entry.g, tower.tracked[0]), 1)
        self.assertEqual(entry.h**2 + entry.g, 1 / self.t)

    def test_extendable_class_needs_no_layer(self):
        certificate = kill_class(1 / self.t**2 + self.t, self.zero)
        self.assertEqual(certificate.tower.length, 0)
        self.assertEqual(certificate.entries[0].h, 1 / self.t)
        self.assertTrue(verify_certificate(certificate).passed)

    def test_larger_pole(self):
        certificate = kill_class(1 / self.t**3 + 1 / self.t**2, self.zero)
        self.assertEqual(certificate.tower.length, 1)
        self.assertEqual(certificate.tower.tracked[0].layers[0].s, 7)
        self.assertTrue(verify_certificate(certificate).passed)

    def test_characteristic_three(self):
        field = finite_field(3)
        t = RationalFunction.t(field)
        place = Place.rational(field, 1)
        certificate = kill_class(2 / (t - 1) ** 2 + 1 / (t - 1), place)
        self.assertEqual(certificate.tower.tracked[0].layers[0].s, 4)
        self.assertTrue(verify_certificate(certificate).passed)

    def test_minimum_s(self):
        certificate = kill_class(1 / self.t, self.zero, DescentConfig(min_s=9))
        self.assertEqual(certificate.tower.tracked[0].layers[0].s, 9)
        self.assertTrue(verify_certificate(certificate).passed)

    def test_class_at_infinity(self):
        place = Place.infinity(self.field)
        certificate = kill_class(self.t**3 + self.t, place)
        self.assertEqual(certificate.tower.length, 1)
        self.assertTrue(verify_certificate(certificate).passed)


class TestKillHigher(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)

    def test_two_layers(self):
        certificate = kill_higher(1 / self.t, 2, [self.zero])
        entry = certificate.entries[0]
        self.assertEqual(certificate.tower.length, 2)
        self.assertEqual(certificate.degree, 4)
        self.assertEqual(entry.exponent, 2)
        self.assertEqual(entry.h**4 + entry.g, 1 / self.t)
        self.assertTrue(verify_certificate(certificate).passed)

    def test_tower_degree_limit(self):
        with self.assertRaises(ValueError):
            kill_higher(1 / self.t, 3, [self.zero], DescentConfig(max_tower_degree=4))

    def test_characteristic_three(self):
        field = finite_field(3)
        t = RationalFunction.t(field)
        place = Place.rational(field, 0)
        certificate = kill_higher(1 / t**2, 2, [place])
        self.assertLessEqual(certificate.tower.length, 2)
        self.assertTrue(verify_certificate(certificate).passed)


class TestKillMulti(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        self.places = [Place.rational(self.field, 0), Place.rational(self.field, 1)]

    def test_shared_layer(self):
        a = 1 / self.t + 1 / (self.t + 1)
        certificate = kill_class_multi(a, self.places)
        self.assertEqual(certificate.tower.length, 1)
        self.assertEqual(len(certificate.tower.tracked), 2)
        self.assertTrue(verify_certificate(certificate).passed)

    def test_single_place_delegates(self):
        certificate = kill_class_multi(1 / self.t, self.places[:1])
        self.assertEqual(str(certificate.entries[0].h), "t*x1 + t")

    def test_matched_uniformizer(self):
        place = self.places[0]
        f = 1 / self.t**3 + 1 / (self.t + 1) ** 3
        mu = matched_uniformizer(f, place, 3)
        self.assertEqual(mu.valuation, 1)
        self.assertEqual(mu.coefficient(1), 1)

    def test_matched_global_uniformizer(self):
        f = 1 / self.t**3 + 1 / (self.t + 1) ** 3
        w = matched_global_uniformizer(f, self.places, [3, 3], [1, 1])
        for place in self.places:
            self.assertEqual(place.valuation(w), 1)
            self.assertGreaterEqual(place.valuation(f * w**3 - 1), 6)

    def test_supplied_layer(self):
        field = finite_field(3)
        t = RationalFunction.t(field)
        places = [Place.rational(field, 0), Place.rational(field, 1)]
        layer = 1 / t**2 + 1 / (t - 1) ** 2
        certificate = kill_class_multi(1 / t + 1 / (t - 1), places, layer=layer)
        self.assertEqual(certificate.tower.defining_elements()[0].value, layer)
        self.assertTrue(verify_certificate(certificate).passed)

    def test_supplied_layer_without_residue_root(self):
        field = finite_field(3)
        t = RationalFunction.t(field)
        places = [Place.rational(field, 0), Place.rational(field, 1)]
        layer = 2 / t**2 + 2 / (t - 1) ** 2
        with self.assertRaises(NoResidueRoot):
            kill_class_multi(1 / t + 1 / (t - 1), places, layer=layer)


class TestKillPresentation(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)

    def test_rank_two(self):
        data = TorsorData.create(
            UnipotentPresentation.of([(2, 1)]),
            [[1 / self.t, 1 / self.t**3]],
            [self.zero],
        )
        certificate = kill_presentation(data)
        self.assertEqual(certificate.tower.length, 1)
        self.assertEqual(certificate.tower.tracked[0].layers[0].s, 7)
        self.assertEqual(len(certificate.entries), 2)
        self.assertTrue(verify_certificate(certificate, data).passed)

    def test_mixed_exponents(self):
        data = TorsorData.create(
            UnipotentPresentation.of([(1, 1), (1, 2)]),
            [[1 / self.t**3], [1 / self.t]],
            [self.zero],
        )
        certificate = kill_presentation(data)
        self.assertLessEqual(certificate.tower.length, 2)
        self.assertTrue(verify_certificate(certificate, data).passed)


class TestLayerFunction(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        self.places = [Place.rational(self.field, 0), Place.infinity(self.field)]

    def test_uniformizer_strategy(self):
        config = DescentConfig(layer_strategy=LayerStrategy.Uniformizer)
        tower = ASTower.over(self.field, self.places)
        f = layer_function(tower, [1, 1], config)
        self.assertEqual(f, prescribe_valuations(self.places, [-3, -3]))
        self.assertEqual(f, 1 / self.t**3 + self.t**3)

    def test_boundary_strategy(self):
        config = DescentConfig(layer_strategy=LayerStrategy.Boundary)
        tower = ASTower.over(self.field, self.places)
        f = layer_function(tower, [1, 1], config)
        self.assertEqual(f, 1 / self.t**3 + self.t**3)
        tower = tower.extend(f)
        g = layer_function(tower, [1, 1], config)
        for tracked in tower.tracked:
            self.assertEqual(tower_valuation(g, tracked), -5)

    def test_reduce_in_tower(self):
        tower = ASTower.over(self.field, self.places[:1])
        reduction = reduce_in_tower(1 / self.t**2 + 1 / self.t + self.t, tower)
        self.assertEqual(reduction.root, 1 / self.t)
        self.assertEqual(reduction.residual, 1 / self.t)
        self.assertEqual(reduction.orders, (1,))
        self.assertEqual(reduction.remainder, self.t)
        self.assertFalse(reduction.is_clean)
