import unittest

from asdescent import (
    BoundarySpec,
    CheckStatus,
    RamificationCase,
    TorsorData,
    UnipotentPresentation,
    audit_cover,
    build_cover,
    finite_field,
)
from asdescent.base_fields import Place, Polynomial, RationalFunction
from asdescent.cover import (
    COVER_FORMAT,
    CoverPlanDocument,
    audit_cover_document,
    plan_from_document,
    plan_to_document,
)
from asdescent.errors import UnsupportedPlaceDegree


class TestBuildCover(unittest.TestCase):
    def setUp(self):
        self.field = finite_field(2)
        self.t = RationalFunction.t(self.field)
        self.zero = Place.rational(self.field, 0)
        self.one = Place.rational(self.field, 1)
        self.infinity = Place.infinity(self.field)
        self.quadratic = Place.finite(Polynomial(self.field, (1, 1, 1)))

    def torsor(self, a, exponent, places):
        return TorsorData.create(UnipotentPresentation.of([(1, exponent)]), [[a]], places)

    def rows(self, plan):
        return [
            (entry.layer, str(entry.place), entry.report.case, entry.on_boundary)
            for entry in plan.table
        ]

    def test_two_boundary_places(self):
        boundary = [self.zero, self.infinity]
        plan = build_cover(
            self.torsor(1 / self.t + self.t, 1, boundary),
            BoundarySpec.create(boundary, [self.quadratic]),
        )
        self.assertEqual(plan.tower.length, 1)
        self.assertEqual(plan.tower.defining_elements()[0], 1 / self.t**3 + self.t**3)
        self.assertEqual(
            self.rows(plan),
            [
                (1, "t", RamificationCase.TotallyRamified, True),
                (1, "inf", RamificationCase.TotallyRamified, True),
                (1, "irr:t^2 + t + 1", RamificationCase.Split, False),
            ],
        )
        self.assertTrue(audit_cover(plan).passed)

    def test_second_layer_stays_unramified_inside(self):
        plan = build_cover(
            self.torsor(1 / self.t, 2, [self.zero]),
            BoundarySpec.create([self.zero], [self.one]),
        )
        self.assertEqual(plan.tower.length, 2)
        self.assertEqual(plan.tower.tracked[0].layers[1].s, 5)
        self.assertEqual(
            self.rows(plan),
            [
                (1, "t", RamificationCase.TotallyRamified, True),
                (1, "t - 1", RamificationCase.Inert, False),
                (2, "t", RamificationCase.TotallyRamified, True),
                (2, "t - 1", RamificationCase.Unramified, False),
            ],
        )
        self.assertTrue(audit_cover(plan).passed)

    def test_audit_rederives_boundary_layers(self):
        boundary = [self.zero, self.infinity]
        plan = build_cover(
            self.torsor(1 / self.t + self.t, 1, boundary),
            BoundarySpec.create(boundary, [self.quadratic]),
        )
        statuses = {check.name: check.status for check in audit_cover(plan).checks}
        self.assertEqual(statuses["boundary layers re-derived"], CheckStatus.Passed)

        moved = plan._replace(spec=BoundarySpec.create([self.zero, self.one]))
        report = audit_cover(moved)
        statuses = {check.name: check.status for check in report.checks}
        self.assertFalse(report.passed)
        self.assertEqual(statuses["boundary layers re-derived"], CheckStatus.Failed)

    def test_torsor_place_off_the_boundary(self):
        with self.assertRaises(ValueError):
            build_cover(
                self.torsor(1 / self.t, 1, [self.zero]),
                BoundarySpec.create([self.infinity]),
            )

    def test_boundary_spec(self):
        with self.assertRaises(ValueError):
            BoundarySpec.create([])
        with self.assertRaises(ValueError):
            BoundarySpec.create([self.zero, self.zero])
        with self.assertRaises(ValueError):
            BoundarySpec.create([self.zero], [self.zero])
        with self.assertRaises(UnsupportedPlaceDegree):
            BoundarySpec.create([self.quadratic])


class TestCoverDocument(unittest.TestCase):
    def setUp(self):
        field = finite_field(2)
        t = RationalFunction.t(field)
        boundary = [Place.rational(field, 0), Place.infinity(field)]
        sample = Place.finite(Polynomial(field, (1, 1, 1)))
        data = TorsorData.create(UnipotentPresentation.of([(1, 1)]), [[1 / t + t]], boundary)
        self.plan = build_cover(data, BoundarySpec.create(boundary, [sample]))
        self.document = plan_to_document(self.plan)

    def test_document(self):
        self.assertEqual(self.document.format, COVER_FORMAT)
        self.assertEqual(self.document.boundary, ["t", "inf"])
        self.assertEqual(self.document.samples, ["irr:t^2 + t + 1"])
        self.assertEqual(len(self.document.ramification_table), 3)

    def test_round_trip(self):
        text = self.document.model_dump_json()
        self.assertTrue(audit_cover_document(text).passed)
        plan = plan_from_document(CoverPlanDocument.model_validate_json(text))
        self.assertEqual(plan.spec, self.plan.spec)
        self.assertEqual(plan.table, self.plan.table)

    def test_tampered_table(self):
        self.document.ramification_table[0].case = RamificationCase.Split
        report = audit_cover_document(self.document)
        self.assertFalse(report.passed)
        statuses = {check.name: check.status for check in report.checks}
        self.assertEqual(statuses["ramification table"], CheckStatus.Failed)

    def test_unreadable(self):
        report = audit_cover_document("{}")
        self.assertFalse(report.passed)
        self.assertEqual(report.checks[0].name, "document")
