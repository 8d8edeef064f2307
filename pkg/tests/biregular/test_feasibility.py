from dbrglib.biregular import (
    BiregularArray,
    FeasibilityReport,
    CONDITIONS,
    validate,
    derive_counts,
    digon_array,
    star_array,
    complete_bipartite_array,
    even_cycle_array,
    subdivided_complete_array,
    affine_plane_array,
    bipartite_drg_d3_array,
)
from typing import Dict
import unittest

class TestFeasibility(unittest.TestCase):
    """ Unit tests for the feasibility conditions of double intersection arrays """

    def test_known_families_pass(self):
        """ Tests that the arrays of existing graphs pass every condition """

        arrays = [digon_array(), star_array(2), star_array(5)]
        arrays += [complete_bipartite_array(k0, k1) for k0 in range(1, 6) for k1 in range(1, k0 + 1)]
        arrays += [even_cycle_array(m) for m in range(2, 7)]
        arrays += [subdivided_complete_array(r) for r in range(2, 6)]
        arrays += [affine_plane_array(m) for m in range(2, 5)]
        arrays += [bipartite_drg_d3_array(k, k - 1) for k in range(2, 7)]

        for array in arrays:
            report: FeasibilityReport = validate(array)
            self.assertTrue(report.passed, f"{array.notation()}: {report.failures}")
            self.assertEqual(report.to_dict(), {"passed": True, "failures": []})

    def test_parity(self):
        """ Tests that a nonzero b number at the eccentricity is reported """

        report: FeasibilityReport = validate(BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 2, c0 = [1, 1], c1 = [1, 1]))
        self.assertFalse(report.passed)
        self.assertIn("parity", report.failed_conditions())

    def test_diameter(self):
        """ Tests that eccentricities two apart are reported """

        report: FeasibilityReport = validate(BiregularArray(k0 = 3, k1 = 2, D0 = 2, D1 = 4, c0 = [1, 3], c1 = [1, 1, 2, 2]))
        self.assertIn("diameter", report.failed_conditions())

    def test_ball_sum_and_diameter_case(self):
        """ Tests two cycles of different lengths glued into one array """

        report: FeasibilityReport = validate(BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 3, c0 = [1, 2], c1 = [1, 1, 2]))
        self.assertIn("ball-sum", report.failed_conditions())
        self.assertIn("diameter-case", report.failed_conditions())
        self.assertNotIn("parity", report.failed_conditions())

    def test_integrality(self):
        """ Tests that a fractional sphere size is reported """

        report: FeasibilityReport = validate(BiregularArray(k0 = 5, k1 = 5, D0 = 3, D1 = 3, c0 = [1, 3, 5], c1 = [1, 3, 5]))
        self.assertIn("integrality", report.failed_conditions())

    def test_degree_ratio(self):
        """ Tests that the ratio of the c numbers at distance 2 is checked against k1/k0 """

        report: FeasibilityReport = validate(BiregularArray(k0 = 3, k1 = 2, D0 = 3, D1 = 4, c0 = [1, 2, 2], c1 = [1, 1, 2, 2]))
        self.assertIn("degree-ratio", report.failed_conditions())

    def test_report_json_form(self):
        """ Tests the JSON form of a failing report """

        report: FeasibilityReport = validate(BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 2, c0 = [1, 1], c1 = [1, 1]))
        loaded: FeasibilityReport = FeasibilityReport.from_json_string(report.to_json_string())
        self.assertEqual(loaded, report)
        self.assertTrue(all(failure["condition"] in CONDITIONS for failure in report.to_dict()["failures"]))

    def test_product_identity(self):
        """ Tests the subdivided K_4 with c_{1,3} lowered from 2 to 1 """

        report: FeasibilityReport = validate(BiregularArray(k0 = 3, k1 = 2, D0 = 3, D1 = 4, c0 = [1, 1, 2], c1 = [1, 1, 1, 2]))
        self.assertIn("product-identity", report.failed_conditions())
        self.assertIn("ball-sum", report.failed_conditions())

    def test_sides_of_equal_order(self):
        """ Tests two cubic sides that both count 20 vertices but do not fit together """

        array: BiregularArray = BiregularArray(k0 = 3, k1 = 3, D0 = 5, D1 = 5, c0 = [1, 1, 2, 2, 3], c1 = [1, 2, 1, 1, 3])
        self.assertEqual(derive_counts(array).spheres, ((1, 3, 6, 6, 3, 1), (1, 3, 3, 3, 6, 4)))

        failed = validate(array).failed_conditions()
        self.assertNotIn("ball-sum", failed)
        for condition in ("odd-sphere-ratio", "monotonicity", "binomial", "same-side-bound", "cross-side-bound"):
            self.assertIn(condition, failed)

    def test_binomial(self):
        """ Tests that c_{0,2} is bounded by binomial(c_{0,3} - 1, c_{1,2} - 1) """

        report: FeasibilityReport = validate(BiregularArray(k0 = 3, k1 = 2, D0 = 3, D1 = 4, c0 = [1, 2, 2], c1 = [1, 1, 2, 2]))
        self.assertIn("binomial", report.failed_conditions())

    def test_every_condition_can_fail(self):
        """ Tests that each condition id is reported by at least one array """

        mixed: BiregularArray = BiregularArray(k0 = 3, k1 = 3, D0 = 5, D1 = 5, c0 = [1, 1, 2, 2, 3], c1 = [1, 2, 1, 1, 3])
        failing: Dict[str, BiregularArray] = {
            "parity": BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 2, c0 = [1, 1], c1 = [1, 1]),
            "diameter": BiregularArray(k0 = 3, k1 = 2, D0 = 2, D1 = 4, c0 = [1, 3], c1 = [1, 1, 2, 2]),
            "diameter-case": BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 3, c0 = [1, 2], c1 = [1, 1, 2]),
            "integrality": BiregularArray(k0 = 5, k1 = 5, D0 = 3, D1 = 3, c0 = [1, 3, 5], c1 = [1, 3, 5]),
            "ball-sum": BiregularArray(k0 = 2, k1 = 2, D0 = 2, D1 = 3, c0 = [1, 2], c1 = [1, 1, 2]),
            "odd-sphere-ratio": mixed,
            "product-identity": BiregularArray(k0 = 3, k1 = 2, D0 = 3, D1 = 4, c0 = [1, 1, 2], c1 = [1, 1, 1, 2]),
            "monotonicity": mixed,
            "binomial": BiregularArray(k0 = 3, k1 = 2, D0 = 3, D1 = 4, c0 = [1, 2, 2], c1 = [1, 1, 2, 2]),
            "same-side-bound": mixed,
            "cross-side-bound": mixed,
            "degree-ratio": BiregularArray(k0 = 3, k1 = 2, D0 = 3, D1 = 4, c0 = [1, 2, 2], c1 = [1, 1, 2, 2]),
        }

        self.assertEqual(set(failing), set(CONDITIONS))
        for condition, array in failing.items():
            self.assertIn(condition, validate(array).failed_conditions(), array.notation())
