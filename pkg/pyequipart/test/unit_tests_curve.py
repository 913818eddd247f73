import os.path
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)) + (os.path.sep + "..") * 2)

import unittest

import numpy as np
from scipy.spatial.distance import pdist

import pyequipart.config
from pyequipart.arrangement import act, group_elements, residual
from pyequipart.common.errors import DegenerateError, UnbalancedCycleError
from pyequipart.curve import (
    arc_count_bound,
    arc_measure,
    curve_hyperplane_intersections,
    hyperplane_through,
    moment_curve,
    sigma_theta_config,
    trace,
    transversality_check,
    trigonometric_curve,
)
from pyequipart.graycode import reflected_gray_code


class CurveUnitTestCase(unittest.TestCase):
    rng = np.random.default_rng(0)
    curve = trigonometric_curve()

    ############################################################
    def test_hyperplane_through(self):
        ############################################################
        P = self.rng.standard_normal((4, 4))
        u = hyperplane_through(P)
        self.assertTrue(np.isclose(np.linalg.norm(u), 1.0))
        self.assertTrue(np.allclose(np.concatenate((P, np.ones((4, 1))), 1) @ u, 0.0, atol=1e-12))
        inside = self.rng.standard_normal(4)
        self.assertGreaterEqual(np.append(inside, 1.0) @ hyperplane_through(P, inside), 0.0)
        P[3] = P[2]
        self.assertRaises(DegenerateError, hyperplane_through, P)
        self.assertRaises(ValueError, hyperplane_through, P[:3])

    ############################################################
    def test_gamma4_intersections(self):
        ############################################################
        t = curve_hyperplane_intersections(self.curve, [0.0, 0.0, 0.0, 1.0, 0.0])
        self.assertTrue(np.allclose(t, [0.0, np.pi / 2, np.pi, 3 * np.pi / 2]))
        # the hyperplane through four curve points meets the curve exactly there
        s = np.sort(self.rng.uniform(0, 2 * np.pi, 4))
        u = hyperplane_through(self.curve(s))
        self.assertTrue(np.allclose(curve_hyperplane_intersections(self.curve, u), s, atol=1e-8))
        self.assertEqual(len(curve_hyperplane_intersections(self.curve, [0.0, 0.0, 0.0, 0.0, 1.0])), 0)
        self.assertRaises(DegenerateError, curve_hyperplane_intersections, self.curve, np.zeros(5))
        self.assertRaises(ValueError, curve_hyperplane_intersections, self.curve, np.ones(4))

    ############################################################
    def test_moment_intersections(self):
        ############################################################
        curve = moment_curve(3)
        roots = np.array([-0.5, 0.1, 0.7])
        s1, s2, s3 = roots.sum(), roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2], roots.prod()
        u = np.array([s2, -s1, 1.0, -s3])
        self.assertTrue(np.allclose(curve_hyperplane_intersections(curve, u / np.linalg.norm(u)), roots))
        # roots outside the domain are dropped
        u = np.array([s2, -s1, 1.0, -s3]) / 2
        self.assertEqual(len(moment_curve(3, (0.0, 1.0)).hyperplane_roots(u)), 2)

    ############################################################
    def test_convexity_bound(self):
        ############################################################
        samples = 10000 if pyequipart.config.slow_tests else 1000
        U = self.rng.standard_normal((samples, 5))
        counts = [len(curve_hyperplane_intersections(self.curve, u)) for u in U]
        self.assertLessEqual(max(counts), 4)

    ############################################################
    def test_arc_count_bound(self):
        ############################################################
        self.assertEqual(arc_count_bound(3), (9, 8, True))
        self.assertEqual(arc_count_bound(4), (16, 16, True))
        self.assertEqual(arc_count_bound(5), (25, 32, False))
        self.assertRaises(ValueError, arc_count_bound, 0)


class SigmaThetaUnitTestCase(unittest.TestCase):
    measure = arc_measure()
    curve = trigonometric_curve()

    ############################################################
    def test_equipartition(self):
        ############################################################
        for k in range(32):
            phi = k * np.pi / 256
            sol = sigma_theta_config(phi)
            with self.subTest(phi=phi):
                self.assertLess(residual(self.measure, sol.config), 1e-10)
                for u in sol.config.u:
                    self.assertEqual(len(curve_hyperplane_intersections(self.curve, u)), 4)
                self.assertEqual(sorted(j for idx in sol.assignment for j in idx), list(range(16)))

    ############################################################
    def test_arcs(self):
        ############################################################
        sol = sigma_theta_config(0.05)
        arcs = self.measure.arcs(sol.config)
        lengths = [hi - lo for (lo, hi, _) in arcs]
        # 16 arcs of length pi/8, the first and last ones glued at 0
        self.assertTrue(np.isclose(sum(lengths), 2 * np.pi))
        betas = [beta for (lo, hi, beta) in arcs if hi - lo > 1e-9]
        self.assertEqual(len(set(betas)), 16)

    ############################################################
    def test_group_orbit(self):
        ############################################################
        sol = sigma_theta_config(0.1)
        images = np.array([act(g, sol.config).u.reshape(-1) for g in group_elements(4)])
        self.assertEqual(len(images), 384)
        self.assertGreater(pdist(images).min(), 1e-3)
        for g in group_elements(4)[:: 37]:
            self.assertLess(residual(self.measure, act(g, sol.config)), 1e-10)

    ############################################################
    def test_phase_covariance(self):
        ############################################################
        sol = sigma_theta_config(0.07)
        # one step along the circle: same hyperplanes, labels shifted by one arc
        T = sol.transitions
        shifted = sigma_theta_config(0.07 + np.pi / 8, T[1:] + T[:1])
        distances = [np.max(np.abs(act(g, sol.config).u - shifted.config.u)) for g in group_elements(4)]
        self.assertLess(min(distances), 1e-9)

    ############################################################
    def test_transitions(self):
        ############################################################
        self.assertRaises(UnbalancedCycleError, sigma_theta_config, 0.0, reflected_gray_code(4).transitions())
        sol = sigma_theta_config(0.0)
        self.assertEqual(sol.to_dict()["transitions"], [t + 1 for t in sol.transitions])
        self.assertEqual(len(trace(4)), 4)
        self.assertTrue(np.isclose(trace(4)[1].phi, np.pi / 32))

    ############################################################
    def test_transversality(self):
        ############################################################
        for phi in (0.0, 0.13, 0.3):
            report = transversality_check(sigma_theta_config(phi))
            with self.subTest(phi=phi):
                self.assertEqual(report.rank, 15)
                self.assertFalse(report.degenerate)
                self.assertGreater(report.kernel_alignment, 0.999)


if __name__ == "__main__":
    """
    run tests
    """
    unittest.main()
