import os.path
import sys

sys.path.append(os.path.dirname(os.path.abspath(__file__)) + (os.path.sep + "..") * 2)

import unittest
import itertools

import numpy as np

import pyequipart.config
from pyequipart.arrangement import (
    Configuration,
    Hyperplane,
    lift,
    residual,
    tangent_basis,
    transform_configuration,
    unlift,
)
from pyequipart.common.errors import DegenerateError, DeltaConditionError, SymmetryError
from pyequipart.curve import arc_measure, curve_hyperplane_intersections, sigma_theta_config, trigonometric_curve
from pyequipart.measures import (
    GaussianMixtureMeasure,
    GridDensityMeasure,
    PointCloudMeasure,
    Reflection,
    open_orthant_counts,
    orthant_masses,
)
from pyequipart.solver import (
    MeasurePath,
    SolveReport,
    best_report,
    constraint_subspace,
    continue_path,
    halving_offset,
    multi_start,
    partition_point_cloud,
    refine,
    solve_2d,
    solve_3d,
    solve_4d_center,
    solve_4d_mirror3,
    solve_4d_symmetric,
    through_points,
    track_branch,
)


def disc():
    return GridDensityMeasure.from_function(
        lambda X: ((X ** 2).sum(1) <= 1.0).astype(float), [-1, -1], [1, 1], (64, 64)
    )


def centrally_symmetric_mixture(rng, components=3):
    M = rng.standard_normal((components, 4))
    return GaussianMixtureMeasure(np.concatenate((M, -M)), 0.6, np.tile(rng.uniform(1, 2, components), 2))


def plane_symmetric_mixture(rng, components=3):
    # invariant under (x1, x2, x3, x4) -> (-x1, -x2, x3, x4)
    M = rng.standard_normal((components, 4))
    R = M * np.array([-1.0, -1.0, 1.0, 1.0])
    return GaussianMixtureMeasure(np.concatenate((M, R)), 0.7, np.tile(rng.uniform(1, 2, components), 2))


def rotation(angle):
    # rotation in the (x1, x2) plane
    R = np.eye(4)
    R[:2, :2] = [[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]]
    return R


def assert_equally_spaced(test, config):
    # the 16 cuts of an equipartition of the arc measure are pi/8 apart
    curve = trigonometric_curve()
    t = np.sort(np.concatenate([curve_hyperplane_intersections(curve, u) for u in config.u]))
    test.assertEqual(len(t), 16)
    gaps = np.diff(np.append(t, t[0] + 2 * np.pi))
    test.assertTrue(np.allclose(gaps, np.pi / 8, atol=1e-6), msg=repr(gaps))


class ReportUnitTestCase(unittest.TestCase):
    ############################################################
    def test_solve_report(self):
        ############################################################
        config = Configuration(np.eye(3)[:2])
        report = SolveReport(config, 1e-9, 3, "converged", 1e-8, masses=np.ones(4))
        out = report.to_dict()
        self.assertEqual(out["status"], "converged")
        self.assertEqual(sorted(out["mass_vector"]), ["00", "01", "10", "11"])
        self.assertEqual(len(out["hyperplanes"]), 2)
        self.assertRaises(AssertionError, SolveReport, config, 1e-3, 3, "converged", 1e-8)
        self.assertRaises(ValueError, SolveReport, config, 1e-3, 3, "done", 1e-8)

    ############################################################
    def test_best_report(self):
        ############################################################
        reports = [
            SolveReport(None, 0.1, 1, "stalled", 1e-6),
            SolveReport(None, 0.3, 1, "max-iter", 1e-6),
            SolveReport(None, 0.3, 1, "max-iter", 1e-6),
        ]
        self.assertIs(best_report(reports), reports[1])
        converged = SolveReport(None, 1e-7, 1, "converged", 1e-6)
        self.assertIs(best_report(reports[:1] + [converged]), converged)

    ############################################################
    def test_multi_start_independent_of_workers(self):
        ############################################################
        def fun(seed):
            return SolveReport(None, abs(np.sin(seed)), 1, "stalled", 1e-6)

        results = []
        old = pyequipart.config.n_jobs
        try:
            for workers in (1, 3, 8):
                pyequipart.config.n_jobs = workers
                best, tried = multi_start(fun, list(range(10)))
                results.append((best.residual, tried))
        finally:
            pyequipart.config.n_jobs = old
        self.assertEqual(len(set(results)), 1)
        self.assertEqual(results[0][1], 10)
        self.assertRaises(ValueError, multi_start, fun, [])


class RefineUnitTestCase(unittest.TestCase):
    rng = np.random.default_rng(0)

    ############################################################
    def test_constraint_subspace(self):
        ############################################################
        V = self.rng.standard_normal((2, 5))
        S = constraint_subspace(V, 5)
        self.assertEqual(S.shape, (3, 5))
        self.assertTrue(np.allclose(S @ S.T, np.eye(3)))
        self.assertTrue(np.allclose(S @ V.T, 0.0))
        P = self.rng.standard_normal((2, 3))
        S = through_points(P)
        self.assertTrue(np.allclose(S @ np.concatenate((P, np.ones((2, 1))), 1).T, 0.0))

    ############################################################
    def test_halving_offset(self):
        ############################################################
        mu = GaussianMixtureMeasure([[1.0, 0.0], [-1.0, 0.0]], 0.5)
        self.assertTrue(np.isclose(halving_offset(mu, [1.0, 0.0]), 0.0, atol=1e-9))
        self.assertTrue(np.isclose(halving_offset(mu, [2.0, 0.0]), 0.0, atol=1e-9))
        c = halving_offset(mu, [1.0, 0.0], fraction=0.25)
        self.assertTrue(np.isclose(mu.halfspace_mass(lift(Hyperplane([1.0, 0.0], c))), mu.total_mass() / 4))
        self.assertRaises(ValueError, halving_offset, mu, [1.0, 0.0], fraction=1.5)
        self.assertRaises(ValueError, halving_offset, mu, [1.0, 0.0], fraction=0.0)
        # no point of the cloud lies beyond x = 100
        cloud = PointCloudMeasure([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]])
        far = lift(Hyperplane([1.0, 0.0], 100.0))[None]
        self.assertRaises(DegenerateError, halving_offset, cloud, [0.0, 1.0], region=far)

    ############################################################
    def test_refine(self):
        ############################################################
        mu = GaussianMixtureMeasure(self.rng.standard_normal((5, 3)), 0.8)
        report = solve_3d(mu)
        self.assertTrue(report.converged)
        U = report.config.u + 1e-3 * self.rng.standard_normal((3, 4))
        refined = refine(mu, U, 1e-8)
        self.assertTrue(refined.converged)
        self.assertLess(residual(mu, refined.config), 1e-8)
        self.assertTrue(np.allclose(refined.masses, mu.total_mass() / 8, atol=1e-7 * mu.total_mass()))
        self.assertRaises(DeltaConditionError, refine, mu, np.array([U[0], U[0], U[2]]))

    ############################################################
    def test_refine_constrained(self):
        ############################################################
        mu = GaussianMixtureMeasure([[1.0, 1.0], [-1.0, -1.0], [1.0, -1.5], [-1.0, 1.5]], 0.5)
        U0 = np.array([[1.0, 0.1, 0.0], [0.2, 1.0, 0.0]])
        S = through_points([[0.0, 0.0]])
        report = refine(mu, U0, 1e-8, subspaces=[S, S])
        self.assertTrue(report.converged)
        self.assertTrue(np.allclose(report.config.u[:, 2], 0.0, atol=1e-12))
        frozen = refine(mu, Configuration(U0), 1e-8, frozen=(0,))
        self.assertTrue(np.allclose(frozen.config.u[0], Configuration(U0).u[0]))

    ############################################################
    def test_refine_arc_measure(self):
        ############################################################
        mu = arc_measure()
        U = sigma_theta_config(0.07).config.u
        exact = refine(mu, U, 1e-6)
        self.assertTrue(exact.converged)
        self.assertEqual(exact.iterations, 0)
        noise = self.rng.standard_normal((4, 4))
        V = np.array([u + 1e-2 * x @ tangent_basis(u) for (u, x) in zip(U, noise)])
        V /= np.linalg.norm(V, axis=1, keepdims=True)
        report = refine(mu, V, 1e-10)
        self.assertTrue(report.converged, msg=repr(report))
        self.assertLess(residual(mu, report.config), 1e-10)
        self.assertRaises(DeltaConditionError, refine, mu, np.array([U[0], U[0], U[2], U[3]]))


class PlanarUnitTestCase(unittest.TestCase):
    ############################################################
    def test_disc(self):
        ############################################################
        mu = disc()
        report = solve_2d(mu, target=1e-8)
        self.assertTrue(report.converged)
        b = orthant_masses(mu, report.config)
        self.assertTrue(np.allclose(b.values, mu.total_mass() / 4, atol=1e-8 * mu.total_mass()))
        self.assertEqual(report.diagnostics["method"], "sweep")
        self.assertTrue(report.config.satisfies_delta())
        # two perpendicular diameters
        lines = [unlift(u) for u in report.config.u]
        angle = np.arccos(abs(lines[0].a @ lines[1].a))
        self.assertLess(abs(angle - np.pi / 2), 1e-6)
        for line in lines:
            self.assertLess(abs(line.c), 1e-6)

    ############################################################
    def test_gaussian_mixtures(self):
        ############################################################
        rng = np.random.default_rng(3)
        for k in range(5):
            mu = GaussianMixtureMeasure(rng.standard_normal((4, 2)) * 2, rng.uniform(0.3, 1.0, 4))
            with self.subTest(k=k):
                report = solve_2d(mu)
                self.assertTrue(report.converged)
                self.assertLess(residual(mu, report.config), 1e-8)
        self.assertRaises(ValueError, solve_2d, GaussianMixtureMeasure(np.zeros((1, 3)), 1.0))


class SpatialUnitTestCase(unittest.TestCase):
    rng = np.random.default_rng(4)

    ############################################################
    def test_through_points(self):
        ############################################################
        mu = GaussianMixtureMeasure(self.rng.standard_normal((6, 3)), 0.7, self.rng.uniform(1, 2, 6))
        A, B = np.array([0.1, 0.2, -0.1]), np.array([0.3, -0.4, 0.5])
        for points in ((None, None), (A, None), (A, B)):
            with self.subTest(points=points):
                report = solve_3d(mu, *points)
                self.assertTrue(report.converged)
                self.assertLess(residual(mu, report.config), 1e-6)
                if points[0] is not None:
                    self.assertLess(report.diagnostics["distance_A"], 1e-10)
                if points[1] is not None:
                    self.assertLess(report.diagnostics["distance_B"], 1e-10)


class ContinuationUnitTestCase(unittest.TestCase):
    ############################################################
    def test_measure_path(self):
        ############################################################
        start = GaussianMixtureMeasure([[0.0, 0.0]], 1.0)
        end = GaussianMixtureMeasure([[1.0, 0.0], [-1.0, 0.0]], 0.5, [2.0, 2.0])
        path = MeasurePath(start, end)
        self.assertTrue(np.isclose(path.at(0.3).total_mass(), 1.0))
        U = np.array([[1.0, 0.2, 0.1], [0.0, 1.0, 0.3]])
        U /= np.linalg.norm(U, axis=1, keepdims=True)
        for t in (0.0, 0.4, 1.0):
            d = orthant_masses(path.at(t), U).values - 0.25
            self.assertTrue(np.allclose(path.deviation(U, t), d))
        self.assertRaises(ValueError, path.at, 1.5)
        self.assertRaises(ValueError, MeasurePath, start, GaussianMixtureMeasure(np.zeros((1, 3)), 1.0))

    ############################################################
    def test_track_branch(self):
        ############################################################
        # the axes equipartition the isotropic start
        start = GaussianMixtureMeasure([[0.0, 0.0]], 1.0)
        end = GaussianMixtureMeasure([[1.0, 0.5], [-1.0, -0.5], [0.3, -1.0], [-0.3, 1.0]], 0.6)
        path = MeasurePath(start, end)
        U0 = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
        report = track_branch(path, U0, target=1e-8)
        self.assertTrue(report.converged, msg=repr(report.diagnostics))
        self.assertEqual(report.path[-1], 1.0)
        self.assertTrue(all(0 <= t <= 1 for t in report.path))
        self.assertLess(residual(end, report.config), 1e-8)

    ############################################################
    def test_continue_path(self):
        ############################################################
        start = GaussianMixtureMeasure([[0.0, 0.0]], 1.0)
        end = GaussianMixtureMeasure([[1.0, 0.5], [-1.0, -0.5], [0.3, -1.0], [-0.3, 1.0]], 0.6)
        path = MeasurePath(start, end)
        starts = [np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]), np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0]])]
        report = continue_path(path, starts, target=1e-8)
        self.assertTrue(report.converged, msg=repr(report.diagnostics))
        self.assertEqual(report.diagnostics["branches"], 2)
        self.assertLess(residual(end, report.config), 1e-8)
        self.assertRaises(ValueError, continue_path, path, [np.array([[1.0, 0.0, 0.5], [0.0, 1.0, 0.0]])])

    ############################################################
    def test_constant_arc_path(self):
        ############################################################
        path = MeasurePath(arc_measure(), arc_measure())
        report = track_branch(path, sigma_theta_config(0.05).config.u, target=1e-9)
        self.assertTrue(report.converged, msg=repr(report.diagnostics))
        self.assertEqual(report.path[-1], 1.0)
        self.assertLess(residual(arc_measure(), report.config), 1e-9)

    ############################################################
    def test_rotated_arc_path(self):
        ############################################################
        R = rotation(0.4)
        path = MeasurePath(arc_measure(), arc_measure(transform=(R, np.zeros(4))))
        report = continue_path(path, [sigma_theta_config(0.05).config.u], target=1e-9)
        self.assertTrue(report.converged, msg=repr(report.diagnostics))
        self.assertEqual(report.path[-1], 1.0)
        # back on the unmoved curve, the solution is of the explicit family
        V = transform_configuration(report.config, R.T, np.zeros(4))
        self.assertLess(residual(arc_measure(), V), 1e-6)
        assert_equally_spaced(self, V)


class SymmetricUnitTestCase(unittest.TestCase):
    rng = np.random.default_rng(5)

    ############################################################
    def test_center(self):
        ############################################################
        mu = centrally_symmetric_mixture(self.rng)
        normal = np.array([1.0, 1.0, 0.0, 0.0]) / np.sqrt(2)
        report = solve_4d_center(mu, normal=normal)
        self.assertTrue(report.converged)
        self.assertLess(residual(mu, report.config), 1e-6)
        # every hyperplane goes through the center
        self.assertTrue(np.allclose(report.config.u[:, 4], 0.0, atol=1e-10))
        self.assertLess(report.diagnostics["normal_error"], 1e-10)
        shifted = GaussianMixtureMeasure(mu.means + 1.0, mu.sigmas, mu.weights)
        self.assertRaises(SymmetryError, solve_4d_center, shifted, O=np.zeros(4))

    ############################################################
    def test_mirror3(self):
        ############################################################
        M = self.rng.standard_normal((3, 4))
        M[:, 0] += 0.5
        R = M * np.array([-1.0, 1.0, 1.0, 1.0])
        mu = GaussianMixtureMeasure(np.concatenate((M, R)), 0.7)
        K = Hyperplane([1.0, 0.0, 0.0, 0.0], 0.0)
        report = solve_4d_mirror3(mu, K)
        self.assertTrue(report.converged)
        self.assertLess(residual(mu, report.config), 1e-6)
        self.assertTrue(np.allclose(report.config.u[1:, 0], 0.0, atol=1e-10))
        self.assertRaises(SymmetryError, solve_4d_mirror3, mu, Hyperplane([0.0, 1.0, 0.0, 0.0], 0.0))

    ############################################################
    def test_symmetric_input_errors(self):
        ############################################################
        mu = plane_symmetric_mixture(self.rng)
        L = Reflection(np.zeros(4), np.eye(4)[:2])
        self.assertRaises(SymmetryError, solve_4d_symmetric, mu, L)
        self.assertRaises(ValueError, solve_4d_symmetric, GaussianMixtureMeasure(np.zeros((1, 3)), 1.0))
        self.assertRaises(ValueError, solve_4d_symmetric, mu, Reflection(np.zeros(4), np.eye(4)[:3]))

    ############################################################
    def test_arc_measure_is_fixed(self):
        ############################################################
        mu = arc_measure()
        report = solve_4d_symmetric(mu, target=1e-9)
        self.assertTrue(report.converged, msg=repr(report.diagnostics))
        self.assertEqual(report.diagnostics["method"], "direct")
        self.assertLess(residual(mu, report.config), 1e-9)
        assert_equally_spaced(self, report.config)

    ############################################################
    @unittest.skipIf(not pyequipart.config.slow_tests, "slow tests disabled")
    def test_mirrored_pair(self):
        ############################################################
        # a pair swapped by the reflection and one bump on the plane
        means = [[1.0, 0.0, 0.0, 0.0], [-1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.5, -0.3]]
        mu = GaussianMixtureMeasure(means, 0.7)
        report = solve_4d_symmetric(mu, seed=3)
        self.assertTrue(report.converged, msg=repr(report.diagnostics))
        self.assertLess(residual(mu, report.config), 1e-6)

    ############################################################
    @unittest.skipIf(not pyequipart.config.slow_tests, "slow tests disabled")
    def test_symmetric(self):
        ############################################################
        for k in range(3):
            mu = plane_symmetric_mixture(np.random.default_rng(10 + k))
            with self.subTest(k=k):
                report = solve_4d_symmetric(mu)
                self.assertTrue(report.converged, msg=repr(report.diagnostics))
                self.assertLess(residual(mu, report.config), 1e-6)
                self.assertIn("continuation", report.diagnostics)


class PointCloudUnitTestCase(unittest.TestCase):
    cube = np.array(list(itertools.product([-1.0, 1.0], repeat=4)))

    ############################################################
    def test_input_errors(self):
        ############################################################
        self.assertRaises(ValueError, partition_point_cloud, self.cube[:15], 1)
        self.assertRaises(ValueError, partition_point_cloud, self.cube[:, :3], 1)
        doubled = self.cube.copy()
        doubled[1] = doubled[0]
        self.assertRaises(ValueError, partition_point_cloud, doubled, 1)
        skew = self.cube + np.array([0.1, 0.0, 0.0, 0.0]) * np.arange(16)[:, None]
        L = Reflection(np.zeros(4), np.eye(4)[2:])
        self.assertRaises(SymmetryError, partition_point_cloud, skew, 1, L)

    ############################################################
    def test_open_counts_of_axes(self):
        ############################################################
        counts, boundary = open_orthant_counts(self.cube, Configuration(np.eye(5)[:4]))
        self.assertTrue(np.array_equal(counts, np.ones(16)))
        self.assertEqual(boundary, 0)

    ############################################################
    @unittest.skipIf(not pyequipart.config.slow_tests, "slow tests disabled")
    def test_hypercube(self):
        ############################################################
        L = Reflection(np.zeros(4), np.eye(4)[2:])
        report = partition_point_cloud(self.cube, 1, L)
        self.assertTrue(report.certified, msg=repr(report))
        self.assertLessEqual(int(report.counts.max()), 1)
        out = report.to_dict()
        self.assertEqual(out["status"], "converged")
        self.assertEqual(len(out["counts"]), 16)

    ############################################################
    @unittest.skipIf(not pyequipart.config.slow_tests, "slow tests disabled")
    def test_curve_points(self):
        ############################################################
        points = trigonometric_curve()(np.arange(16) * np.pi / 8 + 0.01)
        L = Reflection(np.zeros(4), np.eye(4)[2:])
        report = partition_point_cloud(points, 1, L)
        self.assertTrue(report.certified, msg=repr(report))
        self.assertLessEqual(int(report.counts.max()), 1)


if __name__ == "__main__":
    """
    run tests
    """
    unittest.main()
