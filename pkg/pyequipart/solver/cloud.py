import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import pdist

from pyequipart.arrangement.hyperplane import transform_configuration
from pyequipart.common.errors import SymmetryError
from pyequipart.common.utils import bitstring, complete_basis, log, warn
from pyequipart.measures.gaussian import GaussianMixtureMeasure
from pyequipart.measures.point_cloud import open_orthant_counts
from pyequipart.measures.symmetry import Reflection, merge_points
from pyequipart.solver.refine import refine
from pyequipart.solver.report import _jsonable
from pyequipart.solver.symmetric import as_plane_reflection, solve_4d_symmetric


class PartitionReport:
    """Hyperplanes for a point cloud with the counts of its open orthants.

    ``certified`` is True when every open orthant holds at most ``bound`` points; a
    False value is a failure of the numerics, not a counterexample.
    """

    def __init__(self, config, counts, boundary, bound, sigma, rounds, report):
        self.config = config
        self.counts = np.asarray(counts)
        self.boundary = int(boundary)
        self.bound = int(bound)
        self.sigma = float(sigma)
        self.rounds = rounds
        self.report = report

    @property
    def certified(self):
        return self.config is not None and int(self.counts.max()) <= self.bound

    @property
    def status(self):
        return "converged" if self.certified else "stalled"

    def to_dict(self):
        return {
            "status": self.status,
            "certified": self.certified,
            "bound": self.bound,
            "counts": {bitstring(b, 4): int(c) for (b, c) in enumerate(self.counts)},
            "boundary_points": self.boundary,
            "sigma": self.sigma,
            "rounds": _jsonable(self.rounds),
            "u": None if self.config is None else self.config.u.tolist(),
            "solver": None if self.report is None else self.report.to_dict(),
        }

    def __repr__(self):
        return "PartitionReport(certified={}, max count={}, bound={})".format(
            self.certified, int(self.counts.max()), self.bound
        )


def canonical_frame(L):
    r"""Rigid motion :math:`x = Qy + c` sending span(e3, e4) onto the 2-plane ``L``."""
    Lb = L.directions
    Nb = complete_basis(Lb, 4)
    return np.array([Nb[0], Nb[1], Lb[0], Lb[1]]).T, L.point


def is_symmetric_set(points, reflection, tol=1e-9):
    dist, _ = cKDTree(points).query(reflection.apply(points))
    return bool(np.all(dist <= tol))


def partition_point_cloud(points, d, L=None, target=1e-6, rounds=8, sigma=None, seed=0):
    r"""Four hyperplanes leaving at most ``d`` points of a symmetric cloud in each open orthant.

    The cloud of :math:`16d` points is replaced by Gaussian bumps of width
    :math:`\sigma` (a quarter of the smallest distance at first), in coordinates
    where ``L`` is span(e3, e4) so that the smoothing stencil is symmetric too. The
    smoothed measure is equipartitioned by :func:`solve_4d_symmetric`; points are
    then counted in the open orthants. While some orthant holds too many points,
    :math:`\sigma` is halved and the previous hyperplanes refined, at most ``rounds``
    times.

    Without ``L`` the cloud is first symmetrized through span(e3, e4) translated to
    its centroid and the bound becomes ``2 d``.

    Args:
        seed (int): seed of the random configurations of the symmetry check.

    Returns:
        PartitionReport

    Raises:
        SymmetryError: if ``L`` is given and the cloud is not symmetric about it.
    """
    P = np.asarray(points, dtype="float64")
    if P.ndim != 2 or P.shape[1] != 4:
        raise ValueError("Expected points of R^4, got shape {}.".format(P.shape))
    if len(P) != 16 * d:
        raise ValueError("Expected 16*d = {} points, got {}.".format(16 * d, len(P)))
    if len(merge_points(P, np.ones(len(P)))[0]) != len(P):
        raise ValueError("The points should be distinct.")
    if L is None:
        L = Reflection(P.mean(0), np.eye(4)[2:])
        cloud = merge_points(np.concatenate((P, L.apply(P))), np.ones(2 * len(P)))[0]
        bound = 2 * d
    else:
        L = as_plane_reflection(L)
        if not is_symmetric_set(P, L):
            raise SymmetryError("The point cloud is not symmetric about the given 2-plane.")
        cloud = P
        bound = d
    Q, c = canonical_frame(L)
    Y = (cloud - c) @ Q
    sigma = pdist(Y).min() / 4 if sigma is None else float(sigma)

    history = []
    report, config, counts, boundary = None, None, np.zeros(16, dtype=int), 0
    for k in range(rounds + 1):
        measure = GaussianMixtureMeasure(Y, sigma)
        if report is not None:
            report = refine(measure, report.config, target)
        if report is None or not report.converged:
            report = solve_4d_symmetric(measure, target=target, seed=seed)
        if report.config is not None:
            config = transform_configuration(report.config, Q, c)
            counts, boundary = open_orthant_counts(P, config)
        history.append(
            {
                "sigma": sigma,
                "status": report.status,
                "residual": report.residual,
                "max_count": int(counts.max()),
                "boundary_points": boundary,
            }
        )
        log("cloud round {}: sigma={:.3e}, {!r}, max count {}".format(k, sigma, report, int(counts.max())))
        if config is not None and report.converged and counts.max() <= bound:
            break
        sigma /= 2
    out = PartitionReport(config, counts, boundary, bound, history[-1]["sigma"], history, report)
    if not out.certified:
        warn("orthant bound {} not certified after {} rounds".format(bound, len(history)))
    return out
