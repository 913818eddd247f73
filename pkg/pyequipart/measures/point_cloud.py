import numpy as np

from pyequipart.common.utils import lifted_rows
from pyequipart.measures.base import CellMeasure


class PointCloudMeasure(CellMeasure):
    r"""Weighted counting measure :math:`\sum_j w_j \delta_{p_j}`.

    Points lying exactly on a hyperplane count on its positive (closed) side.

    Args:
        points ((N,D) array): the atoms, :math:`D \in \{2,3,4\}`.
        weights ((N,) array, optional): positive weights, default 1.
    """

    kind = "points"

    def __init__(self, points, weights=None):
        points = np.asarray(points, dtype="float64")
        if points.ndim != 2 or points.shape[0] == 0:
            raise ValueError("Points should be a non empty (N,D) array, got shape {}.".format(points.shape))
        super().__init__(points.shape[1])
        if weights is None:
            weights = np.ones(points.shape[0])
        weights = np.asarray(weights, dtype="float64")
        if weights.shape != (points.shape[0],):
            raise ValueError(
                "Expected {} weights, got shape {}.".format(points.shape[0], weights.shape)
            )
        if np.any(weights <= 0) or not np.all(np.isfinite(weights)):
            raise ValueError("Point weights should be positive.")
        if not np.all(np.isfinite(points)):
            raise ValueError("Point coordinates should be finite.")
        self.points = points
        self.weights = weights
        self.total_mass()

    def cells(self):
        return self.points, self.weights, None

    def pushforward(self, reflection):
        return PointCloudMeasure(reflection.apply(self.points), self.weights)

    def __repr__(self):
        return "PointCloudMeasure(dim={}, size={})".format(self.dim, len(self.points))


def open_orthant_counts(points, config, tol=1e-12):
    r"""Number of points in each open orthant of a configuration.

    Points with :math:`|u_i\cdot(x,1)| \leq` ``tol`` for some ``i`` belong to no open
    orthant; they are counted apart.

    Returns:
        ((2**n,) int array of counts, number of boundary points)
    """
    X = np.asarray(points, dtype="float64")
    U = lifted_rows(config)
    D = X.shape[1]
    S = X @ U[:, :D].T + U[:, D]
    boundary = np.any(np.abs(S) <= tol, axis=1)
    betas = (S[~boundary] < 0).astype(np.int64) @ (1 << np.arange(U.shape[0]))
    return np.bincount(betas, minlength=2 ** U.shape[0]), int(boundary.sum())
