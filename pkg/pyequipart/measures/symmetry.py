import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from pyequipart.common.errors import SymmetryError
from pyequipart.common.utils import affine_lifted_image, complete_basis, log, unit
from pyequipart.measures.base import orthant_masses
from pyequipart.measures.curve import CurveMeasure
from pyequipart.measures.gaussian import GaussianMixtureMeasure
from pyequipart.measures.grid import GridDensityMeasure
from pyequipart.measures.mixture import MixtureMeasure
from pyequipart.measures.point_cloud import PointCloudMeasure


class Reflection:
    r"""Orthogonal reflection through the affine subspace ``point + span(directions)``.

    The map is :math:`x \mapsto q + M(x - q)` with :math:`M = 2P - I`, :math:`P` the
    orthogonal projector on the span of ``directions``. An empty family of directions
    gives the central symmetry through ``point``.
    """

    def __init__(self, point, directions=()):
        self.point = np.asarray(point, dtype="float64")
        D = len(self.point)
        directions = np.asarray(directions, dtype="float64").reshape(-1, D)
        if len(directions):
            Q, R = np.linalg.qr(directions.T)
            if np.min(np.abs(np.diag(R))) < 1e-12:
                raise ValueError("Reflection directions should be linearly independent.")
            self.directions = Q.T
        else:
            self.directions = np.zeros((0, D))
        self.linear = 2 * self.directions.T @ self.directions - np.eye(D)
        self.translation = self.point - self.linear @ self.point

    @classmethod
    def central(cls, point):
        return cls(point)

    @classmethod
    def through_hyperplane(cls, normal, point):
        normal = unit(normal, "hyperplane normal")
        return cls(point, complete_basis([normal], len(normal)))

    @property
    def fixed_dimension(self):
        return len(self.directions)

    def apply(self, X):
        X = np.asarray(X, dtype="float64")
        return X @ self.linear.T + self.translation

    def lifted(self, U):
        """Images of lifted hyperplanes, the reflection being its own inverse."""
        return affine_lifted_image(U, self.linear, self.translation)

    def __repr__(self):
        return "Reflection(point={}, fixed dimension={})".format(self.point.tolist(), self.fixed_dimension)


def merge_points(points, weights, tol=1e-12):
    """Merge points closer than ``tol``, adding their weights (first point of a cluster kept)."""
    pairs = cKDTree(points).query_pairs(r=tol, output_type="ndarray")
    N = len(points)
    graph = coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(N, N))
    count, labels = connected_components(graph, directed=False)
    first = np.full(count, N)
    np.minimum.at(first, labels, np.arange(N))
    merged = np.zeros(count)
    np.add.at(merged, labels, weights)
    order = np.argsort(first)
    return points[first[order]], merged[order]


def symmetrize(measure, reflection):
    r"""Average :math:`\frac12(\mu + R_*\mu)` of a measure and its image under a reflection.

    Point clouds merge coincident atoms, so an invariant cloud is returned unchanged.
    Grid densities are resampled by nearest-cell lookup of the reflected midpoints
    (exact when the reflection maps the lattice of cells to itself) and rescaled to
    the original mass. Curve measures become a mixture of the curve and its image.

    Args:
        measure (Measure): the measure to symmetrize.
        reflection (Reflection): a reflection through a point, a 2-plane or a 3-plane.

    Returns:
        Measure invariant under ``reflection`` with the same total mass.
    """
    if reflection.point.shape != (measure.dim,):
        raise ValueError("Reflection and measure live in different dimensions.")
    if isinstance(measure, PointCloudMeasure):
        points = np.concatenate((measure.points, reflection.apply(measure.points)))
        weights = np.concatenate((measure.weights, measure.weights)) / 2
        return PointCloudMeasure(*merge_points(points, weights))
    elif isinstance(measure, GridDensityMeasure):
        image = measure.pushforward(reflection)
        return GridDensityMeasure(
            measure.lower, measure.upper, measure.resolution, (measure.values + image.values) / 2
        )
    elif isinstance(measure, GaussianMixtureMeasure):
        image = measure.pushforward(reflection)
        return GaussianMixtureMeasure(
            np.concatenate((measure.means, image.means)),
            np.concatenate((measure.sigmas, image.sigmas)),
            np.concatenate((measure.weights, image.weights)) / 2,
            measure.order,
        )
    elif isinstance(measure, CurveMeasure):
        return MixtureMeasure([measure, measure.pushforward(reflection)], [0.5, 0.5])
    elif isinstance(measure, MixtureMeasure):
        return MixtureMeasure([symmetrize(m, reflection) for m in measure.components], measure.weights)
    raise NotImplementedError("Cannot symmetrize measures of type {}.".format(type(measure).__name__))


def sample_configurations(measure, count=8, seed=0):
    """Random configurations whose hyperplanes pass near the bulk of the measure."""
    rng = np.random.default_rng(seed)
    D = measure.dim
    c, s = measure.centroid(), measure.spread()
    out = []
    for _ in range(count):
        A = rng.standard_normal((D, D))
        A /= np.linalg.norm(A, axis=1, keepdims=True)
        P = c + 0.5 * s * rng.standard_normal((D, D))
        U = np.concatenate((A, -(A * P).sum(1, keepdims=True)), axis=1)
        out.append(U / np.linalg.norm(U, axis=1, keepdims=True))
    return out


def symmetry_defect(measure, reflection, count=8, seed=0):
    r"""Largest relative difference :math:`\max_\beta |b_\beta(RH) - b_\beta(H)| / M` over sampled configurations."""
    M = measure.total_mass()
    defect = 0.0
    for U in sample_configurations(measure, count, seed):
        b = orthant_masses(measure, U).values
        b_image = orthant_masses(measure, reflection.lifted(U)).values
        defect = max(defect, float(np.max(np.abs(b - b_image))) / M)
    return defect


def check_symmetry(measure, reflection, rtol=1e-8, count=8, seed=0):
    defect = symmetry_defect(measure, reflection, count, seed)
    log("symmetry defect {:.3e} for {!r}".format(defect, reflection))
    if defect > rtol:
        raise SymmetryError(
            "The measure is not invariant under {!r}: relative orthant-mass defect {:.3e} > {:.1e}.".format(
                reflection, defect, rtol
            )
        )
    return defect
