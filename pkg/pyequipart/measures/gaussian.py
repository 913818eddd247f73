import itertools

import numpy as np
from numpy.polynomial.hermite_e import hermegauss

from pyequipart.measures.base import CellMeasure


def hermite_stencil(order, dim):
    r"""Tensor Gauss-Hermite nodes and weights of the standard normal law on :math:`\mathbb{R}^D`.

    Returns:
        (nodes (order**D, D), weights (order**D,), half-width of the node cells)
    """
    if order < 1:
        raise ValueError("The stencil order should be positive, got {}.".format(order))
    x, w = hermegauss(order)
    w = w / w.sum()
    nodes = np.array(list(itertools.product(x, repeat=dim)))
    weights = np.array([np.prod(c) for c in itertools.product(w, repeat=dim)])
    halfwidth = (x[-1] - x[0]) / (order - 1) / 2 if order > 1 else 1.0
    return nodes, weights, halfwidth


class GaussianMixtureMeasure(CellMeasure):
    r"""Mixture of isotropic Gaussian laws :math:`\sum_m w_m \mathcal{N}(c_m, \sigma_m^2 I)`.

    Each component is discretized by a deterministic Gauss-Hermite product stencil
    of ``order`` nodes per axis; the node cells have side :math:`\sigma_m` times the
    node spacing. The stencil is symmetric under coordinate reflections and
    permutations, so the discretization inherits these symmetries of the mixture.
    """

    kind = "gaussians"

    def __init__(self, means, sigmas, weights=None, order=3):
        means = np.atleast_2d(np.asarray(means, dtype="float64"))
        super().__init__(means.shape[1])
        sigmas = np.broadcast_to(np.asarray(sigmas, dtype="float64"), (len(means),)).copy()
        if weights is None:
            weights = np.ones(len(means))
        weights = np.asarray(weights, dtype="float64")
        if weights.shape != (len(means),):
            raise ValueError("Expected {} weights, got shape {}.".format(len(means), weights.shape))
        if np.any(sigmas <= 0) or np.any(weights <= 0):
            raise ValueError("Gaussian widths and weights should be positive.")
        self.means, self.sigmas, self.weights = means, sigmas, weights
        self.order = int(order)
        self._cells = None
        self.total_mass()

    def cells(self):
        if self._cells is None:
            nodes, w, hw = hermite_stencil(self.order, self.dim)
            S = len(w)
            centers = (self.means[:, None, :] + self.sigmas[:, None, None] * nodes[None]).reshape(-1, self.dim)
            masses = (self.weights[:, None] * w[None, :]).reshape(-1)
            halfwidths = np.repeat(self.sigmas * hw, S)[:, None] * np.ones((1, self.dim))
            self._cells = (centers, masses, halfwidths)
        return self._cells

    def centroid(self):
        return self.weights @ self.means / self.weights.sum()

    def spread(self):
        d2 = ((self.means - self.centroid()) ** 2).sum(1) + self.dim * self.sigmas ** 2
        return float(np.sqrt(self.weights @ d2 / self.weights.sum()))

    def pushforward(self, reflection):
        return GaussianMixtureMeasure(
            reflection.apply(self.means), self.sigmas, self.weights, self.order
        )

    def __repr__(self):
        return "GaussianMixtureMeasure(dim={}, components={}, order={})".format(
            self.dim, len(self.means), self.order
        )
