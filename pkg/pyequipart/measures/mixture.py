import numpy as np

from pyequipart.common.utils import lifted_rows
from pyequipart.measures.base import Measure


class MixtureMeasure(Measure):
    r"""Nonnegative combination :math:`\sum_i c_i \mu_i` of measures on the same space."""

    kind = "mixture"

    def __init__(self, components, weights=None):
        components = list(components)
        if not components:
            raise ValueError("A mixture needs at least one component.")
        dims = {m.dim for m in components}
        if len(dims) != 1:
            raise ValueError("Mixture components live in different dimensions: {}.".format(sorted(dims)))
        super().__init__(dims.pop())
        if weights is None:
            weights = np.ones(len(components))
        weights = np.asarray(weights, dtype="float64")
        if weights.shape != (len(components),) or np.any(weights < 0):
            raise ValueError("Mixture weights should be {} nonnegative numbers.".format(len(components)))
        self.components = components
        self.weights = weights
        self.total_mass()

    def _masses(self):
        return np.array([m.total_mass() for m in self.components])

    def _compute_total(self):
        return self.weights @ self._masses()

    def _orthant_masses(self, U):
        U = lifted_rows(U)
        self._check_lifted(U)
        out = np.zeros(2 ** U.shape[0])
        for w, m in zip(self.weights, self.components):
            if w > 0:
                out = out + w * m._orthant_masses(U)
        return out

    def projection_range(self, a):
        ranges = np.array(
            [m.projection_range(a) for (w, m) in zip(self.weights, self.components) if w > 0]
        )
        return float(ranges[:, 0].min()), float(ranges[:, 1].max())

    def centroid(self):
        c = self.weights * self._masses()
        return c @ np.array([m.centroid() for m in self.components]) / c.sum()

    def spread(self):
        c = self.weights * self._masses()
        g = self.centroid()
        s2 = [m.spread() ** 2 + ((m.centroid() - g) ** 2).sum() for m in self.components]
        return float(np.sqrt(c @ np.array(s2) / c.sum()))

    def pushforward(self, reflection):
        return MixtureMeasure([m.pushforward(reflection) for m in self.components], self.weights)

    def __repr__(self):
        return "MixtureMeasure({})".format(
            ", ".join("{:.6g}*{!r}".format(w, m) for (w, m) in zip(self.weights, self.components))
        )
