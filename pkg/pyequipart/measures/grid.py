import numpy as np

from pyequipart.common.utils import log
from pyequipart.measures.base import CellMeasure


class GridDensityMeasure(CellMeasure):
    r"""Density :math:`f\,dm` sampled at the midpoints of a regular axis-aligned grid.

    Each cell carries the mass ``value * cell_volume``. Masses of halfspaces use the
    midpoint rule, except for cells crossed by a hyperplane which contribute the
    fraction ``clip(1/2 + s/(2W), 0, 1)`` of their mass, so that orthant masses vary
    continuously with the hyperplanes.

    Args:
        lower, upper ((D,) arrays): corners of the box, ``lower < upper``.
        resolution ((D,) ints): number of cells per axis.
        values ((prod(resolution),) array): nonnegative density values, row-major
            (the last axis varies fastest).
    """

    kind = "grid"

    def __init__(self, lower, upper, resolution, values):
        lower = np.asarray(lower, dtype="float64")
        upper = np.asarray(upper, dtype="float64")
        resolution = tuple(int(r) for r in np.atleast_1d(resolution))
        super().__init__(len(lower))
        if upper.shape != lower.shape or len(resolution) != self.dim:
            raise ValueError("Box corners and resolution should have {} entries.".format(self.dim))
        if np.any(lower >= upper):
            raise ValueError("Box corners should satisfy lower < upper on every axis.")
        if min(resolution) < 1:
            raise ValueError("Resolutions should be positive integers, got {}.".format(resolution))
        values = np.asarray(values, dtype="float64").reshape(-1)
        if values.size != np.prod(resolution):
            raise ValueError(
                "Expected {} grid values, got {}.".format(int(np.prod(resolution)), values.size)
            )
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise ValueError("Grid values should be nonnegative.")
        self.lower, self.upper, self.resolution = lower, upper, resolution
        self.values = values
        self.step = (upper - lower) / np.array(resolution)
        self._cells = None
        self.total_mass()

    @classmethod
    def from_function(cls, fun, lower, upper, resolution):
        """Grid measure sampling the vectorized density ``fun((N,D) array) -> (N,)``."""
        lower = np.asarray(lower, dtype="float64")
        upper = np.asarray(upper, dtype="float64")
        resolution = tuple(int(r) for r in np.atleast_1d(resolution))
        centers = _midpoints(lower, upper, resolution)
        return cls(lower, upper, resolution, np.asarray(fun(centers), dtype="float64"))

    @property
    def cell_volume(self):
        return float(np.prod(self.step))

    def cells(self):
        if self._cells is None:
            centers = _midpoints(self.lower, self.upper, self.resolution)
            keep = self.values > 0
            self._cells = (
                centers[keep],
                self.values[keep] * self.cell_volume,
                (self.step / 2)[None, :],
            )
        return self._cells

    def resampled(self, reflection):
        """Values of the density composed with ``reflection``, by nearest-cell lookup."""
        centers = _midpoints(self.lower, self.upper, self.resolution)
        Y = reflection.apply(centers)
        idx = np.floor((Y - self.lower) / self.step).astype(np.int64)
        inside = np.all((idx >= 0) & (idx < np.array(self.resolution)), axis=1)
        flat = np.ravel_multi_index(tuple(idx[inside].T), self.resolution)
        out = np.zeros_like(self.values)
        out[inside] = self.values[flat]
        return out

    def pushforward(self, reflection):
        values = self.resampled(reflection)
        if not values.sum() > 0:
            raise ValueError("The reflected density leaves the grid box.")
        ratio = self.values.sum() / values.sum()
        if abs(ratio - 1) > 1e-12:
            log("grid pushforward rescaled by {:.3e} to preserve the mass".format(ratio))
        return GridDensityMeasure(self.lower, self.upper, self.resolution, values * ratio)

    def __repr__(self):
        return "GridDensityMeasure(lower={}, upper={}, resolution={})".format(
            self.lower.tolist(), self.upper.tolist(), self.resolution
        )


def _midpoints(lower, upper, resolution):
    axes = [
        lo + (np.arange(r) + 0.5) * (hi - lo) / r
        for (lo, hi, r) in zip(lower, upper, resolution)
    ]
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(resolution))
