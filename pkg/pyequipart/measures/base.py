import numpy as np

from pyequipart.common.operations import cell_orthant_masses
from pyequipart.common.utils import bitstring, check_dimension, lifted_rows, parse_bitstring


class MassVector:
    r"""Orthant masses :math:`b_\beta` of a measure, indexed by :math:`\beta \in \{0,1\}^n`.

    Bit ``i`` of the integer index (little-endian) is the side of hyperplane ``i``,
    0 meaning the positive closed halfspace. Entries may also be addressed by bit
    strings written hyperplane 1 first: ``b["1000"] == b[1]``.
    """

    def __init__(self, dim, values):
        values = np.asarray(values, dtype="float64")
        if values.shape != (2 ** dim,):
            raise ValueError(
                "A mass vector in dimension {} has {} entries, got {}.".format(
                    dim, 2 ** dim, values.shape
                )
            )
        self.dim = dim
        self.values = values

    def __getitem__(self, beta):
        if isinstance(beta, str):
            beta = parse_bitstring(beta)
        return self.values[beta]

    def __len__(self):
        return len(self.values)

    def __array__(self, dtype=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def total(self):
        return float(self.values.sum())

    def as_dict(self):
        return {bitstring(b, self.dim): float(v) for (b, v) in enumerate(self.values)}

    def __repr__(self):
        return "MassVector(dim={}, values={})".format(self.dim, self.values.tolist())


class Measure:
    r"""Finite measure on :math:`\mathbb{R}^n` answering orthant-mass queries.

    Subclasses implement :meth:`_orthant_masses` for any number ``k`` of lifted
    hyperplanes (``k`` rows of length ``n+1``), which returns the :math:`2^k`
    masses. Measures are immutable after construction.
    """

    kind = None

    def __init__(self, dim):
        self.dim = check_dimension(int(dim))
        self._total = None

    def total_mass(self):
        if self._total is None:
            self._total = float(self._compute_total())
            if not self._total > 0:
                raise ValueError("Measures with zero mass are not supported.")
        return self._total

    def _compute_total(self):
        raise NotImplementedError()

    def _orthant_masses(self, U):
        raise NotImplementedError()

    def halfspace_mass(self, u):
        """Mass of the closed positive side of the lifted hyperplane ``u``."""
        return float(self._orthant_masses(lifted_rows(u))[0])

    def projection_range(self, a):
        """Interval containing :math:`a\\cdot x` for every point of the support."""
        raise NotImplementedError()

    def centroid(self):
        raise NotImplementedError()

    def spread(self):
        """Root mean square distance to the centroid."""
        raise NotImplementedError()

    def pushforward(self, reflection):
        raise NotImplementedError(
            "Pushforward is not supported for {} measures.".format(self.kind)
        )

    def _check_lifted(self, U):
        if U.shape[1] != self.dim + 1:
            raise ValueError(
                "Hyperplanes of R^{} are lifted to vectors of length {}, got {}.".format(
                    self.dim, self.dim + 1, U.shape[1]
                )
            )


class CellMeasure(Measure):
    r"""Measure discretized by weighted cells (midpoints, masses and half-widths).

    Atoms are cells of zero width. The masses of orthants are reduced by
    :func:`pyequipart.common.operations.cell_orthant_masses`.
    """

    def cells(self):
        raise NotImplementedError()

    def _compute_total(self):
        return self.cells()[1].sum()

    def _orthant_masses(self, U):
        U = lifted_rows(U)
        self._check_lifted(U)
        centers, weights, halfwidths = self.cells()
        return cell_orthant_masses(centers, weights, halfwidths, U)

    def projection_range(self, a):
        centers, _, halfwidths = self.cells()
        p = centers @ np.asarray(a, dtype="float64")
        margin = 0.0 if halfwidths is None else np.max(halfwidths @ np.abs(a))
        return float(p.min() - margin - 1e-12), float(p.max() + margin + 1e-12)

    def centroid(self):
        centers, weights, _ = self.cells()
        return weights @ centers / weights.sum()

    def spread(self):
        centers, weights, _ = self.cells()
        d2 = ((centers - self.centroid()) ** 2).sum(1)
        return float(np.sqrt(weights @ d2 / weights.sum()))


def orthant_masses(measure, config):
    r"""Orthant masses :math:`b_\beta(H) = \mu(H^\beta)` of a configuration.

    Args:
        measure (Measure): a measure on :math:`\mathbb{R}^n`.
        config (Configuration or (n,n+1) array): ``n`` unit vectors of :math:`S^n`.

    Returns:
        MassVector with :math:`2^n` entries summing to the total mass.

    Example:
        >>> mu = PointCloudMeasure([[0.0, 0.0]])
        >>> b = orthant_masses(mu, lift_all([Hyperplane([1, 0], 1), Hyperplane([0, 1], 1)]))
        >>> b["11"]
        1.0
    """
    U = lifted_rows(config)
    if U.shape != (measure.dim, measure.dim + 1):
        raise ValueError(
            "A configuration in R^{} has {} vectors of length {}, got shape {}.".format(
                measure.dim, measure.dim, measure.dim + 1, U.shape
            )
        )
    if not np.allclose(np.linalg.norm(U, axis=1), 1.0, atol=1e-9):
        raise ValueError("Configuration vectors should have unit length.")
    measure.total_mass()
    return MassVector(measure.dim, measure._orthant_masses(U))


def total_mass(measure):
    return measure.total_mass()
