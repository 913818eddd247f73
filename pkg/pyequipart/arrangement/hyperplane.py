import itertools

import numpy as np

import pyequipart.config
from pyequipart.common.errors import DegenerateError, DeltaConditionError
from pyequipart.common.utils import affine_lifted_image, complete_basis, lifted_rows


class Hyperplane:
    r"""Oriented affine hyperplane :math:`\{x : a\cdot x = c\}` with positive side :math:`a\cdot x \geq c`.

    The normal is normalized on construction.
    """

    def __init__(self, a, c):
        a = np.asarray(a, dtype="float64")
        nrm = np.linalg.norm(a)
        if not nrm > 0:
            raise ValueError("A hyperplane needs a non zero normal.")
        self.a = a / nrm
        self.c = float(c) / nrm
        self.dim = len(a)

    def side(self, X):
        """0 on the closed positive side, 1 elsewhere."""
        return (np.asarray(X) @ self.a < self.c).astype(np.int64)

    def distance(self, x):
        return float(abs(np.asarray(x, dtype="float64") @ self.a - self.c))

    def to_dict(self):
        return {"a": self.a.tolist(), "c": self.c}

    def __repr__(self):
        return "Hyperplane(a={}, c={!r})".format(self.a.tolist(), self.c)


def lift(h):
    r"""Unit vector :math:`u = (a, -c)/|(a, -c)|` of :math:`S^n`, so that :math:`a\cdot x \geq c \iff u\cdot(x,1) \geq 0`."""
    u = np.append(h.a, -h.c)
    return u / np.linalg.norm(u)


def unlift(u, tol=1e-12):
    """Oriented hyperplane of a unit vector, the inverse of :func:`lift`.

    Raises:
        DegenerateError: for the hyperplane at infinity (u close to the last axis).
    """
    u = np.asarray(u, dtype="float64")
    a = u[:-1]
    nrm = np.linalg.norm(a)
    if np.max(np.abs(a)) < tol:
        raise DegenerateError("Hyperplane at infinity: {} has no affine counterpart.".format(u.tolist()))
    return Hyperplane(a / nrm, -u[-1] / nrm)


def lift_all(hyperplanes):
    return Configuration([lift(h) for h in hyperplanes])


def line_angle(u, v):
    """Angle in [0, pi/2] between the lines spanned by two unit vectors."""
    s = 1.0 if u @ v >= 0 else -1.0
    return 2 * np.arctan2(np.linalg.norm(u - s * v), np.linalg.norm(u + s * v))


class Configuration:
    r"""Ordered tuple of :math:`n` oriented hyperplanes of :math:`\mathbb{R}^n`, as unit vectors of :math:`S^n`.

    Rows are normalized on construction. The :math:`\delta`-condition asks the lines
    spanned by any two rows to make an angle larger than ``delta_tol``.
    """

    def __init__(self, u):
        u = np.atleast_2d(np.asarray(u, dtype="float64"))
        n = u.shape[0]
        if u.shape != (n, n + 1):
            raise ValueError("A configuration of n hyperplanes is an (n, n+1) array, got {}.".format(u.shape))
        nrm = np.linalg.norm(u, axis=1, keepdims=True)
        if np.any(nrm == 0):
            raise ValueError("Configuration vectors should be non zero.")
        self.u = u / nrm
        self.dim = n

    @classmethod
    def from_hyperplanes(cls, hyperplanes):
        return lift_all(hyperplanes)

    def hyperplanes(self):
        return [unlift(v) for v in self.u]

    def min_line_angle(self):
        if self.dim < 2:
            return np.pi / 2
        return min(line_angle(self.u[i], self.u[j]) for (i, j) in itertools.combinations(range(self.dim), 2))

    def satisfies_delta(self, delta_tol=None):
        delta_tol = pyequipart.config.delta_tol if delta_tol is None else delta_tol
        return self.min_line_angle() > delta_tol

    def check_delta(self, delta_tol=None):
        if not self.satisfies_delta(delta_tol):
            raise DeltaConditionError(
                "Two hyperplanes of the configuration are (anti)parallel: min line angle {:.3e}.".format(
                    self.min_line_angle()
                )
            )
        return self

    def distance(self, other):
        return float(np.max(np.abs(self.u - lifted_rows(other))))

    def to_dict(self):
        return {"dim": self.dim, "u": self.u.tolist()}

    def __eq__(self, other):
        return isinstance(other, Configuration) and np.array_equal(self.u, other.u)

    def __repr__(self):
        return "Configuration(dim={}, u={})".format(self.dim, self.u.tolist())


def tangent_basis(u, subspace=None):
    r"""Orthonormal basis of the tangent space of the sphere at ``u``.

    Args:
        u ((D+1,) unit vector).
        subspace ((m, D+1) array, optional): rows spanning a linear subspace that
            contains ``u``; the basis then spans the tangent space of the great
            sphere :math:`S^n \cap \mathrm{span}`.

    Returns:
        (m-1, D+1) array.
    """
    u = np.asarray(u, dtype="float64")
    if subspace is None:
        return complete_basis([u], len(u))
    S = np.atleast_2d(np.asarray(subspace, dtype="float64"))
    B = S - (S @ u)[:, None] * u
    _, sv, Vt = np.linalg.svd(B, full_matrices=False)
    return Vt[sv > 1e-10]


def transform_configuration(config, A, b):
    r"""Image of the hyperplanes under the invertible affine map :math:`x \mapsto Ax + b`."""
    return Configuration(affine_lifted_image(config, A, b))


def reflect_configuration(config, reflection):
    return Configuration(reflection.lifted(config))
