import numpy as np
from numpy.polynomial.legendre import leggauss

from pyequipart.common.operations import cell_orthant_masses
from pyequipart.common.utils import lifted_rows
from pyequipart.measures.base import Measure


class TrigonometricDensity:
    r"""Density :math:`\rho(t) = a_0 + \sum_k a_k \cos kt + b_k \sin kt`, integrated exactly."""

    def __init__(self, a0=1.0, cos=(), sin=()):
        self.a0 = float(a0)
        self.cos = np.asarray(cos, dtype="float64").reshape(-1)
        self.sin = np.asarray(sin, dtype="float64").reshape(-1)

    def __call__(self, t):
        t = np.asarray(t, dtype="float64")
        out = self.a0 + 0 * t
        for k, a in enumerate(self.cos, 1):
            out = out + a * np.cos(k * t)
        for k, b in enumerate(self.sin, 1):
            out = out + b * np.sin(k * t)
        return out

    def antiderivative(self, t):
        t = np.asarray(t, dtype="float64")
        out = self.a0 * t
        for k, a in enumerate(self.cos, 1):
            out = out + a * np.sin(k * t) / k
        for k, b in enumerate(self.sin, 1):
            out = out - b * np.cos(k * t) / k
        return out

    def integral(self, lo, hi):
        return self.antiderivative(hi) - self.antiderivative(lo)

    @property
    def constant(self):
        return not (np.any(self.cos) or np.any(self.sin))

    def to_dict(self):
        if self.constant:
            return self.a0
        return {"a0": self.a0, "cos": self.cos.tolist(), "sin": self.sin.tolist()}


class FunctionDensity:
    """Vectorized density ``t -> rho(t)``, integrated by 16 point Gauss-Legendre rules."""

    def __init__(self, fun):
        self.fun = fun
        self.x, self.w = leggauss(16)

    def __call__(self, t):
        return np.asarray(self.fun(np.asarray(t, dtype="float64")), dtype="float64")

    def integral(self, lo, hi):
        lo, hi = np.broadcast_arrays(np.asarray(lo, dtype="float64"), np.asarray(hi, dtype="float64"))
        mid, half = (hi + lo) / 2, (hi - lo) / 2
        T = mid[..., None] + half[..., None] * self.x
        return half * (self(T) @ self.w)

    def to_dict(self):
        raise ValueError("Densities given as Python functions cannot be serialized.")


def as_density(density):
    if density is None:
        return TrigonometricDensity(1.0)
    if isinstance(density, (TrigonometricDensity, FunctionDensity)):
        return density
    if isinstance(density, dict):
        return TrigonometricDensity(density.get("a0", 0.0), density.get("cos", ()), density.get("sin", ()))
    if callable(density):
        return FunctionDensity(density)
    return TrigonometricDensity(float(density))


class CurveMeasure(Measure):
    r"""Measure :math:`\rho(t)\,dt` carried by a curve, optionally moved by :math:`x = A\gamma(t) + b`.

    The mass is the parameter measure :math:`\int \rho(t)\,dt` (the measure
    :math:`d\theta` on :math:`\Gamma_4` has mass :math:`2\pi`). For the trigonometric
    and moment curves, orthant masses are exact: the parameter interval is split at
    the intersections with every hyperplane and each arc, labelled at its midpoint,
    receives the integral of the density. Custom curves use the composite midpoint
    rule on ``quadrature`` subintervals.

    Args:
        curve (Curve): see :mod:`pyequipart.curve.curves`.
        interval ((2,) floats, optional): parameter interval, default the curve domain.
        density (None, float, dict, TrigonometricDensity or callable): density in t.
        quadrature (int): number of parameter samples, at least 256.
        transform ((A, b), optional): invertible affine map applied to the curve.
    """

    kind = "curve"

    def __init__(self, curve, interval=None, density=None, quadrature=256, transform=None):
        super().__init__(curve.dim)
        if quadrature < 256:
            raise ValueError("Curve measures need at least 256 quadrature samples, got {}.".format(quadrature))
        self.curve = curve
        self.interval = tuple(float(v) for v in (curve.domain if interval is None else interval))
        if not self.interval[0] < self.interval[1]:
            raise ValueError("Parameter interval should satisfy lo < hi, got {}.".format(self.interval))
        self.density = as_density(density)
        self.quadrature = int(quadrature)
        if transform is None:
            self.A, self.b = np.eye(self.dim), np.zeros(self.dim)
            self.has_transform = False
        else:
            self.A = np.asarray(transform[0], dtype="float64").reshape(self.dim, self.dim)
            self.b = np.asarray(transform[1], dtype="float64").reshape(self.dim)
            if abs(np.linalg.det(self.A)) < 1e-14:
                raise ValueError("The curve transform should be invertible.")
            self.has_transform = True
        lo, hi = self.interval
        t = lo + (np.arange(4 * self.quadrature) + 0.5) * (hi - lo) / (4 * self.quadrature)
        if np.any(self.density(t) < -1e-14):
            raise ValueError("Curve densities should be nonnegative.")
        self._cells = None
        self.total_mass()

    def points(self, t):
        return self.curve(t) @ self.A.T + self.b

    def _compute_total(self):
        return self.density.integral(*self.interval)

    def pulled_back(self, U):
        r"""Lifted hyperplanes in the frame of the curve, :math:`(A^T a, a\cdot b + u_{D+1})`."""
        U = lifted_rows(U)
        D = self.dim
        return np.concatenate((U[:, :D] @ self.A, (U[:, :D] @ self.b + U[:, D])[:, None]), axis=1)

    def cells(self):
        """Composite midpoint samples of the measure."""
        if self._cells is None:
            lo, hi = self.interval
            dt = (hi - lo) / self.quadrature
            t = lo + (np.arange(self.quadrature) + 0.5) * dt
            self._cells = (self.points(t), self.density(t) * dt, None)
        return self._cells

    def _orthant_masses(self, U):
        U = lifted_rows(U)
        self._check_lifted(U)
        if not self.curve.exact:
            return cell_orthant_masses(*self.cells(), U)
        left, right, betas = self._split(U)
        out = np.zeros(2 ** U.shape[0])
        np.add.at(out, betas, self.density.integral(left, right))
        return out

    def _split(self, U):
        V = self.pulled_back(U)
        lo, hi = self.interval
        cuts = np.unique(
            np.concatenate(
                [[lo, hi]] + [self.curve.hyperplane_roots(v / np.linalg.norm(v), lo, hi) for v in V]
            )
        )
        S = self.curve((cuts[:-1] + cuts[1:]) / 2) @ V[:, : self.dim].T + V[:, self.dim]
        betas = (S < 0).astype(np.int64) @ (1 << np.arange(len(V)))
        return cuts[:-1], cuts[1:], betas

    def arcs(self, U):
        """Parameter arcs ``(lo, hi, beta)`` cut on the curve by exact splitting, in order."""
        left, right, betas = self._split(lifted_rows(U))
        return [(float(a), float(b), int(beta)) for (a, b, beta) in zip(left, right, betas)]

    def projection_range(self, a):
        p = self.cells()[0] @ np.asarray(a, dtype="float64")
        margin = 1e-3 * (p.max() - p.min()) + 1e-12
        return float(p.min() - margin), float(p.max() + margin)

    def centroid(self):
        X, w, _ = self.cells()
        return w @ X / w.sum()

    def spread(self):
        X, w, _ = self.cells()
        return float(np.sqrt(w @ ((X - self.centroid()) ** 2).sum(1) / w.sum()))

    def pushforward(self, reflection):
        return CurveMeasure(
            self.curve,
            self.interval,
            self.density,
            self.quadrature,
            (reflection.linear @ self.A, reflection.apply(self.b[None])[0]),
        )

    def __repr__(self):
        return "CurveMeasure(curve={!r}, interval={}, transformed={})".format(
            self.curve.kind, self.interval, self.has_transform
        )
