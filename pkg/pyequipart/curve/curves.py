import numpy as np

from pyequipart.common.errors import DegenerateError


class Curve:
    r"""Parametrized curve :math:`t \mapsto \gamma(t) \in \mathbb{R}^D`.

    Three kinds are supported:

      - ``"gamma4"``: the trigonometric curve :math:`(\cos t, \sin t, \cos 2t, \sin 2t)`
        on the cyclic domain :math:`[0, 2\pi)`,
      - ``"moment"``: the moment curve :math:`(t, t^2, \ldots, t^D)` on a finite interval,
      - ``"custom"``: any continuous vectorized map, without exact intersections.
    """

    def __init__(self, kind, dim, domain, fun=None, closed=False):
        lo, hi = float(domain[0]), float(domain[1])
        if not lo < hi:
            raise ValueError("Curve domain should satisfy lo < hi, got {}.".format(domain))
        if kind == "custom" and fun is None:
            raise ValueError("A custom curve needs a parametrization.")
        self.kind = kind
        self.dim = int(dim)
        self.domain = (lo, hi)
        self.closed = closed
        self._fun = fun

    def __call__(self, t):
        t = np.asarray(t, dtype="float64")
        scalar = t.ndim == 0
        t = np.atleast_1d(t)
        if self.kind == "gamma4":
            X = np.stack((np.cos(t), np.sin(t), np.cos(2 * t), np.sin(2 * t)), axis=1)
        elif self.kind == "moment":
            X = np.stack([t ** k for k in range(1, self.dim + 1)], axis=1)
        else:
            X = np.asarray(self._fun(t), dtype="float64").reshape(len(t), self.dim)
        return X[0] if scalar else X

    @property
    def exact(self):
        """True when hyperplane intersections are computed as polynomial roots."""
        return self.kind in ("gamma4", "moment")

    def hyperplane_roots(self, u, lo=None, hi=None):
        """Sorted parameters in ``[lo, hi]`` where ``u . (gamma(t), 1)`` vanishes."""
        from pyequipart.curve.intersections import gamma4_roots, moment_roots

        lo = self.domain[0] if lo is None else lo
        hi = self.domain[1] if hi is None else hi
        if self.kind == "gamma4":
            roots = gamma4_roots(u)
            # unroll the cyclic parameters over [lo, hi]
            k0 = int(np.floor((lo - roots.max()) / (2 * np.pi))) if len(roots) else 0
            out = []
            for k in range(k0, k0 + int(np.ceil((hi - lo) / (2 * np.pi))) + 2):
                out.extend(t + 2 * np.pi * k for t in roots)
            return np.array(sorted(t for t in out if lo <= t <= hi))
        elif self.kind == "moment":
            roots = moment_roots(u)
            return roots[(roots >= lo) & (roots <= hi)]
        raise NotImplementedError("Custom curves have no exact intersections.")

    def to_dict(self):
        if self.kind == "custom":
            raise ValueError("Custom curves cannot be serialized.")
        return self.kind

    def __repr__(self):
        return "Curve(kind={!r}, dim={}, domain={})".format(self.kind, self.dim, self.domain)


def trigonometric_curve():
    """The convex curve :math:`\\Gamma_4` in :math:`\\mathbb{R}^4`."""
    return Curve("gamma4", 4, (0.0, 2 * np.pi), closed=True)


def moment_curve(dim, interval=(-1.0, 1.0)):
    if dim < 1:
        raise DegenerateError("Moment curves live in dimension >= 1.")
    return Curve("moment", dim, interval)


def custom_curve(fun, dim, domain, closed=False):
    return Curve("custom", dim, domain, fun=fun, closed=closed)


def curve_from_name(name, dim=None, interval=None):
    if name == "gamma4":
        if dim not in (None, 4):
            raise ValueError("The trigonometric curve lives in R^4, got dim={}.".format(dim))
        curve = trigonometric_curve()
        if interval is not None:
            curve = Curve("gamma4", 4, interval, closed=False)
        return curve
    elif name == "moment":
        if dim is None:
            raise ValueError("Moment curves need a dimension.")
        return moment_curve(dim, (-1.0, 1.0) if interval is None else interval)
    raise ValueError("Unknown curve {!r}, expected 'gamma4' or 'moment'.".format(name))


def arc_count_bound(n):
    r"""Maximal number of arcs cut on a convex curve of :math:`\mathbb{R}^n` by ``n`` hyperplanes.

    Each hyperplane meets the curve in at most ``n`` points, so ``n`` hyperplanes cut
    at most :math:`n^2` arcs, whereas an equipartition needs :math:`2^n` orthants to be
    visited.

    Returns:
        (n**2, 2**n, n**2 >= 2**n)
    """
    if n < 1:
        raise ValueError("n should be a positive integer, got {}.".format(n))
    return n * n, 2 ** n, n * n >= 2 ** n
