import numpy as np

from pyequipart.common.errors import DegenerateError


def gamma4_polynomial(u):
    r"""Coefficients (highest degree first) of :math:`z^2\, u\cdot(\gamma(t),1)` with :math:`z = e^{it}`."""
    u = np.asarray(u, dtype="float64")
    return np.array(
        [
            (u[2] - 1j * u[3]) / 2,
            (u[0] - 1j * u[1]) / 2,
            u[4],
            (u[0] + 1j * u[1]) / 2,
            (u[2] + 1j * u[3]) / 2,
        ]
    )


def gamma4_roots(u, tol=1e-8):
    r"""Sorted parameters :math:`t \in [0, 2\pi)` where the hyperplane ``u`` meets :math:`\Gamma_4`.

    Roots of the quartic in :math:`z = e^{it}` are the companion matrix eigenvalues;
    only those within ``tol`` of the unit circle are kept. Double roots (tangency)
    are reported once.
    """
    coeffs = gamma4_polynomial(u)
    if np.max(np.abs(coeffs)) < 1e-14:
        raise DegenerateError("The hyperplane restriction to the curve vanishes identically.")
    z = np.roots(coeffs)
    t = np.mod(np.angle(z[np.abs(np.abs(z) - 1) < tol]), 2 * np.pi)
    t = np.sort(np.where(t > 2 * np.pi - 1e-12, 0.0, t))
    if len(t) > 1:
        gaps = np.diff(np.concatenate((t, [t[0] + 2 * np.pi])))
        t = t[gaps > 1e-7] if np.any(gaps > 1e-7) else t[:1]
    assert len(t) <= 4, "a hyperplane meets the convex curve in at most 4 points"
    return t


def moment_roots(u, tol=1e-8):
    """Sorted real roots of :math:`u_{n+1} + \\sum_k u_k t^k`."""
    u = np.asarray(u, dtype="float64")
    n = len(u) - 1
    coeffs = np.concatenate((u[n - 1 :: -1], [u[n]]))
    if np.max(np.abs(coeffs)) < 1e-14:
        raise DegenerateError("The hyperplane restriction to the curve vanishes identically.")
    nz = np.flatnonzero(np.abs(coeffs) > 0)
    z = np.roots(coeffs[nz[0] :])
    real = z[np.abs(z.imag) <= tol * np.maximum(1.0, np.abs(z))].real
    out = np.unique(np.round(np.sort(real), 12))
    assert len(out) <= n
    return out


def curve_hyperplane_intersections(curve, u):
    r"""All parameters where a lifted hyperplane ``u`` meets ``curve``, sorted.

    For :math:`\Gamma_4` the parameters lie in :math:`[0, 2\pi)` and there are at most
    4 of them; for a moment curve they are the roots inside the domain.

    Example:
        >>> curve_hyperplane_intersections(trigonometric_curve(), [0, 0, 0, 1, 0])
        array([0.        , 1.57079633, 3.14159265, 4.71238898])
    """
    u = np.asarray(u, dtype="float64")
    if u.shape != (curve.dim + 1,):
        raise ValueError(
            "Expected a lifted hyperplane of length {}, got {}.".format(curve.dim + 1, u.shape)
        )
    if curve.kind == "gamma4":
        return gamma4_roots(u)
    return curve.hyperplane_roots(u)
