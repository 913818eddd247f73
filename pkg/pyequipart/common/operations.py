import numpy as np
from scipy.optimize import brentq

import pyequipart.config
from pyequipart.common.get_options import get_tag_backend
from pyequipart.common.utils import get_tools


def side_fractions(tools, centers, halfwidths, A, c):
    r"""Fraction of each cell lying on the closed positive side of each hyperplane.

    A cell with midpoint :math:`x` and half-widths :math:`h` contributes
    ``clip(1/2 + s / (2W), 0, 1)`` where :math:`s = a\cdot x + c` and
    :math:`W = \sum_k |a_k| h_k`. Cells of zero width use the sign rule
    :math:`s \geq 0`.

    This smoothing replaces the midpoint rule of grid quadrature: it agrees with it
    on cells the hyperplane misses and makes the masses continuous in the
    hyperplane.
    """
    s = tools.matmul(centers, tools.transpose(A)) + c
    if halfwidths is None:
        return tools.nonnegative(s)
    W = tools.matmul(halfwidths, tools.transpose(tools.abs(A)))
    flat = W <= 0
    ramp = tools.clip(0.5 + s / (2 * tools.where(flat, 1.0 + 0 * W, W)), 0.0, 1.0)
    return tools.where(flat, tools.nonnegative(s), ramp)


def cell_orthant_masses(centers, weights, halfwidths, U, backend=None):
    r"""Masses of the :math:`2^k` orthants cut out by :math:`k` lifted hyperplanes.

    Args:
        centers ((N,D) array): cell midpoints (or atoms).
        weights ((N,) array): cell masses.
        halfwidths ((N,D) or (1,D) array or None): cell half-widths, None for atoms.
        U ((k,D+1) array): lifted hyperplanes, row ``i`` is :math:`u_i`.

    Returns:
        (2**k,) array: entry ``beta`` is the mass of the orthant whose bit ``i``
        is 0 on the positive side of hyperplane ``i``.

    Cells of positive width are split by :func:`side_fractions`, not by the sign of
    their midpoint.
    """
    lang, dev = get_tag_backend(backend)
    tools = get_tools(lang)
    if lang == "torch":
        tools.device_name = "cuda" if dev == "gpu" else "cpu"

    D = centers.shape[1]
    k = U.shape[0]
    A = tools.array(U[:, :D])
    c = tools.array(U[:, D])
    out = tools.zeros((2 ** k,))
    chunk = pyequipart.config.chunk_size
    for start in range(0, centers.shape[0], chunk):
        X = tools.array(centers[start : start + chunk])
        M = tools.view(tools.array(weights[start : start + chunk]), (-1, 1))
        if halfwidths is None:
            H = None
        elif halfwidths.shape[0] == 1:
            H = tools.array(halfwidths)
        else:
            H = tools.array(halfwidths[start : start + chunk])
        F = side_fractions(tools, X, H, A, c)
        # column beta of M holds the mass of orthant beta, bit i doubling the columns
        for i in range(k):
            M = tools.concat([M * F[:, i : i + 1], M * (1 - F[:, i : i + 1])], axis=1)
        out = out + tools.arraysum(M, 0)
    return np.asarray(tools.numpy(out), dtype="float64")


def levenberg_marquardt(
    residual, x0, retract, jacobian, tol, max_iter=100, monitor=None, lam0=1e-3
):
    r"""Levenberg-Marquardt iterations on a manifold.

    Args:
        residual (callable): ``x -> r`` with ``r`` a 1d array.
        x0: initial point (any object understood by the callables).
        retract (callable): ``(x, delta) -> x'`` moves along a tangent step.
        jacobian (callable): ``x -> J`` in the tangent coordinates used by ``retract``.
        tol (float): stop as soon as ``max |r| < tol``.
        monitor (callable, optional): ``x -> str or None``, a non-empty string
            stops the iterations with that status.

    Returns:
        (x, r, iterations, status) with status in "converged", "stalled",
        "max-iter" or the monitor's status.
    """
    x = x0
    r = residual(x)
    lam = lam0
    it = 0
    while True:
        if np.max(np.abs(r)) < tol:
            return x, r, it, "converged"
        if it >= max_iter:
            return x, r, it, "max-iter"
        J = jacobian(x)
        JtJ = J.T @ J
        g = J.T @ r
        scale = max(np.trace(JtJ) / JtJ.shape[0], 1e-30)
        accepted = False
        while not accepted:
            step = np.linalg.solve(JtJ + lam * scale * np.eye(JtJ.shape[0]), -g)
            if np.linalg.norm(step) < 1e-14:
                return x, r, it, "stalled"
            x_new = retract(x, step)
            r_new = residual(x_new)
            if r_new @ r_new < r @ r:
                accepted = True
                x, r = x_new, r_new
                lam = max(lam / 3.0, 1e-15)
            else:
                lam *= 4.0
                if lam > 1e16:
                    return x, r, it, "stalled"
        it += 1
        if monitor is not None:
            status = monitor(x)
            if status:
                return x, r, it, status


def find_sign_change(fun, lo, hi, samples=32, xtol=1e-15):
    r"""Root of a continuous function on ``[lo, hi]`` by scanning then Brent's method.

    The scan keeps the first sub-interval showing a sign change (or an exact zero).

    Returns:
        float or None if no sign change was seen at the scan resolution.
    """
    grid = np.linspace(lo, hi, samples + 1)
    values = [fun(grid[0])]
    if values[0] == 0:
        return grid[0]
    for k in range(1, samples + 1):
        values.append(fun(grid[k]))
        if values[k] == 0:
            return grid[k]
        if np.sign(values[k - 1]) != np.sign(values[k]):
            return brentq(fun, grid[k - 1], grid[k], xtol=xtol, rtol=4 * np.finfo(float).eps)
    return None
