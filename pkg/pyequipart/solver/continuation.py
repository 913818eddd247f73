import numpy as np

import pyequipart.config
from pyequipart.arrangement.hyperplane import Configuration, tangent_basis
from pyequipart.arrangement.test_map import tangent_jacobian
from pyequipart.common.utils import lifted_rows, log, warn
from pyequipart.measures.mixture import MixtureMeasure
from pyequipart.solver.refine import refine
from pyequipart.solver.report import SolveReport, multi_start


class MeasurePath:
    r"""Straight homotopy :math:`\mu_t = (1-t)\,\mu_0/M_0 + t\,\mu_1/M_1` between two measures.

    Every :math:`\mu_t` is a probability measure. ``h0``, ``hmin``, ``hmax`` and
    ``max_steps`` control the step sizes of the continuation.
    """

    def __init__(self, start, end, h0=0.05, hmin=1e-4, hmax=0.25, max_steps=400):
        if start.dim != end.dim:
            raise ValueError("Path ends live in dimensions {} and {}.".format(start.dim, end.dim))
        self.start, self.end = start, end
        self.dim = start.dim
        self.h0, self.hmin, self.hmax, self.max_steps = h0, hmin, hmax, max_steps

    def at(self, t):
        if not 0 <= t <= 1:
            raise ValueError("Path parameters lie in [0, 1], got {}.".format(t))
        return MixtureMeasure(
            [self.start, self.end],
            [(1 - t) / self.start.total_mass(), t / self.end.total_mass()],
        )

    def deviation(self, U, t):
        b0 = self.start._orthant_masses(U) / self.start.total_mass()
        b1 = self.end._orthant_masses(U) / self.end.total_mass()
        return (1 - t) * b0 + t * b1 - 1.0 / 2 ** self.dim

    def t_derivative(self, U):
        return self.end._orthant_masses(U) / self.end.total_mass() - self.start._orthant_masses(
            U
        ) / self.start.total_mass()

    def jacobian(self, U, t, bases, step=1e-6):
        """Jacobian of :meth:`deviation` in tangent coordinates, the last column being d/dt."""
        J0 = tangent_jacobian(self.start, U, step, bases)
        J1 = tangent_jacobian(self.end, U, step, bases)
        return np.concatenate(((1 - t) * J0 + t * J1, self.t_derivative(U)[:, None]), axis=1)


def _ambient(bases, x):
    # tangent coordinates -> (n, n+1) ambient displacement
    out, k = [], 0
    for B in bases:
        out.append(x[k : k + len(B)] @ B)
        k += len(B)
    return np.array(out)


def _coordinates(bases, amb):
    return np.concatenate([B @ a for (B, a) in zip(bases, amb)])


def _retract(U, bases, x):
    V = U + _ambient(bases, x)
    return V / np.linalg.norm(V, axis=1, keepdims=True)


def _split(J, n, previous):
    r"""Branch tangent and gauge rows from the kernel of the extended jacobian.

    The kernel has dimension :math:`n^2 + 1 - (2^n - 1)`: at fixed ``t`` the
    equipartitions already form a manifold. The branch tangent is the projection of
    :math:`d/dt` on the kernel, oriented along ``previous``; the gauge rows span the
    kernel directions that keep ``t`` fixed.
    """
    dim = J.shape[1] - 2 ** n + 1
    kernel = np.linalg.svd(J)[2][-dim:]
    w = kernel[:, -1]
    if np.linalg.norm(w) > 1e-8:
        coef = w / np.linalg.norm(w)
    else:
        # fold of the branch in t
        coef = kernel @ previous
        if np.linalg.norm(coef) < 1e-8:
            return None, None
        coef = coef / np.linalg.norm(coef)
    tau = coef @ kernel
    if tau @ previous < 0:
        tau = -tau
    gauge = np.linalg.svd(coef[None])[2][1:] @ kernel
    return tau, gauge


def _transport(bases, pbases, rows):
    # rows of tangent coordinates at U -> tangent coordinates at the predicted point
    out = [np.append(_coordinates(pbases, _ambient(bases, r[:-1])), r[-1]) for r in rows]
    return np.array(out).reshape(len(rows), -1)


def _correct(path, A, pbases, U, t, tol, max_iter=10):
    # chord iterations on the deviation, the extra rows of A held at zero
    for _ in range(max_iter):
        F = path.deviation(U, t)
        if np.max(np.abs(F)) < tol:
            return U, t
        x = np.linalg.lstsq(A, np.concatenate((-F, np.zeros(len(A) - len(F)))), rcond=None)[0]
        U, t = _retract(U, pbases, x[:-1]), t + x[-1]
    return None


def track_branch(path, U0, target=1e-6, step=1e-6, corrector_tol=1e-9, delta_tol=None):
    r"""Pseudo-arclength continuation of one equipartition along a measure path.

    The unknowns are :math:`z = (U, t)`. At fixed ``t`` the equipartitions of
    :math:`\mu_t` form a manifold (circles for :math:`n = 4`), so the kernel of the
    extended jacobian holds gauge directions besides the branch. The predictor
    follows the branch tangent; the chord corrector solves the deviation equations
    with the gauge rows and the tangent row held at zero. Steps are halved on
    corrector failure and grown by 1.5 on success. The last step is corrected at
    :math:`t = 1` exactly, then the solution is refined on the target.

    Returns:
        SolveReport, with the visited parameters in ``path``.
    """
    delta_tol = pyequipart.config.delta_tol if delta_tol is None else delta_tol
    U = lifted_rows(U0).copy()
    n = U.shape[0]
    t, h = 0.0, path.h0
    visited = [t]
    tau_amb = (np.zeros_like(U), 1.0)
    for it in range(path.max_steps):
        bases = [tangent_basis(u) for u in U]
        J = path.jacobian(U, t, bases, step)
        tau, gauge = _split(J, n, np.append(_coordinates(bases, tau_amb[0]), tau_amb[1]))
        if tau is None:
            reason = "tangent lost"
            break
        corrected, landing = None, False
        while corrected is None and h >= path.hmin:
            landing = tau[-1] > 0 and t + h * tau[-1] >= 1
            length = (1 - t) / tau[-1] if landing else h
            U_pred = _retract(U, bases, length * tau[:-1])
            t_pred = 1.0 if landing else t + length * tau[-1]
            pbases = [tangent_basis(u) for u in U_pred]
            pin = np.eye(len(tau))[-1:] if landing else tau[None]
            rows = _transport(bases, pbases, np.concatenate((gauge, pin)))
            A = np.concatenate((path.jacobian(U_pred, t_pred, pbases, step), rows), axis=0)
            corrected = _correct(path, A, pbases, U_pred, t_pred, corrector_tol)
            if corrected is not None and not Configuration(corrected[0]).satisfies_delta(delta_tol):
                corrected = None
            if corrected is not None and not landing and corrected[1] >= 1:
                corrected = None
            if corrected is None:
                h /= 2
        if corrected is None:
            reason = "corrector failure"
            break
        tau_amb = (_ambient(bases, tau[:-1]), tau[-1])
        U, t = corrected
        if landing:
            t = 1.0
        visited.append(float(t))
        if t < 0:
            reason = "branch turned back"
            break
        if landing:
            report = refine(path.end, U, target)
            report.path = visited
            report.iterations += it + 1
            report.diagnostics["max_t"] = 1.0
            return report
        h = min(1.5 * h, path.hmax)
    else:
        reason = "too many steps"
    max_t = max(visited)
    log("continuation branch died at t={:.4f}: {}".format(max_t, reason))
    return SolveReport(
        U,
        float(np.max(np.abs(path.deviation(U, t)))),
        len(visited) - 1,
        "exhausted",
        target,
        path=visited,
        diagnostics={"max_t": max_t, "reason": reason, "last_u": U.tolist(), "last_t": float(t)},
    )


def continue_path(path, starts, target=1e-6):
    """Track every start solution of ``path.start`` towards ``path.end``.

    Returns:
        the best SolveReport; when every branch dies its status is "exhausted" and
        ``diagnostics["max_t"]`` is the furthest parameter reached.
    """
    for U in starts:
        if np.max(np.abs(path.deviation(lifted_rows(U), 0.0))) > 1e-8:
            raise ValueError("Continuation starts should be equipartitions of the start measure.")
    best, tried = multi_start(lambda U: track_branch(path, U, target), list(starts))
    best.diagnostics["branches"] = tried
    if not best.converged:
        warn("continuation exhausted, max t = {:.4f}".format(best.diagnostics.get("max_t", 0.0)))
    return best
