import numpy as np

import pyequipart.config
from pyequipart.arrangement.hyperplane import Configuration, Hyperplane, lift, tangent_basis
from pyequipart.arrangement.test_map import tangent_jacobian
from pyequipart.common.errors import DegenerateError, DeltaConditionError
from pyequipart.common.operations import find_sign_change, levenberg_marquardt
from pyequipart.common.utils import complete_basis, lifted_rows, log
from pyequipart.solver.report import SolveReport


def constraint_subspace(vectors, dim):
    r"""Rows spanning the orthogonal complement of ``vectors`` in :math:`\mathbb{R}^{dim}`.

    A lifted hyperplane contains the point ``p`` iff it is orthogonal to
    :math:`(p, 1)`, and its normal is orthogonal to ``n`` iff it is orthogonal to
    :math:`(n, 0)`.
    """
    V = np.atleast_2d(np.asarray(vectors, dtype="float64"))
    Q, R = np.linalg.qr(V.T)
    Q = Q[:, np.abs(np.diag(R)) > 1e-12]
    return complete_basis(Q.T, dim)


def through_points(points):
    """Constraint subspace of the hyperplanes containing every given point."""
    P = np.atleast_2d(np.asarray(points, dtype="float64"))
    return constraint_subspace(np.concatenate((P, np.ones((len(P), 1))), axis=1), P.shape[1] + 1)


def halving_offset(measure, normal, fraction=0.5, region=None):
    r"""Offset ``c`` such that :math:`\{a\cdot x \geq c\}` carries ``fraction`` of the mass.

    Args:
        region ((k, D+1) array, optional): lifted hyperplanes whose common positive
            orthant restricts the measure.

    Raises:
        ValueError: if ``fraction`` is not in (0, 1).
        DegenerateError: if the region carries no mass or no offset splits it.
    """
    if not 0 < fraction < 1:
        raise ValueError("Expected a fraction in (0, 1), got {}.".format(fraction))
    a = np.asarray(normal, dtype="float64")
    a = a / np.linalg.norm(a)
    lo, hi = measure.projection_range(a)
    prefix = np.zeros((0, measure.dim + 1)) if region is None else lifted_rows(region)
    whole = measure._orthant_masses(prefix)[0] if len(prefix) else measure.total_mass()
    if whole <= 0:
        raise DegenerateError("The region to halve carries no mass.")

    def excess(c):
        U = np.concatenate((prefix, lift(Hyperplane(a, c))[None]), axis=0)
        return measure._orthant_masses(U)[0] - fraction * whole

    c = find_sign_change(excess, lo, hi, samples=8)
    if c is None:
        raise DegenerateError("No offset of normal {} splits the region.".format(a))
    return float(c)


def refine(
    measure,
    config0,
    target=1e-10,
    max_iter=100,
    subspaces=None,
    frozen=(),
    delta_tol=None,
    step=1e-6,
):
    r"""Levenberg-Marquardt refinement of an approximate equipartition.

    The unknowns are the unit vectors :math:`u_i`, moved along tangent directions of
    the sphere (or of the great sphere cut by a linear constraint) and renormalized.
    The residual is the relative deviation :math:`d_\beta / M` over all orthants.

    Args:
        measure (Measure): measure on :math:`\mathbb{R}^n`.
        config0 (Configuration or (n,n+1) array): starting point, satisfying the
            :math:`\delta`-condition.
        target (float): residual :math:`\max_\beta|d_\beta|/M` to reach.
        subspaces (list, optional): per hyperplane, None or rows spanning a linear
            subspace of :math:`\mathbb{R}^{n+1}` containing :math:`u_i` and in which it stays.
        frozen (iterable of int): hyperplanes kept fixed.

    Returns:
        SolveReport with status "converged", "stalled", "max-iter" or "delta-violation".

    Raises:
        DeltaConditionError: if ``config0`` violates the :math:`\delta`-condition.
    """
    delta_tol = pyequipart.config.delta_tol if delta_tol is None else delta_tol
    U0 = Configuration(lifted_rows(config0)).check_delta(delta_tol).u
    n = U0.shape[0]
    subspaces = [None] * n if subspaces is None else list(subspaces)
    frozen = set(frozen)
    M = measure.total_mass()

    def bases(U):
        return [
            np.zeros((0, n + 1)) if i in frozen else tangent_basis(U[i], subspaces[i])
            for i in range(n)
        ]

    def residual(U):
        return (measure._orthant_masses(U) - M / 2 ** n) / M

    def retract(U, delta):
        V = U.copy()
        k = 0
        for i, B in enumerate(bases(U)):
            if len(B):
                v = U[i] + delta[k : k + len(B)] @ B
                V[i] = v / np.linalg.norm(v)
                k += len(B)
        return V

    def jacobian(U):
        return tangent_jacobian(measure, U, step, bases(U))

    def monitor(U):
        if not Configuration(U).satisfies_delta(delta_tol):
            return "delta-violation"

    U, r, it, status = levenberg_marquardt(
        residual, U0, retract, jacobian, tol=target * 1e-3, max_iter=max_iter, monitor=monitor
    )
    res = float(np.max(np.abs(r)))
    if res < target and status != "delta-violation":
        status = "converged"
    log("refine: {} after {} iterations, residual {:.3e}".format(status, it, res))
    return SolveReport(U, res, it, status, target, masses=M * (r + 1.0 / 2 ** n))
