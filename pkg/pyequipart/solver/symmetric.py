import numpy as np

from pyequipart.arrangement.hyperplane import (
    Configuration,
    Hyperplane,
    lift,
    transform_configuration,
    unlift,
)
from pyequipart.arrangement.test_map import residual
from pyequipart.common.errors import SymmetryError
from pyequipart.common.operations import find_sign_change
from pyequipart.common.utils import complete_basis, halton_directions, log, unit
from pyequipart.curve.sigma_theta import arc_measure, sigma_theta_config
from pyequipart.measures.symmetry import Reflection, check_symmetry
from pyequipart.solver.continuation import MeasurePath, continue_path
from pyequipart.solver.refine import constraint_subspace, halving_offset, refine, through_points
from pyequipart.solver.report import SolveReport, multi_start


def _check_dim(measure):
    if measure.dim != 4:
        raise ValueError("Expected a measure on R^4, got dimension {}.".format(measure.dim))


def _assert_halving(measure, u, rtol=1e-8):
    M = measure.total_mass()
    excess = abs(measure.halfspace_mass(u) - M / 2) / M
    if excess > rtol:
        raise SymmetryError("The symmetric hyperplane does not halve the measure: {:.3e}.".format(excess))


def _quarter_seeds(measure, first, frame, count, project=None, point=None):
    # lifted pairs (H3, H4) for the quartering step: frame first, then Halton pairs
    def plane(d):
        d = unit(d if project is None else d - (d @ project) * project, "direction")
        c = d @ point if point is not None else halving_offset(measure, d)
        return lift(Hyperplane(d, c))

    H = halton_directions(2 * count, 4)
    pairs = [frame] + [H[2 * k : 2 * k + 2] for k in range(count - 1)]
    return [np.array(list(first) + [plane(d) for d in pair]) for pair in pairs]


def _quarter(measure, seeds, subspace, target):
    def start(U):
        if not Configuration(U).satisfies_delta():
            return SolveReport(U, 1.0, 0, "delta-violation", target)
        return refine(measure, U, target, subspaces=[None, None, subspace, subspace], frozen=(0, 1))

    return multi_start(start, seeds)


def solve_4d_center(measure, O=None, normal=None, target=1e-6, max_starts=16, rtol=1e-8, seed=0):
    r"""Equipartition of a centrally symmetric measure on :math:`\mathbb{R}^4` with a prescribed hyperplane.

    ``H1`` is the hyperplane through the center ``O`` with the prescribed normal; it
    halves the measure by symmetry. ``H2`` goes through ``O`` with its normal on a
    circle of :math:`n_1^\perp`, rotated until :math:`\mu(H_1^+\cap H_2^+) = M/4`.
    ``H3`` and ``H4`` go through ``O`` and quarter the two quadrants
    :math:`H_1^+\cap H_2^\pm` simultaneously; central symmetry equipartitions the
    other half.

    Args:
        O ((4,) array, optional): center of symmetry, default the centroid.
        normal ((4,) array, optional): normal of ``H1``, default :math:`e_1`.

    Raises:
        SymmetryError: if the measure is not centrally symmetric about ``O``.
    """
    _check_dim(measure)
    O = measure.centroid() if O is None else np.asarray(O, dtype="float64")
    check_symmetry(measure, Reflection.central(O), rtol, seed=seed)
    n1 = unit(np.eye(4)[0] if normal is None else normal, "prescribed normal")
    u1 = lift(Hyperplane(n1, n1 @ O))
    _assert_halving(measure, u1)
    M = measure.total_mass()
    e, f = complete_basis([n1], 4)[:2]

    def plane(theta):
        n = np.cos(theta) * e + np.sin(theta) * f
        return lift(Hyperplane(n, n @ O))

    theta = find_sign_change(
        lambda th: measure._orthant_masses(np.array([u1, plane(th)]))[0] - M / 4, 0.0, np.pi
    )
    if theta is None:
        return SolveReport(
            None, 1.0, 0, "stalled", target, diagnostics={"reason": "no sign change for the second hyperplane"}
        )
    u2 = plane(theta)
    n2 = u2[:4] / np.linalg.norm(u2[:4])
    seeds = _quarter_seeds(measure, (u1, u2), complete_basis([n1, n2], 4), max_starts, point=O)
    best, tried = _quarter(measure, seeds, through_points([O]), target)
    best.diagnostics.update(
        {
            "method": "center",
            "starts": tried,
            "normal_error": float(np.max(np.abs(unlift(best.config.u[0]).a - n1))),
        }
    )
    log("solve_4d_center: {!r}".format(best))
    return best


def solve_4d_mirror3(measure, K, target=1e-6, max_starts=16, rtol=1e-8, seed=0):
    r"""Equipartition of a measure on :math:`\mathbb{R}^4` symmetric about the 3-plane ``K``.

    ``H1 = K`` halves the measure by symmetry; ``H2``, ``H3``, ``H4`` are taken
    invariant under the reflection (normals orthogonal to the normal of ``K``), so
    they are preimages of planes of ``K``. ``H2`` is a halving hyperplane, ``H3`` and
    ``H4`` quarter the halves of ``H2`` simultaneously.

    Args:
        K (Hyperplane): the hyperplane of symmetry.

    Raises:
        SymmetryError: if the measure is not symmetric about ``K``.
    """
    _check_dim(measure)
    nK = K.a
    check_symmetry(measure, Reflection.through_hyperplane(nK, nK * K.c), rtol, seed=seed)
    u1 = lift(K)
    _assert_halving(measure, u1)
    E = complete_basis([nK], 4)
    u2 = lift(Hyperplane(E[0], halving_offset(measure, E[0])))
    seeds = _quarter_seeds(measure, (u1, u2), E[1:], max_starts, project=nK)
    best, tried = _quarter(measure, seeds, constraint_subspace([np.append(nK, 0.0)], 5), target)
    best.diagnostics.update({"method": "mirror3", "starts": tried})
    log("solve_4d_mirror3: {!r}".format(best))
    return best


def as_plane_reflection(L):
    """A 2-plane given as a Reflection, a ``(point, directions)`` pair or None (span(e3, e4))."""
    if L is None:
        return Reflection(np.zeros(4), np.eye(4)[2:])
    if not isinstance(L, Reflection):
        L = Reflection(*L)
    if L.fixed_dimension != 2 or len(L.point) != 4:
        raise ValueError("Expected a 2-plane of R^4, got {!r}.".format(L))
    return L


def start_frame(measure, L):
    r"""Similarity :math:`S(y) = c + sQy` moving :math:`\Gamma_4` onto the measure.

    ``Q`` sends :math:`e_3, e_4` to the directions of ``L``, ``c`` is the centroid
    projected on ``L`` and ``s`` matches the spreads.
    """
    Lb = L.directions
    Nb = complete_basis(Lb, 4)
    Q = np.array([Nb[0], Nb[1], Lb[0], Lb[1]]).T
    c = L.point + Lb.T @ (Lb @ (measure.centroid() - L.point))
    s = measure.spread() / np.sqrt(2)
    return s * Q, c


def _second_moment_frame(measure):
    c = measure.centroid()
    cells = getattr(measure, "cells", None)
    if cells is None:
        return np.eye(measure.dim)
    X, w, _ = cells()
    C = ((X - c).T * w) @ (X - c) / w.sum()
    return np.linalg.eigh(C)[1].T


def solve_4d_symmetric(measure, L=None, target=1e-6, phases=4, max_starts=24, rtol=1e-8, seed=0):
    r"""Equipartition of a measure on :math:`\mathbb{R}^4` admitting a 2-plane of symmetry ``L``.

    The measure :math:`d\theta` on :math:`\Gamma_4`, moved by :func:`start_frame`, is
    invariant under the reflection through ``L`` as well. Its explicit equipartitions
    at ``phases`` phases are refined directly when they already nearly equipartition
    the target, and tracked along the straight path to it otherwise. When
    every branch dies, Levenberg-Marquardt is started from other solutions of the
    start measure, from the principal-axis frame and from the furthest point
    reached.

    Args:
        L (Reflection or (point, directions), optional): the 2-plane, default span(e3, e4).
        seed (int): seed of the random configurations of the symmetry check.

    Returns:
        SolveReport, whose ``diagnostics["continuation"]`` summarizes the tracking
        (None when a start solution was refined directly).

    Raises:
        SymmetryError: if the measure is not invariant under the reflection through ``L``.
    """
    _check_dim(measure)
    L = as_plane_reflection(L)
    check_symmetry(measure, L, rtol, seed=seed)
    A, b = start_frame(measure, L)
    path = MeasurePath(arc_measure(transform=(A, b)), measure)
    starts = [
        transform_configuration(sigma_theta_config(k * np.pi / (8 * phases)).config, A, b).u
        for k in range(phases)
    ]
    # the unmoved solutions too: the similarity of start_frame only matches the spread
    plain = [sigma_theta_config(k * np.pi / (8 * phases)).config.u for k in range(phases)]
    direct = [U for U in starts + plain if residual(measure, U) < 1e-3]
    if direct:
        best, tried = multi_start(lambda U: refine(measure, U, target), direct)
        if best.converged:
            best.diagnostics.update({"method": "direct", "starts": tried, "continuation": None})
            log("solve_4d_symmetric: {!r}".format(best))
            return best
    report = continue_path(path, starts, target)
    summary = {
        "status": report.status,
        "max_t": report.diagnostics.get("max_t", 0.0),
        "branches": report.diagnostics.get("branches", 0),
    }
    report.diagnostics["continuation"] = summary
    if report.converged:
        report.diagnostics["method"] = "continuation"
        return report

    seeds = []
    if "last_u" in report.diagnostics:
        seeds.append(np.array(report.diagnostics["last_u"]))
    quarter_turn = np.array([[1.0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    swap = A @ quarter_turn
    for k in range(phases):
        phi = (k + 0.5) * np.pi / (8 * phases)
        for frame in (A, swap):
            seeds.append(transform_configuration(sigma_theta_config(phi).config, frame, b).u)
    c = measure.centroid()
    seeds.append(np.array([lift(Hyperplane(v, v @ c)) for v in _second_moment_frame(measure)]))
    seeds = seeds[:max_starts]

    def start(U):
        if not Configuration(U).satisfies_delta():
            return SolveReport(U, 1.0, 0, "delta-violation", target)
        return refine(measure, U, target)

    best, tried = multi_start(start, seeds)
    best.path = report.path
    best.diagnostics.update({"continuation": summary, "method": "fallback", "fallback_starts": tried})
    log("solve_4d_symmetric: {!r}".format(best))
    return best
