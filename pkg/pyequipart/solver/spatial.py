import numpy as np

from pyequipart.arrangement.hyperplane import Configuration, Hyperplane, lift
from pyequipart.common.operations import find_sign_change
from pyequipart.common.utils import complete_basis, halton_directions, log, unit
from pyequipart.solver.refine import halving_offset, refine
from pyequipart.solver.report import SolveReport, multi_start


def pencil_halving_plane(measure, point, basis, samples=32):
    r"""Halving hyperplane through ``point`` whose normal lies on the circle spanned by ``basis``.

    Along the circle :math:`n(\theta) = \cos\theta\, e + \sin\theta\, f` the excess
    :math:`\mu(H(\theta)^+) - M/2` changes sign between :math:`\theta` and
    :math:`\theta + \pi`, so a root lies in :math:`[0, \pi]`.

    Returns:
        lifted hyperplane, or None when no sign change is seen at the scan resolution.
    """
    M = measure.total_mass()
    e, f = basis
    point = np.asarray(point, dtype="float64")

    def plane(theta):
        n = np.cos(theta) * e + np.sin(theta) * f
        return lift(Hyperplane(n, n @ point))

    theta = find_sign_change(
        lambda th: measure.halfspace_mass(plane(th)) - M / 2, 0.0, np.pi, samples=samples
    )
    return None if theta is None else plane(theta)


def first_plane(measure, A=None, B=None):
    """First plane of a Hadwiger partition, containing the prescribed points."""
    D = measure.dim
    if A is not None:
        A = np.asarray(A, dtype="float64")
        if B is not None and np.linalg.norm(np.asarray(B, dtype="float64") - A) < 1e-12:
            B = None
    if A is not None and B is not None:
        basis = complete_basis([unit(np.asarray(B, dtype="float64") - A, "segment AB")], D)[:2]
        return pencil_halving_plane(measure, A, basis)
    if A is not None:
        return pencil_halving_plane(measure, A, np.eye(D)[:2])
    e1 = np.eye(D)[0]
    return lift(Hyperplane(e1, halving_offset(measure, e1)))


def solve_3d(measure, A=None, B=None, target=1e-6, max_starts=16):
    r"""Equipartition of a measure on :math:`\mathbb{R}^3` by three planes, the first one through A and B.

    The first plane halves the measure inside the pencil of planes through A and B
    (through A only, or normal to :math:`e_1`, when fewer points are given). The two
    other planes quarter both halves simultaneously; they are found by
    Levenberg-Marquardt from Halton-sequence directions with halving offsets.

    Returns:
        SolveReport
    """
    if measure.dim != 3:
        raise ValueError("solve_3d expects a measure on R^3, got dimension {}.".format(measure.dim))
    if A is None and B is not None:
        A, B = B, None
    u1 = first_plane(measure, A, B)
    if u1 is None:
        return SolveReport(
            None,
            1.0,
            0,
            "stalled",
            target,
            diagnostics={"reason": "the pencil contains no halving plane at the scan resolution"},
        )
    n1 = u1[:3] / np.linalg.norm(u1[:3])
    frame = complete_basis([n1], 3)
    H = halton_directions(2 * max_starts, 3)
    seeds = [frame] + [H[2 * k : 2 * k + 2] for k in range(max_starts - 1)]

    def start(directions):
        U = np.array([u1] + [lift(Hyperplane(d, halving_offset(measure, d))) for d in directions])
        if not Configuration(U).satisfies_delta():
            return SolveReport(U, 1.0, 0, "delta-violation", target)
        return refine(measure, U, target, frozen=(0,))

    best, tried = multi_start(start, seeds)
    best.diagnostics.update({"starts": tried})
    if A is not None:
        h1 = best.config.hyperplanes()[0]
        best.diagnostics["distance_A"] = h1.distance(A)
        if B is not None:
            best.diagnostics["distance_B"] = h1.distance(B)
    log("solve_3d: {!r}".format(best))
    return best
