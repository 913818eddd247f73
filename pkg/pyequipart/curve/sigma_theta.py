import functools
from collections import namedtuple

import numpy as np

import pyequipart.config
from pyequipart.arrangement.group import GroupElement, act
from pyequipart.arrangement.hyperplane import Configuration, tangent_basis
from pyequipart.arrangement.test_map import tangent_jacobian, test_map
from pyequipart.common.errors import DegenerateError
from pyequipart.curve.curves import trigonometric_curve
from pyequipart.graycode.cycles import GrayCycle, check_balanced
from pyequipart.measures.curve import CurveMeasure


def arc_measure(transform=None, quadrature=256):
    r"""The measure :math:`d\theta` on :math:`\Gamma_4` (total mass :math:`2\pi`)."""
    return CurveMeasure(trigonometric_curve(), quadrature=quadrature, transform=transform)


def hyperplane_through(points, orientation=None):
    r"""Unit vector of :math:`S^D` lifting the hyperplane through ``D`` points of :math:`\mathbb{R}^D`.

    Args:
        points ((D,D) array): one point per row.
        orientation ((D,) point, optional): a point to put on the positive side. By
            default the first non zero coordinate of the result is positive.

    Raises:
        DegenerateError: if the points span less than a hyperplane.
    """
    P = np.atleast_2d(np.asarray(points, dtype="float64"))
    D = P.shape[1]
    if P.shape[0] != D:
        raise ValueError("A hyperplane of R^{} is spanned by {} points, got {}.".format(D, D, P.shape[0]))
    E = np.concatenate((P, np.ones((D, 1))), axis=1)
    _, s, Vt = np.linalg.svd(E)
    if s[-1] < 1e-10 * max(s[0], 1.0):
        raise DegenerateError("Degenerate point set: the points do not span a hyperplane.")
    u = Vt[-1]
    if orientation is not None:
        if np.append(orientation, 1.0) @ u < 0:
            u = -u
    else:
        first = np.flatnonzero(np.abs(u) > 1e-12)[0]
        if u[first] < 0:
            u = -u
    return u / np.linalg.norm(u)


class SolutionPoint:
    r"""Equipartition of :math:`d\theta` built from a balanced Gray code and a phase.

    Attributes:
        phi (float): phase of the division points :math:`\varphi + j\pi/8`.
        transitions (tuple): 0-based track flipped at division point ``k+1``.
        element (GroupElement): orientation flips and relabeling applied last.
        assignment (list): per hyperplane (before ``element``), the indices of its
            four division points.
        config (Configuration): the resulting equipartition.
    """

    def __init__(self, phi, transitions, element, assignment, config):
        self.phi = phi
        self.transitions = transitions
        self.element = element
        self.assignment = assignment
        self.config = config

    @property
    def division_points(self):
        return self.phi + np.arange(16) * np.pi / 8

    def to_dict(self):
        return {
            "phi": self.phi,
            "transitions": [t + 1 for t in self.transitions],
            "signs": list(self.element.signs),
            "perm": [p + 1 for p in self.element.perm],
            "assignment": [[j for j in points] for points in self.assignment],
            "u": self.config.u.tolist(),
        }

    def __repr__(self):
        return "SolutionPoint(phi={!r}, element={!r})".format(self.phi, self.element)


@functools.lru_cache(maxsize=None)
def _canonical_transitions():
    from pyequipart.graycode.symmetry import canonical_balanced_cycle

    return canonical_balanced_cycle(4).transitions()


def sigma_theta_config(phi=0.0, transitions=None, element=None):
    r"""Point of the solution manifold of :math:`d\theta` on :math:`\Gamma_4`.

    The division points :math:`x_j = \gamma(\varphi + j\pi/8)` cut the curve into 16
    arcs of length :math:`\pi/8`. The cycle ``c_0 = 0, c_{k+1} = c_k ^ (1 << T_k)``
    labels arc ``k``; hyperplane ``i`` is the one through the four division points
    where track ``i`` flips, oriented so that arc 0 lies in the orthant ``c_0``.

    Args:
        phi (float): any real phase, the natural range being :math:`[0, \pi/8)`.
        transitions (sequence of 16 ints, optional): balanced 0-based transition
            sequence, by default the one of the canonical balanced cycle.
        element (GroupElement, optional): applied to the configuration last.

    Returns:
        SolutionPoint
    """
    T = tuple(int(t) for t in (_canonical_transitions() if transitions is None else transitions))
    check_balanced(GrayCycle.from_transitions(T, 4))
    element = GroupElement.identity(4) if element is None else element
    curve = trigonometric_curve()
    t = phi + np.arange(16) * np.pi / 8
    X = curve(t)
    inside = curve(phi + np.pi / 16)
    assignment = [[(k + 1) % 16 for k in range(16) if T[k] == i] for i in range(4)]
    U = np.array([hyperplane_through(X[idx], orientation=inside) for idx in assignment])
    config = act(element, Configuration(U))
    assert config.satisfies_delta(pyequipart.config.delta_tol)
    return SolutionPoint(float(phi), T, element, assignment, config)


def trace(phases, transitions=None, element=None):
    r"""``phases`` solution points at :math:`\varphi_k = k\pi/(8K)` along one circle."""
    return [
        sigma_theta_config(k * np.pi / (8 * phases), transitions, element) for k in range(phases)
    ]


TransversalityReport = namedtuple(
    "TransversalityReport",
    ["rank", "singular_values", "smallest", "fifteenth", "kernel_alignment", "degenerate"],
)


def transversality_check(solution, step=1e-6, measure=None):
    r"""Nondegeneracy of a solution point of :math:`d\theta`.

    The Jacobian of the deviation with respect to the 16 tangent directions of
    :math:`(S^4)^4` should have rank 15 (the deviation sums to zero) with a one
    dimensional kernel spanned by the phase derivative.

    Returns:
        TransversalityReport(rank, singular values, smallest and 15th singular values,
        |cos| between the kernel and the phase derivative, degenerate flag)
    """
    measure = arc_measure() if measure is None else measure
    U = solution.config.u
    d = test_map(measure, U)
    if d.max_abs() / d.mass > 1e-8:
        raise ValueError("Not a solution: residual {:.3e}.".format(d.max_abs() / d.mass))
    bases = [tangent_basis(u) for u in U]
    J = tangent_jacobian(measure, U, step, bases)
    _, s, Vt = np.linalg.svd(J)
    rank = int(np.sum(s > 1e-6 * s[0]))
    kernel = Vt[-1]
    h = 1e-6
    plus = sigma_theta_config(solution.phi + h, solution.transitions, solution.element).config.u
    minus = sigma_theta_config(solution.phi - h, solution.transitions, solution.element).config.u
    dU = (plus - minus) / (2 * h)
    v = np.concatenate([B @ du for (B, du) in zip(bases, dU)])
    alignment = float(abs(kernel @ v) / np.linalg.norm(v))
    return TransversalityReport(rank, s, float(s[-1]), float(s[14]), alignment, rank < 15)
