import numpy as np

from pyequipart.arrangement.hyperplane import Configuration, Hyperplane, lift
from pyequipart.common.operations import find_sign_change
from pyequipart.common.utils import halton_directions, log
from pyequipart.solver.refine import halving_offset, refine
from pyequipart.solver.report import SolveReport, multi_start


def _direction(angle):
    return np.array([np.cos(angle), np.sin(angle)])


def halving_line(measure, angle):
    """Lifted halving line of a planar measure with normal at ``angle``."""
    a = _direction(angle)
    return lift(Hyperplane(a, halving_offset(measure, a)))


def sweep(measure, alpha, samples=16):
    r"""Equipartition whose first line has normal angle ``alpha``, or None.

    The second line :math:`\ell(\beta)` halves the measure for every normal angle
    :math:`\beta`; the quarter deficit :math:`\mu(\ell_1^+\cap\ell(\beta)^+) - M/4` is
    :math:`M/4` at :math:`\beta=\alpha` and :math:`-M/4` at :math:`\beta=\alpha+\pi`,
    so it changes sign in between.
    """
    M = measure.total_mass()
    u1 = halving_line(measure, alpha)

    def deficit(beta):
        u2 = halving_line(measure, beta)
        return measure._orthant_masses(np.array([u1, u2]))[0] - M / 4

    beta = find_sign_change(deficit, alpha, alpha + np.pi, samples=samples)
    if beta is None:
        return None
    return Configuration(np.array([u1, halving_line(measure, beta)]))


def solve_2d(measure, target=1e-8, samples=16, max_starts=16):
    """Equipartition of a planar measure by two lines.

    The first line is vertical and halves the measure; the second one is found by
    an intermediate value search over the halving lines. Other first directions
    (Halton sequence) and a multi-start refinement are the fallbacks.

    Returns:
        SolveReport
    """
    if measure.dim != 2:
        raise ValueError("solve_2d expects a measure on R^2, got dimension {}.".format(measure.dim))
    alphas = [0.0] + [float(np.arctan2(d[1], d[0])) for d in halton_directions(max_starts - 1, 2)]
    attempts = []
    for k, alpha in enumerate(alphas):
        config = sweep(measure, alpha, samples)
        if config is None or not config.satisfies_delta():
            log("solve_2d: no sign change for alpha={:.6f}".format(alpha))
            continue
        report = refine(measure, config, target)
        report.diagnostics.update({"method": "sweep", "alpha": alpha, "sweeps": k + 1})
        if report.converged:
            return report
        attempts.append(report)

    def start(direction_pair):
        config = Configuration(np.array([halving_line(measure, np.arctan2(d[1], d[0])) for d in direction_pair]))
        if not config.satisfies_delta():
            return SolveReport(config, 1.0, 0, "delta-violation", target)
        return refine(measure, config, target)

    D = halton_directions(2 * max_starts, 2)
    best, tried = multi_start(start, [D[2 * k : 2 * k + 2] for k in range(max_starts)])
    best.diagnostics.update({"method": "multi-start", "starts": tried, "sweeps": len(alphas)})
    return best
