from .curves import Curve, arc_count_bound, custom_curve, moment_curve, trigonometric_curve
from .intersections import curve_hyperplane_intersections
from .sigma_theta import (
    SolutionPoint,
    arc_measure,
    hyperplane_through,
    sigma_theta_config,
    trace,
    transversality_check,
)
