from .group import GroupElement, act, act_index, act_mass_vector, group_elements
from .hyperplane import (
    Configuration,
    Hyperplane,
    lift,
    lift_all,
    line_angle,
    reflect_configuration,
    tangent_basis,
    transform_configuration,
    unlift,
)
from .test_map import Deviation, residual, tangent_jacobian, test_map
