from .base import MassVector, Measure, orthant_masses, total_mass
from .curve import CurveMeasure, TrigonometricDensity
from .gaussian import GaussianMixtureMeasure
from .grid import GridDensityMeasure
from .mixture import MixtureMeasure
from .point_cloud import PointCloudMeasure, open_orthant_counts
from .symmetry import Reflection, check_symmetry, symmetrize, symmetry_defect
