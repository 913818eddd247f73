from .cloud import PartitionReport, partition_point_cloud
from .continuation import MeasurePath, continue_path, track_branch
from .planar import halving_line, solve_2d, sweep
from .refine import constraint_subspace, halving_offset, refine, through_points
from .report import SolveReport, best_report, multi_start
from .spatial import first_plane, solve_3d
from .symmetric import solve_4d_center, solve_4d_mirror3, solve_4d_symmetric, start_frame
