from .cycles import (
    GrayCycle,
    check_balanced,
    count_cycles,
    enumerate_cycles,
    is_balanced,
    reflected_gray_code,
)
from .symmetry import (
    SUBGROUPS,
    SymmetryGroupSpec,
    canonical_balanced_cycle,
    canonical_form,
    classify_balanced,
    equivalent,
    reversal_swap_check,
)
