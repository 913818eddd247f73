from .algebra import F2Algebra, F2Class, binomial_mod2, exterior, parse_class, truncated_polynomial
from .bundles import (
    DECOMPOSITIONS,
    SURFACES,
    BundleSpec,
    evaluate_fundamental,
    format_report,
    obstruction_report,
    reproduce_obstruction_inputs,
    tangent_restriction_class,
    total_class,
    virtual_w2,
)
