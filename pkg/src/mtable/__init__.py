"""Multiplication-table arithmetic.

Multiplicity counts for single products, exact censuses of distinct
products M(n), explicit upper bounds for the divisor functions d and
sigma, and partial zeta identities over the table, with verification
sweeps for all of them.
"""

from .divisors import (
    DivisorProfile,
    divisor_count,
    divisor_list,
    divisor_sieve,
    divisor_sum,
    incomplete_divisor_count,
    incomplete_divisor_integral,
)
from .multiplicity import (
    MultiplicityRecord,
    boundary_indicator,
    multiplicity_direct,
    multiplicity_formula,
    table_multiplicities,
    table_multiplicities_formula,
    table_sum_checks,
    universal_multiplicity,
)
from .products import (
    TableCensus,
    census,
    count_distinct_dense,
    count_distinct_segmented,
)
from .bounds import (
    BoundReport,
    EULER_GAMMA,
    NICOLAS_C,
    ROBIN_C,
    ROBIN_C_ALTERNATE,
    nicolas_bound,
    nicolas_floor_check,
    nicolas_monotonicity_check,
    reference_densities,
    robin_bound,
    verify_divisor_bound,
    verify_integral_bracket,
    verify_mean_bound,
    verify_sigma_bound,
    verify_theorem_lower_bound,
)
from .series import (
    SeriesComparison,
    verify_square_identity,
    zeta_partial,
    zeta_square_truncation,
)

__version__ = "0.1.0"

__all__ = [
    "DivisorProfile",
    "divisor_count",
    "divisor_list",
    "divisor_sieve",
    "divisor_sum",
    "incomplete_divisor_count",
    "incomplete_divisor_integral",
    "MultiplicityRecord",
    "boundary_indicator",
    "multiplicity_direct",
    "multiplicity_formula",
    "table_multiplicities",
    "table_multiplicities_formula",
    "table_sum_checks",
    "universal_multiplicity",
    "TableCensus",
    "census",
    "count_distinct_dense",
    "count_distinct_segmented",
    "BoundReport",
    "EULER_GAMMA",
    "NICOLAS_C",
    "ROBIN_C",
    "ROBIN_C_ALTERNATE",
    "nicolas_bound",
    "nicolas_floor_check",
    "nicolas_monotonicity_check",
    "reference_densities",
    "robin_bound",
    "verify_divisor_bound",
    "verify_integral_bracket",
    "verify_mean_bound",
    "verify_sigma_bound",
    "verify_theorem_lower_bound",
    "SeriesComparison",
    "verify_square_identity",
    "zeta_partial",
    "zeta_square_truncation",
    "__version__",
]
