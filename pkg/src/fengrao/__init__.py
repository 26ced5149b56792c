"""Divisor sets, generalized Feng-Rao distances and Feng-Rao numbers of
numerical semigroups, with closed forms for interval-generated ones."""

from .amenable import (
    Configuration,
    Ground,
    Shadow,
    enumerate_amenable,
    ground,
    is_amenable,
    shadow,
    shadow_representatives,
)
from .distances import (
    DEFAULT_SUBSET_CAP,
    FengRaoResult,
    brute_force_distance,
    feng_rao_distance,
    feng_rao_number,
    smallest_asymptotic_base,
)
from .divisors import DivisorSet, divisors, divisors_above, divisors_of_set, nu
from .errors import (
    BaseTooSmall,
    FengRaoError,
    InvalidInput,
    InvalidParams,
    InvalidRange,
    NoOrderedAmenable,
    NotAmenable,
    NotElement,
    NotNumerical,
    SearchSpaceTooLarge,
)
from .interval import (
    HDecomposition,
    IntervalSemigroup,
    WagonPivot,
    as_interval,
    ceil_sum,
    h_decompose,
    interval_contains,
    interval_extra_divisors,
    interval_feng_rao_number,
    interval_semigroup,
    interval_shadow_divisor_count,
    is_ordered_amenable,
    ordered_amenable_set,
    ordered_shadow_size,
    rho_equality_predicted,
    wagon_pivot,
)
from .semigroup import NumericalSemigroup, from_generators

__all__ = [
    "BaseTooSmall",
    "Configuration",
    "DEFAULT_SUBSET_CAP",
    "DivisorSet",
    "FengRaoError",
    "FengRaoResult",
    "Ground",
    "HDecomposition",
    "IntervalSemigroup",
    "InvalidInput",
    "InvalidParams",
    "InvalidRange",
    "NoOrderedAmenable",
    "NotAmenable",
    "NotElement",
    "NotNumerical",
    "NumericalSemigroup",
    "SearchSpaceTooLarge",
    "Shadow",
    "WagonPivot",
    "as_interval",
    "brute_force_distance",
    "ceil_sum",
    "divisors",
    "divisors_above",
    "divisors_of_set",
    "enumerate_amenable",
    "feng_rao_distance",
    "feng_rao_number",
    "from_generators",
    "ground",
    "h_decompose",
    "interval_contains",
    "interval_extra_divisors",
    "interval_feng_rao_number",
    "interval_semigroup",
    "interval_shadow_divisor_count",
    "is_amenable",
    "is_ordered_amenable",
    "nu",
    "ordered_amenable_set",
    "ordered_shadow_size",
    "rho_equality_predicted",
    "shadow",
    "shadow_representatives",
    "smallest_asymptotic_base",
    "wagon_pivot",
]
__version__ = "0.1.0"
