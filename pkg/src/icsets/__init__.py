"""Interval-closed sets of chain products, truncated rectangles, and
root/minuscule posets: enumeration, bijections to bicolored Motzkin paths
and quarter-plane walks, and exact generating-function engines.
"""

from .posets import (
    ChainProduct,
    ChainProduct3,
    FinitePoset,
    Involution,
    OracleScaleExceeded,
    OrdinalSumAntichains,
    PosetSpec,
    SubsetStats,
    TruncatedRectangle,
    TypeARoot,
    TypeBMinuscule,
    TypeBRoot,
    build_poset,
    count_ics,
    enumerate_ics,
    enumerate_symmetric_ics,
    filter_closure,
    ideal_closure,
    is_interval_closed,
    subset_stats,
    vertical_involution,
)
from .paths import (
    MotzkinStats,
    MotzkinWord,
    NestedPairBT,
    QuarterWalk,
    WalkStats,
    enumerate_motzkin,
    enumerate_walks,
    motzkin_stats,
    validate_motzkin,
    validate_walk,
    walk_stats,
)
from .bijections import (
    ElementClassification,
    NotIntervalClosed,
    classify_elements,
    ics_to_motzkin,
    ics_to_nested_pair,
    ics_to_walk,
    is_full_ics,
    motzkin_to_ics,
    motzkin_to_nested_pair,
    nested_pair_to_ics,
    nested_pair_to_motzkin,
    shift_map,
    shift_map_inverse,
    walk_to_ics,
)
from .series import (
    CoeffPolynomial,
    NegativeExponentError,
    SeriesBudgetExceeded,
    TruncatedSeries,
    b_minuscule_counts,
    b_root_counts,
    bicolored_counts,
    closed_form_count,
    full_count,
    narayana,
    rectangle_counts,
    symmetric_typeA_counts,
    truncated_counts,
    typeA_F_coeffs,
    typeA_counts,
    walk_dp_counts,
)

__version__ = "0.1.0"
