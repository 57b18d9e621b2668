"""Exact partition corner counts: enumeration, series, and the pair bijection."""

from corners._core import (
    BadTruncation,
    LengthBudgetExceeded,
    MalformedPartition,
    NotInImage,
    OutOfRange,
    WrongCornerCount,
    border_coordinates,
    conjugate,
    contains,
    corner_gf,
    count_pairs,
    count_pairs_bounded,
    fine_lhs,
    fine_rhs,
    forward,
    from_border_coordinates,
    inverse,
    max_feasible_corners,
    nu,
    nu_via_fine,
    num_corners,
    pair_count_series,
    pairs_of,
    pairs_via_decomposition,
    parse_partition,
    partition_numbers,
    partitions_of,
    run_suite,
    staircase,
    staircase_decompose,
    sum_of,
    summand_k,
    to_string,
    triangle,
    triangular,
    union_of,
)

__all__ = [
    "BadTruncation",
    "LengthBudgetExceeded",
    "MalformedPartition",
    "NotInImage",
    "OutOfRange",
    "WrongCornerCount",
    "border_coordinates",
    "conjugate",
    "contains",
    "corner_gf",
    "count_pairs",
    "count_pairs_bounded",
    "fine_lhs",
    "fine_rhs",
    "forward",
    "from_border_coordinates",
    "inverse",
    "max_feasible_corners",
    "nu",
    "nu_via_fine",
    "num_corners",
    "pair_count_series",
    "pairs_of",
    "pairs_via_decomposition",
    "parse_partition",
    "partition_numbers",
    "partitions_of",
    "run_suite",
    "staircase",
    "staircase_decompose",
    "sum_of",
    "summand_k",
    "to_string",
    "triangle",
    "triangular",
    "union_of",
]
