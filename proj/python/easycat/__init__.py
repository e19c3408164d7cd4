"""Two-row set partitions, the categories they generate, and their linear maps."""

from ._easycat import (
    Closure,
    EasycatError,
    LimitError,
    Partition,
    acceptance,
    check_intertwiner,
    classify,
    closure,
    compose,
    count,
    enumerate_category,
    in_category,
    involute,
    moments,
    named,
    parse,
    rotate,
    t_matrix,
    tensor,
    to_lower_row,
)

__all__ = [
    "Closure",
    "EasycatError",
    "LimitError",
    "Partition",
    "acceptance",
    "check_intertwiner",
    "classify",
    "closure",
    "compose",
    "count",
    "enumerate_category",
    "in_category",
    "involute",
    "moments",
    "named",
    "parse",
    "rotate",
    "t_matrix",
    "tensor",
    "to_lower_row",
]
