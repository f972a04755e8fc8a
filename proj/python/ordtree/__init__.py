"""Ordered trees encoded as child-count sequences."""

from ._ordtree import (
    MAX_NODES,
    bench,
    bounds,
    completions,
    count,
    deltas,
    explain_invalid,
    first,
    from_dyck,
    from_lattice_path,
    from_parent_array,
    rank,
    sample,
    successor,
    to_dot,
    to_dyck,
    to_lattice_path,
    to_parent_array,
    trees,
    unrank,
    validate,
)

__all__ = [
    "MAX_NODES",
    "bench",
    "bounds",
    "completions",
    "count",
    "deltas",
    "explain_invalid",
    "first",
    "from_dyck",
    "from_lattice_path",
    "from_parent_array",
    "rank",
    "sample",
    "successor",
    "to_dot",
    "to_dyck",
    "to_lattice_path",
    "to_parent_array",
    "trees",
    "unrank",
    "validate",
]
