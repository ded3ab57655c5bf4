"""Exact detection of essential and nonessential objectives in linear
multiobjective programs max {Cx : Ax <= b, x >= 0}."""

from ._core import (
    DimensionError,
    InfeasibleInput,
    InfeasibleRegion,
    MolpError,
    ParseError,
    Problem,
    RelationError,
    UnboundedObjective,
    UnboundedRegion,
    Verdict,
    classify,
    cone_nonempty,
    efficient_vertices,
    enumerate_vertices,
    interior_nonempty,
    is_bounded,
    is_efficient,
    null_space,
    optimal_face_vertices,
    reduce,
)

__all__ = [
    "DimensionError",
    "InfeasibleInput",
    "InfeasibleRegion",
    "MolpError",
    "ParseError",
    "Problem",
    "RelationError",
    "UnboundedObjective",
    "UnboundedRegion",
    "Verdict",
    "classify",
    "cone_nonempty",
    "efficient_vertices",
    "enumerate_vertices",
    "interior_nonempty",
    "is_bounded",
    "is_efficient",
    "null_space",
    "optimal_face_vertices",
    "reduce",
]
