"""Exact asymptotic-dimension estimates for finite metric spaces with finite group actions."""

from ._core import (
    Action,
    AsdimError,
    Cover,
    Group,
    InfeasibleError,
    InternalAssertion,
    Quotient,
    ResolutionError,
    Space,
    SSpace,
    ValidationError,
    compare_quotient_dimensions,
    cycle_reflection,
    cycle_rotation,
    cycle_space,
    decomposition_to_cover,
    decomposition_violations,
    equivariant_cover,
    greedy_cover,
    grid_rotation,
    grid_space,
    is_equivariant,
    lift_equivariant,
    min_dimension_cover,
    path_reflection,
    path_space,
    profile,
    pushforward_cover,
    quotient,
    random_action,
    random_space,
)

__all__ = [name for name in dir() if not name.startswith("_")]
