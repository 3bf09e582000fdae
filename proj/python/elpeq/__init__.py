"""Exact solving and equivalence checking for ground epistemic logic programs."""

from ._core import (
    AspProgram,
    Elp,
    GuardError,
    ProgramParseError,
    Qbf3,
    align,
    answer_sets,
    asp_uniform_equivalent,
    candidate_world_views,
    check_y_top_assumption,
    epistemic_reduct,
    eval_qbf3,
    ordinary_equivalent,
    parse_asp,
    parse_elp,
    parse_qbf3,
    reduce_qbf,
    render,
    render_asp,
    ue_function,
    ue_functions_coincide,
    uniformly_equivalent,
    union_elps,
    world_views,
)

__version__ = "0.1.0"

__all__ = [
    "AspProgram",
    "Elp",
    "GuardError",
    "ProgramParseError",
    "Qbf3",
    "align",
    "answer_sets",
    "asp_uniform_equivalent",
    "candidate_world_views",
    "check_y_top_assumption",
    "epistemic_reduct",
    "eval_qbf3",
    "ordinary_equivalent",
    "parse_asp",
    "parse_elp",
    "parse_qbf3",
    "reduce_qbf",
    "render",
    "render_asp",
    "ue_function",
    "ue_functions_coincide",
    "uniformly_equivalent",
    "union_elps",
    "world_views",
]
