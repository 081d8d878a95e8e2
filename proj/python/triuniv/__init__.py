"""Representability of integers by weighted sums of triangular numbers."""

from ._core import (
    BudgetError,
    InconsistencyError,
    ParseError,
    achievable_values,
    canonicalize,
    classify,
    criterion_sets,
    escalate_json,
    even_truant,
    expected_even_truant,
    liouville_triples,
    parse,
    reduction_solver,
    representation_count,
    represents,
    represents_even_via_odd_squares,
    shifted_target,
    table1,
    triangular,
    truant,
)

__all__ = [
    "BudgetError",
    "InconsistencyError",
    "ParseError",
    "achievable_values",
    "canonicalize",
    "classify",
    "criterion_sets",
    "escalate_json",
    "even_truant",
    "expected_even_truant",
    "liouville_triples",
    "parse",
    "reduction_solver",
    "representation_count",
    "represents",
    "represents_even_via_odd_squares",
    "shifted_target",
    "table1",
    "triangular",
    "truant",
]
