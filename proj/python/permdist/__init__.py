"""Minimum-distance upper bounds for linear codes over finite fields."""

from ._core import (
    BudgetExceeded,
    Error,
    Field,
    LinearCode,
    emit_code,
    exact_distance,
    example_code_gf8,
    fitness,
    min_fitness_exhaustive,
    parse_code,
    qr_code,
    random_search,
    read_code_file,
    repetition_code,
    run_ga,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "Field",
    "LinearCode",
    "emit_code",
    "exact_distance",
    "example_code_gf8",
    "fitness",
    "min_fitness_exhaustive",
    "parse_code",
    "qr_code",
    "random_search",
    "read_code_file",
    "repetition_code",
    "run_ga",
]
