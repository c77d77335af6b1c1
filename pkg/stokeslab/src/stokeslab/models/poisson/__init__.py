from .config import BracketConfig
from .bracket import (
    HALF,
    MODES,
    SAMPLED,
    SYMBOLIC,
    BracketTable,
    bracket_at,
    bracket_coords,
    bracket_poly,
    casimir_coefficients,
    check_casimir,
    check_jacobi,
    evaluate_at,
    random_point,
)
