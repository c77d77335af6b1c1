from .matrix import Mat, Scalar, cofactor_det, det, normalize, rank_exact, unitriangular_inverse
from .poly import (
    LAMBDA,
    charpoly,
    coefficients,
    coordinate_gens,
    coordinate_pairs,
    discriminant,
    evaluate,
    format_poly,
    has_repeated_root,
    is_reciprocal,
    multipoly,
    sympy_to_scalar,
    to_sympy,
    unipoly,
)
