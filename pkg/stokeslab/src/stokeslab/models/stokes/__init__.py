from .stokes import (
    StokesMat,
    act_word,
    random_rational_stokes,
    random_stokes,
    sign_flip,
    stokes_braid_act,
)
from .invariants import (
    InvariantRecord,
    alternate_charpoly,
    closed_form,
    coxeter_charpoly,
    coxeter_identity_check,
    gram_from_sphere,
    invariants,
    markoff_k,
    rank4_coords,
    rank4_e1,
    rank4_e2,
    rank4_long,
    rank_filtration_level,
    r3_poly,
    r4_poly,
    reflection_matrix,
    serre_matrix,
    symmetrized,
)
from .operator import ADJ, PLAIN, VARIANTS, operator_charpoly, operator_matrix
