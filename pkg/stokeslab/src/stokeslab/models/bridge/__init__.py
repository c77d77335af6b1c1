from .bridge import (
    PHI,
    PSI,
    CORE_SL2,
    BoundaryTraces,
    b_braid_act,
    boundary_monodromy,
    boundary_words,
    c_braid_act,
    goldman_coordinates,
    goldman_invariants,
    goldman_membership,
    parse_tuple,
    predicted_charpoly,
    rep_to_stokes,
    surface_membership,
    trace_identity_check,
    transport,
)
from .finite_model import finite_model_compare
