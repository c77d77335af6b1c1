from .config import OrbitConfig
from .report import OrbitReport
from .descent import greedy_descent, plateau_canonical, reduce_to_canonical
from .markoff import (
    LETTERS,
    TAG_MARKOFF,
    TAG_ORIGIN,
    TAG_REDUCIBLE,
    Triple,
    enumerate_r3,
    markoff_reduce,
    markoff_tag,
    slice_enumerate_r3,
    stokes_of,
    surface_points_r3,
    triple_move,
    triple_of,
)
from .rank4 import enumerate_r4, move_letters, rank4_from_coords, rank4_growth, signed_move, surface_points_r4
from .dehn import (
    DehnDiscriminant,
    dehn_discriminant,
    dehn_discriminant_symmetric,
    dehn_flags,
    fiber_points,
    four_holed_sphere_equation,
    four_holed_sphere_residual,
    parabola_coefficient,
    slice_conditions,
)
from .dtdvdb import DTDVDB_FIXED, dtdvdb_family, verify_dtdvdb
