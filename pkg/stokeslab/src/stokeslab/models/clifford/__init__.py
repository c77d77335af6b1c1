from .sl2 import LOWER, UPPER, Mat2, enumerate_sl2, product_of, random_sl2
from .sphere import (
    DET,
    FORMS,
    SPLIT,
    STANDARD,
    SphereQuandle,
    SphereVec,
    bilinear,
    pairing,
    random_orthogonal,
    rational_sphere_point,
    sphere_reflect,
    stereographic,
)
from .pin import (
    CoxeterClass,
    Mu2Class,
    PinElem2,
    PinElem4,
    coxeter_class,
    j2,
    j4,
    mu2_coxeter,
    mu2_embed,
    pin4_mul,
    sphere_coxeter_m4,
    verify_reflection_conjugation,
)
