from .braid import FLIP, BraidWord, random_word
from .quandle import (
    AxiomResult,
    CoreQuandle,
    DihedralQuandle,
    IntegerCoreQuandle,
    ScalarCoreQuandle,
    QuandleModel,
    TrivialQuandle,
    axiom_check,
    braid_act,
    braid_step,
    tuple_key,
)
from .coxeter import GradedPair, pseudo_coxeter
from .orbit import OrbitEntry, OrbitStore, braid_letters, orbit_enumerate
