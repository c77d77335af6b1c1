from .mutation import (
    DIRECTIONS,
    EQUIVALENT,
    INEQUIVALENT,
    LEFT,
    NOT_CONNECTED,
    RIGHT,
    TRUNCATED,
    empty_word,
    mutate,
    mutation_equivalent,
    mutation_relations,
    nondegeneracy_flags,
    serre_operator,
)
