from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .quandle import QuandleModel


@dataclass(frozen=True)
class GradedPair:
    """
    Element (left, right)ι^parity of G² ⊔ G²ι with ι(a, b) = (b, a)ι.
    """
    left: Any
    right: Any
    parity: int

    def times(self, other: "GradedPair", mul: Callable) -> "GradedPair":
        if self.parity:
            left, right = mul(self.left, other.right), mul(self.right, other.left)
        else:
            left, right = mul(self.left, other.left), mul(self.right, other.right)
        return type(self)(left, right, (self.parity + other.parity) % 2)

    def to_json(self):
        return {"pair": [self.left, self.right], "parity": self.parity}


def pseudo_coxeter(tup: Sequence, model: QuandleModel) -> GradedPair:
    """(a_1, a_1^-1)ι ··· (a_r, a_r^-1)ι in the ambient group of a core quandle."""
    if not model.has_group:
        raise TypeError(f"{model.name} exposes no ambient group")
    assert len(tup) >= 1, "pseudo Coxeter product of an empty tuple"
    acc = None
    for a in tup:
        factor = GradedPair(a, model.group_inv(a), 1)
        acc = factor if acc is None else acc.times(factor, model.group_mul)
    return acc
