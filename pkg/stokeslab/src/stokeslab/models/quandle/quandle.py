import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, List, Sequence, Tuple

from ..exact import normalize
from .braid import BraidWord


logger = logging.getLogger(__name__)


class QuandleModel(ABC):
    """
    A carrier with a left translation u◁v and its inverse (the unique y with u◁y = z).
    Models that come from a group (core quandles) also expose the ambient product.
    """
    name = "quandle"
    has_group = False

    @abstractmethod
    def op(self, u, v):
        ...

    @abstractmethod
    def op_inv(self, u, z):
        ...

    def eq(self, u, v) -> bool:
        return u == v

    def key(self, u):
        return u

    def group_mul(self, g, h):
        raise NotImplementedError(f"{self.name} has no ambient group")

    def group_inv(self, g):
        raise NotImplementedError(f"{self.name} has no ambient group")


class DihedralQuandle(QuandleModel):
    def __init__(self, n: int):
        assert n >= 1, "modulus must be positive"
        self.n = n
        self.name = f"dihedral(Z/{n})"

    def op(self, u, v):
        return (2 * u - v) % self.n

    def op_inv(self, u, z):
        return (2 * u - z) % self.n

    def elements(self) -> List[int]:
        return list(range(self.n))


class IntegerCoreQuandle(QuandleModel):
    """Core quandle of the additive group Z: u◁v = 2u - v."""
    name = "core(Z)"
    has_group = True

    def op(self, u, v):
        return 2 * u - v

    def op_inv(self, u, z):
        return 2 * u - z

    def group_mul(self, g, h):
        return g + h

    def group_inv(self, g):
        return -g


class CoreQuandle(QuandleModel):
    """
    Core quandle (G, u◁v = u v^-1 u) of a multiplicative group whose elements
    support `@` and `.inverse()` (e.g. Mat2 for SL2).
    """
    has_group = True

    def __init__(self, name: str = "core(SL2)"):
        self.name = name

    def op(self, u, v):
        return u @ v.inverse() @ u

    def op_inv(self, u, z):
        return u @ z.inverse() @ u

    def key(self, u):
        return u.key()

    def group_mul(self, g, h):
        return g @ h

    def group_inv(self, g):
        return g.inverse()


class ScalarCoreQuandle(QuandleModel):
    """Core quandle of the multiplicative group of nonzero rationals (G_m, and μ2 inside it)."""
    name = "core(Gm)"
    has_group = True

    def op(self, u, v):
        return normalize(Fraction(u) * u / v)

    def op_inv(self, u, z):
        return normalize(Fraction(u) * u / z)

    def group_mul(self, g, h):
        return normalize(Fraction(g) * h)

    def group_inv(self, g):
        return normalize(1 / Fraction(g))


class TrivialQuandle(QuandleModel):
    name = "trivial"

    def op(self, u, v):
        return v

    def op_inv(self, u, z):
        return z


@dataclass(frozen=True)
class AxiomResult:
    triple: Tuple[Any, Any, Any]
    idempotent: bool
    invertible: bool
    distributive: bool

    @property
    def ok(self) -> bool:
        return self.idempotent and self.invertible and self.distributive


def axiom_check(model: QuandleModel, samples: Iterable[Sequence]) -> dict:
    """
    Checks u◁u = u, bijectivity of v ↦ u◁v (through op_inv) and
    self-distributivity u◁(v◁w) = (u◁v)◁(u◁w) on every sample triple.
    """
    results = []
    for u, v, w in samples:
        idem = model.eq(model.op(u, u), u)
        inv = model.eq(model.op(u, model.op_inv(u, v)), v) and model.eq(model.op_inv(u, model.op(u, v)), v)
        dist = model.eq(model.op(u, model.op(v, w)), model.op(model.op(u, v), model.op(u, w)))
        results.append(AxiomResult((u, v, w), idem, inv, dist))
    failures = [r for r in results if not r.ok]
    if failures:
        logger.info(f"{model.name}: {len(failures)} of {len(results)} triples fail an axiom")
    return {
        "model": model.name,
        "checked": len(results),
        "idempotent_failures": sum(not r.idempotent for r in results),
        "invertible_failures": sum(not r.invertible for r in results),
        "distributive_failures": sum(not r.distributive for r in results),
        "results": results,
        "ok": not failures,
    }


def braid_step(model: QuandleModel, i: int, sign: int, tup: Tuple) -> Tuple:
    """σ_i: (.., x_i, x_{i+1}, ..) -> (.., x_i◁x_{i+1}, x_i, ..); σ_i^-1 through op_inv."""
    if not 1 <= i <= len(tup) - 1:
        raise IndexError(f"generator index {i} out of range for r={len(tup)}")
    x, y = tup[i - 1], tup[i]
    if sign > 0:
        pair = (model.op(x, y), x)
    else:
        pair = (y, model.op_inv(y, x))
    return tup[:i - 1] + pair + tup[i + 1:]


def braid_act(word: BraidWord, tup: Sequence, model: QuandleModel) -> Tuple:
    tup = tuple(tup)
    assert len(tup) >= 2 or len(word) == 0, "braid action needs r >= 2"
    for i, sign in word:
        tup = braid_step(model, i, sign, tup)
    return tup


def tuple_key(model: QuandleModel) -> Callable[[Tuple], Tuple]:
    return lambda tup: tuple(model.key(x) for x in tup)
