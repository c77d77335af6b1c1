from math import isqrt
from typing import List, NamedTuple, Tuple


class DehnDiscriminant(NamedTuple):
    value: int
    is_perfect_square: bool


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def dehn_discriminant(t: int, k1: int, k2: int) -> DehnDiscriminant:
    """(t²-4)(k1-k2)²; when it is not a square the x=2 fiber has no integral point."""
    value = (t * t - 4) * (k1 - k2) ** 2
    return DehnDiscriminant(value, is_square(value))


def dehn_discriminant_symmetric(t: int, e1: int, e2: int) -> DehnDiscriminant:
    """Same value from e1 = k1+k2, e2 = k1 k2, through d_k = e1² - 4 e2."""
    value = (t * t - 4) * (e1 * e1 - 4 * e2)
    return DehnDiscriminant(value, is_square(value))


def dehn_flags(t: int, e1: int, e2: int) -> List[str]:
    """Hypotheses of the x=2 finiteness statement that fail for these parameters."""
    flags = []
    if t in (2, -2):
        flags.append("t=±2")
    if e1 * e1 - 4 * e2 == 0:
        flags.append("d_k=0")
    return flags


def four_holed_sphere_residual(x, y, z, t, e1, e2):
    """
    lhs - rhs of x²+y²+z²+xyz = (t²+k1k2)x + t(k1+k2)(y+z) + 4-2t²-k1²-k2²-t²k1k2,
    written through e1, e2.
    """
    lhs = x * x + y * y + z * z + x * y * z
    rhs = ((t * t + e2) * x + t * e1 * (y + z)
           + 4 - 2 * t * t - (e1 * e1 - 2 * e2) - t * t * e2)
    return lhs - rhs


def four_holed_sphere_equation(x, y, z, t, e1, e2) -> bool:
    return four_holed_sphere_residual(x, y, z, t, e1, e2) == 0


def fiber_points(x: int, t: int, e1: int, e2: int, H: int) -> List[Tuple[int, int]]:
    """Integral (y, z), |y|, |z| <= H, on the fiber {x = const} of the cubic."""
    out = []
    for y in range(-H, H + 1):
        # z² + (xy - t e1) z + (residual at z=0) = 0
        b = x * y - t * e1
        c = four_holed_sphere_residual(x, y, 0, t, e1, e2)
        disc = b * b - 4 * c
        if not is_square(disc):
            continue
        root = isqrt(disc)
        for num in sorted({-b - root, -b + root}):
            if num % 2 == 0 and abs(num // 2) <= H:
                out.append((y, num // 2))
    return out


def parabola_coefficient(t: int, e1: int, e2: int, v: int) -> int:
    """t e1 - v(t² + e2) = -v (t - v k1)(t - v k2)."""
    assert v in (1, -1), "v is a sign"
    return t * e1 - v * (t * t + e2)


def slice_conditions(t: int, e1: int, e2: int) -> dict:
    """Which of the three finiteness statements on the (0,4) fibers apply."""
    generic = t not in (2, -2)
    d_k = e1 * e1 - 4 * e2
    return {
        "d_k": d_k,
        # x = 2 fiber
        "part1": generic and d_k != 0,
        # x = -2 fiber
        "part2": generic and e1 != 0,
        # z = ±2 fibers; k1, k2 not in {±2}
        "part3": not generic and (e2 + 2 * e1 + 4) != 0 and (e2 - 2 * e1 + 4) != 0,
        "parabola": {v: parabola_coefficient(t, e1, e2, v) for v in (1, -1)},
    }
