import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from math import isqrt
from typing import List, Optional, Tuple

from tqdm import tqdm

from ...errors import MalformedInputError
from ..exact import discriminant
from ..quandle import BraidWord
from ..stokes import StokesMat, markoff_k, r3_poly
from .config import OrbitConfig
from .descent import reduce_to_canonical
from .report import OrbitReport


logger = logging.getLogger(__name__)

# (x, y, z) = (s12, s23, s13)
Triple = Tuple[int, int, int]

TAG_REDUCIBLE = "k=2 reducible family"
TAG_ORIGIN = "k=-2 origin"
TAG_MARKOFF = "k=-2 Markoff family"

LETTERS = ((1, 1), (1, -1), (2, 1), (2, -1))
TWIST_LETTERS = ((1, 1), (1, -1))


def triple_move(i: int, sign: int, t: Triple) -> Triple:
    """
    The action of σ_i^{±1} on rank-3 Stokes matrices written in (s12, s23, s13);
    each move is a Vieta flip composed with a transposition.
    """
    x, y, z = t
    if i == 1:
        return (x, z, x * z - y) if sign > 0 else (x, x * y - z, y)
    if i == 2:
        return (x * y - z, y, x) if sign > 0 else (z, y, y * z - x)
    raise IndexError(f"generator index {i} out of range for r=3")


def triple_of(s: StokesMat) -> Triple:
    assert s.r == 3, "triples are rank-3 coordinates"
    return s.get(1, 2), s.get(2, 3), s.get(1, 3)


def stokes_of(t: Triple) -> StokesMat:
    x, y, z = t
    return StokesMat.from_entries(3, {(1, 2): x, (2, 3): y, (1, 3): z})


def triple_norm(t: Triple) -> int:
    return sum(c * c for c in t)


def _in_family(t: Triple) -> bool:
    # on k=2, a coordinate ±2 forces the other two to be equal or opposite
    return any(abs(c) == 2 for c in t)


def markoff_tag(t: Triple, depth: int = OrbitConfig.witness_depth) -> Optional[str]:
    k = markoff_k(*t)
    if k == -2:
        if t == (0, 0, 0):
            return TAG_ORIGIN
        if all(abs(c) == 3 for c in t) and t[0] * t[1] * t[2] == 27:
            return TAG_MARKOFF
        return None
    if k != 2:
        return None
    seen = {t}
    frontier = [t]
    for _ in range(depth + 1):
        if any(_in_family(u) for u in frontier):
            return TAG_REDUCIBLE
        nxt = []
        for u in frontier:
            for i, sign in LETTERS:
                v = triple_move(i, sign, u)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = sorted(nxt)
    logger.warning(f"no (±2, y, ±y) witness within {depth} moves of {t}")
    return None


def markoff_reduce(t: Triple) -> Tuple[Triple, BraidWord, Optional[str]]:
    """
    Greedy descent of x²+y²+z² followed by the least point of the local
    minimum's plateau. The word carries t to the returned representative.
    """
    t = tuple(int(c) for c in t)
    rep, word = reduce_to_canonical(t, 3, triple_move, LETTERS, triple_norm, lambda u: u)
    return rep, word, markoff_tag(rep)


def surface_points_r3(k: int, H: int, x: int) -> List[Triple]:
    """Points (x, y, z) with |y|, |z| <= H on x²+y²+z²-xyz-2 = k, solving for z."""
    out = []
    for y in range(-H, H + 1):
        # z² - xy z + (x² + y² - 2 - k) = 0
        b = x * y
        disc = b * b - 4 * (x * x + y * y - 2 - k)
        if disc < 0:
            continue
        root = isqrt(disc)
        if root * root != disc:
            continue
        for num in sorted({b - root, b + root}):
            if num % 2 == 0 and abs(num // 2) <= H:
                out.append((x, y, num // 2))
    return out


def _scan_column(k: int, H: int, x: int):
    return [(t, markoff_reduce(t)) for t in surface_points_r3(k, H, x)]


def _collect(report: OrbitReport, reduced):
    """reduced: sorted (point, (rep, word, tag)); the first point of each class is its seed."""
    classes = {}
    for t, (rep, word, tag) in reduced:
        if rep not in classes:
            classes[rep] = [t, word, tag, 0]
        classes[rep][3] += 1
        report.lookup[stokes_of(t).key()] = rep
    index = {}
    for n, rep in enumerate(sorted(classes)):
        seed, word, tag, size = classes[rep]
        index[rep] = n
        report.add(stokes_of(rep), word, stokes_of(seed), tag, size)
    report.lookup = {key: index[rep] for key, rep in report.lookup.items()}
    report.points = len(reduced)


def enumerate_r3(k: int, H: int, workers: int = OrbitConfig.workers, progress: bool = False) -> OrbitReport:
    """
    Every integral point of height <= H on the k-surface, reduced and merged by
    canonical representative.
    """
    assert H >= 0, "height must be non-negative"
    report = OrbitReport({"k": k}, H, disc=discriminant(r3_poly(k)))
    reduced = []
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [executor.submit(_scan_column, k, H, x) for x in range(-H, H + 1)]
        for fut in tqdm(as_completed(futures), total=len(futures), desc=f"k={k}", disable=not progress):
            reduced.extend(fut.result())
    reduced.sort(key=lambda item: item[0])
    _collect(report, reduced)
    logger.info(f"k={k} H={H}: {report.points} points, {report.count} classes")
    return report


def twist_norm(t: Triple) -> int:
    return t[1] * t[1] + t[2] * t[2]


def slice_enumerate_r3(k: int, sign: int, H: int) -> OrbitReport:
    """
    Integral points on the slice x = ±2, the lines (y ∓ z)² = k - 2, up to the
    twist σ_1: (y, z) -> (z, xz - y).
    """
    if sign not in (2, -2):
        raise MalformedInputError(f"slice must be x=2 or x=-2, got {sign}")
    if k == 2:
        raise MalformedInputError("k=2 makes the slice a single line of the reducible family")
    report = OrbitReport({"k": k, "x": sign}, H, disc=discriminant(r3_poly(k)))
    d = k - 2
    root = isqrt(d) if d >= 0 else -1
    if root < 0 or root * root != d:
        return report
    points = []
    for y in range(-H, H + 1):
        for c in sorted({root, -root}):
            # x=2: y - z = c; x=-2: y + z = c
            z = y - c if sign == 2 else c - y
            if abs(z) <= H:
                points.append((sign, y, z))
    reduced = []
    for t in sorted(set(points)):
        rep, word = reduce_to_canonical(t, 2, triple_move, TWIST_LETTERS, twist_norm, lambda u: u)
        reduced.append((t, (rep, word, None)))
    _collect(report, reduced)
    return report
