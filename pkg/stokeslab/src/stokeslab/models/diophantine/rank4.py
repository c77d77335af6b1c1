import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..exact import discriminant
from ..quandle import BraidWord, braid_letters, orbit_enumerate
from ..stokes import StokesMat, r4_poly, rank4_coords, rank4_e1, rank4_e2, sign_flip, stokes_braid_act
from .config import OrbitConfig
from .descent import reduce_to_canonical
from .report import OrbitReport


logger = logging.getLogger(__name__)


def rank4_from_coords(a, b, c, d, e, f) -> StokesMat:
    return StokesMat.from_entries(4, {(1, 2): a, (2, 3): b, (3, 4): c, (1, 4): d, (1, 3): e, (2, 4): f})


def signed_move(i: int, sign: int, s: StokesMat) -> StokesMat:
    return sign_flip(i, s) if sign == 0 else stokes_braid_act(i, sign, s)


def move_letters(r: int, signed: bool = False) -> List[Tuple[int, int]]:
    letters = braid_letters(r)
    if signed:
        letters += [(i, 0) for i in range(1, r + 1)]
    return letters


def _norm(s: StokesMat):
    return s.norm()


def _key(s: StokesMat):
    return s.key()


def _scan_a(a: int, e1: int, e2: int, H: int) -> List[StokesMat]:
    """Solutions with s12 = a; s24 is solved from e1 whenever s13 != 0."""
    out = []
    span = range(-H, H + 1)
    for b in span:
        for c in span:
            for d in span:
                rest = a * c + b * d - e1
                for e in span:
                    if e != 0:
                        if rest % e:
                            continue
                        fs = (rest // e,)
                        if abs(fs[0]) > H:
                            continue
                    elif rest != 0:
                        continue
                    else:
                        fs = span
                    for f in fs:
                        if rank4_e2(a, b, c, d, e, f) == e2:
                            out.append(rank4_from_coords(a, b, c, d, e, f))
    return out


def surface_points_r4(e1: int, e2: int, H: int, workers: int = 1, progress: bool = False) -> List[StokesMat]:
    points = []
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [executor.submit(_scan_a, a, e1, e2, H) for a in range(-H, H + 1)]
        for fut in tqdm(as_completed(futures), total=len(futures), desc=f"(e1,e2)=({e1},{e2})", disable=not progress):
            points.extend(fut.result())
    points.sort(key=_key)
    assert all(rank4_e1(*rank4_coords(s)) == e1 for s in points), "scan produced an off-surface point"
    return points


def _merge_pass(
    minima: Dict[Tuple, StokesMat],
    assigned: Dict[Tuple, Tuple[Tuple, BraidWord]],
    bound: int,
    budget: int,
    workers: int,
    letters,
) -> Tuple[int, bool]:
    """
    One BFS per surviving class rep, confined to height <= bound. Reps found
    inside an earlier rep's component are folded into it, together with every
    minimum already assigned to them. Returns (merges, truncated).
    """
    reps = sorted({target for target, _ in assigned.values()}, key=lambda k: (minima[k].norm(), k))
    absorbed: Dict[Tuple, Tuple[Tuple, BraidWord]] = {}
    done = set()
    merges, truncated = 0, False
    for rkey in reps:
        if rkey in absorbed:
            continue
        done.add(rkey)
        store = orbit_enumerate([minima[rkey]], 4, signed_move, _key, bound=lambda u: u.height() <= bound,
                                budget=budget, workers=workers, letters=letters)
        truncated = truncated or store.truncated
        for other in reps:
            if other in done or other in absorbed:
                continue
            entry = store.get(minima[other])
            if entry is not None:
                absorbed[other] = (rkey, entry.word.inverse())
                merges += 1
    for mkey, (target, word) in assigned.items():
        if target in absorbed:
            into, step = absorbed[target]
            assigned[mkey] = (into, word + step)
    return merges, truncated


def enumerate_r4(
    e1: int,
    e2: int,
    H: int,
    budget: int = OrbitConfig.step_budget,
    signed: bool = False,
    workers: int = OrbitConfig.workers,
    slack: int = OrbitConfig.merge_slack,
    progress: bool = False,
    max_slack: int = OrbitConfig.max_merge_slack,
    patience: int = OrbitConfig.merge_patience,
) -> OrbitReport:
    """
    Integral rank-4 Stokes matrices of height <= H with the given (e1, e2),
    reduced by greedy norm descent and merged when a BFS confined to height
    <= H + slack connects two local minima. The slack grows after every pass
    until `patience` passes in a row merge nothing, `max_slack` is reached or
    a BFS hits the budget. Classes that stay apart are only "not merged
    within the bound"; the report carries the bound and the truncation flag.
    """
    assert H >= 0, "height must be non-negative"
    letters = move_letters(4, signed)
    report = OrbitReport({"e1": e1, "e2": e2, "signed": signed}, H, disc=discriminant(r4_poly(e1, e2)))
    points = surface_points_r4(e1, e2, H, workers, progress)
    report.points = len(points)

    minima: Dict[Tuple, StokesMat] = {}
    point_min = {}
    for s in points:
        low, word = reduce_to_canonical(s, 4, signed_move, letters, _norm, _key)
        point_min[s.key()] = (low.key(), word)
        minima.setdefault(low.key(), low)

    # minimum key -> (class rep key, word from minimum to rep)
    assigned: Dict[Tuple, Tuple[Tuple, BraidWord]] = {k: (k, BraidWord()) for k in minima}
    quiet = 0
    while True:
        merges, truncated = _merge_pass(minima, assigned, H + slack, budget, workers, letters)
        report.truncated = report.truncated or truncated
        logger.debug(f"merge pass at slack {slack}: {merges} merges")
        quiet = 0 if merges else quiet + 1
        classes = len({target for target, _ in assigned.values()})
        if truncated or quiet >= patience or slack >= max_slack or classes <= 1:
            break
        slack += 1
    report.merge_bound = H + slack

    reps = sorted({target for target, _ in assigned.values()}, key=lambda k: (minima[k].norm(), k))
    index = {rkey: n for n, rkey in enumerate(reps)}
    sizes = [0] * len(reps)
    seeds: List[Optional[Tuple[StokesMat, BraidWord]]] = [None] * len(reps)
    for s in points:
        mkey, word = point_min[s.key()]
        target, to_target = assigned[mkey]
        n = index[target]
        sizes[n] += 1
        report.lookup[s.key()] = n
        if seeds[n] is None:
            seeds[n] = (s, word + to_target)
    for n, rkey in enumerate(reps):
        seed, word = seeds[n]
        report.add(minima[rkey], word, seed, None, sizes[n])
    if report.truncated:
        logger.warning(f"(e1,e2)=({e1},{e2}) H={H}: a merge BFS hit the budget of {budget} at bound {report.merge_bound}")
    if report.degenerate:
        logger.warning(f"disc(p) = 0 for (e1, e2) = ({e1}, {e2}); finiteness is not expected")
    logger.info(f"(e1,e2)=({e1},{e2}) H={H}: {report.points} points, {report.count} classes, merge bound {report.merge_bound}")
    return report


def rank4_growth(e1: int, e2: int, heights: Sequence[int], **kwargs) -> OrbitReport:
    """
    Runs enumerate_r4 at every height and returns the top report with a
    growth record: class counts per height, whether they are constant and
    whether they strictly increase from the first height to the last.
    """
    heights = sorted(set(heights))
    assert heights, "need at least one height"
    reports = [enumerate_r4(e1, e2, H, **kwargs) for H in heights]
    counts = [rep.count for rep in reports]
    top = reports[-1]
    grows = counts[-1] > counts[0] and all(a <= b for a, b in zip(counts, counts[1:]))
    top.growth = {
        "heights": heights,
        "counts": counts,
        "stable": len(set(counts)) == 1,
        "grows": grows,
    }
    top.truncated = any(rep.truncated for rep in reports)
    if top.degenerate and grows:
        logger.warning(f"(e1,e2)=({e1},{e2}): class count grows with height {counts}, an infinite family is expected")
    elif not top.degenerate and not top.growth["stable"]:
        logger.warning(f"(e1,e2)=({e1},{e2}): class count not stable over heights {heights}: {counts}")
    return top
