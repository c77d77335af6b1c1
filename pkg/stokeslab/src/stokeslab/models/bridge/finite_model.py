import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, List, Tuple

from tqdm import tqdm

from ...errors import BudgetExceededError
from ..clifford import Mat2, enumerate_sl2
from .bridge import PHI, PSI, b_braid_act, c_braid_act, transport


logger = logging.getLogger(__name__)


def _key(t: Tuple[Mat2, ...]):
    return tuple(m.key() for m in t)


def _label_orbits(points, orbit_of) -> Dict:
    """Maps every point key to the least key of its orbit."""
    labels = {}
    for t in points:
        k = _key(t)
        if k in labels:
            continue
        orbit = {_key(o) for o in orbit_of(t)}
        rep = min(orbit)
        for o in orbit:
            labels[o] = rep
    return labels


def _tuples(G: List[Mat2], n: int):
    if n == 0:
        yield ()
        return
    for head in G:
        for tail in _tuples(G, n - 1):
            yield (head,) + tail


def finite_model_compare(p: int, r: int, budget: int = 200_000, workers: int = 1, progress: bool = False) -> dict:
    """
    Exhaustive check over G = SL2(F_p) that Φ and Ψ induce mutually inverse,
    braid-equivariant bijections between B(r, G) = G^r/(G x G) and
    C(r, G) = G^(r-1)/G.
    """
    G = enumerate_sl2(p)
    size = len(G) ** r
    if size > budget:
        raise BudgetExceededError(f"|SL2(F_{p})|^{r} = {size} exceeds the budget {budget}")
    by_key = {}

    def b_orbit(a):
        for x in G:
            for y in G:
                yi = y.inverse()
                yield tuple(x @ ai @ yi for ai in a)

    def c_orbit(b):
        for g in G:
            gi = g.inverse()
            yield tuple(g @ bi @ gi for bi in b)

    logger.debug(f"labelling {size} points of G^{r} and {len(G) ** (r - 1)} of G^{r - 1}")
    b_points = list(_tuples(G, r))
    c_points = list(_tuples(G, r - 1))
    for t in b_points + c_points:
        by_key[_key(t)] = t
    b_labels = _label_orbits(b_points, b_orbit)
    c_labels = _label_orbits(c_points, c_orbit)

    def scan(head: Mat2):
        phi_ok = True
        for t in b_points:
            if t[0] != head:
                continue
            if c_labels[_key(transport(PHI, t))] != c_labels[_key(transport(PHI, by_key[b_labels[_key(t)]]))]:
                phi_ok = False
        return phi_ok

    phi_ok = True
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [executor.submit(scan, head) for head in G]
        for fut in tqdm(as_completed(futures), total=len(futures), desc=f"F_{p}", disable=not progress):
            phi_ok = fut.result() and phi_ok

    psi_ok = all(b_labels[_key(transport(PSI, t))] == b_labels[_key(transport(PSI, by_key[c_labels[_key(t)]]))]
                 for t in c_points)

    b_reps = sorted(set(b_labels.values()))
    c_reps = sorted(set(c_labels.values()))
    round_trip = (all(b_labels[_key(transport(PSI, transport(PHI, by_key[k])))] == k for k in b_reps)
                  and all(c_labels[_key(transport(PHI, transport(PSI, by_key[k])))] == k for k in c_reps))

    equivariant = True
    for k in b_reps:
        a = by_key[k]
        b = transport(PHI, a)
        for i in range(1, r):
            for sign in (1, -1):
                lhs = c_labels[_key(transport(PHI, b_braid_act(i, sign, a)))]
                rhs = c_labels[_key(c_braid_act(i, sign, b))]
                if lhs != rhs:
                    equivariant = False

    sizes = Counter(Counter(b_labels.values()).values())
    ok = phi_ok and psi_ok and round_trip and equivariant and len(b_reps) == len(c_reps)
    if not ok:
        logger.error(f"finite model over F_{p} with r={r} failed")
    return {
        "p": p,
        "r": r,
        "group_order": len(G),
        "b_orbits": len(b_reps),
        "c_orbits": len(c_reps),
        "phi_well_defined": phi_ok,
        "psi_well_defined": psi_ok,
        "mutually_inverse": round_trip,
        "equivariant": equivariant,
        "orbit_sizes": {size: count for size, count in sorted(sizes.items())},
        "ok": ok,
    }
