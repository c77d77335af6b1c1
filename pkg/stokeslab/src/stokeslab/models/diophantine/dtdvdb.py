from ..stokes import StokesMat, rank4_coords, rank4_e1, rank4_long


DTDVDB_FIXED = StokesMat.from_entries(4, {(1, 2): 2, (1, 3): 2, (1, 4): 4, (2, 3): 0, (2, 4): 2, (3, 4): 2})


def dtdvdb_family(n: int) -> StokesMat:
    """[[1, n, 2n, n], [0, 1, 3, 3], [0, 0, 1, 3], [0, 0, 0, 1]]."""
    return StokesMat.from_entries(4, {(1, 2): n, (1, 3): 2 * n, (1, 4): n, (2, 3): 3, (2, 4): 3, (3, 4): 3})


def _unipotent_row(s: StokesMat, n=None) -> dict:
    coords = rank4_coords(s)
    e1, long = rank4_e1(*coords), rank4_long(*coords)
    row = {"matrix": s.to_rows(), "e1": e1, "long": long, "ok": e1 == 0 and long == 0}
    if n is not None:
        row["n"] = n
    return row


def verify_dtdvdb(n_max: int) -> dict:
    """
    Both solution shapes of the rank-4 unipotent equations: ac+bd-ef = 0 and
    the quartic = 0 (so p(λ) = (λ+1)^4).
    """
    assert n_max >= 0, "n_max must be non-negative"
    fixed = _unipotent_row(DTDVDB_FIXED)
    family = [_unipotent_row(dtdvdb_family(n), n) for n in range(n_max + 1)]
    return {"fixed": fixed, "family": family, "ok": fixed["ok"] and all(row["ok"] for row in family)}
