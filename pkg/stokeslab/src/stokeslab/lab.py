import json
import logging
from typing import Optional, Sequence

from .errors import MalformedInputError
from .models.bridge import (
    PHI,
    PSI,
    boundary_monodromy,
    c_braid_act,
    goldman_invariants,
    parse_tuple,
    predicted_charpoly,
    rep_to_stokes,
    surface_membership,
    transport,
    finite_model_compare,
)
from .models.diophantine import (
    OrbitConfig,
    dehn_discriminant_symmetric,
    dehn_flags,
    enumerate_r3,
    enumerate_r4,
    markoff_reduce,
    rank4_growth,
    slice_conditions,
    slice_enumerate_r3,
)
from .models.exact import format_poly
from .models.mutation import (
    LEFT,
    RIGHT,
    TRUNCATED,
    mutate,
    mutation_equivalent,
    nondegeneracy_flags,
    serre_operator,
)
from .models.poisson import BracketConfig, check_casimir, check_jacobi
from .models.quandle import BraidWord
from .models.stokes import (
    StokesMat,
    act_word,
    coxeter_charpoly,
    invariants,
    markoff_k,
    rank_filtration_level,
    sign_flip,
)
from .suite import SuiteConfig, QuickSuiteConfig, VerifySuite


logger = logging.getLogger(__name__)


def load_value(value):
    """Flags arrive as JSON text, --in payloads as decoded JSON."""
    if isinstance(value, str):
        try:
            return json.loads(value)
        except json.JSONDecodeError as e:
            raise MalformedInputError(f"not valid JSON: {value!r}") from e
    return value


def parse_matrix(value) -> StokesMat:
    if value is None:
        raise MalformedInputError("a matrix is required")
    rows = load_value(value)
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise MalformedInputError(f"matrix must be a list of rows, got {rows!r}")
    return StokesMat.from_rows(rows)


def parse_triple(value):
    if value is None:
        raise MalformedInputError("a triple is required")
    if isinstance(value, str):
        parts = value.strip().strip("[]()").split(",")
    else:
        parts = list(value)
    try:
        t = tuple(int(p) for p in parts)
    except (TypeError, ValueError) as e:
        raise MalformedInputError(f"triple must be three integers, got {value!r}") from e
    if len(t) != 3:
        raise MalformedInputError(f"triple must be three integers, got {value!r}")
    return t


def parse_word(value, r: int, pos: str = "s", neg: str = "S") -> BraidWord:
    word = BraidWord.parse(value or "", pos, neg)
    try:
        word.check(r)
    except IndexError as e:
        raise MalformedInputError(str(e)) from e
    return word


def _require_int(name: str, value) -> int:
    if value is None:
        raise MalformedInputError(f"--{name} is required")
    if isinstance(value, bool):
        raise MalformedInputError(f"--{name} must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise MalformedInputError(f"--{name} must be an integer, got {value!r}") from e


class StokesLab:
    """
    One entry point per command. Every method returns a JSON-ready dict; a
    false "ok" marks a failed property, a true "truncated" a cut-short search.
    """
    def __init__(
        self,
        seed: int = 0,
        workers: int = OrbitConfig.workers,
        budget: int = OrbitConfig.step_budget,
        progress: bool = False,
    ):
        self.seed = seed
        self.workers = max(1, workers)
        self.budget = budget
        self.progress = progress

    @classmethod
    def from_settings(cls, settings) -> "StokesLab":
        return cls(
            seed=int(settings.seed),
            workers=int(settings.workers),
            budget=int(settings.budget),
            progress=bool(settings.progress),
        )

    def invariant(self, matrix=None, r: Optional[int] = None) -> dict:
        s = parse_matrix(matrix)
        if r is not None and int(r) != s.r:
            raise MalformedInputError(f"--r {r} does not match a {s.r}x{s.r} matrix")
        out = invariants(s).to_json()
        out["rank_level"] = rank_filtration_level(s)
        if s.r == 4:
            out["goldman"] = list(goldman_invariants(s))
        return out

    def act(self, matrix=None, word=None, inverse: bool = False) -> dict:
        s = parse_matrix(matrix)
        w = parse_word(word, s.r)
        if inverse:
            w = w.inverse()
        return {"matrix": act_word(w, s), "word": w}

    def reduce(self, triple=None, matrix=None) -> dict:
        if triple is None and matrix is not None:
            s = parse_matrix(matrix)
            if s.r != 3:
                raise MalformedInputError(f"reduce works on r=3 matrices, got r={s.r}")
            if not s.is_integral():
                raise MalformedInputError("reduce needs integer entries")
            triple = (s.get(1, 2), s.get(2, 3), s.get(1, 3))
        t = parse_triple(triple)
        rep, word, tag = markoff_reduce(t)
        return {"input": list(t), "k": markoff_k(*t), "rep": list(rep), "word": word, "tag": tag}

    def enumerate_r3(self, k=None, height=None, slice=None) -> dict:
        k, H = _require_int("k", k), _require_int("height", height)
        if slice is not None:
            report = slice_enumerate_r3(k, _require_int("slice", slice), H)
        else:
            report = enumerate_r3(k, H, workers=self.workers, progress=self.progress)
        return report.to_json()

    def enumerate_r4(self, e1=None, e2=None, height=None, signed: bool = False,
                     slack: int = OrbitConfig.merge_slack, from_height=None) -> dict:
        e1, e2, H = _require_int("e1", e1), _require_int("e2", e2), _require_int("height", height)
        kwargs = dict(budget=self.budget, signed=bool(signed), workers=self.workers, slack=int(slack),
                      progress=self.progress)
        if from_height is None:
            return enumerate_r4(e1, e2, H, **kwargs).to_json()
        low = _require_int("from-height", from_height)
        if not 0 <= low <= H:
            raise MalformedInputError(f"--from-height must lie in [0, {H}], got {low}")
        return rank4_growth(e1, e2, range(low, H + 1), **kwargs).to_json()

    def bridge(self, rep=None, word=None, direction=None, point=None) -> dict:
        if direction is not None:
            if direction not in (PHI, PSI):
                raise MalformedInputError(f"direction must be {PHI} or {PSI}, got {direction!r}")
            pts = parse_tuple(load_value(point if point is not None else rep))
            if not pts:
                raise MalformedInputError("transport needs a non-empty tuple")
            return {"direction": direction, "point": list(transport(direction, pts))}
        b = parse_tuple(load_value(rep))
        if not b:
            raise MalformedInputError("a representation tuple needs at least one matrix")
        r = len(b) + 1
        w = parse_word(word, r)
        s = rep_to_stokes(b)
        moved = b
        for i, sign in w:
            if sign == 0:
                raise MalformedInputError("sign moves do not act on representation tuples")
            moved = c_braid_act(i, sign, moved)
        image = rep_to_stokes(moved)
        equivariant = image == act_word(w, s)
        if not equivariant:
            logger.error(f"rep_to_stokes is not equivariant along {w}")
        return {"rep": list(moved), "matrix": image, "word": w, "equivariant": equivariant, "ok": equivariant}

    def boundary(self, rep=None, t=None, e1=None, e2=None) -> dict:
        if rep is None:
            t, e1, e2 = _require_int("t", t), _require_int("e1", e1), _require_int("e2", e2)
            dehn = dehn_discriminant_symmetric(t, e1, e2)
            return {
                "t": t,
                "e1": e1,
                "e2": e2,
                "dehn": dehn._asdict(),
                "flags": dehn_flags(t, e1, e2),
                "conditions": slice_conditions(t, e1, e2),
            }
        b = parse_tuple(load_value(rep))
        r = len(b) + 1
        if r < 3:
            raise MalformedInputError("boundary monodromy needs r >= 3 (at least two matrices)")
        traces = boundary_monodromy(b)
        s = rep_to_stokes(b)
        p, predicted = coxeter_charpoly(s), predicted_charpoly(traces, r)
        out = {
            "r": r,
            "traces": traces,
            "matrix": s,
            "p": format_poly(p),
            "predicted_p": format_poly(predicted),
            "rank_level": rank_filtration_level(s),
        }
        checks = [p == predicted, out["rank_level"] <= 4]
        if r in (3, 4):
            out["membership"] = surface_membership(s, traces)
            checks.append(out["membership"])
        out["ok"] = all(checks)
        return out

    def poisson_check(self, r=None, mode: Optional[str] = None, samples: int = BracketConfig.samples) -> dict:
        r = _require_int("r", r)
        if not 2 <= r <= 9:
            raise MalformedInputError(f"bracket checks need 2 <= r <= 9, got {r}")
        try:
            jacobi = check_jacobi(r, mode, int(samples), seed=self.seed, workers=self.workers)
            casimir = check_casimir(r, mode, int(samples), seed=self.seed)
        except ValueError as e:
            raise MalformedInputError(str(e)) from e
        return {"r": r, "jacobi": jacobi, "casimir": casimir, "ok": jacobi["ok"] and casimir["ok"]}

    def mutate(self, matrix=None, word=None, direction: Optional[str] = None, i=None) -> dict:
        s = parse_matrix(matrix)
        if direction is not None:
            if direction not in (LEFT, RIGHT):
                raise MalformedInputError(f"direction must be {LEFT} or {RIGHT}, got {direction!r}")
            word = f"{direction}{_require_int('i', i)}"
        w = parse_word(word, s.r, LEFT, RIGHT)
        out = s
        for n, sign in w:
            out = sign_flip(n, out) if sign == 0 else mutate(LEFT if sign > 0 else RIGHT, n, out)
        return {
            "matrix": out,
            "word": w,
            "serre": serre_operator(out),
            "nondegeneracy": nondegeneracy_flags(out),
        }

    def equivalent(self, matrix=None, other=None, depth: int = 6, signed: bool = False) -> dict:
        s1, s2 = parse_matrix(matrix), parse_matrix(other)
        result = mutation_equivalent(s1, s2, depth=int(depth), budget=self.budget, signed=bool(signed),
                                     workers=self.workers)
        result["truncated"] = result["status"] == TRUNCATED
        return result

    def verify_suite(self, quick: bool = False, only: Optional[Sequence[str]] = None) -> dict:
        config = QuickSuiteConfig if quick else SuiteConfig
        suite = VerifySuite(config, seed=self.seed, workers=self.workers, progress=self.progress)
        return suite.run(only)

    def finite_model(self, p=None, r=None) -> dict:
        p, r = _require_int("p", p), _require_int("r", r)
        if p not in (2, 3, 5, 7):
            raise MalformedInputError(f"finite models are built for small primes, got p={p}")
        if r < 2:
            raise MalformedInputError(f"r must be >= 2, got {r}")
        return finite_model_compare(p, r, budget=self.budget, workers=self.workers, progress=self.progress)
