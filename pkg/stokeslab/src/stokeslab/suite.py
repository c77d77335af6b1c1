import logging
import time
from typing import Callable, Dict, Optional, Sequence

from tqdm import tqdm

from .errors import DegenerateFormError, MalformedInputError
from .models.bridge import (
    CORE_SL2,
    boundary_monodromy,
    c_braid_act,
    finite_model_compare,
    goldman_invariants,
    predicted_charpoly,
    rep_to_stokes,
    surface_membership,
    trace_identity_check,
)
from .models.clifford import (
    DET,
    SPLIT,
    coxeter_class,
    mu2_coxeter,
    random_sl2,
    rational_sphere_point,
    sphere_coxeter_m4,
    sphere_reflect,
    verify_reflection_conjugation,
)
from .models.diophantine import (
    DTDVDB_FIXED,
    TAG_MARKOFF,
    TAG_ORIGIN,
    TAG_REDUCIBLE,
    enumerate_r3,
    rank4_growth,
    verify_dtdvdb,
)
from .models.exact import coefficients
from .models.mutation import INEQUIVALENT, LEFT, RIGHT, mutate, mutation_equivalent, mutation_relations
from .models.poisson import SAMPLED, SYMBOLIC, check_casimir, check_jacobi
from .models.quandle import ScalarCoreQuandle, TrivialQuandle, braid_act, pseudo_coxeter, random_word
from .models.stokes import (
    StokesMat,
    act_word,
    closed_form,
    coxeter_charpoly,
    coxeter_identity_check,
    gram_from_sphere,
    random_stokes,
    rank_filtration_level,
    stokes_braid_act,
)
from .utils import make_rng, rand_int


logger = logging.getLogger(__name__)


class SuiteConfig:
    braid_trials = 1000
    braid_ranks = (3, 4, 5, 6)
    conservation_trials = 1000
    word_length = 50
    coxeter_trials = 200
    coxeter_ranks = (3, 4, 5)
    bridge_trials = 500
    sphere_trials = 500
    # the second height must reproduce the class counts of the first
    markoff_heights = (50, 100)
    markoff_ks = (-1, 0, 1, 3, 5)
    # the nondegenerate count must hold still over these heights, the degenerate one must grow
    rank4_heights = (3, 4, 5)
    dtdvdb_n = 20
    poisson_samples = 200
    mutation_trials = 500
    finite_models = ((2, 2), (2, 3), (3, 2))
    entry_height = 3


class QuickSuiteConfig(SuiteConfig):
    braid_trials = 50
    conservation_trials = 50
    word_length = 20
    coxeter_trials = 20
    bridge_trials = 50
    sphere_trials = 50
    markoff_heights = (12, 24)
    rank4_heights = (3, 4)
    dtdvdb_n = 5
    poisson_samples = 5
    mutation_trials = 30
    finite_models = ((2, 2), (2, 3))


class VerifySuite:
    """
    The property battery. Each check draws from its own seeded generator, so
    any subset reproduces the numbers it has in a full run.
    """
    def __init__(self, config=SuiteConfig, seed: int = 0, workers: int = 1, progress: bool = False):
        self.config = config
        self.seed = seed
        self.workers = workers
        self.progress = progress
        self.checks: Dict[str, Callable[..., dict]] = {
            "braid_relations": self.braid_relations,
            "invariant_conservation": self.invariant_conservation,
            "coxeter_identity": self.coxeter_identity,
            "bridge_equivariance": self.bridge_equivariance,
            "sphere_core": self.sphere_core,
            "coxeter_classes": self.coxeter_classes,
            "markoff": self.markoff,
            "rank4": self.rank4,
            "dtdvdb": self.dtdvdb,
            "poisson": self.poisson,
            "mutation": self.mutation,
            "finite_model": self.finite_model,
        }

    def _rng(self, name: str):
        return make_rng([self.seed, sorted(self.checks).index(name)])

    def run(self, only: Optional[Sequence[str]] = None) -> dict:
        names = list(only) if only else list(self.checks)
        unknown = [n for n in names if n not in self.checks]
        if unknown:
            raise MalformedInputError(f"unknown checks {unknown}; known: {sorted(self.checks)}")
        results = {}
        for name in tqdm(names, desc="verify", disable=not self.progress):
            start = time.perf_counter()
            results[name] = self.checks[name](self._rng(name))
            status = "ok" if results[name]["ok"] else "FAILED"
            logger.info(f"{name}: {status} in {time.perf_counter() - start:.2f}s")
        failed = sorted(n for n, res in results.items() if not res["ok"])
        return {"checks": results, "failed": failed, "ok": not failed}

    def braid_relations(self, rng) -> dict:
        cfg = self.config
        braid, far, checked = 0, 0, 0
        for r in cfg.braid_ranks:
            for _ in range(cfg.braid_trials):
                s = random_stokes(rng, r, cfg.entry_height)
                checked += 1
                for i in range(1, r - 1):
                    lhs = stokes_braid_act(i, 1, stokes_braid_act(i + 1, 1, stokes_braid_act(i, 1, s)))
                    rhs = stokes_braid_act(i + 1, 1, stokes_braid_act(i, 1, stokes_braid_act(i + 1, 1, s)))
                    braid += lhs != rhs
                for i in range(1, r):
                    for j in range(i + 2, r):
                        far += stokes_braid_act(i, 1, stokes_braid_act(j, 1, s)) != \
                            stokes_braid_act(j, 1, stokes_braid_act(i, 1, s))
        return {"checked": checked, "braid_failures": braid, "far_failures": far, "ok": braid == 0 and far == 0}

    def invariant_conservation(self, rng) -> dict:
        cfg = self.config
        failures = 0
        for n in range(cfg.conservation_trials):
            r = cfg.braid_ranks[n % len(cfg.braid_ranks)]
            s = random_stokes(rng, r, cfg.entry_height)
            w = random_word(rng, r, cfg.word_length)
            failures += coxeter_charpoly(act_word(w, s)) != coxeter_charpoly(s)
        return {"checked": cfg.conservation_trials, "failures": failures, "ok": failures == 0}

    def coxeter_identity(self, rng) -> dict:
        cfg = self.config
        witness = coxeter_identity_check(StokesMat.from_rows([[1, 1], [0, 1]]))["ok"]
        failures, skipped, checked = 0, 0, 0
        for n in range(cfg.coxeter_trials):
            r = cfg.coxeter_ranks[n % len(cfg.coxeter_ranks)]
            # rank(s + s^T) <= m
            m = r + rand_int(rng, 0, 1)
            s = gram_from_sphere([rational_sphere_point(m, rng=rng) for _ in range(r)])
            try:
                ok = coxeter_identity_check(s)["ok"]
            except DegenerateFormError:
                skipped += 1
                continue
            checked += 1
            failures += not ok
        return {"witness": witness, "checked": checked, "skipped_singular": skipped, "failures": failures,
                "ok": witness and failures == 0}

    def bridge_equivariance(self, rng) -> dict:
        cfg = self.config
        equivariance, boundary, charpoly, filtration = 0, 0, 0, 0
        for n in range(cfg.bridge_trials):
            r = 3 + n % 4
            b = tuple(random_sl2(rng, rand_int(rng, 1, 6)) for _ in range(r - 1))
            s = rep_to_stokes(b)
            i, sign = rand_int(rng, 1, r - 1), 1 if rand_int(rng, 0, 1) else -1
            equivariance += rep_to_stokes(c_braid_act(i, sign, b)) != stokes_braid_act(i, sign, s)
            traces = boundary_monodromy(b)
            if r in (3, 4):
                boundary += not surface_membership(s, traces)
            if r == 4:
                coords = closed_form(s)
                boundary += goldman_invariants(s) != (coords["e1"], coords["e2"])
            charpoly += coxeter_charpoly(s) != predicted_charpoly(traces, r)
            filtration += rank_filtration_level(s) > 4
        pairs = [(random_sl2(rng), random_sl2(rng)) for _ in range(cfg.bridge_trials)]
        identity = trace_identity_check(pairs)["ok"]
        failures = equivariance + boundary + charpoly + filtration
        return {
            "checked": cfg.bridge_trials,
            "equivariance_failures": equivariance,
            "boundary_failures": boundary,
            "charpoly_failures": charpoly,
            "filtration_failures": filtration,
            "trace_identity": identity,
            "ok": failures == 0 and identity,
        }

    def sphere_core(self, rng) -> dict:
        cfg = self.config
        scalar = ScalarCoreQuandle()
        split, det, conj = 0, 0, 0
        for _ in range(cfg.sphere_trials):
            u, v = rational_sphere_point(2, rng=rng, form=SPLIT), rational_sphere_point(2, rng=rng, form=SPLIT)
            split += sphere_reflect(u, v).coords != tuple(scalar.op(a, b) for a, b in zip(u.coords, v.coords))
            conj += not verify_reflection_conjugation(u, v)["ok"]
            u, v = rational_sphere_point(4, rng=rng, form=DET), rational_sphere_point(4, rng=rng, form=DET)
            det += sphere_reflect(u, v).to_mat2() != CORE_SL2.op(u.to_mat2(), v.to_mat2())
            conj += not verify_reflection_conjugation(u, v)["ok"]
        return {"checked": cfg.sphere_trials, "split_failures": split, "det_failures": det,
                "conjugation_failures": conj, "ok": split + det + conj == 0}

    def coxeter_classes(self, rng) -> dict:
        """The m=4 sphere product against the core-quandle product, and the μ2 class under braids."""
        cfg = self.config
        m4, mu2 = 0, 0
        for n in range(cfg.sphere_trials):
            r = 2 + n % 4
            vs = [rational_sphere_point(4, rng=rng, form=DET) for _ in range(r)]
            m4 += coxeter_class(sphere_coxeter_m4(vs)) != coxeter_class(
                pseudo_coxeter([v.to_mat2() for v in vs], CORE_SL2))
            signs = [1 if rand_int(rng, 0, 1) else -1 for _ in range(r)]
            moved = braid_act(random_word(rng, r, 8), signs, TrivialQuandle())
            mu2 += mu2_coxeter(moved) != mu2_coxeter(signs)
        return {"checked": cfg.sphere_trials, "m4_failures": m4, "mu2_failures": mu2, "ok": m4 + mu2 == 0}

    def markoff(self, rng) -> dict:
        cfg = self.config
        low, high = cfg.markoff_heights
        origin = enumerate_r3(-2, low, workers=self.workers)
        bad_origin = [t for t in origin.tags if t not in (TAG_ORIGIN, TAG_MARKOFF)]
        reducible = enumerate_r3(2, low, workers=self.workers)
        bad_reducible = [t for t in reducible.tags if t != TAG_REDUCIBLE]
        counts = {}
        for k in cfg.markoff_ks:
            counts[k] = [enumerate_r3(k, H, workers=self.workers).count for H in (low, high)]
        stable = all(a == b for a, b in counts.values())
        return {
            "heights": [low, high],
            "origin_classes": origin.count,
            "untagged_origin": len(bad_origin),
            "untagged_reducible": len(bad_reducible),
            "counts": counts,
            "stable": stable,
            "ok": not bad_origin and not bad_reducible and stable,
        }

    def rank4(self, rng) -> dict:
        """
        Class counts over the configured heights for a nondegenerate and a
        degenerate invariant pair. Passes when the first count holds still,
        the second grows, both degeneracy flags are right and the fixed dTdVdB
        matrix is classified once the scan reaches its height.
        """
        cfg = self.config
        nondeg = rank4_growth(1, -1, cfg.rank4_heights, workers=self.workers)
        deg = rank4_growth(0, -4, cfg.rank4_heights, workers=self.workers)
        fixed_found = deg.height < DTDVDB_FIXED.height() or deg.classify(DTDVDB_FIXED) is not None
        stable_nondegenerate = nondeg.growth["stable"]
        grows_degenerate = deg.growth["grows"]
        if not grows_degenerate:
            logger.warning(f"degenerate class counts {deg.growth['counts']} do not grow")
        return {
            "heights": nondeg.growth["heights"],
            "counts": {"1,-1": nondeg.growth["counts"], "0,-4": deg.growth["counts"]},
            "merge_bounds": {"1,-1": nondeg.merge_bound, "0,-4": deg.merge_bound},
            "stable_nondegenerate": stable_nondegenerate,
            "grows_degenerate": grows_degenerate,
            "degenerate_growth": deg.growth,
            "truncated": nondeg.truncated or deg.truncated,
            "ok": (not nondeg.degenerate and deg.degenerate and fixed_found
                   and stable_nondegenerate and grows_degenerate),
        }

    def dtdvdb(self, rng) -> dict:
        res = verify_dtdvdb(self.config.dtdvdb_n)
        return {"n_max": self.config.dtdvdb_n, "fixed_ok": res["fixed"]["ok"],
                "family_failures": [row["n"] for row in res["family"] if not row["ok"]], "ok": res["ok"]}

    def poisson(self, rng) -> dict:
        cfg = self.config
        seed = int(rng.integers(0, 2 ** 31))
        runs = {
            "jacobi_r3": check_jacobi(3, SYMBOLIC, workers=self.workers),
            "casimir_r3": check_casimir(3, SYMBOLIC),
            "jacobi_r4": check_jacobi(4, SAMPLED, cfg.poisson_samples, seed=seed, workers=self.workers),
            "casimir_r4": check_casimir(4, SAMPLED, cfg.poisson_samples, seed=seed),
        }
        return {**{name: res["ok"] for name, res in runs.items()}, "ok": all(res["ok"] for res in runs.values())}

    def mutation(self, rng) -> dict:
        cfg = self.config
        relations, charpoly = 0, 0
        for _ in range(cfg.mutation_trials):
            s = random_stokes(rng, 4, cfg.entry_height)
            relations += not mutation_relations(s)["ok"]
            i = rand_int(rng, 1, 3)
            for d in (LEFT, RIGHT):
                charpoly += coxeter_charpoly(mutate(d, i, s)) != coxeter_charpoly(s)
        unipotent = StokesMat.from_rows([[1, 2, 2, 4], [0, 1, 0, 2], [0, 0, 1, 2], [0, 0, 0, 1]])
        ones = StokesMat.from_rows([[1, 1, 1, 1], [0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1]])
        negative = mutation_equivalent(unipotent, ones, depth=2)["status"] == INEQUIVALENT
        polys = [coefficients(coxeter_charpoly(x)) for x in (unipotent, ones)]
        return {"checked": cfg.mutation_trials, "relation_failures": relations, "charpoly_failures": charpoly,
                "fast_negative": negative, "coefficients": polys,
                "ok": relations == 0 and charpoly == 0 and negative}

    def finite_model(self, rng) -> dict:
        runs = {f"SL2(F{p}) r={r}": finite_model_compare(p, r, workers=self.workers)
                for p, r in self.config.finite_models}
        return {**{name: {"b_orbits": res["b_orbits"], "c_orbits": res["c_orbits"], "ok": res["ok"]}
                   for name, res in runs.items()},
                "ok": all(res["ok"] for res in runs.values())}
