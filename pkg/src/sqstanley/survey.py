"""Instance sweeps that assert the theorems and flag the conjectures.

One record per module: combinatorial depth data on the primal side,
regularity data on the dual side, and the two inequalities under
study.  Facts with proofs are enforced; a violation raises
TheoremViolationError naming the instance, because it can only mean a
bug.  The open inequalities are recorded as booleans and a False never
raises, so a sweep that finds a counterexample completes and reports
it.

Sweeps are deterministic: exhaustive enumeration follows the fixed
antichain order, random sampling follows the caller's seed, and worker
processes only parallelize instances whose results are reassembled in
input order, so the emitted records are identical however many jobs
run.
"""

from dataclasses import dataclass
from multiprocessing import Pool
from random import Random

from .errors import CapExceededError, TheoremViolationError
from .homology import DEFAULT_CHAR, betti
from .ideals import SqIdeal
from .instances import all_quotients, random_quotient
from .setcalc import IndexSet
from .sqmod import SqQuotient, dualize_quotient, hreg_min, sdepth

EXHAUSTIVE_CAP = 4


@dataclass(frozen=True)
class SurveyRecord:
    n: int
    inner: tuple[int, ...]
    outer: tuple[int, ...]
    sdepth: int
    depth: int
    hreg_min: int
    hreg_dual: int
    reg: int
    projdim: int
    dim: int
    cohen_macaulay: bool

    @property
    def sdepth_ge_depth(self) -> bool:
        return self.sdepth >= self.depth

    @property
    def hreg_le_reg(self) -> bool:
        return self.hreg_min <= self.reg

    def row(self) -> dict:
        def gens(masks):
            return " ".join(str(IndexSet(self.n, m)) for m in masks) or "-"
        return {
            "n": self.n,
            "inner": gens(self.inner),
            "outer": gens(self.outer),
            "sdepth": self.sdepth,
            "depth": self.depth,
            "sdepth_ge_depth": self.sdepth_ge_depth,
            "hreg_min": self.hreg_min,
            "hreg_dual": self.hreg_dual,
            "reg": self.reg,
            "hreg_le_reg": self.hreg_le_reg,
            "projdim": self.projdim,
            "dim": self.dim,
            "cohen_macaulay": self.cohen_macaulay,
        }


def survey_module(module: SqQuotient, char: int = DEFAULT_CHAR) -> SurveyRecord:
    """Measure one module and enforce the proved identities on it.

    hreg comes out twice: minimized directly, and read off the
    dualized optimal sdepth decomposition of the dual module.  The two
    must agree, just as projective dimension must match the dual
    regularity; either failing is a defect, not a discovery.
    """
    n = module.n
    s, _ = sdepth(module)
    h, _ = hreg_min(module)
    dual = dualize_quotient(module)
    dual_s, _ = sdepth(dual)
    table = betti(module, char)
    dual_table = betti(dual, char)
    dim = max(m.bit_count() for m in module.facet_masks())
    rec = SurveyRecord(
        n=n,
        inner=module.inner.gen_masks,
        outer=module.outer.gen_masks,
        sdepth=s,
        depth=n - table.projdim,
        hreg_min=h,
        hreg_dual=n - dual_s,
        reg=table.reg,
        projdim=table.projdim,
        dim=dim,
        cohen_macaulay=n - table.projdim == dim,
    )
    where = f"inner={rec.inner} outer={rec.outer} n={n}"
    if rec.hreg_min != rec.hreg_dual:
        raise TheoremViolationError(
            f"direct hreg {rec.hreg_min} != dualized sdepth witness "
            f"{rec.hreg_dual} on {where}")
    if rec.projdim != dual_table.reg:
        raise TheoremViolationError(
            f"projdim {rec.projdim} != dual reg {dual_table.reg} on {where}")
    return rec


def _survey_presentation(args) -> SurveyRecord:
    n, inner, outer, char = args
    module = SqQuotient(n, SqIdeal(n, inner), SqIdeal(n, outer))
    return survey_module(module, char)


def _run(tasks, jobs):
    if jobs > 1:
        with Pool(jobs) as pool:
            return pool.map(_survey_presentation, tasks, chunksize=16)
    return [_survey_presentation(t) for t in tasks]


def survey_exhaustive(n: int, char: int = DEFAULT_CHAR, cap: int = EXHAUSTIVE_CAP,
                      jobs: int = 1) -> list[SurveyRecord]:
    """Every nonzero quotient at this n, in enumeration order."""
    if n > cap:
        raise CapExceededError(
            f"exhaustive survey capped at n <= {cap}; raise the cap knowingly")
    tasks = [(n, m.inner.gen_masks, m.outer.gen_masks, char)
             for m in all_quotients(n)]
    return _run(tasks, jobs)


def survey_random(n: int, count: int, seed: int, char: int = DEFAULT_CHAR,
                  jobs: int = 1) -> list[SurveyRecord]:
    """count seeded random modules; the same seed gives the same records."""
    rng = Random(seed)
    tasks = []
    for _ in range(count):
        m = random_quotient(rng, n)
        tasks.append((n, m.inner.gen_masks, m.outer.gen_masks, char))
    return _run(tasks, jobs)


def counterexamples(records) -> list[SurveyRecord]:
    """Records where either open inequality fails."""
    return [r for r in records if not (r.sdepth_ge_depth and r.hreg_le_reg)]
