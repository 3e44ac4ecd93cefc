"""Randomized empirical verification of Lech-type bounds.

Each check wraps one inequality (or identity) between multiplicities and
colengths, evaluates both sides exactly on randomly generated m-primary
ideals, and reports the slack.  Instances are seeded per (seed, check,
index) through SHA-256, so a corpus is reproducible independently of which
checks run, in what order, or across how many worker processes; report
files contain no timestamps and are byte-identical for a given config.

Checks whose hypotheses need d >= 4 can also be *explored* below that
dimension: exploratory reports are flagged and never count toward the
verdict.
"""

from __future__ import annotations

import csv
import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from itertools import combinations
from math import factorial

from .buchsbaum_rim import DirectSumModule, br_via_mixed, scale_by_m
from .lengths import colength
from .monomial import MonomialIdeal, box_bounds, ideal, m_ideal, product
from .multiplicity import (
    StabilizePolicy,
    hyperplane_section_multiplicity,
    mixed_multiplicity,
)

CHECK_NAMES = (
    "lech_classical",
    "lech_mixed",
    "prop_dim2",
    "prop_dim3",
    "main_mixed",
    "main_br",
    "additivity",
)


@dataclass(frozen=True)
class CorpusConfig:
    """What to generate and which inequalities to drive over it."""

    seed: int = 0
    dim: int = 2
    rank: int = 2
    max_pure_power: int = 3
    extra_gens: int = 2
    instances: int = 20
    checks: tuple[str, ...] | None = None
    exploration: bool = False
    jobs: int = 1

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.rank < 1:
            raise ValueError("rank must be at least 1")
        if self.max_pure_power < 1:
            raise ValueError("max_pure_power must be at least 1")
        if self.extra_gens < 0:
            raise ValueError("extra_gens must be non-negative")
        if self.instances < 1:
            raise ValueError("instances must be at least 1")
        if self.checks is not None:
            object.__setattr__(self, "checks", tuple(self.checks))
            unknown = [c for c in self.checks if c not in CHECK_NAMES]
            if unknown:
                raise ValueError(f"unknown checks: {', '.join(unknown)}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated instance of one check.

    `relation` is the claimed comparison of lhs against rhs ("<", "<=" or
    "=="), `holds` whether it came out true, and `slack` is rhs - lhs.
    `terms` carries the named summands of composite bounds for inspection.
    """

    check: str
    index: int
    instance: dict
    lhs: int
    rhs: int
    relation: str
    holds: bool
    slack: int
    exploratory: bool = False
    terms: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))


def _report(check, lhs, rhs, relation, *, instance=None, index=-1,
            exploratory=False, terms=None) -> InequalityReport:
    holds = {"<": lhs < rhs, "<=": lhs <= rhs, "==": lhs == rhs}[relation]
    return InequalityReport(
        check=check,
        index=index,
        instance=instance or {},
        lhs=int(lhs),
        rhs=int(rhs),
        relation=relation,
        holds=holds,
        slack=int(rhs) - int(lhs),
        exploratory=exploratory,
        terms=terms or {},
    )


def rng_for(seed: int, check: str, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{check}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def gen_random_mprimary(
    dim: int, max_pure_power: int, extra_gens: int, rng: random.Random
) -> MonomialIdeal:
    """Random m-primary ideal: pure powers x_i^{k_i} plus extra box points."""
    powers = [rng.randint(1, max_pure_power) for _ in range(dim)]
    gens = [
        tuple(k if i == j else 0 for j in range(dim))
        for i, k in enumerate(powers)
    ]
    interior = [k > 1 for k in powers]
    if any(interior):
        for _ in range(extra_gens):
            v = tuple(rng.randrange(0, k) for k in powers)
            if any(v):
                gens.append(v)
    return ideal(gens, dim=dim)


def _gen_many(config: CorpusConfig, check: str, index: int, count: int):
    rng = rng_for(config.seed, check, index)
    return [
        gen_random_mprimary(config.dim, config.max_pure_power, config.extra_gens, rng)
        for _ in range(count)
    ]


def _describe(ideals) -> dict:
    from .expr import format_ideal

    return {"ideals": [format_ideal(I) for I in ideals]}


# ---------------------------------------------------------------------------
# the checks


def check_lech_classical(I: MonomialIdeal, **meta) -> InequalityReport:
    """e(I) <= d! * lambda(R/I)."""
    d = I.dim
    lhs = mixed_multiplicity([I], (d,))
    rhs = factorial(d) * colength(I)
    return _report("lech_classical", lhs, rhs, "<=", **meta)


def check_lech_mixed(ideals, **meta) -> InequalityReport:
    """e(I_1, ..., I_d) <= (d-1)! * sum lambda(R/I_i)."""
    ideals = list(ideals)
    d = ideals[0].dim
    if len(ideals) != d:
        raise ValueError(f"need {d} ideals, got {len(ideals)}")
    lhs = mixed_multiplicity(ideals)
    rhs = factorial(d - 1) * sum(colength(I) for I in ideals)
    return _report("lech_mixed", lhs, rhs, "<=", **meta)


def check_main_mixed(ideals, *, exploratory=False, **meta) -> InequalityReport:
    """Strict bound after scaling by m: e(mI_1, ..., mI_d) < (d-1)! sum lambda(R/I_i).

    Stated for d >= 4; lower dimensions are allowed only as exploration.
    """
    ideals = list(ideals)
    d = ideals[0].dim
    if len(ideals) != d:
        raise ValueError(f"need {d} ideals, got {len(ideals)}")
    if d < 4 and not exploratory:
        raise ValueError("the strict scaled bound is asserted only for d >= 4")
    scaled = [scale_by_m(I) for I in ideals]
    lhs = mixed_multiplicity(scaled)
    rhs = factorial(d - 1) * sum(colength(I) for I in ideals)
    return _report(
        "main_mixed", lhs, rhs, "<", exploratory=exploratory, **meta
    )


def check_main_br(E: DirectSumModule, *, exploratory=False, **meta) -> InequalityReport:
    """Strict Buchsbaum-Rim bound: br(mE) < (d+r-1)!/r! * lambda(F/E).

    Stated for d >= 4 and E inside mF; lower d only as exploration.
    """
    d, r = E.dim, E.rank
    if d < 4 and not exploratory:
        raise ValueError("the strict scaled bound is asserted only for d >= 4")
    if not E.contained_in_mF:
        raise ValueError("E must be contained in mF (all column ideals proper)")
    lhs = br_via_mixed(scale_by_m(E))
    rhs = (factorial(d + r - 1) // factorial(r)) * E.quotient_colength()
    return _report("main_br", lhs, rhs, "<", exploratory=exploratory, **meta)


def check_prop_dim2(ideals, **meta) -> InequalityReport:
    """Dimension-2 refinement over several ideals.

    2 sum_{i<j} e(I_i, I_j) + (r-1) sum_i e(m, I_i)
        <= 2(r-1) sum_i lambda(R/I_i),
    with equality when all I_i are the same power of m.
    """
    ideals = list(ideals)
    if ideals[0].dim != 2:
        raise ValueError("this bound is specific to dimension 2")
    r = len(ideals)
    if r < 2:
        raise ValueError("need at least two ideals")
    pair_sum = sum(
        mixed_multiplicity([a, b]) for a, b in combinations(ideals, 2)
    )
    section_sum = sum(
        hyperplane_section_multiplicity([I], 1) for I in ideals
    )
    lhs = 2 * pair_sum + (r - 1) * section_sum
    rhs = 2 * (r - 1) * sum(colength(I) for I in ideals)
    terms = {"pair_sum": pair_sum, "section_sum": section_sum}
    return _report("prop_dim2", lhs, rhs, "<=", terms=terms, **meta)


def check_prop_dim3(ideals, **meta) -> InequalityReport:
    """Dimension-3 refinement over four ideals.

    sum_{i<j<k} e(I_i, I_j, I_k) + sum_{i<j} e(m, I_i, I_j)
        + sum_i e(m, m, I_i) + 1 <= 3! * sum_i lambda(R/I_i).
    """
    ideals = list(ideals)
    if ideals[0].dim != 3:
        raise ValueError("this bound is specific to dimension 3")
    if len(ideals) != 4:
        raise ValueError("need exactly four ideals")
    m = m_ideal(3)
    triple_sum = sum(
        mixed_multiplicity(list(t)) for t in combinations(ideals, 3)
    )
    pair_sum = sum(
        mixed_multiplicity([m, a, b]) for a, b in combinations(ideals, 2)
    )
    single_sum = sum(mixed_multiplicity([m, m, I]) for I in ideals)
    lhs = triple_sum + pair_sum + single_sum + 1
    rhs = factorial(3) * sum(colength(I) for I in ideals)
    terms = {
        "triple_sum": triple_sum,
        "pair_sum": pair_sum,
        "single_sum": single_sum,
    }
    return _report("prop_dim3", lhs, rhs, "<=", terms=terms, **meta)


def check_additivity(ideals, J: MonomialIdeal, **meta) -> InequalityReport:
    """e(I_1 J, I_2, ..., I_d) == e(I_1, ..., I_d) + e(J, I_2, ..., I_d)."""
    ideals = list(ideals)
    d = ideals[0].dim
    if len(ideals) != d:
        raise ValueError(f"need {d} ideals, got {len(ideals)}")
    lhs = mixed_multiplicity([product(ideals[0], J)] + ideals[1:])
    rhs = mixed_multiplicity(ideals) + mixed_multiplicity([J] + ideals[1:])
    return _report("additivity", lhs, rhs, "==", **meta)


# ---------------------------------------------------------------------------
# corpus driving


def _applicable_checks(config: CorpusConfig) -> list[str]:
    wanted = config.checks if config.checks is not None else CHECK_NAMES
    out = []
    for name in wanted:
        if name == "prop_dim2" and config.dim != 2:
            continue
        if name == "prop_dim3" and config.dim != 3:
            continue
        if name in ("main_mixed", "main_br") and config.dim < 4 and not config.exploration:
            continue
        if name in ("lech_mixed", "main_mixed", "additivity", "prop_dim2",
                    "prop_dim3") and config.dim < 2:
            continue
        out.append(name)
    return out


def run_instance(config: CorpusConfig, check: str, index: int) -> InequalityReport:
    """Evaluate one seeded instance of one check (deterministic)."""
    d, r = config.dim, config.rank
    exploratory = config.dim < 4 and check in ("main_mixed", "main_br")
    if check == "lech_classical":
        (I,) = _gen_many(config, check, index, 1)
        return check_lech_classical(I, instance=_describe([I]), index=index)
    if check == "lech_mixed":
        ideals = _gen_many(config, check, index, d)
        return check_lech_mixed(ideals, instance=_describe(ideals), index=index)
    if check == "main_mixed":
        ideals = _gen_many(config, check, index, d)
        return check_main_mixed(
            ideals, instance=_describe(ideals), index=index, exploratory=exploratory
        )
    if check == "main_br":
        ideals = _gen_many(config, check, index, r)
        E = DirectSumModule(tuple(ideals))
        return check_main_br(
            E, instance=_describe(ideals), index=index, exploratory=exploratory
        )
    if check == "prop_dim2":
        ideals = _gen_many(config, check, index, max(2, r))
        return check_prop_dim2(ideals, instance=_describe(ideals), index=index)
    if check == "prop_dim3":
        ideals = _gen_many(config, check, index, 4)
        return check_prop_dim3(ideals, instance=_describe(ideals), index=index)
    if check == "additivity":
        ideals = _gen_many(config, check, index, d + 1)
        J = ideals.pop()
        return check_additivity(
            ideals, J, instance=_describe(ideals + [J]), index=index
        )
    raise ValueError(f"unknown check {check!r}")


def _run_star(args) -> InequalityReport:
    config_kwargs, check, index = args
    return run_instance(CorpusConfig(**config_kwargs), check, index)


@dataclass
class SuiteResult:
    config: CorpusConfig
    reports: list[InequalityReport]
    passed: bool

    def summary_rows(self) -> list[dict]:
        rows = []
        for name in CHECK_NAMES:
            batch = [r for r in self.reports if r.check == name]
            if not batch:
                continue
            counted = [r for r in batch if not r.exploratory]
            rows.append(
                {
                    "check": name,
                    "instances": len(batch),
                    "exploratory": sum(r.exploratory for r in batch),
                    "violations": sum(not r.holds for r in counted),
                    "min_slack": min((r.slack for r in batch), default=0),
                    "max_slack": max((r.slack for r in batch), default=0),
                }
            )
        return rows


def run_suite(config: CorpusConfig) -> SuiteResult:
    """Drive every applicable check over the seeded corpus."""
    tasks = [
        (check, index)
        for check in _applicable_checks(config)
        for index in range(config.instances)
    ]
    if config.jobs > 1 and len(tasks) > 1:
        kwargs = asdict(config)
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(
                pool.map(
                    _run_star,
                    [(kwargs, check, index) for check, index in tasks],
                    chunksize=4,
                )
            )
    else:
        reports = [run_instance(config, check, index) for check, index in tasks]
    passed = all(r.holds for r in reports if not r.exploratory)
    return SuiteResult(config=config, reports=reports, passed=passed)


def fuzz(config: CorpusConfig, seconds: float) -> SuiteResult:
    """Open-ended search: keep sampling fresh instances until time runs out."""
    deadline = time.monotonic() + seconds
    checks = _applicable_checks(config)
    if not checks:
        raise ValueError("no applicable checks for this configuration")
    reports = []
    index = 0
    while time.monotonic() < deadline:
        for check in checks:
            reports.append(run_instance(config, check, index))
        index += 1
    passed = all(r.holds for r in reports if not r.exploratory)
    return SuiteResult(config=config, reports=reports, passed=passed)


def write_jsonl(reports, stream) -> None:
    for r in reports:
        stream.write(r.to_json() + "\n")


def write_summary_csv(result: SuiteResult, stream) -> None:
    fields = ["check", "instances", "exploratory", "violations", "min_slack", "max_slack"]
    writer = csv.DictWriter(stream, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in result.summary_rows():
        writer.writerow(row)
