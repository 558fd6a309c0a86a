"""N <-> -N duality checks, compared as canonical Laurent polynomials.

Every check returns a :class:`CheckReport` whose ``witness`` holds the left
side and the transformed right side; ``holds`` is true exactly when the two
are identical.  The sign is reported separately so a failure can be told
apart as "right shape, wrong sign" versus "different polynomial".
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .invariants import casimir_formula, dim_polynomial
from .laurent import LaurentPoly
from .partitions import EMPTY, YoungDiagram, partition_count, partitions_upto, transpose
from .stable import StableRep, swap, transpose_both, z2_partner

__all__ = [
    "CheckReport",
    "IDENTITIES",
    "check_classic",
    "check_prop1",
    "check_prop2",
    "check_z2",
    "check_constant_term",
    "random_partition",
    "random_corpus",
    "exhaustive_corpus",
    "run_checks",
]


@dataclass(frozen=True)
class CheckReport:
    identity: str
    subject: StableRep | YoungDiagram
    holds: bool | None
    sign: int | None = None
    witness: tuple[LaurentPoly, LaurentPoly] | None = None
    detail: str = ""

    @property
    def applicable(self) -> bool:
        return self.holds is not None

    def to_json_obj(self) -> dict:
        if isinstance(self.subject, StableRep):
            obj = {"identity": self.identity, **self.subject.to_json_obj()}
        else:
            obj = {"identity": self.identity, "lambda": list(self.subject.rows), "tau": []}
        obj["holds"] = self.holds
        obj["sign"] = self.sign
        if self.witness is not None:
            obj["lhs"] = self.witness[0].to_json_obj()
            obj["rhs_transformed"] = self.witness[1].to_json_obj()
        if self.detail:
            obj["detail"] = self.detail
        return obj


def _compare(identity, subject, lhs: LaurentPoly, rhs: LaurentPoly, sign: int) -> CheckReport:
    holds = lhs == rhs
    if holds:
        detail = ""
    elif lhs == -rhs:
        detail = "sides agree up to an overall sign"
    else:
        detail = "sides differ"
    return CheckReport(identity, subject, holds, sign, (lhs, rhs), detail)


def check_classic(y: YoungDiagram) -> CheckReport:
    """dim(Y, N) = (-1)^|Y| dim(Y^T, -N) for a fixed diagram."""
    sign = -1 if y.area % 2 else 1
    lhs = dim_polynomial(StableRep(y, EMPTY))
    rhs = dim_polynomial(StableRep(transpose(y), EMPTY)).substitute_neg() * sign
    return _compare("classic", y, lhs, rhs, sign)


def check_prop1(rep: StableRep) -> CheckReport:
    """dim(D(lam, tau), N) = (-1)^(|lam| + |tau|) dim(D(tau, lam), -N)."""
    sign = -1 if rep.area % 2 else 1
    lhs = dim_polynomial(rep)
    rhs = dim_polynomial(swap(rep)).substitute_neg() * sign
    return _compare("prop1", rep, lhs, rhs, sign)


def check_prop2(rep: StableRep) -> CheckReport:
    """C(D(lam, tau), N) = -C(D(lam^T, tau^T), -N)."""
    lhs = casimir_formula(rep)
    rhs = -casimir_formula(transpose_both(rep)).substitute_neg()
    return _compare("prop2", rep, lhs, rhs, -1)


def check_z2(rep: StableRep) -> CheckReport:
    """dim(D(lam, tau), N) = dim(D(tau^T, lam^T), N)."""
    return _compare("z2", rep, dim_polynomial(rep), dim_polynomial(z2_partner(rep)), 1)


def check_constant_term(rep: StableRep) -> CheckReport:
    """Vanishing constant term of the Casimir for self-transpose lam with empty
    tau, or for lam equal to the transpose of tau."""
    if not rep.tau and rep.lam == transpose(rep.lam):
        hypothesis = "lambda self-transpose, tau empty"
    elif rep.lam == transpose(rep.tau):
        hypothesis = "lambda = tau^T"
    else:
        return CheckReport("const-term", rep, None, detail="not applicable")
    constant = LaurentPoly.constant(casimir_formula(rep).coeff(0))
    report = _compare("const-term", rep, constant, LaurentPoly(), 1)
    detail = hypothesis if report.holds else f"{hypothesis}: constant term is {constant}"
    return CheckReport(report.identity, rep, report.holds, None, report.witness, detail)


IDENTITIES: dict[str, Callable[[StableRep], CheckReport]] = {
    "prop1": check_prop1,
    "prop2": check_prop2,
    "z2": check_z2,
    "classic": lambda rep: check_classic(rep.lam),
    "const-term": check_constant_term,
}


# -- corpora ---------------------------------------------------------------


def random_partition(rng: random.Random, n: int) -> YoungDiagram:
    """Uniform partition of ``n``, drawn part by part from exact counts."""
    rows = []
    remaining, cap = n, n
    while remaining:
        total = partition_count(remaining, cap)
        pick = rng.randrange(total)
        # number of partitions of `remaining` with largest part exactly `first`
        for first in range(min(remaining, cap), 0, -1):
            cnt = partition_count(remaining - first, first)
            if pick < cnt:
                break
            pick -= cnt
        rows.append(first)
        remaining -= first
        cap = first
    return YoungDiagram(tuple(rows))


def random_corpus(seed: int, max_area: int, count: int) -> list[StableRep]:
    if max_area < 0 or count < 0:
        raise ValueError("max_area and count must be nonnegative")
    rng = random.Random(seed)
    reps = []
    for _ in range(count):
        lam = random_partition(rng, rng.randint(0, max_area))
        tau = random_partition(rng, rng.randint(0, max_area))
        reps.append(StableRep(lam, tau))
    return reps


def exhaustive_corpus(max_area: int) -> list[StableRep]:
    """All pairs with both areas <= ``max_area``, in lexicographic order."""
    diagrams = partitions_upto(max_area)
    return [StableRep(lam, tau) for lam in diagrams for tau in diagrams]


# -- sweeps ----------------------------------------------------------------


def worker_count() -> int:
    cpus = os.cpu_count() or 1
    cap = os.environ.get("NEGN_THREADS")
    if cap:
        try:
            return max(1, min(cpus, int(cap)))
        except ValueError:
            pass
    return cpus


def _run_one(job: tuple[str, StableRep]) -> CheckReport:
    name, rep = job
    return IDENTITIES[name](rep)


def run_checks(
    reps: Sequence[StableRep],
    identities: Iterable[str],
    workers: int | None = None,
    parallel_threshold: int = 400,
) -> list[CheckReport]:
    """Run each identity on each rep; reports ordered by rep, then identity."""
    names = list(identities)
    for name in names:
        if name not in IDENTITIES:
            raise KeyError(f"unknown identity {name!r}")
    jobs = [(name, rep) for rep in reps for name in names]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) < parallel_threshold:
        return [_run_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
