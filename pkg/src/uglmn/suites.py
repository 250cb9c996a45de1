"""High-level verification suites over exhaustive grids.

Each runner returns machine-readable reports; the heavy agreement grids can
shard across processes when UGLMN_THREADS (or an explicit thread count) asks
for more than one worker.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .polyaction import (
    ONE_ZERO,
    ZERO_ONE,
    act_tensor,
    act_tensor_coproduct,
    column_monomials,
)
from .regular import SeriesBasis, compare_truncated
from .relcheck import factor_handle, full_suite, series_handle, tensor_handle
from .superindex import Profile, all_matrices, all_offdiag
from .words import e, f, k


def generator_letters(p: Profile) -> list:
    out = []
    for h in range(1, p.size):
        out.append(e(h))
        out.append(f(h))
    for i in range(1, p.size + 1):
        out.append(k(i, 1))
        out.append(k(i, -1))
    return out


def thread_count(threads=None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("UGLMN_THREADS")
    if env:
        return max(1, int(env))
    return 1


@dataclass
class GridReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "pass": self.all_pass,
            "checked": self.checked,
            "failures": self.failures[:10],
        }


def _tensor_agreement_shard(args) -> tuple:
    m, n, bound, shard, nshards = args
    p = Profile(m, n)
    letters = generator_letters(p)
    checked = 0
    failures = []
    mats = itertools.islice(all_matrices(p, bound), shard, None, nshards)
    for a in mats:
        cols = column_monomials(a)
        for letter in letters:
            if act_tensor(letter, a) != act_tensor_coproduct(letter, a, cols):
                failures.append({"generator": letter.text(), "A": a.to_json()})
        checked += 1
    return checked, failures


def tensor_agreement(p: Profile, bound: int, threads=None) -> GridReport:
    """Closed-form tensor action against the coproduct expansion, for every
    generator and every matrix with entries <= bound."""
    name = f"tensor-agreement {p.m}|{p.n} entries<={bound}"
    workers = thread_count(threads)
    report = GridReport(name)
    if workers == 1:
        checked, failures = _tensor_agreement_shard((p.m, p.n, bound, 0, 1))
        report.checked, report.failures = checked, failures
        return report
    from concurrent.futures import ProcessPoolExecutor

    jobs = [(p.m, p.n, bound, s, workers) for s in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for checked, failures in pool.map(_tensor_agreement_shard, jobs):
            report.checked += checked
            report.failures.extend(failures)
    return report


def _series_agreement_shard(args) -> tuple:
    m, n, bound, j_values, level, shard, nshards = args
    p = Profile(m, n)
    letters = generator_letters(p)
    checked = 0
    failures = []
    mats = itertools.islice(all_offdiag(p, bound), shard, None, nshards)
    for a in mats:
        for j in j_values:
            b = SeriesBasis(a, j)
            for letter in letters:
                if not compare_truncated(letter, b, level):
                    failures.append(
                        {"generator": letter.text(), "A": a.to_json(), "j": list(j)}
                    )
            checked += 1
    return checked, failures


def series_truncation_agreement(
    p: Profile, bound: int, j_values, level: int, threads=None
) -> GridReport:
    """Explicit label actions against the truncated tensor series, for every
    generator, every diagonal-free matrix with entries <= bound, and every
    twist vector in j_values."""
    name = f"series-truncation {p.m}|{p.n} entries<={bound} level={level}"
    workers = thread_count(threads)
    report = GridReport(name)
    j_values = [tuple(j) for j in j_values]
    if workers == 1:
        checked, failures = _series_agreement_shard(
            (p.m, p.n, bound, j_values, level, 0, 1)
        )
        report.checked, report.failures = checked, failures
        return report
    from concurrent.futures import ProcessPoolExecutor

    jobs = [(p.m, p.n, bound, j_values, level, s, workers) for s in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for checked, failures in pool.map(_series_agreement_shard, jobs):
            report.checked += checked
            report.failures.extend(failures)
    return report


def default_j_values(p: Profile, values=(-1, 0, 1)) -> list:
    return list(itertools.product(values, repeat=p.size))


def run_factor_suites(p: Profile, degree_bound: int, mutate: bool = False) -> list:
    return [
        full_suite(factor_handle(p, ZERO_ONE, degree_bound, mutate=mutate)),
        full_suite(factor_handle(p, ONE_ZERO, degree_bound, mutate=mutate)),
    ]


def run_tensor_suites(p: Profile, bound: int, threads=None) -> list:
    return [full_suite(tensor_handle(p, bound)), tensor_agreement(p, bound, threads)]


def run_series_suites(p: Profile, bound: int, j_values=None, level: int = 3, threads=None) -> list:
    if j_values is None:
        j_values = default_j_values(p)
    return [
        full_suite(series_handle(p, bound, j_values)),
        series_truncation_agreement(p, bound, j_values, level, threads),
    ]
