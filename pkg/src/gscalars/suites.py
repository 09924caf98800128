"""The named verification suites behind `gsc check`.

Each suite returns deterministic reports for a given seed; the CLI feeds
the seed from GSC_SEED so repeated runs are byte identical.
"""

from __future__ import annotations

import random

from .galois import roundtrip_filter
from .quotient import archimedean_counterexample, embed, leq
from .report import Report
from .sampling import random_convergent_rseq, random_principal_filter, sample_sets
from .series import banach_bounds_check, shift_invariance_impossibility
from .sets_filters import FilterDescriptor, check_filter_axioms

SUITE_NAMES = (
    "filter-axioms",
    "galois-roundtrip",
    "archimedean",
    "shift-impossibility",
    "banach-bounds",
)


def suite_filter_axioms(seed: int, filters: int = 20, samples: int = 200) -> list[Report]:
    rng = random.Random(seed)
    frechet = FilterDescriptor.frechet()
    reports = [check_filter_axioms(frechet, sample_sets(rng, samples, frechet))]
    for _ in range(filters):
        f = random_principal_filter(rng)
        reports.append(check_filter_axioms(f, sample_sets(rng, samples, f)))
    return reports


def suite_galois_roundtrip(seed: int, filters: int = 10, samples: int = 100) -> list[Report]:
    rng = random.Random(seed)
    frechet = FilterDescriptor.frechet()
    reports = [roundtrip_filter(frechet, sample_sets(rng, samples, frechet))]
    for _ in range(filters):
        f = random_principal_filter(rng)
        reports.append(roundtrip_filter(f, sample_sets(rng, samples, f)))
    return reports


def suite_archimedean(kmax: int = 1000) -> list[Report]:
    frechet = FilterDescriptor.frechet()
    report = archimedean_counterexample(kmax, frechet)
    control = Report("archimedean negative-control embed(7)")
    seven = embed(7, frechet)
    control.check(
        "embed(k) <= embed(7) holds for k in 1..7",
        all(leq(embed(k, frechet), seven) for k in range(1, 8)),
    )
    control.check(
        "embed(8) <= embed(7) fails (dominance breaks at k=8)",
        not leq(embed(8, frechet), seven),
    )
    return [report, control]


def suite_shift_impossibility() -> list[Report]:
    return [shift_invariance_impossibility()]


def suite_banach_bounds(seed: int, count: int = 100) -> list[Report]:
    rng = random.Random(seed)
    samples = [random_convergent_rseq(rng) for _ in range(count)]
    return [banach_bounds_check(samples)]


def run_suite(name: str, seed: int, kmax: int = 1000) -> list[Report]:
    if name == "filter-axioms":
        return suite_filter_axioms(seed)
    if name == "galois-roundtrip":
        return suite_galois_roundtrip(seed)
    if name == "archimedean":
        return suite_archimedean(kmax)
    if name == "shift-impossibility":
        return suite_shift_impossibility()
    if name == "banach-bounds":
        return suite_banach_bounds(seed)
    if name == "all":
        reports = []
        for suite in SUITE_NAMES:
            reports.extend(run_suite(suite, seed, kmax))
        return reports
    raise ValueError(f"unknown suite {name!r}")
