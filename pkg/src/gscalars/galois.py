"""The two constructions pairing ideals of the sequence algebra with
filters on the index set, plus their roundtrip and closure checks.

In the representable class every ideal in scope is induced by a filter
(membership: the zero set belongs to the filter), so ideals are carried by
their filter and no independent ideal representation exists.
"""

from __future__ import annotations

from .report import Report
from .seqrep import RSeq, indicator, make_constant
from .sets_filters import FilterDescriptor, SetDescriptor


class IdealDescriptor:
    """The ideal { x | zero_set(x) in F } for a decidable filter F."""

    __slots__ = ("filter",)

    def __init__(self, f: FilterDescriptor):
        object.__setattr__(self, "filter", f)

    def __setattr__(self, *_):
        raise AttributeError("IdealDescriptor is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, IdealDescriptor) and self.filter == other.filter

    def __hash__(self) -> int:
        return hash(("ideal", self.filter))

    def __repr__(self) -> str:
        return f"IdealDescriptor<{self.filter.render()}>"


def in_ideal(x: RSeq, ideal: IdealDescriptor) -> bool:
    return ideal.filter.contains(x.zero_set())


def realize_zero_set(j: SetDescriptor) -> RSeq:
    """A sequence whose zero set is exactly j (the indicator of its complement)."""
    return indicator(j.complement())


def roundtrip_filter(f: FilterDescriptor, samples: list[SetDescriptor]) -> Report:
    """Membership survives the filter -> ideal -> filter roundtrip on samples."""
    report = Report(f"galois-roundtrip {f.render()}")
    ideal = IdealDescriptor(f)
    bad = []
    for j in samples:
        via_ideal = in_ideal(realize_zero_set(j), ideal)
        direct = f.contains(j)
        if via_ideal != direct:
            bad.append(j)
    report.check(
        f"roundtrip-membership ({len(samples)} sets)",
        not bad,
        witness="; ".join(j.render() for j in bad[:3]),
    )
    return report


def ideal_closure_check(ideal: IdealDescriptor, samples: list[RSeq]) -> Report:
    """Ideal axioms exercised on sample sequences."""
    report = Report(f"ideal-closure {ideal.filter.render()}")
    members = [x for x in samples if in_ideal(x, ideal)]

    bad_sum = [
        (x, y)
        for i, x in enumerate(members)
        for y in members[i:]
        if not in_ideal(x + y, ideal)
    ]
    report.check(f"addition-closure ({len(members)} members)", not bad_sum)

    bad_absorb = [
        (x, y) for x in members for y in samples if not in_ideal(x * y, ideal)
    ]
    report.check("product-absorption", not bad_absorb)

    bad_scale = []
    for x in samples:
        for c in (2, -1, 7):
            if in_ideal(x, ideal) != in_ideal(x.scale(c), ideal):
                bad_scale.append((x, c))
    report.check("nonzero-scaling-invariance", not bad_scale)

    report.check("properness (1 not a member)", not in_ideal(make_constant(1), ideal))
    return report
