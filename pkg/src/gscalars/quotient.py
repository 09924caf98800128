"""The quotient algebra of representable sequences modulo a filter ideal.

A Scalar is a representative sequence pinned to a filter; two scalars are
equal when their difference's zero set belongs to the filter.  The algebra
embeds Q via constant sequences, carries the filter-lifted partial order,
is not Archimedean under the Frechet filter (the ramp class dominates every
embedded rational), and has zero divisors (disjoint-support indicators).
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import FilterMismatch, NotStandardizable, ZeroDivisor, ZeroScalar
from .exactnum import Rat, RatFun, eventual_sign, integer_roots_nonneg, limit_at_infinity
from .galois import IdealDescriptor, in_ideal
from .report import Report
from .seqrep import RSeq, indicator, make_constant, make_identity
from .sets_filters import FilterDescriptor, SetDescriptor


class Classification(enum.Enum):
    ZERO = "Zero"
    INFINITESIMAL = "Infinitesimal"
    APPRECIABLE = "Appreciable"
    INFINITE = "Infinite"
    MIXED = "Mixed"

    def __str__(self) -> str:
        return self.value


class Scalar:
    """An equivalence class of representable sequences modulo a filter ideal."""

    __slots__ = ("rep", "filter")

    def __init__(self, rep: RSeq, f: FilterDescriptor):
        object.__setattr__(self, "rep", rep)
        object.__setattr__(self, "filter", f)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    def _same_algebra(self, other: "Scalar") -> None:
        if self.filter != other.filter:
            raise FilterMismatch("scalars live in different quotient algebras")

    @property
    def ideal(self) -> IdealDescriptor:
        return IdealDescriptor(self.filter)

    # -- ring structure ------------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        self._same_algebra(other)
        return Scalar(self.rep + other.rep, self.filter)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._same_algebra(other)
        return Scalar(self.rep - other.rep, self.filter)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._same_algebra(other)
        return Scalar(self.rep * other.rep, self.filter)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.rep, self.filter)

    def scale(self, c) -> "Scalar":
        return Scalar(self.rep.scale(c), self.filter)

    def is_zero(self) -> bool:
        return self.filter.contains(self.rep.zero_set())

    def __repr__(self) -> str:
        return f"Scalar({self.rep!r} @ {self.filter.render()})"


def embed(c, f: FilterDescriptor) -> Scalar:
    """The diagonal embedding of a rational into the quotient algebra."""
    return Scalar(make_constant(c), f)


def omega(f: FilterDescriptor) -> Scalar:
    """The class of n -> n + 1: the canonical infinitely large scalar."""
    return Scalar(make_identity() + make_constant(1), f)


def scalar_eq(a: Scalar, b: Scalar) -> bool:
    a._same_algebra(b)
    return in_ideal(a.rep - b.rep, a.ideal)


def le_set(a: Scalar, b: Scalar) -> SetDescriptor:
    """Exactly { n | a(n) <= b(n) } for the canonical representatives."""
    a._same_algebra(b)
    d = a.rep - b.rep
    m = d.modulus
    residues = set()
    candidates = set(d.exceptions)
    for r, br in enumerate(d.branches):
        sign, n0 = eventual_sign(br)
        if sign <= 0:
            residues.add(r)
        candidates.update(range(r, n0, m))
    plus, minus = [], []
    for n in candidates:
        truth = d.eval(n) <= 0
        pure = n % m in residues
        if truth and not pure:
            plus.append(n)
        elif not truth and pure:
            minus.append(n)
    return SetDescriptor(m, residues, plus=plus, minus=minus)


def leq(a: Scalar, b: Scalar) -> bool:
    """The filter-lifted order: the agreement set of a <= b is in the filter."""
    return a.filter.contains(le_set(a, b))


def lt(a: Scalar, b: Scalar) -> bool:
    return leq(a, b) and not scalar_eq(a, b)


def try_invert(a: Scalar) -> Scalar:
    """Multiplicative inverse in the quotient algebra.

    Invertible exactly when the complement of the representative's zero set
    belongs to the filter; otherwise the indicator of the zero set is a
    nonzero annihilator and is raised as the ZeroDivisor witness.
    """
    z = a.rep.zero_set()
    if a.filter.contains(z):
        raise ZeroScalar("inverse of the zero class")
    if not a.filter.contains(z.complement()):
        raise ZeroDivisor(Scalar(indicator(z), a.filter))

    m = a.rep.modulus
    branches = []
    points: set[int] = set(a.rep.exceptions)
    for r, br in enumerate(a.rep.branches):
        if br.is_zero():
            branches.append(RatFun.constant(0))
            continue
        branches.append(br.reciprocal())
        points.update(n for n in integer_roots_nonneg(br.num) if n % m == r)
    overrides = {}
    for n in points:
        v = a.rep.eval(n)
        overrides[n] = 1 / v if v != 0 else Fraction(0)
    return Scalar(RSeq(m, branches, overrides), a.filter)


def _relevant_branches(a: Scalar) -> list[int]:
    """Branches whose residue class matters under the scalar's filter.

    Frechet: every class.  Principal(S): classes meeting S infinitely often.
    """
    m = a.rep.modulus
    if a.filter.kind == FilterDescriptor.FRECHET:
        return list(range(m))
    base = a.filter.base
    out = []
    for r in range(m):
        meet = base.intersect(SetDescriptor.residue_class(r, m))
        if not meet.is_finite():
            out.append(r)
    return out


def classify(a: Scalar) -> Classification:
    """Zero / Infinitesimal / Appreciable / Infinite / Mixed."""
    if a.is_zero():
        return Classification.ZERO
    relevant = _relevant_branches(a)
    if not relevant:
        # Principal filter over a finite base: the class is pinned by
        # finitely many rational values, hence finite and not infinitesimal.
        return Classification.APPRECIABLE
    limits = [limit_at_infinity(a.rep.branches[r]) for r in relevant]
    if all(l.is_finite for l in limits):
        if all(l.value == 0 for l in limits):
            return Classification.INFINITESIMAL
        return Classification.APPRECIABLE
    if all(not l.is_finite for l in limits):
        return Classification.INFINITE
    return Classification.MIXED


def standard_part(a: Scalar) -> Rat:
    """The unique rational c with a - embed(c) infinitesimal or zero."""
    relevant = _relevant_branches(a)
    if relevant:
        limits = [limit_at_infinity(a.rep.branches[r]) for r in relevant]
        if any(not l.is_finite for l in limits):
            raise NotStandardizable("an infinite branch blocks the standard part")
        values = {l.value for l in limits}
        if len(values) != 1:
            raise NotStandardizable("branch limits disagree")
        return next(iter(values))
    # Principal filter over a finite base: standard iff constant on the base.
    values = {a.rep.eval(n) for n in a.filter.base.elements()}
    if len(values) != 1:
        raise NotStandardizable("values on the base set disagree")
    return next(iter(values))


def archimedean_counterexample(kmax: int, f: FilterDescriptor) -> Report:
    """Certify that no multiple of 1 dominates the ramp class up to kmax.

    For every k in 1..kmax: embed(k) <= omega and embed(k) != omega, i.e.
    the ordered algebra fails the Archimedean condition with witness omega.
    """
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    report = Report(f"archimedean {f.render()} kmax={kmax}")
    w = omega(f)
    bad_le = [k for k in range(1, kmax + 1) if not leq(embed(k, f), w)]
    bad_ne = [k for k in range(1, kmax + 1) if scalar_eq(embed(k, f), w)]
    report.check(
        f"every k in 1..{kmax} satisfies embed(k) <= omega",
        not bad_le,
        witness=", ".join(map(str, bad_le[:5])),
    )
    report.check(
        f"no k in 1..{kmax} satisfies embed(k) = omega",
        not bad_ne,
        witness=", ".join(map(str, bad_ne[:5])),
    )
    return report
