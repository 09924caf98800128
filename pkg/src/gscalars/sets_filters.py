"""Decidable subsets of N and decidable filters on N.

A SetDescriptor is an eventually periodic set (a union of residue classes)
with finitely many points added or removed.  This class of sets is closed
under boolean algebra, is exactly the class of zero sets of representable
sequences, and makes every predicate here total and exact.

Filters are either Frechet (all cofinite sets) or principal (all supersets
of a fixed nonempty set).  Both give a decidable membership test.
"""

from __future__ import annotations

from math import gcd

from .errors import InvalidFilter, SelfCheckFailed
from .report import Report


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class SetDescriptor:
    """Eventually periodic subset of N with finite modifications.

    n is a member iff n is in `plus`, or n mod modulus is in `residues`
    and n is not in `minus`.  Canonical form: minimal modulus, plus
    disjoint from the residue classes, minus inside them.
    """

    __slots__ = ("modulus", "residues", "plus", "minus")

    def __init__(self, modulus: int, residues=(), plus=(), minus=()):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        residues = frozenset(r % modulus for r in residues)
        plus = frozenset(plus)
        minus = frozenset(minus)
        for n in plus | minus:
            if n < 0:
                raise ValueError("finite modifications must be naturals")

        def raw_member(n: int) -> bool:
            if n in plus:
                return True
            return n % modulus in residues and n not in minus

        # Canonical finite parts relative to the residue classes.
        touched = plus | minus
        canon_plus = frozenset(n for n in touched if raw_member(n) and n % modulus not in residues)
        canon_minus = frozenset(n for n in touched if not raw_member(n) and n % modulus in residues)

        # Minimal modulus: smallest divisor whose residue pattern matches.
        final_mod = modulus
        final_res = residues
        for d in range(1, modulus + 1):
            if modulus % d:
                continue
            folded = frozenset(r % d for r in residues)
            if all((r % d in folded) == (r in residues) for r in range(modulus)):
                final_mod = d
                final_res = folded
                break

        object.__setattr__(self, "modulus", final_mod)
        object.__setattr__(self, "residues", final_res)
        object.__setattr__(self, "plus", canon_plus)
        object.__setattr__(self, "minus", canon_minus)

    def __setattr__(self, *_):
        raise AttributeError("SetDescriptor is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def empty(cls) -> "SetDescriptor":
        return cls(1)

    @classmethod
    def naturals(cls) -> "SetDescriptor":
        return cls(1, residues=(0,))

    @classmethod
    def finite(cls, elements) -> "SetDescriptor":
        return cls(1, plus=elements)

    @classmethod
    def cofinite(cls, removed) -> "SetDescriptor":
        return cls(1, residues=(0,), minus=removed)

    @classmethod
    def residue_class(cls, r: int, m: int) -> "SetDescriptor":
        return cls(m, residues=(r,))

    @classmethod
    def evens(cls) -> "SetDescriptor":
        return cls(2, residues=(0,))

    @classmethod
    def odds(cls) -> "SetDescriptor":
        return cls(2, residues=(1,))

    # -- predicates ------------------------------------------------------

    def member(self, n: int) -> bool:
        if n in self.plus:
            return True
        return n % self.modulus in self.residues and n not in self.minus

    __contains__ = member

    def is_empty(self) -> bool:
        return not self.residues and not self.plus

    def is_finite(self) -> bool:
        return not self.residues

    def is_cofinite(self) -> bool:
        return len(self.residues) == self.modulus

    def is_naturals(self) -> bool:
        return self.is_cofinite() and not self.minus

    def elements(self) -> list[int]:
        """All members, defined only for finite descriptors."""
        if not self.is_finite():
            raise ValueError("infinite set has no element list")
        return sorted(self.plus)

    def sample(self, count: int) -> list[int]:
        """The first `count` members in increasing order."""
        out = []
        n = 0
        # Bail out once past the point where only residues matter.
        horizon = max([self.modulus, *self.plus, *self.minus], default=1) + 1
        while len(out) < count:
            if self.member(n):
                out.append(n)
            n += 1
            if n > horizon and not self.residues:
                break
        return out

    def _finite_horizon(self) -> int:
        return max([*self.plus, *self.minus], default=0)

    # -- boolean algebra --------------------------------------------------

    def complement(self) -> "SetDescriptor":
        comp_res = frozenset(range(self.modulus)) - self.residues
        out = SetDescriptor(self.modulus, comp_res, plus=self.minus, minus=self.plus)
        _window_check(out, lambda n: not self.member(n), (self,))
        return out

    def union(self, other: "SetDescriptor") -> "SetDescriptor":
        out = self._combine(other, lambda a, b: a or b)
        _window_check(out, lambda n: self.member(n) or other.member(n), (self, other))
        return out

    def intersect(self, other: "SetDescriptor") -> "SetDescriptor":
        out = self._combine(other, lambda a, b: a and b)
        _window_check(out, lambda n: self.member(n) and other.member(n), (self, other))
        return out

    def _combine(self, other: "SetDescriptor", op) -> "SetDescriptor":
        m = _lcm(self.modulus, other.modulus)
        residues = frozenset(
            r for r in range(m) if op(r % self.modulus in self.residues, r % other.modulus in other.residues)
        )
        plus, minus = [], []
        for n in self.plus | self.minus | other.plus | other.minus:
            truth = op(self.member(n), other.member(n))
            pure = n % m in residues
            if truth and not pure:
                plus.append(n)
            elif not truth and pure:
                minus.append(n)
        return SetDescriptor(m, residues, plus=plus, minus=minus)

    def superset_of(self, other: "SetDescriptor") -> bool:
        # Residue classes of `other` must land inside ours (a missing class
        # leaves infinitely many points uncovered); finite parts checked
        # pointwise.  Equivalent to other.intersect(self.complement()).is_empty().
        m = _lcm(self.modulus, other.modulus)
        for r in range(m):
            if r % other.modulus in other.residues and r % self.modulus not in self.residues:
                return False
        for n in self.plus | self.minus | other.plus | other.minus:
            if other.member(n) and not self.member(n):
                return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetDescriptor)
            and self.modulus == other.modulus
            and self.residues == other.residues
            and self.plus == other.plus
            and self.minus == other.minus
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.residues, self.plus, self.minus))

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Canonical text in the CLI set grammar."""
        if self.is_empty():
            return "{}"
        if self.is_finite():
            return "{" + ",".join(str(n) for n in sorted(self.plus)) + "}"
        base = "|".join(f"{r} mod {self.modulus}" for r in sorted(self.residues))
        if len(self.residues) > 1 and (self.minus or self.plus):
            base = f"({base})"
        if self.minus:
            removed = "{" + ",".join(str(n) for n in sorted(self.minus)) + "}"
            base = f"{base}&~{removed}"
        if self.plus:
            added = "{" + ",".join(str(n) for n in sorted(self.plus)) + "}"
            base = f"{base}|{added}"
        return base

    def __repr__(self) -> str:
        return f"SetDescriptor<{self.render()}>"


def _window_check(result: SetDescriptor, predicate, operands) -> None:
    """Pointwise self-test of descriptor algebra on a finite window."""
    lcm = 1
    horizon = 0
    for s in (*operands, result):
        lcm = _lcm(lcm, s.modulus)
        horizon = max(horizon, s._finite_horizon())
    for n in range(4 * lcm + horizon + 1):
        if result.member(n) != predicate(n):
            raise SelfCheckFailed(f"descriptor algebra disagrees with pointwise semantics at n={n}")


# -- filters ----------------------------------------------------------------


class FilterDescriptor:
    """A decidable filter on N: Frechet (cofinite sets) or principal."""

    __slots__ = ("kind", "base")

    FRECHET = "frechet"
    PRINCIPAL = "principal"

    def __init__(self, kind: str, base: SetDescriptor | None = None):
        if kind == self.FRECHET:
            if base is not None:
                raise ValueError("frechet filter takes no base set")
        elif kind == self.PRINCIPAL:
            if base is None or base.is_empty():
                raise InvalidFilter("a principal filter needs a nonempty base set")
        else:
            raise ValueError(f"unknown filter kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "base", base)

    def __setattr__(self, *_):
        raise AttributeError("FilterDescriptor is immutable")

    @classmethod
    def frechet(cls) -> "FilterDescriptor":
        return cls(cls.FRECHET)

    @classmethod
    def principal(cls, base: SetDescriptor) -> "FilterDescriptor":
        return cls(cls.PRINCIPAL, base)

    def contains(self, j: SetDescriptor) -> bool:
        if self.kind == self.FRECHET:
            return j.is_cofinite()
        return j.superset_of(self.base)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FilterDescriptor)
            and self.kind == other.kind
            and self.base == other.base
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.base))

    def render(self) -> str:
        if self.kind == self.FRECHET:
            return "frechet"
        return f"principal:{self.base.render()}"

    def __repr__(self) -> str:
        return f"FilterDescriptor<{self.render()}>"


def filter_contains(f: FilterDescriptor, j: SetDescriptor) -> bool:
    return f.contains(j)


def check_filter_axioms(f: FilterDescriptor, samples: list[SetDescriptor]) -> Report:
    """Executable filter axioms, checked over a sample family of sets."""
    report = Report(f"filter-axioms {f.render()}")

    report.check("empty-set-excluded", not f.contains(SetDescriptor.empty()))
    report.check("family-nonempty", f.contains(SetDescriptor.naturals()))

    members = [s for s in samples if f.contains(s)]
    bad_meets = []
    for i, j in enumerate(members):
        for k in members[i:]:
            if not f.contains(j.intersect(k)):
                bad_meets.append((j, k))
    report.check(
        f"intersection-closure ({len(members)} members, {len(members) * (len(members) + 1) // 2} pairs)",
        not bad_meets,
        witness="; ".join(f"{j.render()} & {k.render()}" for j, k in bad_meets[:3]),
    )

    bad_ups = []
    ups = 0
    for j in members:
        for k in samples:
            if k.superset_of(j):
                ups += 1
                if not f.contains(k):
                    bad_ups.append((j, k))
    report.check(
        f"superset-closure ({ups} comparable pairs)",
        not bad_ups,
        witness="; ".join(f"{k.render()} >= {j.render()}" for j, k in bad_ups[:3]),
    )
    return report
