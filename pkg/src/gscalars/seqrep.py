"""The representable sequence algebra: maps N -> Q built from residue-class
rational-function branches plus finitely many overrides.

This class is closed under the pointwise ring operations and the right
shift, every zero set is an eventually periodic set, and membership in the
decidable ideals is therefore computable.  Values are canonical on
construction (minimal modulus, no redundant overrides), so structural
equality means pointwise equality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import MissingException, NotConvergent, UnboundedSequence
from .exactnum import (
    Rat,
    RatFun,
    eventual_sign,
    integer_roots_nonneg,
    limit_at_infinity,
)
from .sets_filters import SetDescriptor


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class BSeqVerdict:
    """Convergent(limit) / BoundedDivergent / Unbounded, mutually exclusive."""

    __slots__ = ("kind", "limit")

    CONVERGENT = "Convergent"
    BOUNDED_DIVERGENT = "BoundedDivergent"
    UNBOUNDED = "Unbounded"

    def __init__(self, kind: str, limit: Rat | None = None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "limit", limit)

    def __setattr__(self, *_):
        raise AttributeError("BSeqVerdict is immutable")

    @classmethod
    def convergent(cls, limit) -> "BSeqVerdict":
        return cls(cls.CONVERGENT, Fraction(limit))

    @classmethod
    def bounded_divergent(cls) -> "BSeqVerdict":
        return cls(cls.BOUNDED_DIVERGENT)

    @classmethod
    def unbounded(cls) -> "BSeqVerdict":
        return cls(cls.UNBOUNDED)

    def __eq__(self, other) -> bool:
        return isinstance(other, BSeqVerdict) and (self.kind, self.limit) == (other.kind, other.limit)

    def __hash__(self) -> int:
        return hash((self.kind, self.limit))

    def __repr__(self) -> str:
        if self.kind == self.CONVERGENT:
            return f"Convergent({self.limit})"
        return self.kind


class RSeq:
    """A representable sequence N -> Q.

    eval(n) is the override value when n is an exception key, otherwise
    branches[n mod modulus](n).  Construction canonicalizes and insists
    every branch-denominator root inside its class is declared as an
    exception, so eval is total.
    """

    __slots__ = ("modulus", "branches", "exceptions", "_hash")

    def __init__(self, modulus: int, branches, exceptions=None):
        branches = tuple(b if isinstance(b, RatFun) else RatFun(b) for b in branches)
        if modulus < 1 or len(branches) != modulus:
            raise ValueError("need one branch per residue class")
        exceptions = {int(n): Fraction(v) for n, v in (exceptions or {}).items()}
        for n in exceptions:
            if n < 0:
                raise ValueError("exception indices must be naturals")

        # Fold to the smallest divisor modulus with identical branch pattern.
        for d in range(1, modulus + 1):
            if modulus % d:
                continue
            if all(branches[r] == branches[r % d] for r in range(modulus)):
                modulus = d
                branches = branches[:d]
                break

        # Totality: every denominator root in its class must be overridden.
        for r, br in enumerate(branches):
            if br.den.degree > 0:
                for n in integer_roots_nonneg(br.den):
                    if n % modulus == r and n not in exceptions:
                        raise MissingException(
                            f"branch denominator vanishes at n={n}; declare an exception"
                        )

        # Drop overrides that agree with their branch.
        pruned = {}
        for n, v in exceptions.items():
            br = branches[n % modulus]
            if br.den(n) != 0 and br(n) == v:
                continue
            pruned[n] = v

        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "branches", branches)
        object.__setattr__(self, "exceptions", pruned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("RSeq is immutable")

    # -- evaluation --------------------------------------------------------

    def eval(self, n: int) -> Rat:
        v = self.exceptions.get(n)
        if v is not None:
            return v
        return self.branches[n % self.modulus](n)

    def prefix(self, count: int) -> list[Rat]:
        return [self.eval(n) for n in range(count)]

    # -- ring operations -----------------------------------------------------

    def _merge(self, other: "RSeq", fun_op, val_op) -> "RSeq":
        m = _lcm(self.modulus, other.modulus)
        branches = [
            fun_op(self.branches[r % self.modulus], other.branches[r % other.modulus])
            for r in range(m)
        ]
        keys = set(self.exceptions) | set(other.exceptions)
        exceptions = {n: val_op(self.eval(n), other.eval(n)) for n in keys}
        return RSeq(m, branches, exceptions)

    def __add__(self, other: "RSeq") -> "RSeq":
        return self._merge(other, lambda f, g: f + g, lambda a, b: a + b)

    def __sub__(self, other: "RSeq") -> "RSeq":
        return self._merge(other, lambda f, g: f - g, lambda a, b: a - b)

    def __mul__(self, other: "RSeq") -> "RSeq":
        return self._merge(other, lambda f, g: f * g, lambda a, b: a * b)

    def __neg__(self) -> "RSeq":
        return RSeq(
            self.modulus,
            [-b for b in self.branches],
            {n: -v for n, v in self.exceptions.items()},
        )

    def scale(self, c) -> "RSeq":
        c = Fraction(c)
        return RSeq(
            self.modulus,
            [b.scale(c) for b in self.branches],
            {n: v * c for n, v in self.exceptions.items()},
        )

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.branches) and not self.exceptions

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RSeq)
            and self.modulus == other.modulus
            and self.branches == other.branches
            and self.exceptions == other.exceptions
        )

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self,
                "_hash",
                hash((self.modulus, self.branches, tuple(sorted(self.exceptions.items())))),
            )
        return self._hash

    # -- structure ----------------------------------------------------------

    def shift(self) -> "RSeq":
        """The sequence n -> self(n + 1)."""
        m = self.modulus
        branches = [self.branches[(r + 1) % m].shift_arg(1) for r in range(m)]
        exceptions = {n - 1: v for n, v in self.exceptions.items() if n >= 1}
        return RSeq(m, branches, exceptions)

    def zero_set(self) -> SetDescriptor:
        """Exactly { n | self(n) = 0 } as a set descriptor."""
        m = self.modulus
        residues = {r for r, br in enumerate(self.branches) if br.is_zero()}
        candidates = set(self.exceptions)
        for r, br in enumerate(self.branches):
            if not br.is_zero():
                for n in integer_roots_nonneg(br.num):
                    if n % m == r:
                        candidates.add(n)
        plus, minus = [], []
        for n in candidates:
            truth = self.eval(n) == 0
            pure = n % m in residues
            if truth and not pure:
                plus.append(n)
            elif not truth and pure:
                minus.append(n)
        return SetDescriptor(m, residues, plus=plus, minus=minus)

    # -- analysis -------------------------------------------------------------

    def branch_limits(self):
        return [limit_at_infinity(br) for br in self.branches]

    def classify_bounded(self) -> BSeqVerdict:
        limits = self.branch_limits()
        if any(not l.is_finite for l in limits):
            return BSeqVerdict.unbounded()
        values = {l.value for l in limits}
        if len(values) == 1:
            return BSeqVerdict.convergent(next(iter(values)))
        return BSeqVerdict.bounded_divergent()

    def limit(self) -> Rat:
        verdict = self.classify_bounded()
        if verdict.kind != BSeqVerdict.CONVERGENT:
            raise NotConvergent(f"sequence is {verdict.kind}")
        return verdict.limit

    def _bounds(self) -> tuple[Rat, Rat]:
        verdict = self.classify_bounded()
        if verdict.kind == BSeqVerdict.UNBOUNDED:
            raise UnboundedSequence("sup/inf of an unbounded sequence")
        m = self.modulus
        threshold = max(self.exceptions, default=0)
        for br in self.branches:
            diff = br.shift_arg(m) - br
            _, n0 = eventual_sign(diff)
            threshold = max(threshold, n0)
        candidates = [self.eval(n) for n in range(threshold + m + 1)]
        candidates.extend(l.value for l in self.branch_limits())
        return min(candidates), max(candidates)

    def sup_val(self) -> Rat:
        return self._bounds()[1]

    def inf_val(self) -> Rat:
        return self._bounds()[0]

    def __repr__(self) -> str:
        parts = ", ".join(repr(b) for b in self.branches)
        exc = f", exceptions={self.exceptions}" if self.exceptions else ""
        return f"RSeq(mod {self.modulus}: {parts}{exc})"


# -- constructors ---------------------------------------------------------------


def make_constant(c) -> RSeq:
    """The diagonal sequence (c, c, c, ...)."""
    return RSeq(1, [RatFun.constant(c)])


def make_identity() -> RSeq:
    """The ramp sequence n -> n."""
    return RSeq(1, [RatFun.identity()])


def indicator(s: SetDescriptor) -> RSeq:
    """The 0/1 characteristic sequence of a set descriptor."""
    one, zero = RatFun.constant(1), RatFun.constant(0)
    branches = [one if r in s.residues else zero for r in range(s.modulus)]
    exceptions = {n: Fraction(1) for n in s.plus}
    exceptions.update({n: Fraction(0) for n in s.minus})
    return RSeq(s.modulus, branches, exceptions)
