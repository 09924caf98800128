"""Exact rational, polynomial, and rational-function arithmetic.

Everything here is arbitrary precision: rationals are `fractions.Fraction`
(re-exported as `Rat`), polynomials keep Fraction coefficients in ascending
order, and rational functions are kept in a unique canonical form (coprime
numerator/denominator, monic denominator) so structural equality is
meaningful.  The asymptotic helpers (limit at infinity, eventual sign,
nonnegative integer roots) are the analysis primitives every other module
leans on.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ZeroDenominator, ZeroPolynomial

Rat = Fraction


def rat(numerator, denominator=1) -> Rat:
    """Exact rational from integers (or anything Fraction accepts)."""
    return Fraction(numerator, denominator)


def format_rat(q: Rat) -> str:
    """Render `a/b`, omitting `/b` when the denominator is 1."""
    return str(q)


def _sign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


class Poly:
    """Polynomial over Q; coefficients ascending by degree, no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def identity(cls) -> "Poly":
        """The polynomial n."""
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Rat:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Rat:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(tuple(a * c for a in self.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q: list[Fraction] = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        d = other.degree
        lead = other.lead
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
        return Poly(q), Poly(rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def shift_arg(self, k: int) -> "Poly":
        """The polynomial p(n + k)."""
        if k == 0 or self.is_zero():
            return self
        step = Poly((Fraction(k), Fraction(1)))  # n + k
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * step + Poly.constant(c)
        return acc


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q[n]; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, (a % b).monic()  # re-monic keeps coefficient growth in check
    return a.monic()


def poly_interpolate(points: list[tuple[int, Rat]]) -> Poly:
    """The unique polynomial of degree < len(points) through the points.

    Newton's divided differences, exact over Q.
    """
    xs = [Fraction(x) for x, _ in points]
    coeffs = [Fraction(y) for _, y in points]
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    # Horner over the Newton basis.
    poly = Poly.constant(coeffs[-1])
    for i in range(len(points) - 2, -1, -1):
        poly = poly * Poly((-xs[i], Fraction(1))) + Poly.constant(coeffs[i])
    return poly


class ExtendedRat:
    """A rational value extended with out-of-field +/- infinity markers."""

    __slots__ = ("sign", "value")

    def __init__(self, sign: int, value=None):
        if sign == 0:
            object.__setattr__(self, "value", Fraction(value))
        else:
            if sign not in (1, -1) or value is not None:
                raise ValueError("infinite ExtendedRat carries no payload")
            object.__setattr__(self, "value", None)
        object.__setattr__(self, "sign", sign)

    def __setattr__(self, *_):
        raise AttributeError("ExtendedRat is immutable")

    @classmethod
    def finite(cls, q) -> "ExtendedRat":
        return cls(0, q)

    @property
    def is_finite(self) -> bool:
        return self.sign == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtendedRat)
            and self.sign == other.sign
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.sign, self.value))

    def __repr__(self) -> str:
        if self.sign > 0:
            return "+inf"
        if self.sign < 0:
            return "-inf"
        return format_rat(self.value)


PLUS_INFINITY = ExtendedRat(1)
MINUS_INFINITY = ExtendedRat(-1)


class RatFun:
    """Rational function num/den in canonical form.

    Canonical means gcd(num, den) = 1 and den monic; the zero function is
    0/1.  Structural equality of canonical values is semantic equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if den is None:
            den = Poly.constant(1)
        elif not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly.constant(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.lead
            if lead != 1:
                num, den = num.scale(1 / lead), den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def constant(cls, c) -> "RatFun":
        return cls(Poly.constant(c))

    @classmethod
    def identity(cls) -> "RatFun":
        return cls(Poly.identity())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    def __call__(self, n) -> Rat:
        return self.num(n) / self.den(n)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFun) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __add__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.num, self.den * other.den)

    def scale(self, c) -> "RatFun":
        return RatFun(self.num.scale(c), self.den)

    def reciprocal(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDenominator("reciprocal of the zero function")
        return RatFun(self.den, self.num)

    def shift_arg(self, k: int) -> "RatFun":
        return RatFun(self.num.shift_arg(k), self.den.shift_arg(k))

    def __repr__(self) -> str:
        return f"RatFun({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"


def root_bound(p: Poly) -> int:
    """Integer strictly greater than every real root of p (Cauchy bound)."""
    if p.degree <= 0:
        return 0
    lead = abs(p.lead)
    biggest = max(abs(c) for c in p.coeffs[:-1])
    bound = 1 + biggest / lead
    return int(bound) + 1


def _squarefree(p: Poly) -> Poly:
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return p // g


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(chain: list[Poly], x) -> int:
    count = 0
    prev = 0
    for q in chain:
        s = _sign(q(x))
        if s != 0:
            if prev != 0 and s != prev:
                count += 1
            prev = s
    return count


def integer_roots_nonneg(p: Poly) -> frozenset[int]:
    """Exactly the natural numbers n with p(n) = 0.

    Sturm-chain bisection over [0, Cauchy bound] isolates real roots in
    unit intervals; each candidate integer is then verified directly.
    """
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    if p.degree == 0:
        return frozenset()
    sf = _squarefree(p)
    chain = _sturm_chain(sf)
    hi = root_bound(sf)
    roots: set[int] = set()
    # Root count in (lo, hi] is variations(lo) - variations(hi).
    stack = [(-1, hi, _variations(chain, -1), _variations(chain, hi))]
    while stack:
        lo, hi_, vlo, vhi = stack.pop()
        if vlo - vhi <= 0:
            continue
        if hi_ - lo == 1:
            if hi_ >= 0 and p(hi_) == 0:
                roots.add(hi_)
            continue
        mid = (lo + hi_) // 2
        vmid = _variations(chain, mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi_, vmid, vhi))
    return frozenset(roots)


def limit_at_infinity(f: RatFun) -> ExtendedRat:
    """Limit of f(n) as n grows without bound."""
    if f.is_zero():
        return ExtendedRat.finite(0)
    dn, dd = f.num.degree, f.den.degree
    if dn < dd:
        return ExtendedRat.finite(0)
    ratio = f.num.lead / f.den.lead
    if dn == dd:
        return ExtendedRat.finite(ratio)
    return PLUS_INFINITY if ratio > 0 else MINUS_INFINITY


def eventual_sign(f: RatFun) -> tuple[int, int]:
    """(sign, N0) with sign(f(n)) = sign for every integer n >= N0.

    N0 is a sound Cauchy-bound threshold past every root of the numerator
    and denominator; it is not required to be minimal.
    """
    if f.is_zero():
        return 0, 0
    s = _sign(f.num.lead) * _sign(f.den.lead)
    return s, max(root_bound(f.num), root_bound(f.den))
