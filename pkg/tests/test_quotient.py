import random
from fractions import Fraction

import pytest

from gscalars.errors import FilterMismatch, NotStandardizable, ZeroDivisor, ZeroScalar
from gscalars.exactnum import Poly, RatFun, rat
from gscalars.quotient import (
    Classification,
    Scalar,
    archimedean_counterexample,
    classify,
    embed,
    le_set,
    leq,
    omega,
    scalar_eq,
    standard_part,
    try_invert,
)
from gscalars.sampling import (
    random_appreciable_rseq,
    random_ideal_member,
    random_infinite_rseq,
    random_infinitesimal_rseq,
    random_principal_filter,
    random_rat,
    random_rseq,
)
from gscalars.seqrep import RSeq, indicator, make_constant, make_identity
from gscalars.sets_filters import FilterDescriptor, SetDescriptor

FRECHET = FilterDescriptor.frechet()


def poly(*coeffs):
    return Poly([Fraction(c) for c in coeffs])


def harmonic_tail(overrides=None):
    return RSeq(1, [RatFun(poly(1), poly(1, 1))], overrides or {})


class TestScalarEq:
    def test_finite_disagreement_is_equal_under_frechet(self):
        x = Scalar(harmonic_tail({0: rat(7)}), FRECHET)
        y = Scalar(harmonic_tail(), FRECHET)
        assert scalar_eq(x, y)

    def test_same_pair_differs_under_principal_evens(self):
        f = FilterDescriptor.principal(SetDescriptor.evens())
        x = Scalar(harmonic_tail({0: rat(7)}), f)
        y = Scalar(harmonic_tail(), f)
        assert not scalar_eq(x, y)

    def test_evens_indicator_is_not_zero(self):
        x = Scalar(indicator(SetDescriptor.evens()), FRECHET)
        assert not scalar_eq(x, embed(0, FRECHET))

    def test_filter_mismatch(self):
        with pytest.raises(FilterMismatch):
            scalar_eq(embed(1, FRECHET), embed(1, FilterDescriptor.principal(SetDescriptor.odds())))


class TestEmbed:
    def test_zero_and_distinctness(self):
        assert scalar_eq(embed(0, FRECHET), Scalar(make_constant(0), FRECHET))
        filters = [FRECHET, FilterDescriptor.principal(SetDescriptor.finite({3}))]
        for f in filters:
            assert not scalar_eq(embed(1, f), embed(0, f))

    def test_homomorphism(self):
        rng = random.Random(97)
        for _ in range(40):
            a, b = random_rat(rng), random_rat(rng)
            assert scalar_eq(embed(a, FRECHET) + embed(b, FRECHET), embed(a + b, FRECHET))
            assert scalar_eq(embed(a, FRECHET) * embed(b, FRECHET), embed(a * b, FRECHET))

    def test_injectivity(self):
        rng = random.Random(101)
        for _ in range(40):
            a, b = random_rat(rng), random_rat(rng)
            assert scalar_eq(embed(a, FRECHET), embed(b, FRECHET)) == (a == b)
        for _ in range(10):
            f = random_principal_filter(rng)
            a, b = random_rat(rng), random_rat(rng)
            assert scalar_eq(embed(a, f), embed(b, f)) == (a == b)


class TestInvert:
    def test_reciprocal_of_ramp(self):
        a = Scalar(make_identity() + make_constant(1), FRECHET)
        inv = try_invert(a)
        assert inv.rep == harmonic_tail()
        assert scalar_eq(a * inv, embed(1, FRECHET))

    def test_zero_divisor_with_witness(self):
        a = Scalar(indicator(SetDescriptor.evens()), FRECHET)
        with pytest.raises(ZeroDivisor) as exc:
            try_invert(a)
        witness = exc.value.witness
        assert witness.rep == indicator(SetDescriptor.odds())
        assert not scalar_eq(witness, embed(0, FRECHET))
        assert scalar_eq(a * witness, embed(0, FRECHET))

    def test_zero_scalar(self):
        with pytest.raises(ZeroScalar):
            try_invert(embed(0, FRECHET))
        # zero in the quotient, not just the zero representative
        with pytest.raises(ZeroScalar):
            try_invert(Scalar(indicator(SetDescriptor.finite({2})), FRECHET))

    def test_invert_with_interior_zeros(self):
        # (n-3) has a zero at 3; inverse patches it and still works in A
        a = Scalar(RSeq(1, [RatFun(poly(-3, 1))]), FRECHET)
        inv = try_invert(a)
        assert inv.rep.eval(3) == 0
        assert inv.rep.eval(4) == 1
        assert scalar_eq(a * inv, embed(1, FRECHET))

    def test_principal_filter_invertibility(self):
        f = FilterDescriptor.principal(SetDescriptor.evens())
        a = Scalar(indicator(SetDescriptor.evens()), f)
        inv = try_invert(a)
        assert scalar_eq(a * inv, embed(1, f))
        # but the same class is a zero divisor when the base meets its zeros
        g = FilterDescriptor.principal(SetDescriptor.naturals())
        with pytest.raises(ZeroDivisor):
            try_invert(Scalar(indicator(SetDescriptor.evens()), g))

    def test_random_inverses_multiply_to_one(self):
        rng = random.Random(103)
        for _ in range(25):
            x = random_rseq(rng, 3, 2)
            a = Scalar(x, FRECHET)
            try:
                inv = try_invert(a)
            except (ZeroScalar, ZeroDivisor):
                continue
            assert scalar_eq(a * inv, embed(1, FRECHET))


class TestOrder:
    def test_embedded_below_omega(self):
        assert leq(embed(5, FRECHET), omega(FRECHET))

    def test_indicator_order_against_zero(self):
        a = Scalar(indicator(SetDescriptor.evens()), FRECHET)
        zero = embed(0, FRECHET)
        # the indicator never drops below 0, so 0 <= a; the reverse fails
        assert not leq(a, zero)
        assert le_set(a, zero) == SetDescriptor.odds()
        assert leq(zero, a)

    def test_disjoint_indicators_incomparable(self):
        a = Scalar(indicator(SetDescriptor.evens()), FRECHET)
        b = Scalar(indicator(SetDescriptor.odds()), FRECHET)
        assert le_set(a, b) == SetDescriptor.odds()
        assert le_set(b, a) == SetDescriptor.evens()
        assert not leq(a, b)
        assert not leq(b, a)

    def test_reflexive(self):
        rng = random.Random(107)
        for _ in range(20):
            a = Scalar(random_rseq(rng), FRECHET)
            assert leq(a, a)

    def test_le_set_matches_window(self):
        rng = random.Random(109)
        for _ in range(25):
            x, y = random_rseq(rng), random_rseq(rng)
            a, b = Scalar(x, FRECHET), Scalar(y, FRECHET)
            ls = le_set(a, b)
            for n in range(150):
                assert ls.member(n) == (x.eval(n) <= y.eval(n))

    def test_antisymmetric_transitive_translation(self):
        rng = random.Random(113)
        for _ in range(20):
            a = Scalar(random_rseq(rng, 2, 1), FRECHET)
            b = Scalar(random_rseq(rng, 2, 1), FRECHET)
            c = Scalar(random_rseq(rng, 2, 1), FRECHET)
            if leq(a, b) and leq(b, a):
                assert scalar_eq(a, b)
            if leq(a, b) and leq(b, c):
                assert leq(a, c)
            if leq(a, b):
                assert leq(a + c, b + c)
            nonneg = embed(abs(random_rat(rng)), FRECHET)
            if leq(a, b):
                assert leq(a * nonneg, b * nonneg)


class TestClassify:
    def test_omega_is_infinite(self):
        assert classify(omega(FRECHET)) is Classification.INFINITE

    def test_harmonic_is_infinitesimal(self):
        assert classify(Scalar(harmonic_tail(), FRECHET)) is Classification.INFINITESIMAL

    def test_mixed(self):
        x = indicator(SetDescriptor.evens()) * make_identity()
        assert classify(Scalar(x, FRECHET)) is Classification.MIXED

    def test_zero_and_appreciable(self):
        assert classify(embed(0, FRECHET)) is Classification.ZERO
        assert classify(Scalar(indicator(SetDescriptor.finite({5})), FRECHET)) is Classification.ZERO
        assert classify(embed(rat(-2, 7), FRECHET)) is Classification.APPRECIABLE
        assert classify(Scalar(indicator(SetDescriptor.evens()), FRECHET)) is Classification.APPRECIABLE

    def test_principal_relevance(self):
        # under Principal(evens) the odd branch is invisible
        f = FilterDescriptor.principal(SetDescriptor.evens())
        x = indicator(SetDescriptor.odds()) * make_identity()  # grows on odds only
        assert classify(Scalar(x, FRECHET)) is Classification.MIXED
        assert classify(Scalar(x, f)) is Classification.ZERO
        y = indicator(SetDescriptor.evens()) * make_identity() + make_constant(1)
        assert classify(Scalar(y, f)) is Classification.INFINITE

    def test_finite_principal_base(self):
        f = FilterDescriptor.principal(SetDescriptor.finite({2, 4}))
        assert classify(omega(f)) is Classification.APPRECIABLE
        assert classify(embed(0, f)) is Classification.ZERO

    def test_classification_algebra(self):
        rng = random.Random(127)
        for _ in range(20):
            inf_small = Scalar(random_infinitesimal_rseq(rng), FRECHET)
            appr = Scalar(random_appreciable_rseq(rng), FRECHET)
            inf_large = Scalar(random_infinite_rseq(rng), FRECHET)
            assert classify(inf_small) is Classification.INFINITESIMAL
            assert classify(appr) is Classification.APPRECIABLE
            assert classify(inf_large) is Classification.INFINITE
            assert classify(inf_small * appr) is Classification.INFINITESIMAL
            assert classify(inf_large * appr) is Classification.INFINITE


class TestStandardPart:
    def test_ratio(self):
        a = Scalar(RSeq(1, [RatFun(poly(3, 2), poly(1, 1))]), FRECHET)
        assert standard_part(a) == 2

    def test_identity_on_embedded(self):
        rng = random.Random(131)
        for _ in range(20):
            q = random_rat(rng)
            assert standard_part(embed(q, FRECHET)) == q
            f = random_principal_filter(rng)
            assert standard_part(embed(q, f)) == q

    def test_not_standardizable(self):
        with pytest.raises(NotStandardizable):
            standard_part(omega(FRECHET))
        with pytest.raises(NotStandardizable):
            standard_part(Scalar(indicator(SetDescriptor.evens()), FRECHET))

    def test_difference_is_infinitesimal_or_zero(self):
        rng = random.Random(137)
        for _ in range(20):
            a = Scalar(random_infinitesimal_rseq(rng), FRECHET) + embed(random_rat(rng), FRECHET)
            c = standard_part(a)
            assert classify(a - embed(c, FRECHET)) in (
                Classification.ZERO,
                Classification.INFINITESIMAL,
            )


class TestWellDefinedness:
    def test_perturbation_by_ideal_members(self):
        rng = random.Random(139)
        for f in (FRECHET, FilterDescriptor.principal(SetDescriptor.odds())):
            for _ in range(15):
                a = Scalar(random_rseq(rng, 2, 1), f)
                b = Scalar(random_rseq(rng, 2, 1), f)
                a2 = Scalar(a.rep + random_ideal_member(rng, f), f)
                b2 = Scalar(b.rep + random_ideal_member(rng, f), f)
                assert scalar_eq(a, a2)
                assert scalar_eq(b, b2)
                assert scalar_eq(a + b, a2 + b2)
                assert scalar_eq(a * b, a2 * b2)


class TestRingAxioms:
    def test_ring_laws_modulo_eq(self):
        rng = random.Random(149)
        one, zero = embed(1, FRECHET), embed(0, FRECHET)
        for _ in range(20):
            a = Scalar(random_rseq(rng, 2, 1), FRECHET)
            b = Scalar(random_rseq(rng, 2, 1), FRECHET)
            c = Scalar(random_rseq(rng, 2, 1), FRECHET)
            assert scalar_eq((a + b) + c, a + (b + c))
            assert scalar_eq(a + b, b + a)
            assert scalar_eq(a + zero, a)
            assert scalar_eq(a + (-a), zero)
            assert scalar_eq((a * b) * c, a * (b * c))
            assert scalar_eq(a * b, b * a)
            assert scalar_eq(a * one, a)
            assert scalar_eq(a * (b + c), a * b + a * c)


class TestArchimedean:
    def test_positive_chain(self):
        report = archimedean_counterexample(50, FRECHET)
        assert report.ok, report.render()

    def test_k_equals_one(self):
        assert leq(embed(1, FRECHET), omega(FRECHET))
        assert not scalar_eq(embed(1, FRECHET), omega(FRECHET))

    def test_negative_control(self):
        # inside the embedded rationals the dominance breaks at k = 8
        seven = embed(7, FRECHET)
        for k in range(1, 8):
            assert leq(embed(k, FRECHET), seven)
        assert not leq(embed(8, FRECHET), seven)
