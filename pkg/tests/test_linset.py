"""Weight spectra, classification, span sets and the pair-count identity."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfat.field import FFElement, ctx_create
from qfat.linpoly import LinearizedPoly, identity_poly, monomial, weight_at
from qfat.linset import (
    SpanLinearSet,
    classify,
    graph_span,
    pair_count_identity,
    point_set,
    span_weights,
    weight_spectrum,
)
from qfat.families import make_lp, make_q5_club
from qfat.quadform import norm_one_deltas


class TestWeightSpectrum:
    def test_trace_f8(self):
        ctx = ctx_create(2, 1, 3)
        spec = weight_spectrum(LinearizedPoly(ctx, [1, 1, 1]), 0)
        assert spec.counts == {2: 1, 1: 4}
        assert spec.size == 5
        assert spec.r == 1
        assert spec.max_weight == 2

    def test_monomial_pseudoregulus(self):
        ctx = ctx_create(2, 1, 4)
        spec = weight_spectrum(monomial(ctx, 1, 2), 0)
        # every point of weight gcd(4, 2) = 2
        assert spec.counts == {2: (2**4 - 1) // (2**2 - 1)}

    @pytest.mark.parametrize("k,t", [(1, 0), (2, 1), (3, 0), (3, 2)])
    def test_monomial_law(self, k, t):
        import math

        ctx = ctx_create(2, 1, 4)
        spec = weight_spectrum(monomial(ctx, 1, k), t)
        d = math.gcd(4, k - t)
        assert spec.counts == {d: (2**4 - 1) // (2**d - 1)}

    def test_lp_n4_q2_dichotomy(self):
        ctx = ctx_create(2, 1, 4)
        rs = set()
        for delta in norm_one_deltas(ctx):
            fam = make_lp(ctx, delta, 1, "f")
            spec = weight_spectrum(fam.obj, fam.index)
            rs.add(spec.r)
        assert rs == {1, 3}  # 1 or q+1 depending on delta

    def test_agrees_with_weight_at(self):
        ctx = ctx_create(3, 1, 3)
        rng = random.Random(0)
        for _ in range(10):
            f = LinearizedPoly.from_codes(ctx, [rng.randrange(27) for _ in range(3)])
            for t in range(3):
                spec = weight_spectrum(f, t)
                direct = {}
                for mc in range(ctx.order):
                    w = weight_at(f, t, ctx.from_code(mc))
                    if w:
                        direct[w] = direct.get(w, 0) + 1
                assert spec.counts == direct

    def test_zero_poly_single_point(self):
        ctx = ctx_create(2, 1, 3)
        spec = weight_spectrum(LinearizedPoly(ctx, []), 0)
        assert spec.counts == {3: 1}

    def test_index_out_of_range(self):
        ctx = ctx_create(2, 1, 3)
        with pytest.raises(ValueError):
            weight_spectrum(identity_poly(ctx), 3)


class TestClassify:
    def test_trace_is_club(self):
        ctx = ctx_create(2, 1, 3)
        cls = classify(weight_spectrum(LinearizedPoly(ctx, [1, 1, 1]), 0))
        assert cls.club_weight == 2 and cls.r == 1 and not cls.scattered

    def test_scattered(self):
        ctx = ctx_create(2, 1, 4)
        cls = classify(weight_spectrum(monomial(ctx, 1, 1), 0))
        assert cls.scattered and cls.r == 0 and cls.constant_weight == 1

    def test_baer_constant_weight(self):
        ctx = ctx_create(2, 1, 4)
        cls = classify(weight_spectrum(monomial(ctx, 1, 2), 0))
        assert cls.constant_weight == 2 and cls.r == 5 and cls.club_weight is None

    def test_qplus1_fat_not_club(self):
        ctx = ctx_create(2, 1, 4)
        # x^q + delta x^q3 with norm-one delta gives q+1 points of weight 2
        f = LinearizedPoly.from_codes(ctx, [0, 1, 0, 1])
        cls = classify(weight_spectrum(f, 0))
        assert cls.r == 3 and cls.club_weight is None


class TestSpanSets:
    def test_single_point_span(self):
        ctx = ctx_create(2, 1, 4)
        g = ctx.generator()
        S = SpanLinearSet.from_elements(
            ctx, [(ctx.one(), ctx.zero()), (g, ctx.zero()), (g * g, ctx.zero())]
        )
        spec = span_weights(S)
        assert spec.counts == {3: 1} and spec.infinity_weight == 0

    def test_rank_counts_independent_generators(self):
        ctx = ctx_create(2, 1, 4)
        g = ctx.generator()
        S = SpanLinearSet.from_elements(
            ctx, [(ctx.one(), ctx.zero()), (ctx.one(), ctx.zero()), (g, ctx.one())]
        )
        assert S.rank == 2
        assert len(S.vectors()) == 4

    def test_infinity_point(self):
        ctx = ctx_create(2, 1, 3)
        S = SpanLinearSet.from_elements(ctx, [(ctx.zero(), ctx.one()), (ctx.one(), ctx.zero())])
        spec = span_weights(S)
        assert spec.infinity_weight == 1
        assert spec.counts == {1: 1}

    def test_span_route_matches_poly_route(self):
        rng = random.Random(1)
        for (p, e, n) in ((2, 1, 4), (3, 1, 3), (2, 2, 2)):
            ctx = ctx_create(p, e, n)
            for _ in range(5):
                f = LinearizedPoly.from_codes(ctx, [rng.randrange(ctx.order) for _ in range(n)])
                if f.is_zero():
                    continue
                for t in range(n):
                    s1 = weight_spectrum(f, t)
                    s2 = span_weights(graph_span(f, t))
                    assert s1.counts == s2.counts
                    assert s2.infinity_weight == 0


class TestPairCount:
    def test_identity_poly(self):
        ctx = ctx_create(2, 1, 3)
        lhs, rhs = pair_count_identity(identity_poly(ctx), 0)
        assert lhs == rhs == (ctx.order - 1) ** 2

    def test_trace_f8(self):
        ctx = ctx_create(2, 1, 3)
        lhs, rhs = pair_count_identity(LinearizedPoly(ctx, [1, 1, 1]), 0)
        assert lhs == rhs == 13

    def test_q5_club(self):
        ctx = ctx_create(2, 2, 5)
        f = make_q5_club(ctx).obj
        lhs, rhs = pair_count_identity(f, 0)
        assert lhs == rhs == (4**3 - 1) ** 2 + 320 * (4 - 1) ** 2

    def test_direct_pair_oracle(self):
        rng = random.Random(2)
        for (p, e, n) in ((2, 1, 3), (3, 1, 2)):
            ctx = ctx_create(p, e, n)
            for _ in range(4):
                f = LinearizedPoly.from_codes(ctx, [rng.randrange(ctx.order) for _ in range(n)])
                for t in range(n):
                    direct = 0
                    for x in range(1, ctx.order):
                        fx = f.eval(ctx.from_code(x)).code
                        xt = ctx.frob(x, t)
                        for y in range(1, ctx.order):
                            fy = f.eval(ctx.from_code(y)).code
                            if ctx.mul(fx, ctx.frob(y, t)) == ctx.mul(fy, xt):
                                direct += 1
                    lhs, rhs = pair_count_identity(f, t)
                    assert direct == lhs == rhs

    def test_cap(self):
        from qfat.field import CapExceededError

        ctx = ctx_create(2, 1, 10)
        with pytest.raises(CapExceededError):
            pair_count_identity(identity_poly(ctx), 0, cap=512)


class TestAdjointPointSets:
    def test_lp_binomial_f34(self):
        ctx = ctx_create(3, 1, 4)
        for dc in (2, 7, 19):
            f = LinearizedPoly.from_codes(ctx, [1, 0, dc, 0])
            assert point_set(f, 0) == point_set(f.adjoint(), 0)


# hypothesis: the spectrum identity is enforced on arbitrary polynomials
CTX = ctx_create(2, 1, 4)
codes = st.integers(min_value=0, max_value=CTX.order - 1)


@given(codes, codes, codes, codes, st.integers(min_value=0, max_value=3))
@settings(max_examples=80)
def test_spectrum_identity_everywhere(c0, c1, c2, c3, t):
    f = LinearizedPoly.from_codes(CTX, [c0, c1, c2, c3])
    spec = weight_spectrum(f, t)  # constructor asserts the identity
    assert sum(spec.counts.values()) == spec.size
    assert spec.r <= spec.size
