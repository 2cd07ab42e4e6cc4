"""Linearized polynomials: evaluation, adjoint, Dickson rank, weights,
normalization.  The brute-force root count is the standing oracle for the
rank route."""

import math
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfat.field import FFElement, ctx_create, rel_trace
from qfat.linpoly import (
    LinearizedPoly,
    dickson,
    identity_poly,
    kernel_dim,
    monomial,
    normalize,
    weight_at,
)
from qfat.families import cube_root_unit, make_q5_club


def random_poly(ctx, rng):
    return LinearizedPoly.from_codes(ctx, [rng.randrange(ctx.order) for _ in range(ctx.n)])


class TestEval:
    def test_identity(self):
        ctx = ctx_create(3, 1, 3)
        f = identity_poly(ctx)
        for c in range(ctx.order):
            assert f.eval(ctx.from_code(c)).code == c

    def test_q5_club_at_one(self):
        ctx = ctx_create(2, 2, 5)
        f = make_q5_club(ctx).obj
        assert f.eval(ctx.one()).code == 0  # 1 + w + w + 1

    def test_trace_poly_equals_rel_trace(self):
        ctx = ctx_create(2, 2, 3)
        f = LinearizedPoly(ctx, [1] * 3)
        rng = random.Random(0)
        for _ in range(50):
            a = ctx.from_code(rng.randrange(ctx.order))
            assert f.eval(a) == rel_trace(a)

    def test_eval_logs_agrees_with_scalar(self):
        ctx = ctx_create(3, 1, 3)
        rng = random.Random(1)
        f = random_poly(ctx, rng)
        logs = f.eval_logs()
        for lx in range(ctx.mult_order):
            x = ctx.from_code(int(ctx._exp[lx]))
            val = f.eval(x).code
            assert (logs[lx] == -1 and val == 0) or int(ctx._exp[logs[lx]]) == val


class TestAdjoint:
    def test_constant_term_fixed(self):
        ctx = ctx_create(3, 1, 4)
        f = LinearizedPoly(ctx, [ctx.from_code(7)])
        assert f.adjoint() == f

    def test_involution(self):
        ctx = ctx_create(2, 1, 4)
        rng = random.Random(2)
        for _ in range(20):
            f = random_poly(ctx, rng)
            assert f.adjoint().adjoint() == f

    def test_trace_pairing(self):
        ctx = ctx_create(2, 2, 3)
        rng = random.Random(3)
        f = random_poly(ctx, rng)
        fh = f.adjoint()
        for _ in range(100):
            y = ctx.from_code(rng.randrange(ctx.order))
            z = ctx.from_code(rng.randrange(ctx.order))
            assert (y * f.eval(z)).rel_trace() == (z * fh.eval(y)).rel_trace()

    def test_composition_reversal(self):
        ctx = ctx_create(3, 1, 3)
        rng = random.Random(4)
        f, g = random_poly(ctx, rng), random_poly(ctx, rng)
        lhs = f.compose(g).adjoint()
        rhs = g.adjoint().compose(f.adjoint())
        for c in range(ctx.order):
            x = ctx.from_code(c)
            assert lhs.eval(x) == rhs.eval(x)


class TestDickson:
    def test_identity_poly_gives_identity_matrix(self):
        ctx = ctx_create(2, 1, 4)
        D = dickson(identity_poly(ctx), 1)
        for i in range(4):
            for j in range(4):
                assert D.rows[i][j] == (1 if i == j else 0)

    def test_q5_club_matrix_rows(self):
        ctx = ctx_create(2, 2, 5)
        fam = make_q5_club(ctx)
        w = fam.params["w"]
        D = dickson(fam.obj, 1)
        assert D.rows[0] == (1, w, 0, w, 1)
        # each row is the previous one shifted right with entries to the q-th power
        for i in range(1, 5):
            for j in range(5):
                assert D.rows[i][j] == ctx.frob(D.rows[i - 1][(j - 1) % 5], 1)

    def test_gcd_requirement(self):
        ctx = ctx_create(2, 1, 4)
        with pytest.raises(ValueError):
            dickson(identity_poly(ctx), 2)

    @pytest.mark.parametrize("s", [1, 3])
    def test_rank_independent_of_twist(self, s):
        ctx = ctx_create(2, 1, 4)
        rng = random.Random(5)
        for _ in range(20):
            f = random_poly(ctx, rng)
            if f.is_zero():
                continue
            rank = dickson(f, s).rank()
            roots = f.root_count()
            assert ctx.q ** (ctx.n - rank) == roots


class TestKernelDim:
    def test_zero_poly(self):
        ctx = ctx_create(2, 1, 3)
        assert kernel_dim(LinearizedPoly(ctx, [])) == 3

    def test_q5_club(self):
        ctx = ctx_create(2, 2, 5)
        assert kernel_dim(make_q5_club(ctx).obj) == 3

    @pytest.mark.parametrize("p,e,n", [(2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2)])
    def test_xq_minus_x(self, p, e, n):
        ctx = ctx_create(p, e, n)
        f = LinearizedPoly(ctx, [ctx.from_code(ctx.neg(1)), 1])
        assert kernel_dim(f) == 1

    @pytest.mark.parametrize("p,e,n", [(2, 1, 4), (3, 1, 3), (2, 2, 2)])
    def test_against_root_count(self, p, e, n):
        ctx = ctx_create(p, e, n)
        rng = random.Random(6)
        for _ in range(100):
            f = random_poly(ctx, rng)
            kd = kernel_dim(f)
            assert ctx.q**kd == f.root_count()
            if not f.is_zero():
                assert dickson(f, 1).rank() + kd == ctx.n  # rank-nullity


class TestWeightAt:
    def test_identity_full_weight(self):
        ctx = ctx_create(2, 1, 4)
        f = identity_poly(ctx)
        assert weight_at(f, 0, ctx.one()) == 4

    def test_trace_kernel_weight(self):
        ctx = ctx_create(2, 1, 3)
        f = LinearizedPoly(ctx, [1, 1, 1])
        assert weight_at(f, 0, ctx.zero()) == 2

    def test_q5_club_light_points(self):
        ctx = ctx_create(2, 2, 5)
        f = make_q5_club(ctx).obj
        for mc in (1, 2, 7, 100, 1000):
            assert weight_at(f, 0, ctx.from_code(mc)) <= 1


class TestNormalize:
    def test_already_normalized(self):
        ctx = ctx_create(3, 1, 3)
        f = LinearizedPoly(ctx, [2, 0, 1])  # monic, slot 1 empty
        res = normalize(f, 1)
        assert res.poly == f and res.index == 1

    def test_monomial_rejected(self):
        ctx = ctx_create(2, 1, 4)
        with pytest.raises(ValueError):
            normalize(monomial(ctx, 1, 2), 0)

    def test_weight_multiset_preserved(self):
        rng = random.Random(7)
        for (p, e, n) in ((2, 1, 3), (3, 1, 3), (2, 1, 4)):
            ctx = ctx_create(p, e, n)
            done = 0
            while done < 8:
                f = random_poly(ctx, rng)
                if f.is_zero() or f.is_monomial():
                    continue
                t = rng.randrange(n)
                res = normalize(f, t)
                g, t2 = res.poly, res.index
                assert g.codes[g.q_degree] == 1
                assert g.codes[t2] == 0
                if t2 > 0:
                    assert g.codes[0] != 0
                old = Counter(weight_at(f, t, ctx.from_code(c)) for c in range(ctx.order))
                new = Counter(weight_at(g, t2, ctx.from_code(c)) for c in range(ctx.order))
                assert old == new
                for c in (0, 1, ctx.order - 1):
                    m = ctx.from_code(c)
                    assert weight_at(f, t, m) == weight_at(g, t2, res.relabel.apply(m))
                done += 1


# hypothesis: linearity of evaluation over the base subfield
CTX = ctx_create(2, 2, 2)
codes = st.integers(min_value=0, max_value=CTX.order - 1)


@given(codes, codes, codes)
@settings(max_examples=60)
def test_evaluation_is_subfield_linear(fc1, fc2, xc):
    f = LinearizedPoly.from_codes(CTX, [fc1, fc2])
    x = CTX.from_code(xc)
    for alpha_code in CTX.subfield_codes(1):
        alpha = CTX.from_code(alpha_code)
        assert f.eval(alpha * x) == alpha * f.eval(x)


@given(codes, codes)
@settings(max_examples=40)
def test_weight_bounded_by_qdegree_gap(fc1, fc2):
    f = LinearizedPoly.from_codes(CTX, [fc1, fc2])
    if f.is_zero():
        return
    k = f.q_degree
    for t in range(CTX.n):
        w = weight_at(f, t, CTX.one())
        assert w <= max(k, t) or f.codes == tuple(
            CTX.one().code if i == t else 0 for i in range(CTX.n)
        )
