"""Field arithmetic: table routes checked against schoolbook polynomial
arithmetic, plus the documented examples."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfat.field import (
    CapExceededError,
    FFElement,
    ctx_create,
    frobenius_q,
    rel_norm,
    rel_trace,
    solve_power_eq,
    subfield_embedding,
)


def poly_mul_mod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] = (prod[i + j] + ai * bj) % p
    n = len(mod) - 1
    for d in range(len(prod) - 1, n - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for j in range(n):
                prod[d - n + j] = (prod[d - n + j] - c * mod[j]) % p
    return prod[:n]


def encode(digits, p):
    return sum(d * p**i for i, d in enumerate(digits))


class TestCtxCreate:
    def test_f8_modulus(self):
        ctx = ctx_create(2, 1, 3)
        # x^3 + x + 1, the classical first irreducible cubic
        assert ctx.modulus == (1, 1, 0, 1)

    def test_f4_5_parameters(self):
        ctx = ctx_create(2, 2, 5)
        assert (ctx.q, ctx.n, ctx.order) == (4, 5, 4**5)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            ctx_create(4, 1, 3)

    def test_size_cap(self):
        with pytest.raises(CapExceededError):
            ctx_create(2, 1, 30)

    def test_deterministic(self):
        a = ctx_create(3, 1, 4)
        b = ctx_create(3, 1, 4)
        assert a is b
        assert a == b


@pytest.mark.parametrize("p,e,n", [(2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2)])
def test_arith_matches_schoolbook(p, e, n):
    ctx = ctx_create(p, e, n)
    for a in range(ctx.order):
        for b in range(ctx.order):
            da, db = list(ctx.coeffs_of(a)), list(ctx.coeffs_of(b))
            assert ctx.mul(a, b) == encode(poly_mul_mod(da, db, ctx.modulus, p), p)
            assert ctx.add(a, b) == encode([(x + y) % p for x, y in zip(da, db)], p)


def test_div_example_f8():
    ctx = ctx_create(2, 1, 3)
    x = ctx.from_code(2)
    one = ctx.one()
    inv = one / x
    assert inv.code == 5  # x^2 + 1
    assert (x * inv) == one


def test_mul_example_f8():
    ctx = ctx_create(2, 1, 3)
    x = ctx.from_code(2)
    assert (x * x).code == 4


def test_div_by_zero():
    ctx = ctx_create(2, 1, 3)
    with pytest.raises(ZeroDivisionError):
        ctx.one() / ctx.zero()


def test_context_mismatch():
    a = ctx_create(2, 1, 3).one()
    b = ctx_create(3, 1, 2).one()
    with pytest.raises(ValueError):
        a + b


class TestFrobenius:
    def test_identity_and_order(self):
        ctx = ctx_create(3, 1, 3)
        for code in range(ctx.order):
            a = ctx.from_code(code)
            assert frobenius_q(a, 0) == a
            assert frobenius_q(a, ctx.n) == a

    def test_fixed_field_size(self):
        ctx = ctx_create(2, 2, 3)
        fixed = [c for c in range(ctx.order) if ctx.frob(c, 1) == c]
        assert len(fixed) == ctx.q

    def test_q4_is_fourth_power(self):
        ctx = ctx_create(2, 2, 5)
        g = ctx.generator()
        assert frobenius_q(g, 1) == g * g * g * g


class TestTraceNorm:
    def test_trace_of_one_f8(self):
        ctx = ctx_create(2, 1, 3)
        assert rel_trace(ctx.one()) == ctx.one()

    def test_norm_of_zero_one(self):
        ctx = ctx_create(3, 1, 3)
        assert rel_norm(ctx.zero()).code == 0
        assert rel_norm(ctx.one()).code == 1

    @pytest.mark.parametrize("p,e,n", [(2, 1, 4), (3, 1, 3), (2, 2, 3)])
    def test_norm_one_kernel_size(self, p, e, n):
        ctx = ctx_create(p, e, n)
        cnt = sum(1 for c in range(1, ctx.order) if ctx.rel_norm_code(c) == 1)
        assert cnt == (ctx.order - 1) // (ctx.q - 1)

    def test_trace_lands_in_subfield_and_linear(self):
        ctx = ctx_create(2, 2, 3)
        subfield = ctx.subfield_codes(1)
        for c in range(ctx.order):
            t = ctx.rel_trace_code(c)
            assert t in subfield
        for alpha in subfield:
            for c in (3, 17, 40):
                lhs = ctx.rel_trace_code(ctx.mul(alpha, c))
                rhs = ctx.mul(alpha, ctx.rel_trace_code(c))
                assert lhs == rhs

    def test_norm_multiplicative(self):
        ctx = ctx_create(3, 1, 3)
        for a in (2, 5, 11):
            for b in (3, 7, 19):
                assert ctx.rel_norm_code(ctx.mul(a, b)) == ctx.mul(
                    ctx.rel_norm_code(a), ctx.rel_norm_code(b)
                )


class TestSolvePowerEq:
    def test_zero_target_rejected(self):
        ctx = ctx_create(2, 1, 3)
        with pytest.raises(ValueError):
            solve_power_eq(ctx.zero(), 2)

    def test_k_one(self):
        ctx = ctx_create(3, 1, 2)
        a = ctx.from_code(5)
        assert solve_power_eq(a, 1) == [a]

    def test_q_minus_one_roots_of_unity(self):
        ctx = ctx_create(3, 1, 3)
        sols = solve_power_eq(ctx.one(), ctx.q - 1)
        assert len(sols) == ctx.q - 1
        assert all(ctx.pow_int(s.code, ctx.q - 1) == 1 for s in sols)

    def test_f9_square_roots(self):
        ctx = ctx_create(3, 1, 2)
        g = ctx.generator()
        sols = solve_power_eq(g**4, 2)
        assert {s.code for s in sols} == {(g**2).code, (g**6).code}

    def test_exhaustive_oracle(self):
        ctx = ctx_create(2, 2, 2)
        for k in (2, 3, 5):
            for target in range(1, ctx.order):
                expect = sorted(
                    y for y in range(1, ctx.order) if ctx.pow_int(y, k) == target
                )
                got = [s.code for s in solve_power_eq(ctx.from_code(target), k)]
                assert got == expect


class TestSubfields:
    def test_membership_via_frobenius(self):
        ctx = ctx_create(2, 1, 4)
        f2 = set(ctx.subfield_codes(1))
        assert f2 == {c for c in range(ctx.order) if ctx.in_subfield(c, 1)}
        f4 = set(ctx.subfield_codes(2))
        assert f4 == {c for c in range(ctx.order) if ctx.in_subfield(c, 2)}
        assert f2 <= f4

    def test_embedding_is_ring_hom(self):
        small = ctx_create(2, 1, 3)
        big = ctx_create(2, 1, 6)
        phi = subfield_embedding(small, big)
        for a in range(small.order):
            for b in range(small.order):
                assert phi(small.mul(a, b)) == big.mul(phi(a), phi(b))
                assert phi(small.add(a, b)) == big.add(phi(a), phi(b))
        assert phi(1) == 1 and phi(0) == 0

    def test_fq_rank(self):
        ctx = ctx_create(2, 1, 4)
        g = ctx.generator()
        powers = [[ctx.pow_int(g.code, i)] for i in range(4)]
        assert ctx.fq_rank(powers) == 4
        assert ctx.fq_rank([[1], [1]]) == 1


# property-based checks on a fixed midsize field
CTX = ctx_create(3, 1, 3)
codes = st.integers(min_value=0, max_value=CTX.order - 1)


@given(codes, codes, codes)
def test_field_axioms(a, b, c):
    x, y, z = (CTX.from_code(v) for v in (a, b, c))
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    assert x + CTX.zero() == x
    assert x * CTX.one() == x
    assert x - x == CTX.zero()


@given(codes)
def test_inverse_roundtrip(a):
    x = CTX.from_code(a)
    if x.code:
        assert x * (CTX.one() / x) == CTX.one()


@given(codes)
@settings(max_examples=50)
def test_frobenius_additive_multiplicative(a):
    x = CTX.from_code(a)
    y = CTX.generator()
    assert (x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1)
    assert (x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1)
