import random

import pytest

from mrdcodes import linalg, oracle
from mrdcodes.linpoly import (LinearizedPoly, dickson_matrix, evaluate, fq_matrix_rank,
                              from_fq_matrix, from_outer_product, interpolate, rank,
                              random_rank_t, to_fq_matrix)

from conftest import field


def random_poly(ctx, rng):
    return LinearizedPoly(ctx, [ctx.random_element(rng) for _ in range(ctx.n)])


def test_identity_and_frobenius_minus_identity():
    ctx = field(2, 2, 3)
    x_poly = LinearizedPoly.monomial(ctx, 0)
    assert all(x_poly(x) == x for x in ctx.elements())
    L = LinearizedPoly(ctx, [ctx.neg(1), 1])
    for x in ctx.elements():
        assert (L(x) == 0) == ctx.in_subfield(x, ctx.l)
    assert rank(x_poly) == ctx.n
    assert rank(L) == ctx.n - 1


def test_trace_polynomial_has_rank_one():
    for params in [(2, 1, 6), (3, 1, 4), (2, 2, 3)]:
        ctx = field(*params)
        assert rank(LinearizedPoly(ctx, [1] * ctx.n)) == 1


def test_zero_polynomial_iff_rank_zero():
    ctx = field(3, 1, 4)
    assert rank(LinearizedPoly.zero(ctx)) == 0
    rng = random.Random(0)
    for _ in range(50):
        L = random_poly(ctx, rng)
        assert (rank(L) == 0) == L.is_zero()


@pytest.mark.parametrize("params", [(2, 1, 6), (3, 1, 4), (2, 2, 3)])
def test_fq_linearity(params):
    ctx = field(*params)
    rng = random.Random(1)
    fq = [x for x in ctx.elements() if ctx.in_subfield(x, ctx.l)]
    for _ in range(50):
        L = random_poly(ctx, rng)
        x, y = ctx.random_element(rng), ctx.random_element(rng)
        c1, c2 = rng.choice(fq), rng.choice(fq)
        lhs = L(ctx.add(ctx.mul(c1, x), ctx.mul(c2, y)))
        assert lhs == ctx.add(ctx.mul(c1, L(x)), ctx.mul(c2, L(y)))


def test_dickson_matrix_shapes():
    ctx = field(2, 1, 5)
    D = dickson_matrix(LinearizedPoly.monomial(ctx, 0))
    assert D == [[int(i == j) for j in range(5)] for i in range(5)]
    a = 7
    D = dickson_matrix(LinearizedPoly.monomial(ctx, 1, a))
    for i in range(5):
        for j in range(5):
            # column-twisted convention: the entry at (i, i-1) is a^[i-1]
            want = ctx.frob(a, j) if (i - j) % 5 == 1 else 0
            assert D[i][j] == want


def test_dickson_columns_are_shifted_twists():
    ctx = field(3, 1, 4)
    rng = random.Random(2)
    L = random_poly(ctx, rng)
    D = dickson_matrix(L)
    assert [row[0] for row in D] == list(L.coeffs)
    for j in range(ctx.n):
        twisted = [ctx.frob(L.coeffs[(i - j) % ctx.n], j) for i in range(ctx.n)]
        assert [row[j] for row in D] == twisted


@pytest.mark.parametrize("params", [(2, 1, 4), (3, 1, 4), (2, 2, 3), (2, 1, 6)])
def test_rank_three_ways(params):
    ctx = field(*params)
    rng = random.Random(3)
    for trial in range(60):
        L = random_poly(ctx, rng) if trial % 2 else random_rank_t(ctx, rng.randrange(ctx.n + 1), rng)
        r = rank(L)
        assert r == fq_matrix_rank(L) == oracle.rank_bruteforce(ctx, L)


def test_to_fq_matrix_agrees_with_evaluation():
    ctx = field(3, 1, 4)
    rng = random.Random(4)
    for _ in range(20):
        L = random_poly(ctx, rng)
        mat = to_fq_matrix(L)
        for j, a in enumerate(ctx.alphas):
            col = [mat[i][j] for i in range(ctx.n)]
            assert ctx.sum(ctx.mul(c, b) for c, b in zip(col, ctx.alphas)) == L(a)
        assert from_fq_matrix(ctx, mat) == L
    assert to_fq_matrix(LinearizedPoly.zero(ctx)) == [[0] * 4 for _ in range(4)]
    ident = to_fq_matrix(LinearizedPoly.monomial(ctx, 0))
    assert ident == [[int(i == j) for j in range(4)] for i in range(4)]


def test_interpolate_roundtrip():
    ctx = field(2, 2, 4)
    rng = random.Random(5)
    for _ in range(20):
        L = random_poly(ctx, rng)
        assert interpolate(ctx, L.evaluations()) == L


@pytest.mark.parametrize("t", range(7))
def test_random_rank_t_exact(t):
    ctx = field(2, 1, 6)
    rng = random.Random(10 + t)
    for _ in range(200):
        assert rank(random_rank_t(ctx, t, rng)) == t


def test_outer_product_is_sum_of_trace_maps():
    ctx = field(2, 1, 4)
    betas, psis = [3, 5], [1, 6]
    L = from_outer_product(ctx, betas, psis)
    for x in ctx.elements():
        want = ctx.sum(ctx.mul(b, ctx.sum(ctx.frob(ctx.mul(ps, x), i) for i in range(4)))
                       for b, ps in zip(betas, psis))
        assert L(x) == want


def consecutive_submatrices_nonsingular(ctx, L, t):
    D = dickson_matrix(L)
    n = ctx.n
    for r0 in range(n):
        for c0 in range(n):
            sub = [[D[(r0 + i) % n][(c0 + j) % n] for j in range(t)] for i in range(t)]
            if linalg.rank(sub, ctx) != t:
                return False
    return True


def test_consecutive_submatrix_property():
    ctx = field(2, 1, 6)
    rng = random.Random(6)
    for _ in range(30):
        t = rng.randrange(1, ctx.n + 1)
        assert consecutive_submatrices_nonsingular(ctx, random_rank_t(ctx, t, rng), t)
