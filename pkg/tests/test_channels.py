import random

import pytest

from mrdcodes.channels import (GABIDULIN_BEYOND, TWISTED_BEYOND, ErrorPattern, ModelAParams,
                               ModelBParams, apply_error, model_a_setup, model_b_free_indices,
                               model_b_pairs, sample_model_a_error, sample_model_b_error,
                               satisfies_model_b)
from mrdcodes.errors import UnsupportedParity
from mrdcodes.field import FieldContext, sigma_minus_id, trace_sigma
from mrdcodes.linpoly import LinearizedPoly, interpolate, random_rank_t

from conftest import field


def test_setup_char2_picks_points_in_half_field():
    ctx = field(2, 1, 6)
    params = model_a_setup(ctx, 3)
    for th in (params.theta1, params.theta2):
        a = params.ctx.alphas[th]
        assert trace_sigma(params.ctx, a) == 0
        assert params.ctx.in_subfield(a, 3)
    assert params.theta1 != params.theta2


def test_setup_rebuilds_basis_when_needed():
    ctx = field(3, 1, 4)
    assert sum(1 for a in ctx.alphas if trace_sigma(ctx, a) == 0) < 2
    params = model_a_setup(ctx, 1)
    new = params.ctx
    assert new != ctx and new.modulus == ctx.modulus
    assert [trace_sigma(new, a) for a in new.alphas[:2]] == [0, 0]
    assert new.rank_of(list(new.alphas)) == 4


def test_setup_parity_rules():
    with pytest.raises(UnsupportedParity):
        model_a_setup(field(2, 1, 5), 2)
    with pytest.raises(UnsupportedParity):
        model_a_setup(field(2, 1, 6), 2)
    model_a_setup(field(2, 1, 6), 2, TWISTED_BEYOND)
    # GG with k = 1 ties both constraints to z_0
    assert model_a_setup(field(2, 1, 4), 1).theta1 == model_a_setup(field(2, 1, 4), 1).theta2


def test_params_validation():
    ctx = field(3, 1, 4)
    bad = next(i for i, a in enumerate(ctx.alphas) if trace_sigma(ctx, a))
    with pytest.raises(ValueError):
        ModelAParams(ctx, bad, bad)
    with pytest.raises(ValueError):
        ModelAParams(ctx, 0, 9)


@pytest.mark.parametrize("params,k,variant", [
    ((2, 1, 6), 3, GABIDULIN_BEYOND), ((3, 1, 4), 1, GABIDULIN_BEYOND),
    ((2, 1, 8), 2, TWISTED_BEYOND), ((2, 2, 6, 1, 1), 2, TWISTED_BEYOND)])
def test_model_a_samples(params, k, variant):
    pa = model_a_setup(field(*params), k, variant)
    ctx = pa.ctx
    rng = random.Random(0)
    c = pa.constraint_index(k)
    for t in range(1, (ctx.n - k + 1) // 2 + 1):
        for _ in range(40):
            e = sample_model_a_error(ctx, pa, k, t, rng)
            z = e.poly.coeffs
            assert sigma_minus_id(ctx, z[0]) == pa.alpha1
            assert sigma_minus_id(ctx, z[c]) == pa.alpha2
            assert e.rank == e.poly.rank() == t
            assert pa.satisfied_by(z, k)


def test_model_a_rank2_at_q2_n6():
    pa = model_a_setup(field(2, 1, 6), 3)
    rng = random.Random(5)
    assert all(sample_model_a_error(pa.ctx, pa, 3, 2, rng).rank == 2 for _ in range(200))


def test_model_a_wrong_context():
    pa = model_a_setup(field(3, 1, 4), 1)
    with pytest.raises(ValueError):
        sample_model_a_error(field(3, 1, 4), pa, 1, 1, random.Random(0))


def test_model_b_shapes():
    assert model_b_pairs(5) == [(1, 4), (2, 3)]
    assert model_b_pairs(8) == [(1, 6), (2, 5), (3, 4)]
    assert len(model_b_free_indices(7)) == 4
    assert len(model_b_free_indices(8)) == 8 // 2 + 1
    # every index is free or dependent exactly once
    for n in range(3, 11):
        dep = [j for _, j in model_b_pairs(n)]
        assert sorted(model_b_free_indices(n) + dep) == list(range(n))


@pytest.mark.parametrize("params", [(2, 1, 7), (2, 1, 8), (3, 1, 5), (2, 2, 4)])
def test_model_b_samples(params):
    ctx = field(*params)
    par = ModelBParams.for_context(ctx)
    rng = random.Random(1)
    ranks = set()
    for _ in range(200):
        e = sample_model_b_error(ctx, par, rng)
        assert satisfies_model_b(ctx, e.poly.coeffs)
        for i, j in model_b_pairs(ctx.n):
            assert e.poly.coeffs[j] == ctx.frob(e.poly.coeffs[i], j)
        ranks.add(e.rank)
    assert len(ranks) >= 2


def test_model_b_parity_mismatch():
    with pytest.raises(UnsupportedParity):
        sample_model_b_error(field(2, 1, 7), ModelBParams("even"), random.Random(0))
    with pytest.raises(ValueError):
        ModelBParams("both").check(field(2, 1, 7))


def test_apply_error():
    ctx = field(2, 2, 4)
    rng = random.Random(2)
    c = [ctx.random_element(rng) for _ in range(4)]
    assert apply_error(c, ErrorPattern.from_poly(LinearizedPoly.zero(ctx))) == c
    poly = random_rank_t(ctx, 2, rng)
    e = ErrorPattern.from_poly(poly)
    neg = ErrorPattern.from_poly(LinearizedPoly(ctx, [ctx.neg(x) for x in poly.coeffs]))
    r = apply_error(c, e)
    assert ctx.rank_of([ctx.sub(a, b) for a, b in zip(r, c)]) == e.rank == 2
    assert apply_error(r, neg) == c
    assert interpolate(ctx, e.vector) == poly
    with pytest.raises(ValueError):
        apply_error(c[:3], e)


def test_error_pattern_dict():
    ctx = field(2, 1, 4)
    d = ErrorPattern.from_poly(LinearizedPoly.monomial(ctx, 0, 3)).to_dict()
    assert d["coeffs"] == ["3", "0", "0", "0"] and d["rank"] == 4
