import random

import pytest

from mrdcodes.channels import model_a_setup, sample_model_a_error
from mrdcodes.errors import Inconsistent, NullityTooHigh
from mrdcodes.keyeq import (check_period_n, extend_sequence, regenerate, residuals,
                            solve_key_equation)
from mrdcodes.linpoly import random_rank_t

from conftest import field


def tail(z, start):
    return {i: z[i] for i in range(start, len(z))}


def test_t1_ratio():
    ctx = field(2, 1, 6)
    rng = random.Random(0)
    z = random_rank_t(ctx, 1, rng).coeffs
    sol = solve_key_equation(ctx, tail(z, 2), 1, 3, 6)
    g = sol.gamma[0]
    for i in range(3, 6):
        assert g == ctx.div(z[i], ctx.frob(z[i - 1], 1))


@pytest.mark.parametrize("params", [(2, 1, 8), (3, 1, 6), (2, 2, 5)])
def test_recovery_from_tail(params):
    ctx = field(*params)
    n = ctx.n
    rng = random.Random(1)
    for _ in range(40):
        t = rng.randrange(1, (n - 1) // 2 + 1)
        k = rng.randrange(1, n - 2 * t + 1)
        z = random_rank_t(ctx, t, rng).coeffs
        known = tail(z, k)
        sol = solve_key_equation(ctx, known, t, k + t, n)
        assert not sol.is_line
        assert all(v == 0 for v in residuals(ctx, sol.gamma, known, k + t, n))
        assert check_period_n(ctx, sol.gamma, known)
        assert regenerate(ctx, sol.gamma, known) == list(z)


def test_full_dickson_relation_regenerates():
    # solve the relation on all n equations, then extend for 2n steps
    ctx = field(2, 1, 6)
    rng = random.Random(2)
    for t in range(1, 7):
        z = random_rank_t(ctx, t, rng).coeffs
        known = dict(enumerate(z))
        sol = solve_key_equation(ctx, known, t, 0, 6)
        seq = extend_sequence(ctx, sol.gamma, [z[6 - j] for j in range(1, t + 1)], 12)
        assert seq[:6] == list(z) and seq[6:] == list(z)


def test_nullity_one_at_beyond_half():
    pa = model_a_setup(field(2, 1, 6), 3)
    ctx = pa.ctx
    rng = random.Random(3)
    for _ in range(100):
        e = sample_model_a_error(ctx, pa, 3, 2, rng)
        sol = solve_key_equation(ctx, tail(e.poly.coeffs, 3), 2, 5, 6)
        assert sol.is_line
        # both gamma and gamma + gamma' satisfy the instantiated equation
        for g in (sol.gamma, sol.at(1, ctx)):
            assert residuals(ctx, g, tail(e.poly.coeffs, 3), 5, 6) == [0]


def test_errors():
    ctx = field(2, 1, 6)
    rng = random.Random(4)
    z = random_rank_t(ctx, 3, rng).coeffs
    with pytest.raises(Inconsistent):
        solve_key_equation(ctx, tail(z, 2), 1, 3, 6)
    with pytest.raises(NullityTooHigh):
        solve_key_equation(ctx, tail(z, 3), 3, 6, 6)
    with pytest.raises(Inconsistent):
        solve_key_equation(ctx, tail(z, 3), 0, 3, 6)
    with pytest.raises(ValueError):
        solve_key_equation(ctx, tail(z, 4), 2, 4, 6)


def test_extend_zero_gamma_and_perturbation():
    ctx = field(2, 1, 8)
    assert extend_sequence(ctx, [0, 0], [5, 6], 4) == [0] * 4
    rng = random.Random(5)
    caught = 0
    for _ in range(100):
        z = random_rank_t(ctx, 2, rng).coeffs
        known = tail(z, 3)
        g = solve_key_equation(ctx, known, 2, 5, 8).gamma
        assert check_period_n(ctx, g, known)
        bad = list(g)
        i = rng.randrange(2)
        bad[i] = ctx.add(bad[i], ctx.random_nonzero(rng))
        caught += not check_period_n(ctx, bad, known)
    assert caught >= 95
    assert not check_period_n(ctx, [0, 0], {5: 1, 6: 1, 7: 1})
