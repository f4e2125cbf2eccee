import random

import pytest

from mrdcodes import oracle
from mrdcodes.channels import ErrorPattern, apply_error
from mrdcodes.codes import admissible_eps, encode, new_code
from mrdcodes.errors import TooLarge
from mrdcodes.field import FieldContext
from mrdcodes.linpoly import LinearizedPoly, random_rank_t

from conftest import field


def test_rank_bruteforce_basics():
    ctx = field(3, 1, 4)
    assert oracle.rank_bruteforce(ctx, LinearizedPoly.monomial(ctx, 0)) == 4
    assert oracle.rank_bruteforce(ctx, LinearizedPoly(ctx, [ctx.neg(1), 1])) == 3
    with pytest.raises(TooLarge):
        oracle.rank_bruteforce(field(2, 1, 13), LinearizedPoly.zero(field(2, 1, 13)))


def test_quad_roots_bruteforce_basics():
    ctx = field(3, 1, 3)
    assert oracle.quad_roots_bruteforce(ctx, 0, 0) == [0]
    assert oracle.quad_roots_bruteforce(ctx, 1, 0) == sorted([0, ctx.neg(1)])


def test_nearest_codeword():
    ctx = field(2, 1, 4)
    spec = new_code(ctx, "GG", 2)
    rng = random.Random(0)
    for _ in range(10):
        m = [ctx.random_element(rng) for _ in range(2)]
        c = encode(spec, m)
        assert oracle.nearest_codeword_bruteforce(spec, c) == (c, 0, True)
        e = ErrorPattern.from_poly(random_rank_t(ctx, 1, rng))
        best, d, unique = oracle.nearest_codeword_bruteforce(spec, apply_error(c, e))
        assert (best, d, unique) == (c, 1, True)


def test_nearest_codeword_guard():
    ctx = FieldContext(2, 1, 12)
    with pytest.raises(TooLarge):
        oracle.nearest_codeword_bruteforce(new_code(ctx, "GG", 2), [0] * 12)


def test_subspace_count_matches_enumeration():
    ctx = field(2, 1, 4)
    for dim in range(5):
        assert sum(1 for _ in oracle.subspaces(ctx, dim)) == oracle.count_subspaces(2, 4, dim)
    ctx = field(3, 1, 3)
    subs = list(oracle.subspaces(ctx, 2))
    assert len(subs) == oracle.count_subspaces(3, 3, 2) == 13
    assert all(ctx.rank_of(list(v)) == 2 for v in subs)


@pytest.mark.parametrize("family", ["GG", "GTG"])
def test_kernel_certificate_agrees_with_enumeration(family):
    ctx = field(2, 2, 3)
    for k in (1, 2):
        if family == "GG":
            spec = new_code(ctx, "GG", k)
        else:
            spec = new_code(ctx, "GTG", k, 1, admissible_eps(ctx, "GTG", k)[0])
        mr = oracle.min_rank_bruteforce(spec)
        for dim in range(1, 3):
            assert oracle.has_codeword_with_kernel(spec, dim) == (mr <= ctx.n - dim)


def test_kernel_certificate_detects_non_mrd():
    ctx = field(2, 1, 4)
    spec = new_code(ctx, "GTG", 1, 1, 1, require_mrd=False)
    assert oracle.min_rank_bruteforce(spec) == 3
    assert oracle.has_codeword_with_kernel(spec, 1)
    ctx = field(3, 1, 3)
    spec = new_code(ctx, "GTG", 1, 0, 2, require_mrd=False)  # norm(-1) = -1 = (-1)^3
    assert oracle.has_codeword_with_kernel(spec, 1)
