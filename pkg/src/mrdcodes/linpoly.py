"""Linearized polynomials L(x) = sum_i a_i x^[i] over F_{q^n}."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .field import FieldContext


@dataclass(frozen=True)
class LinearizedPoly:
    ctx: FieldContext
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        n = self.ctx.n
        if len(coeffs) > n:
            raise ValueError(f"at most {n} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs + (0,) * (n - len(coeffs)))

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def monomial(cls, ctx, i, a=1):
        c = [0] * ctx.n
        c[i % ctx.n] = a
        return cls(ctx, c)

    def __call__(self, x):
        return evaluate(self, x)

    def __add__(self, other):
        ctx = self.ctx
        return LinearizedPoly(ctx, [ctx.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        ctx = self.ctx
        return LinearizedPoly(ctx, [ctx.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def is_zero(self):
        return not any(self.coeffs)

    def evaluations(self, points=None):
        """Values at ``points`` (default: the context's alphas)."""
        pts = self.ctx.alphas if points is None else points
        return [evaluate(self, x) for x in pts]

    def rank(self):
        return rank(self)


def evaluate(L: LinearizedPoly, x):
    ctx = L.ctx
    acc = 0
    for i, a in enumerate(L.coeffs):
        if a:
            acc = ctx.add(acc, ctx.mul(a, ctx.frob(x, i)))
    return acc


def dickson_matrix(L: LinearizedPoly):
    """D[i][j] = a_{(i-j) mod n}^[j]; column 0 is the coefficient vector."""
    ctx, n, a = L.ctx, L.ctx.n, L.coeffs
    return [[ctx.frob(a[(i - j) % n], j) for j in range(n)] for i in range(n)]


def rank(L: LinearizedPoly) -> int:
    """Rank of L as an F_q-linear map, via its Dickson matrix over F_{q^n}."""
    if L.is_zero():
        return 0
    return linalg.rank(dickson_matrix(L), L.ctx)


def to_fq_matrix(L: LinearizedPoly):
    """Matrix over F_q of L in the alphas basis: column j = coordinates of L(alphas[j])."""
    ctx = L.ctx
    cols = [ctx.fq_coords(evaluate(L, a)) for a in ctx.alphas]
    return [list(r) for r in zip(*cols)]


def fq_matrix_rank(L: LinearizedPoly) -> int:
    """Rank of :func:`to_fq_matrix` computed over F_q."""
    return linalg.rank(to_fq_matrix(L), L.ctx)


def from_fq_matrix(ctx: FieldContext, mat):
    """The unique linearized polynomial whose matrix in the alphas basis is ``mat``."""
    images = [ctx.sum(ctx.mul(mat[i][j], ctx.alphas[i]) for i in range(ctx.n))
              for j in range(ctx.n)]
    return interpolate(ctx, images)


def moore_matrix(ctx: FieldContext, points=None):
    pts = ctx.alphas if points is None else points
    return [[ctx.frob(a, j) for j in range(ctx.n)] for a in pts]


def interpolate(ctx: FieldContext, values, points=None):
    """The linearized polynomial L with L(points[i]) = values[i].

    Solves the Moore system directly; kept independent of the cached inverse
    in :mod:`mrdcodes.codes` so it can serve as a cross-check.
    """
    M = moore_matrix(ctx, points)
    coeffs, _ = linalg.solve(M, list(values), ctx)
    if coeffs is None:
        raise ValueError("points are not linearly independent over F_q")
    return LinearizedPoly(ctx, coeffs)


def _random_independent(ctx, t, rng):
    while True:
        vec = [ctx.random_nonzero(rng) for _ in range(t)]
        if ctx.rank_of(vec) == t:
            return vec


def from_outer_product(ctx: FieldContext, betas, psis):
    """Coefficients z_i = sum_j beta_j psi_j^[i], i.e. L(x) = sum_j beta_j Tr(psi_j x)."""
    coeffs = []
    for i in range(ctx.n):
        coeffs.append(ctx.sum(ctx.mul(b, ctx.frob(ps, i)) for b, ps in zip(betas, psis)))
    return LinearizedPoly(ctx, coeffs)


def random_rank_t(ctx: FieldContext, t: int, rng: random.Random) -> LinearizedPoly:
    if not 0 <= t <= ctx.n:
        raise ValueError(f"rank must lie in [0, {ctx.n}], got {t}")
    if t == 0:
        return LinearizedPoly.zero(ctx)
    betas = _random_independent(ctx, t, rng)
    psis = _random_independent(ctx, t, rng)
    return from_outer_product(ctx, betas, psis)
