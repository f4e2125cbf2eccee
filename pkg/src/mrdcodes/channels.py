"""Error generation for the two restricted channels.

Model A draws a rank-t error polynomial whose coefficients satisfy two
public affine constraints

    z_0^[n/2] - z_0 = alphas[theta1],    z_c^[n/2] - z_c = alphas[theta2],

with c = k-1 for Gabidulin codes and c = k for the twisted families.
Model B draws Frobenius-symmetric coefficient vectors and imposes no rank.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .errors import SamplingFailed, UnsupportedParity
from .field import FieldContext, sigma_minus_id, trace_sigma
from .linpoly import LinearizedPoly, from_outer_product

MAX_RETRIES = 64

GABIDULIN_BEYOND = "GabidulinBeyond"
TWISTED_BEYOND = "TwistedBeyond"


@dataclass(frozen=True)
class ModelAParams:
    """Public Model-A parameters.

    ``ctx`` is the context the parameters were selected for; its alphas may
    differ from the ones passed to :func:`model_a_setup` when the basis had to
    be rebuilt, so codes must be constructed on ``params.ctx``.
    """

    ctx: FieldContext
    theta1: int
    theta2: int
    variant: str = GABIDULIN_BEYOND

    def __post_init__(self):
        ctx = self.ctx
        if ctx.n % 2:
            raise UnsupportedParity(f"Model A needs even n, got n={ctx.n}")
        if self.variant not in (GABIDULIN_BEYOND, TWISTED_BEYOND):
            raise ValueError(f"unknown variant {self.variant!r}")
        for name, th in (("theta1", self.theta1), ("theta2", self.theta2)):
            if not 0 <= th < ctx.n:
                raise ValueError(f"{name}={th} out of range")
            if trace_sigma(ctx, ctx.alphas[th]):
                raise ValueError(f"{name}={th}: alphas[{th}] + alphas[{th}]^[n/2] != 0, "
                                 "constraint has no solution")

    @property
    def alpha1(self):
        return self.ctx.alphas[self.theta1]

    @property
    def alpha2(self):
        return self.ctx.alphas[self.theta2]

    def constraint_index(self, k):
        return k - 1 if self.variant == GABIDULIN_BEYOND else k

    def satisfied_by(self, coeffs, k) -> bool:
        ctx = self.ctx
        c = self.constraint_index(k)
        return (sigma_minus_id(ctx, coeffs[0]) == self.alpha1
                and sigma_minus_id(ctx, coeffs[c]) == self.alpha2)


@dataclass(frozen=True)
class ModelBParams:
    parity: str  # "odd" or "even"

    @classmethod
    def for_context(cls, ctx):
        return cls("odd" if ctx.n % 2 else "even")

    def check(self, ctx):
        if self.parity not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {self.parity!r}")
        if (ctx.n % 2 == 1) != (self.parity == "odd"):
            raise UnsupportedParity(f"parity {self.parity!r} does not match n={ctx.n}")


@dataclass(frozen=True)
class ErrorPattern:
    poly: LinearizedPoly
    vector: tuple
    rank: int

    @classmethod
    def from_poly(cls, poly):
        vec = tuple(poly.evaluations())
        return cls(poly, vec, poly.ctx.rank_of(vec))

    def to_dict(self):
        ctx = self.poly.ctx
        return {"coeffs": [ctx.to_hex(x) for x in self.poly.coeffs],
                "vector": [ctx.to_hex(x) for x in self.vector],
                "rank": self.rank}


def _sigma_kernel_basis(ctx):
    """An F_q-basis of ker(x -> x + x^[n/2]) (dimension n/2), ascending ints."""
    basis = []
    for x in range(1, ctx.order):
        if not trace_sigma(ctx, x) and ctx.rank_of(basis + [x]) == len(basis) + 1:
            basis.append(x)
            if len(basis) == ctx.n // 2:
                break
    return basis


def model_a_setup(ctx: FieldContext, k: int, variant: str = GABIDULIN_BEYOND) -> ModelAParams:
    """Pick admissible theta indices, rebuilding the evaluation basis if needed."""
    n = ctx.n
    if n % 2:
        raise UnsupportedParity(f"Model A needs even n, got n={n}")
    if variant == GABIDULIN_BEYOND and (n - k + 1) % 2:
        raise UnsupportedParity(f"Gabidulin beyond-half decoding needs n - k + 1 even "
                                f"(n={n}, k={k})")
    good = [i for i, a in enumerate(ctx.alphas) if not trace_sigma(ctx, a)]
    if len(good) < 2:
        kernel = _sigma_kernel_basis(ctx)
        alphas = list(kernel)
        for a in ctx.alphas:
            if len(alphas) == n:
                break
            if ctx.rank_of(alphas + [a]) == len(alphas) + 1:
                alphas.append(a)
        ctx = ctx.with_alphas(alphas)
        good = [0, 1]
    theta1, theta2 = good[0], good[1]
    if variant == GABIDULIN_BEYOND and k == 1:
        # both constraints bind z_0, so they must agree
        theta2 = theta1
    return ModelAParams(ctx, theta1, theta2, variant)


def sample_model_a_error(ctx: FieldContext, params: ModelAParams, k: int, t: int,
                         rng: random.Random) -> ErrorPattern:
    """Rank-exactly-t error obeying both Model-A constraints.

    With z_i = sum_j beta_j psi_j^[i] both constraints are F_p-affine in the
    coordinates of the betas, so for a random independent psi draw we solve
    that system, add a random kernel element and keep the result if its rank
    is t.
    """
    if ctx != params.ctx:
        raise ValueError("params were set up for a different context")
    n, N, Fp = ctx.n, ctx.N, ctx.prime_field
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}")
    c = params.constraint_index(k)
    if not 0 <= c < n:
        raise ValueError(f"constraint index {c} out of range")
    rhs = ctx.coords(params.alpha1) + ctx.coords(params.alpha2)
    for _ in range(MAX_RETRIES):
        psis = [ctx.random_nonzero(rng) for _ in range(t)]
        if ctx.rank_of(psis) < t:
            continue
        cols = []
        for psi in psis:
            psi_c = ctx.frob(psi, c)
            for e in range(N):
                unit = ctx.p ** e
                cols.append(ctx.coords(sigma_minus_id(ctx, ctx.mul(unit, psi)))
                            + ctx.coords(sigma_minus_id(ctx, ctx.mul(unit, psi_c))))
        mat = [list(r) for r in zip(*cols)]
        x, kernel = linalg.solve(mat, rhs, Fp)
        if x is None:
            continue
        for vec in kernel:
            coef = rng.randrange(ctx.p)
            if coef:
                x = [(a + coef * b) % ctx.p for a, b in zip(x, vec)]
        betas = [ctx.from_coords(x[j * N:(j + 1) * N]) for j in range(t)]
        poly = from_outer_product(ctx, betas, psis)
        if poly.rank() != t:
            continue
        return ErrorPattern.from_poly(poly)
    raise SamplingFailed(f"no rank-{t} Model-A error after {MAX_RETRIES} draws")


def model_b_free_indices(n):
    if n % 2:
        return list(range((n - 1) // 2 + 1))
    return list(range(n // 2)) + [n - 1]


def model_b_pairs(n):
    """(free index i, dependent index j) with z_j = z_i^[j]."""
    if n % 2:
        return [(i, n - i) for i in range(1, (n - 1) // 2 + 1)]
    return [(i, n - i - 1) for i in range(1, n // 2)]


def model_b_coeffs(ctx: FieldContext, free):
    """Complete a dict of free coefficients into the symmetric coefficient vector."""
    z = [0] * ctx.n
    for i, v in free.items():
        z[i] = v
    for i, j in model_b_pairs(ctx.n):
        z[j] = ctx.frob(z[i], j)
    return z


def sample_model_b_error(ctx: FieldContext, params: ModelBParams, rng: random.Random) -> ErrorPattern:
    params.check(ctx)
    free = {i: ctx.random_element(rng) for i in model_b_free_indices(ctx.n)}
    return ErrorPattern.from_poly(LinearizedPoly(ctx, model_b_coeffs(ctx, free)))


def satisfies_model_b(ctx: FieldContext, coeffs) -> bool:
    return all(coeffs[j] == ctx.frob(coeffs[i], j) for i, j in model_b_pairs(ctx.n))


def apply_error(c, e: ErrorPattern):
    """Componentwise c + e."""
    if len(e.vector) != len(c):
        raise ValueError("codeword and error lengths differ")
    ctx = e.poly.ctx
    return [ctx.add(a, b) for a, b in zip(c, e.vector)]
