"""Gabidulin, twisted and additive twisted Gabidulin codes.

All three families evaluate a message polynomial at the context's alphas:

* ``GG``:   f(x) = sum_{i<k} m_i x^[i]
* ``GTG``:  f(x) = sum_{i<k} m_i x^[i] + eps * m_0^(q^h) x^[k]
* ``AGTG``: f(x) = sum_{i<k} m_i x^[i] + eps * m_0^(q0^h) x^[k]

so the codeword is m~ . M^T with M the Moore matrix (alphas[i]^[j]).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .errors import InvalidDimension, InvalidEpsilon
from .field import FieldContext, norm_to_base
from .linpoly import LinearizedPoly, moore_matrix

FAMILIES = ("GG", "GTG", "AGTG")


@dataclass(frozen=True)
class CodeSpec:
    ctx: FieldContext
    family: str
    k: int
    h: int = 0
    eps: int = 0
    _mt_inv: tuple = field(default=(), repr=False, compare=False)

    @property
    def n(self):
        return self.ctx.n

    @property
    def twisted(self):
        return self.family != "GG"

    def twist(self, m0):
        """The twisted coefficient eps * m0^(q^h) (GTG) or eps * m0^(q0^h) (AGTG)."""
        ctx = self.ctx
        if self.family == "GTG":
            return ctx.mul(self.eps, ctx.frob_p(m0, ctx.l * self.h))
        if self.family == "AGTG":
            return ctx.mul(self.eps, ctx.frob_p(m0, ctx.l0 * self.h))
        return 0

    def untwist(self, value):
        """Inverse of :meth:`twist`: the m0 with twist(m0) = value."""
        ctx = self.ctx
        base = ctx.div(value, self.eps)
        e = ctx.l * self.h if self.family == "GTG" else ctx.l0 * self.h
        return ctx.frob_p(base, -e)

    def message_poly(self, m) -> LinearizedPoly:
        coeffs = list(m) + [0] * (self.n - self.k)
        if self.twisted:
            coeffs[self.k] = self.twist(m[0])
        return LinearizedPoly(self.ctx, coeffs)


def new_code(ctx: FieldContext, family: str, k: int, h: int = 0, eps: int = 0, *,
             require_mrd: bool = True) -> CodeSpec:
    """Validate parameters and build a :class:`CodeSpec`.

    For the twisted families the norm of ``eps`` must avoid (-1)^(nk)
    (resp. (-1)^(nku) for the norm down to F_q0); otherwise the family is
    not MRD and :class:`InvalidEpsilon` is raised. ``require_mrd=False``
    skips that check (the encoder and decoders do not depend on it), which is
    only useful for experiments with non-MRD twisted codes, e.g. over F_2.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    n = ctx.n
    if not 1 <= k < n:
        raise InvalidDimension(f"need 1 <= k < n, got k={k}, n={n}")
    if h < 0:
        raise ValueError("h must be non-negative")
    if family == "GG":
        h, eps = 0, 0
    else:
        if not eps:
            raise InvalidEpsilon("eps must be nonzero")
        if family == "GTG":
            h %= n
            bad = ctx.pow(ctx.neg(1), n * k)
            if require_mrd and norm_to_base(ctx, eps, "q") == bad:
                raise InvalidEpsilon(f"Norm_{{q^n/q}}(eps) = (-1)^(nk); code would not be MRD")
        else:
            if ctx.q0 is None:
                raise ValueError("AGTG codes need a context with l0 set")
            h %= n * ctx.u
            bad = ctx.pow(ctx.neg(1), n * k * ctx.u)
            if require_mrd and norm_to_base(ctx, eps, "q0") == bad:
                raise InvalidEpsilon(f"Norm_{{q^n/q0}}(eps) = (-1)^(nku); code would not be MRD")
    mt = [list(r) for r in zip(*moore_matrix(ctx))]
    mt_inv = tuple(tuple(r) for r in linalg.inverse(mt, ctx))
    return CodeSpec(ctx, family, k, h, eps, mt_inv)


def admissible_eps(ctx: FieldContext, family: str, k: int):
    """All eps accepted by :func:`new_code` for these parameters (ascending)."""
    if family == "GG":
        return []
    base = "q" if family == "GTG" else "q0"
    u = 1 if family == "GTG" else ctx.u
    bad = ctx.pow(ctx.neg(1), ctx.n * k * u)
    return [e for e in range(1, ctx.order) if norm_to_base(ctx, e, base) != bad]


def encode(spec: CodeSpec, m):
    m = list(m)
    if len(m) != spec.k:
        raise ValueError(f"message must have {spec.k} symbols, got {len(m)}")
    return spec.message_poly(m).evaluations()


def eta_transform(spec: CodeSpec, r):
    """eta = r . (M^T)^-1, the coefficient vector of the interpolating polynomial of r."""
    ctx = spec.ctx
    if len(r) != spec.n:
        raise ValueError(f"received word must have {spec.n} symbols")
    inv = spec._mt_inv
    return [ctx.dot(r, [inv[i][j] for i in range(spec.n)]) for j in range(spec.n)]


def verify_codeword(spec: CodeSpec, c):
    """Membership test. Returns ``(True, message)`` or ``(False, None)``."""
    eta = eta_transform(spec, c)
    k = spec.k
    tail_start = k + 1 if spec.twisted else k
    if any(eta[tail_start:]):
        return False, None
    m = eta[:k]
    if spec.twisted and eta[k] != spec.twist(m[0]):
        return False, None
    return True, m


def rank_distance(ctx: FieldContext, a, b) -> int:
    return ctx.rank_of([ctx.sub(x, y) for x, y in zip(a, b)])
