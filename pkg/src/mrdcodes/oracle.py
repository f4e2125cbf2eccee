"""Brute-force references used to cross-check the fast paths.

Everything here enumerates, so each entry point has a hard size guard.
"""

from __future__ import annotations

import itertools
import math

from . import linalg
from .codes import CodeSpec, encode
from .errors import TooLarge
from .field import FieldContext
from .linpoly import LinearizedPoly, evaluate

MAX_FIELD = 1 << 12
MAX_CODEWORDS = 1 << 22
MAX_SUBSPACES = 1 << 18


def _guard_field(ctx):
    if ctx.order > MAX_FIELD:
        raise TooLarge(f"field of order {ctx.order} is too large to enumerate")


def rank_bruteforce(ctx: FieldContext, L: LinearizedPoly) -> int:
    """n - dim ker(L), with the kernel counted by evaluating L everywhere."""
    _guard_field(ctx)
    zeros = sum(1 for x in ctx.elements() if evaluate(L, x) == 0)
    d = round(math.log(zeros, ctx.q))
    assert ctx.q ** d == zeros
    return ctx.n - d


def quad_roots_bruteforce(ctx: FieldContext, r, s):
    _guard_field(ctx)
    return [x for x in ctx.elements() if ctx.add(ctx.mul(x, ctx.add(x, r)), s) == 0]


def _messages(spec):
    count = spec.ctx.order ** spec.k
    if count > MAX_CODEWORDS:
        raise TooLarge(f"{count} codewords is too many to enumerate")
    return itertools.product(spec.ctx.elements(), repeat=spec.k)


def nearest_codeword_bruteforce(spec: CodeSpec, r):
    """Returns ``(codeword, distance, unique)`` over the whole code."""
    ctx = spec.ctx
    best, best_d, ties = None, None, 0
    for m in _messages(spec):
        c = encode(spec, m)
        d = ctx.rank_of([ctx.sub(a, b) for a, b in zip(r, c)])
        if best_d is None or d < best_d:
            best, best_d, ties = c, d, 1
        elif d == best_d:
            ties += 1
    return best, best_d, ties == 1


def min_rank_bruteforce(spec: CodeSpec, limit=1 << 17) -> int:
    """Minimum rank over all nonzero codewords, by enumeration.

    The encoder is additive, so for p = 2 the codewords are walked in Gray-code
    order, one XOR of a unit-message codeword per step.
    """
    ctx = spec.ctx
    count = ctx.order ** spec.k
    if count > limit:
        raise TooLarge(f"{count} codewords is too many to enumerate")
    best = spec.n
    if ctx.p != 2:
        for m in _messages(spec):
            if any(m):
                best = min(best, ctx.rank_of(encode(spec, m)))
        return best
    units = []
    for i in range(spec.k):
        for b in range(ctx.N):
            m = [0] * spec.k
            m[i] = 1 << b
            units.append(encode(spec, m))
    c = [0] * spec.n
    for step in range(1, count):
        bit = (step & -step).bit_length() - 1
        c = [a ^ u for a, u in zip(c, units[bit])]
        best = min(best, ctx.rank_of(c))
    return best


def subspaces(ctx: FieldContext, dim):
    """Every dim-dimensional F_q-subspace of F_{q^n}, as a tuple of basis elements.

    Walks reduced row echelon forms over F_q in the alphas coordinates.
    """
    n = ctx.n
    fq = [x for x in ctx.elements() if ctx.in_subfield(x, ctx.l)]
    for pivots in itertools.combinations(range(n), dim):
        free = [(r, c) for r in range(dim) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in itertools.product(fq, repeat=len(free)):
            rows = [[0] * n for _ in range(dim)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield tuple(ctx.sum(ctx.mul(row[j], ctx.alphas[j]) for j in range(n)) for row in rows)


def count_subspaces(q, n, dim):
    num = den = 1
    for i in range(dim):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def has_codeword_with_kernel(spec: CodeSpec, dim) -> bool:
    """Is there a nonzero codeword whose polynomial vanishes on some dim-dimensional subspace?

    Equivalent to the existence of a nonzero codeword of rank <= n - dim,
    decided by enumerating subspaces instead of codewords: for each subspace
    V = span(v_1..v_dim) the additive map message -> (f(v_1), ..., f(v_dim))
    must be injective.
    """
    ctx = spec.ctx
    total = count_subspaces(ctx.q, ctx.n, dim)
    if total > MAX_SUBSPACES:
        raise TooLarge(f"{total} subspaces is too many to enumerate")
    unit_polys = []
    for i in range(spec.k):
        for b in range(ctx.N):
            m = [0] * spec.k
            m[i] = ctx.p ** b
            unit_polys.append(spec.message_poly(m))
    width = spec.k * ctx.N
    if ctx.p == 2:
        # images of every field element under each unit polynomial, built by linearity
        tables = []
        for poly in unit_polys:
            basis_img = [evaluate(poly, 1 << b) for b in range(ctx.N)]
            tab = [0] * ctx.order
            for x in range(1, ctx.order):
                low = x & -x
                tab[x] = tab[x ^ low] ^ basis_img[low.bit_length() - 1]
            tables.append(tab)
        for vs in subspaces(ctx, dim):
            cols = []
            for tab in tables:
                packed = 0
                for v in vs:
                    packed = (packed << ctx.N) | tab[v]
                cols.append(packed)
            if linalg.xor_rank(cols) < width:
                return True
        return False
    Fp = ctx.prime_field
    for vs in subspaces(ctx, dim):
        cols = [sum((ctx.coords(evaluate(poly, v)) for v in vs), []) for poly in unit_polys]
        if linalg.rank(cols, Fp) < width:
            return True
    return False
