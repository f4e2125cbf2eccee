"""The skew linear recurrence z_i = sum_{j=1..t} gamma_j z_{i-j}^[j] (indices mod n).

It expresses column 0 of the Dickson matrix of a rank-t error polynomial as
a combination of columns 1..t; the known tail of the coefficient vector
pins down gamma, after which the recurrence regenerates everything else.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import Inconsistent, NullityTooHigh
from .field import FieldContext


@dataclass(frozen=True)
class KeyEqSolution:
    """Either a unique gamma, or the line gamma + X * gamma_prime."""

    gamma: tuple
    gamma_prime: tuple | None = None

    @property
    def is_line(self):
        return self.gamma_prime is not None

    def at(self, X, ctx):
        if not self.is_line:
            return self.gamma
        return tuple(ctx.add(g, ctx.mul(X, gp)) for g, gp in zip(self.gamma, self.gamma_prime))


def key_equation_rows(ctx: FieldContext, known, t, lo, hi):
    """Rows (z_{i-1}^[1], ..., z_{i-t}^[t] | z_i) for i in [lo, hi)."""
    n = ctx.n
    rows = []
    for i in range(lo, hi):
        try:
            row = [ctx.frob(known[(i - j) % n], j) for j in range(1, t + 1)]
            rows.append(row + [known[i % n]])
        except KeyError as exc:
            raise ValueError(f"equation {i} references unknown coefficient z_{exc.args[0]}") from None
    return rows


def solve_key_equation(ctx: FieldContext, known, t, lo, hi) -> KeyEqSolution:
    """Solve the instantiated key equations for i in [lo, hi) by Gaussian elimination."""
    rows = key_equation_rows(ctx, known, t, lo, hi)
    if t == 0:
        if any(r[-1] for r in rows):
            raise Inconsistent("nonzero known coefficients but t = 0")
        return KeyEqSolution(())
    A = [r[:t] for r in rows]
    b = [r[t] for r in rows]
    if not A:
        A, b = [[0] * t], [0]
    x, kernel = linalg.solve(A, b, ctx)
    if x is None:
        raise Inconsistent(f"key equation has no solution for t={t}")
    if not kernel:
        return KeyEqSolution(tuple(x))
    if len(kernel) == 1:
        return KeyEqSolution(tuple(x), tuple(kernel[0]))
    raise NullityTooHigh(f"key equation has nullity {len(kernel)} for t={t}")


def residuals(ctx: FieldContext, gamma, known, lo, hi):
    """z_i - sum_j gamma_j z_{i-j}^[j] for each instantiated equation."""
    t = len(gamma)
    out = []
    for row in key_equation_rows(ctx, known, t, lo, hi):
        out.append(ctx.sub(row[t], ctx.dot(gamma, row[:t])))
    return out


def extend_sequence(ctx: FieldContext, gamma, seed, count):
    """Run the recurrence forward from seed = (z_{n-1}, ..., z_{n-t}).

    Returns ``count`` new terms z_0, z_1, ...; indices wrap mod n, so term
    n + i is the recurrence's prediction for z_i again.
    """
    t = len(gamma)
    if len(seed) != t:
        raise ValueError("seed length must equal len(gamma)")
    hist = list(reversed(seed))  # z_{n-t}, ..., z_{n-1}
    out = []
    for _ in range(count):
        z = 0
        for j in range(1, t + 1):
            if gamma[j - 1]:
                z = ctx.add(z, ctx.mul(gamma[j - 1], ctx.frob(hist[-j], j)))
        hist.append(z)
        out.append(z)
    return out


def check_period_n(ctx: FieldContext, gamma, knowns) -> bool:
    """Does the recurrence reproduce every known z_i and close up after n steps?"""
    n, t = ctx.n, len(gamma)
    try:
        seed = [knowns[n - j] for j in range(1, t + 1)]
    except KeyError:
        raise ValueError("knowns must include the seed z_{n-1}, ..., z_{n-t}") from None
    seq = extend_sequence(ctx, gamma, seed, n)
    return all(seq[i] == v for i, v in knowns.items())


def regenerate(ctx: FieldContext, gamma, knowns):
    """Full coefficient vector z_0..z_{n-1} produced from the known seed."""
    n, t = ctx.n, len(gamma)
    seed = [knowns[n - j] for j in range(1, t + 1)]
    return extend_sequence(ctx, gamma, seed, n)
