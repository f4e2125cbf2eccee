"""Arithmetic in F_{q^n} with q = p^l, built as one degree-(l*n) extension of F_p.

Elements are plain ints: the coefficient vector (c_0, ..., c_{N-1}) of an
element of F_p[y]/(modulus) is stored as sum(c_j * p**j). For p = 2 this is
the usual bitmask, so addition is XOR. Multiplication goes through log/exp
tables and odd-characteristic addition through a Zech table, which keeps
everything O(1) at the desk-scale sizes this package targets (at most 2**16
elements).

Subfields (F_q, F_{q0}, the fixed field of [n/2]) are not built as separate
towers; membership is a Frobenius fixed-point test.
"""

from __future__ import annotations

import math
import random
from functools import cached_property

from . import linalg
from .errors import NoSolution

MAX_ORDER = 1 << 16


# ---------------------------------------------------------------------------
# polynomials over F_p (lists of ints, lowest degree first)


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a[:df] if len(a) > df else a)


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _prime_factors(m):
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _psub(a, b, p):
    size = max(len(a), len(b))
    a, b = list(a) + [0] * (size - len(a)), list(b) + [0] * (size - len(b))
    return _ptrim([(u - v) % p for u, v in zip(a, b)])


def _frobenius_of_x(f, p, times):
    """x^(p^times) mod f."""
    y = [0, 1]
    for _ in range(times):
        r, base, e = [1], y, p
        while e:
            if e & 1:
                r = _pmulmod(r, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        y = r
    return y


def is_irreducible(f, p) -> bool:
    """Rabin's test for a monic polynomial ``f`` over F_p."""
    f = _ptrim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _psub(_frobenius_of_x(f, p, d), x, p):
        return False
    for r in _prime_factors(d):
        g = _pgcd(f, _psub(_frobenius_of_x(f, p, d // r), x, p), p)
        if len(g) > 1:
            return False
    return True


def first_irreducible(p: int, degree: int):
    """Lexicographically first monic irreducible polynomial of ``degree``."""
    for tail in range(p ** degree):
        coeffs = [(tail // p ** j) % p for j in range(degree)] + [1]
        if coeffs[0] and is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise ValueError(f"no irreducible polynomial of degree {degree} over F_{p}")


# ---------------------------------------------------------------------------
# shared tables


class _Tables:
    """Log/exp/Zech tables for F_p[y]/(modulus); independent of q, s, alphas."""

    def __init__(self, p: int, modulus):
        self.p = p
        self.N = len(modulus) - 1
        self.order = p ** self.N
        self.modulus = tuple(modulus)
        Q = self.order
        self.q1 = Q - 1

        def to_digits(x):
            return [(x // p ** j) % p for j in range(self.N)]

        def from_digits(d):
            return sum(c * p ** j for j, c in enumerate(d))

        if p == 2:
            mod_int = from_digits(self.modulus)
            top = 1 << self.N

            def mulmod(a, b):
                r = 0
                while b:
                    if b & 1:
                        r ^= a
                    b >>= 1
                    a <<= 1
                    if a & top:
                        a ^= mod_int
                return r
        else:
            def mulmod(a, b):
                return from_digits(_pmulmod(_ptrim(to_digits(a)), _ptrim(to_digits(b)),
                                            self.modulus, p))

        def powmod(a, e):
            r = 1
            while e:
                if e & 1:
                    r = mulmod(r, a)
                a = mulmod(a, a)
                e >>= 1
            return r

        factors = _prime_factors(Q - 1) if Q > 2 else []
        gen = None
        for cand in range(2 if Q > 2 else 1, Q):
            if all(powmod(cand, (Q - 1) // r) != 1 for r in factors):
                gen = cand
                break
        self.generator = gen
        exp = [0] * (2 * (Q - 1))
        log = [0] * Q
        x = 1
        if p == 2 and gen == 2:
            for k in range(Q - 1):
                exp[k] = x
                log[x] = k
                x <<= 1
                if x & top:
                    x ^= mod_int
        else:
            for k in range(Q - 1):
                exp[k] = x
                log[x] = k
                x = mulmod(x, gen)
        for k in range(Q - 1, 2 * (Q - 1)):
            exp[k] = exp[k - (Q - 1)]
        self.exp = exp
        self.log = log
        if p != 2:
            # zech[k] = log(1 + g^k), or -1 when 1 + g^k = 0
            zech = [0] * (Q - 1)
            for k in range(Q - 1):
                v = exp[k]
                v1 = v - (p - 1) if v % p == p - 1 else v + 1
                zech[k] = log[v1] if v1 else -1
            self.zech = zech
            self.half = (Q - 1) // 2


# ---------------------------------------------------------------------------
# the field context


class FieldContext:
    """Immutable description of F_{q^n} together with twist ``s`` and evaluation points.

    Parameters
    ----------
    p, l, n : int
        Characteristic, q = p**l, extension degree over F_q.
    s : int
        Twist exponent; [i] denotes the Frobenius power q**(s*i). Must be
        coprime to ``n``.
    l0 : int, optional
        For additive twisted codes, q0 = p**l0 with l0 dividing l.
    modulus : sequence of int, optional
        Monic irreducible polynomial of degree l*n over F_p, lowest
        coefficient first. Defaults to the lexicographically first one.
    alphas : sequence of int, optional
        n F_q-linearly independent evaluation points. Defaults to
        1, g, ..., g**(n-1) for the table generator g.
    """

    def __init__(self, p, l, n, s=1, *, l0=None, modulus=None, alphas=None, _tables=None):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"p={p} is not prime")
        if l < 1 or n < 1:
            raise ValueError("l and n must be positive")
        if math.gcd(s, n) != 1:
            raise ValueError(f"gcd(s, n) must be 1, got s={s}, n={n}")
        if l0 is not None and (l0 < 1 or l % l0):
            raise ValueError(f"l0={l0} must divide l={l}")
        N = l * n
        if p ** N > MAX_ORDER:
            raise ValueError(f"field of order {p}^{N} exceeds the supported size {MAX_ORDER}")
        if _tables is None:
            if modulus is None:
                modulus = first_irreducible(p, N)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != N + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {N}")
            if not is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
            _tables = _Tables(p, modulus)
        self._t = _tables
        self.p, self.l, self.n, self.s = p, l, n, s % n if n > 1 else s
        self.l0 = l0
        self.u = l // l0 if l0 else None
        self.N = N
        self.q = p ** l
        self.q0 = p ** l0 if l0 else None
        self.order = p ** N
        self.modulus = _tables.modulus
        self._exp, self._log = _tables.exp, _tables.log
        self._q1 = self.order - 1
        # frob[i][x] = x^[i] = x^(q^(s*i))
        frob = []
        for i in range(n):
            e = pow(self.q, (self.s * i) % n, self._q1) if self._q1 > 1 else 1
            exp, log, q1 = self._exp, self._log, self._q1
            frob.append([0] + [exp[(log[x] * e) % q1] for x in range(1, self.order)])
        self._frob = frob
        if alphas is None:
            g = _tables.generator
            alphas = [self.pow(g, j) for j in range(n)]
        self.alphas = tuple(int(a) for a in alphas)
        if len(self.alphas) != n:
            raise ValueError(f"need {n} evaluation points, got {len(self.alphas)}")
        # F_p-basis of F_q: powers of a generator of F_q^*
        w = self._exp[self._q1 // (self.q - 1)] if self.q > 1 else 1
        self.fq_basis = tuple(self.pow(w, a) for a in range(l))
        cols = [self.coords(self.mul(b, a)) for a in self.alphas for b in self.fq_basis]
        mat = [list(r) for r in zip(*cols)]
        try:
            self._alpha_coord_inv = linalg.inverse(mat, self.prime_field)
        except ZeroDivisionError:
            raise ValueError("alphas are not linearly independent over F_q") from None

    def with_alphas(self, alphas) -> "FieldContext":
        """Same field and twist with different evaluation points."""
        return FieldContext(self.p, self.l, self.n, self.s, l0=self.l0, alphas=alphas,
                            _tables=self._t)

    def __repr__(self):
        extra = f", q0={self.q0}" if self.q0 else ""
        return f"FieldContext(q={self.q}, n={self.n}, s={self.s}{extra})"

    def __eq__(self, other):
        return (isinstance(other, FieldContext) and self.p == other.p and self.l == other.l
                and self.n == other.n and self.s == other.s and self.l0 == other.l0
                and self.modulus == other.modulus and self.alphas == other.alphas)

    def __hash__(self):
        return hash((self.p, self.l, self.n, self.s, self.l0, self.modulus, self.alphas))

    # -- basic arithmetic -----------------------------------------------------

    @cached_property
    def prime_field(self):
        return linalg.PrimeField(self.p)

    @property
    def generator(self):
        return self._t.generator

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        la, lb = self._log[a], self._log[b]
        z = self._t.zech[(lb - la) % self._q1]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a):
        if self.p == 2 or not a:
            return a
        return self._exp[self._log[a] + self._t.half]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self._q1 - self._log[a]) % self._q1]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e == 0:
            return 1
        if not a:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % self._q1]

    def sum(self, values):
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, xs, ys):
        acc = 0
        for x, y in zip(xs, ys):
            if x and y:
                acc = self.add(acc, self.mul(x, y))
        return acc

    def scalar(self, c):
        """Embed an integer into the prime field."""
        return c % self.p

    def frob(self, x, i):
        """x^[i] = x^(q^(s*i)), with i taken mod n (negative i inverts)."""
        return self._frob[i % self.n][x]

    def frob_p(self, x, e):
        """x^(p^e), the e-th power of the absolute Frobenius."""
        if not x:
            return 0
        return self._exp[(self._log[x] * pow(self.p, e % self.N, self._q1)) % self._q1]

    def log(self, x):
        return self._log[x]

    def exp(self, k):
        return self._exp[k % self._q1]

    # -- coordinates, serialization, sampling ---------------------------------

    def coords(self, x):
        p = self.p
        return [(x // p ** j) % p for j in range(self.N)]

    def from_coords(self, digits):
        p = self.p
        return sum((int(c) % p) * p ** j for j, c in enumerate(digits))

    def to_hex(self, x) -> str:
        return format(x, "x")

    def from_hex(self, h: str) -> int:
        x = int(h, 16)
        if not 0 <= x < self.order:
            raise ValueError(f"{h!r} is not an element of F_{self.p}^{self.N}")
        return x

    def elements(self):
        return range(self.order)

    def random_element(self, rng: random.Random):
        return rng.randrange(self.order)

    def random_nonzero(self, rng: random.Random):
        return rng.randrange(1, self.order)

    # -- subfields and F_q structure ------------------------------------------

    def in_subfield(self, x, e) -> bool:
        """True iff x lies in F_{p^e} (x^(p^e) = x)."""
        return self.frob_p(x, e) == x

    def fq_coords(self, x):
        """Coordinates of x over F_q in the basis ``alphas`` (n elements of F_q)."""
        c = linalg.matvec(self._alpha_coord_inv, self.coords(x), self.prime_field)
        l = self.l
        out = []
        for j in range(self.n):
            v = 0
            for a in range(l):
                if c[j * l + a]:
                    v = self.add(v, self.mul(c[j * l + a], self.fq_basis[a]))
            out.append(v)
        return out

    def rank_of(self, vec) -> int:
        """Number of F_q-linearly independent entries of ``vec`` (the rank weight)."""
        scaled = [self.mul(b, v) for v in vec for b in self.fq_basis]
        if self.p == 2:
            return linalg.xor_rank(scaled) // self.l
        return linalg.rank([self.coords(v) for v in scaled], self.prime_field) // self.l

    def frob_matrix(self, i):
        """F_p-matrix (rows x cols = N x N) of x -> x^[i] in the polynomial basis."""
        cols = [self.coords(self.frob(self.p ** j, i)) for j in range(self.N)]
        return [list(r) for r in zip(*cols)]

    def linear_map_matrix(self, fn):
        """F_p-matrix of an F_p-linear map given as a Python callable."""
        cols = [self.coords(fn(self.p ** j)) for j in range(self.N)]
        return [list(r) for r in zip(*cols)]


# ---------------------------------------------------------------------------
# operations


def frobenius_pow(ctx: FieldContext, x, i):
    return ctx.frob(x, i)


def norm_to_base(ctx: FieldContext, x, base="q"):
    """Norm from F_{q^n} down to F_q (``base='q'``) or F_{q0} (``base='q0'``)."""
    if base == "q":
        b = ctx.q
    elif base == "q0":
        if ctx.q0 is None:
            raise ValueError("norm to F_q0 requested but q0 is not configured")
        b = ctx.q0
    else:
        raise ValueError(f"unknown base {base!r}")
    if not x:
        return 0
    return ctx.pow(x, (ctx.order - 1) // (b - 1))


def _half(ctx):
    if ctx.n % 2:
        raise ValueError(f"[n/2] is not an involution for odd n={ctx.n}")
    return ctx.n // 2


def trace_sigma(ctx: FieldContext, x):
    """x + x^[n/2]."""
    return ctx.add(x, ctx.frob(x, _half(ctx)))


def sigma_minus_id(ctx: FieldContext, x):
    """x^[n/2] - x."""
    return ctx.sub(ctx.frob(x, _half(ctx)), x)


def sigma_affine_system(ctx: FieldContext):
    """F_p matrix of x -> x^[n/2] - x together with a basis of its kernel."""
    h = _half(ctx)
    mat = ctx.linear_map_matrix(lambda v: ctx.sub(ctx.frob(v, h), v))
    kernel = linalg.nullspace(mat, ctx.N, ctx.prime_field)
    return mat, [ctx.from_coords(v) for v in kernel]


def solve_sigma_affine(ctx: FieldContext, a):
    """One solution x of x^[n/2] - x = a; the canonical pick has free coordinates zero."""
    if trace_sigma(ctx, a):
        raise NoSolution("x^[n/2] - x = a needs a + a^[n/2] = 0")
    mat, _ = sigma_affine_system(ctx)
    x, _ = linalg.solve(mat, ctx.coords(a), ctx.prime_field)
    if x is None:  # pragma: no cover - excluded by the trace test
        raise NoSolution("inconsistent sigma system")
    return ctx.from_coords(x)


def absolute_trace(ctx: FieldContext, x):
    """Tr_{F_{p^N}/F_p}(x)."""
    acc, y = 0, x
    for _ in range(ctx.N):
        acc = ctx.add(acc, y)
        y = ctx.frob_p(y, 1)
    return acc


def sqrt(ctx: FieldContext, a):
    """A square root of ``a``, or None if ``a`` is a non-residue.

    Characteristic 2 uses a^(2^(N-1)); odd characteristic uses
    Tonelli-Shanks, short-circuited by a^((Q+1)/4) when Q = 3 (mod 4).
    """
    if not a:
        return 0
    Q = ctx.order
    if ctx.p == 2:
        return ctx.frob_p(a, ctx.N - 1)
    if ctx.pow(a, (Q - 1) // 2) != 1:
        return None
    if Q % 4 == 3:
        return ctx.pow(a, (Q + 1) // 4)
    q, m = Q - 1, 0
    while q % 2 == 0:
        q //= 2
        m += 1
    z = next(c for c in range(2, Q) if ctx.pow(c, (Q - 1) // 2) != 1)
    c = ctx.pow(z, q)
    t = ctx.pow(a, q)
    r = ctx.pow(a, (q + 1) // 2)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = ctx.mul(t2, t2)
            i += 1
        b = c
        for _ in range(m - i - 1):
            b = ctx.mul(b, b)
        m = i
        c = ctx.mul(b, b)
        t = ctx.mul(t, c)
        r = ctx.mul(r, b)
    return r


def _trace_one_element(ctx):
    for c in range(1, ctx.order):
        if absolute_trace(ctx, c) == 1:
            return c
    raise AssertionError("no element of absolute trace 1")  # pragma: no cover


def solve_quadratic(ctx: FieldContext, r, s):
    """All roots of X^2 + r X + s over F_{q^n}, in ascending int order."""
    if ctx.p != 2:
        two = ctx.scalar(2)
        disc = ctx.sub(ctx.mul(r, r), ctx.mul(ctx.scalar(4), s))
        root = sqrt(ctx, disc)
        if root is None:
            return []
        inv2 = ctx.inv(two)
        minus_r = ctx.neg(r)
        roots = {ctx.mul(ctx.add(minus_r, root), inv2), ctx.mul(ctx.sub(minus_r, root), inv2)}
    elif not r:
        roots = {sqrt(ctx, s)}
    else:
        # X = r*y turns the equation into y^2 + y = beta
        beta = ctx.div(s, ctx.mul(r, r))
        if absolute_trace(ctx, beta):
            return []
        c = _trace_one_element(ctx)
        w, partial, bpow, cpow = 0, 0, beta, c
        for _ in range(1, ctx.N):
            partial = ctx.add(partial, cpow)
            cpow = ctx.frob_p(cpow, 1)
            bpow = ctx.frob_p(bpow, 1)
            w = ctx.add(w, ctx.mul(bpow, partial))
        roots = {ctx.mul(w, r), ctx.mul(ctx.add(w, 1), r)}
    out = sorted(x for x in roots if ctx.add(ctx.mul(x, ctx.add(x, r)), s) == 0)
    assert len(out) == len(roots), "quadratic root failed verification"
    return out
