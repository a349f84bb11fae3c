"""Dobbertin's F/G polynomial sequences, R(v), D(v), the reduced H_i(v) and Q(v).

All polynomials here live over GF(2^k), embedded in the ambient GF(2^m) of
a :class:`~mseqcorr.field.FieldCtx`. Integer constants added to field
elements contribute (c mod 2) times the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DegenerateX0, NotCoprime, PreconditionViolated, ZeroArgument
from .field import FieldCtx

SYMBOLIC_MAX_K = 11


@dataclass(frozen=True)
class LParams:
    k: int
    l: int
    l_prime: int
    e_table: tuple  # e_table[i - 1] == e(i) for i = 1..l'

    def e(self, i: int) -> int:
        return self.e_table[i - 1]


def make_lparams(k: int, l: int) -> LParams:
    if not 0 < l < k:
        raise PreconditionViolated(f"need 0 < l < k, got l={l}, k={k}")
    if math.gcd(l, k) != 1:
        raise NotCoprime(f"gcd({l}, {k}) != 1")
    lp = pow(l, -1, k) if k > 1 else 1
    e_table = tuple(sum(1 << (j * l) for j in range(i)) for i in range(1, lp + 1))
    return LParams(k=k, l=l, l_prime=lp, e_table=e_table)


def valid_ls(k: int) -> list[int]:
    return [l for l in range(1, k) if math.gcd(l, k) == 1]


def _check_ctx(ctx: FieldCtx, lp: LParams):
    if ctx.k != lp.k:
        raise PreconditionViolated(f"LParams for k={lp.k} used with field k={ctx.k}")


def _exp(ctx: FieldCtx, hi: int, lo: int) -> int:
    """2^hi - 2^lo reduced mod 2^m - 1 (hi > lo, so the true exponent is positive)."""
    return (pow(2, hi, ctx.n) - pow(2, lo, ctx.n)) % ctx.n or ctx.n


# -- F and G -----------------------------------------------------------------


def FG_all(ctx: FieldCtx, lp: LParams, v: int, upto: int):
    """Lists F[1..upto], G[1..upto] evaluated at v (index 0 unused)."""
    _check_ctx(ctx, lp)
    l = lp.l
    F = [None, v, ctx.pow(v, (1 << l) + 1)]
    G = [None, 0, ctx.pow(v, (1 << l) - 1)]
    for i in range(1, upto - 1):
        c1 = ctx.frob(v, (i + 1) * l)
        c2 = ctx.pow(v, _exp(ctx, (i + 1) * l, i * l))
        F.append(ctx.mul(c1, F[i + 1]) ^ ctx.mul(c2, F[i]))
        G.append(ctx.mul(c1, G[i + 1]) ^ ctx.mul(c2, G[i]))
    return F[: upto + 1], G[: upto + 1]


def FG_eval(ctx: FieldCtx, lp: LParams, i: int, v: int) -> tuple[int, int]:
    if not 1 <= i <= lp.l_prime + 1:
        raise PreconditionViolated(f"i={i} outside [1, l'+1]")
    F, G = FG_all(ctx, lp, v, max(i, 2))
    return F[i], G[i]


def R_eval(ctx: FieldCtx, lp: LParams, v: int) -> int:
    F, G = FG_all(ctx, lp, v, max(lp.l_prime, 2))
    out = G[lp.l_prime]
    for i in range(1, lp.l_prime + 1):
        out ^= F[i]
    return out


def R_vec(ctx: FieldCtx, lp: LParams, v) -> np.ndarray:
    """R evaluated elementwise on an array (same recursion, vectorised)."""
    _check_ctx(ctx, lp)
    v = np.asarray(v, dtype=np.int64)
    l, lpr = lp.l, lp.l_prime
    F = [None, v, ctx.vpow(v, (1 << l) + 1)]
    G = [None, np.zeros_like(v), ctx.vpow(v, (1 << l) - 1)]
    for i in range(1, lpr - 1):
        c1 = ctx.vfrob(v, (i + 1) * l)
        c2 = ctx.vpow(v, _exp(ctx, (i + 1) * l, i * l))
        F.append(ctx.vmul(c1, F[i + 1]) ^ ctx.vmul(c2, F[i]))
        G.append(ctx.vmul(c1, G[i + 1]) ^ ctx.vmul(c2, G[i]))
    out = G[lpr].copy()
    for i in range(1, lpr + 1):
        out ^= F[i]
    return out


def D_eval(ctx: FieldCtx, lp: LParams, v: int) -> int:
    _check_ctx(ctx, lp)
    if v == 0:
        raise ZeroArgument("D(0) is undefined")
    num = ctx.const(lp.l_prime + 1)
    for i in range(1, lp.l_prime + 1):
        num ^= ctx.frob(v, i * lp.l)
    return ctx.div(num, ctx.pow(v, (1 << lp.l) + 1))


# -- H_i and its reduced exponent set -----------------------------------------


@dataclass(frozen=True)
class ExpSet:
    """Sparse GF(2) polynomial in v with all coefficients 1."""

    exponents: frozenset
    constant: int = 0

    def __str__(self):
        terms = [str(e) for e in sorted(self.exponents)]
        if self.constant:
            terms.insert(0, "const")
        return "[" + ", ".join(terms) + "]"

    def __len__(self):
        return len(self.exponents) + self.constant

    def evaluate(self, ctx: FieldCtx, v: int) -> int:
        out = self.constant
        for e in self.exponents:
            out ^= ctx.pow(v, e)
        return out


def reduce_exponent(e: int, k: int) -> int:
    """Shift e right until odd, then reduce mod 2^k - 1. 0 means a constant term.

    Shifting the integer first matters: reducing mod 2^k - 1 before the
    shift picks a different cyclotomic representative once the support of
    e(i) wraps past bit k, and the result no longer matches the closed form.
    """
    if e == 0:
        return 0
    while not e & 1:
        e >>= 1
    return e % ((1 << k) - 1)


def H_expset(lp: LParams, i: int) -> ExpSet:
    """Symbolic [1 + (1 + v)^e(i)] with pairs of equal terms cancelled."""
    if not 1 <= i <= lp.l_prime:
        raise PreconditionViolated(f"i={i} outside [1, l']")
    if lp.k > SYMBOLIC_MAX_K:
        raise PreconditionViolated(f"symbolic expansion capped at k <= {SYMBOLIC_MAX_K}")
    support = [1 << (j * lp.l) for j in range(i)]
    exps: set[int] = set()
    const = 0
    for size in range(1, i + 1):
        for sub in combinations(support, size):
            r = reduce_exponent(sum(sub), lp.k)
            if r == 0:
                const ^= 1
            else:
                exps ^= {r}
    return ExpSet(frozenset(exps), const)


def H_eval(ctx: FieldCtx, lp: LParams, i: int, v: int) -> int:
    """Closed form v * sum_{j<i} (1 + v)^(e(j+1) - 1)."""
    _check_ctx(ctx, lp)
    if not 1 <= i <= lp.l_prime:
        raise PreconditionViolated(f"i={i} outside [1, l']")
    w = 1 ^ v
    acc = 0
    for j in range(1, i + 1):
        acc ^= ctx.pow(w, lp.e(j) - 1)
    return ctx.mul(v, acc)


def Q_eval(ctx: FieldCtx, lp: LParams, x0: int, v: int) -> int:
    _check_ctx(ctx, lp)
    if x0 == 0:
        raise ZeroArgument("Q needs x0 != 0")
    coef = ctx.pow(x0, (1 << lp.l) + 1) ^ x0
    return ctx.mul(coef, ctx.frob(v, lp.l)) ^ ctx.mul(ctx.mul(x0, x0), v) ^ x0


def lemma4_Q_identity(ctx: FieldCtx, lp: LParams, x0: int) -> bool:
    """Q(H_{l'}(1/x0)) == (1 + x0)(1 + 1/x0)^e(l')."""
    xi = ctx.inv(x0)
    lhs = Q_eval(ctx, lp, x0, H_eval(ctx, lp, lp.l_prime, xi))
    rhs = ctx.mul(1 ^ x0, ctx.pow(1 ^ xi, lp.e(lp.l_prime)))
    return lhs == rhs


def lemma4_trace_identity(ctx: FieldCtx, lp: LParams, i: int, v: int) -> bool:
    """Tr_k(H_i(v)) == Tr_k(1 + (1 + v)^e(i))."""
    lhs = ctx.trace_k(H_eval(ctx, lp, i, v))
    rhs = ctx.trace_k(1 ^ ctx.pow(1 ^ v, lp.e(i)))
    return lhs == rhs


def _x0_to_a(ctx: FieldCtx, lp: LParams, x0: int) -> int:
    if x0 in (0, 1):
        raise DegenerateX0(f"x0={x0} is degenerate")
    a = ctx.pow(x0, (1 << lp.l) + 1) ^ x0
    if a == 0:
        raise DegenerateX0("x0^(2^l+1) + x0 = 0")
    return a


def lemma5_check(ctx: FieldCtx, lp: LParams, x0: int) -> bool:
    """Tr_k(1 + (1 + 1/x0)^e(l')) == Tr_k(R(1/a)) with a = x0^(2^l+1) + x0."""
    _check_ctx(ctx, lp)
    a = _x0_to_a(ctx, lp, x0)
    lhs = ctx.trace_k(1 ^ ctx.pow(1 ^ ctx.inv(x0), lp.e(lp.l_prime)))
    return lhs == ctx.trace_k(R_eval(ctx, lp, ctx.inv(a)))


def R_equals_H(ctx: FieldCtx, lp: LParams, x0: int) -> bool:
    """Whether R(1/a) coincides with H_{l'}(1/x0); reported, never assumed."""
    a = _x0_to_a(ctx, lp, x0)
    return R_eval(ctx, lp, ctx.inv(a)) == H_eval(ctx, lp, lp.l_prime, ctx.inv(x0))
