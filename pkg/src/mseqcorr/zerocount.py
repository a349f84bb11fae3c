"""Zeros of the affine polynomial A_a(v), of p_a(x) and of the linearized L_a(z).

Every count comes from two routes: brute evaluation over the whole field,
and the kernel of the GF(2)-linear part via Gaussian elimination.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf2
from .dobbertin import LParams, R_eval, _check_ctx
from .errors import NotInSubfield, PreconditionViolated, ZeroArgument
from .field import FieldCtx, elem_hex

BRUTE_MAX_K = 9
BRUTE_MAX_M = 20


@dataclass(frozen=True)
class ZeroReport:
    count: int
    zeros: tuple | None
    method: str

    def to_json(self) -> str:
        zs = None if self.zeros is None else [elem_hex(z) for z in self.zeros]
        return json.dumps({"count": self.count, "zeros": zs, "method": self.method})


def _require_subfield(ctx: FieldCtx, a: int, nonzero: bool = True):
    if nonzero and a == 0:
        raise ZeroArgument("a must be nonzero")
    if not ctx.is_subfield(a):
        raise NotInSubfield(f"a={elem_hex(a)} is not in GF(2^{ctx.k})")


# -- A_a(v) = a^(2^l) v^(2^2l) + v^(2^l) + a v + 1 --------------------------------


def A_eval(ctx: FieldCtx, lp: LParams, a: int, v: int) -> int:
    return _A_hom(ctx, lp, a, v) ^ 1


def _A_hom(ctx, lp, a, v):
    l = lp.l
    return (
        ctx.mul(ctx.frob(a, l), ctx.frob(v, 2 * l))
        ^ ctx.frob(v, l)
        ^ ctx.mul(a, v)
    )


def subfield_basis(ctx: FieldCtx) -> list[int]:
    """1, beta, ..., beta^(k-1): a GF(2)-basis of GF(2^k)."""
    return [int(x) for x in ctx.subfield[1 : ctx.k + 1]]


def _affine_zeros_brute(ctx, lp, a):
    v = ctx.subfield
    l = lp.l
    vals = ctx.vmul(ctx.frob(a, l), ctx.vfrob(v, 2 * l)) ^ ctx.vfrob(v, l) ^ ctx.vmul(a, v) ^ 1
    return tuple(sorted(int(z) for z in v[vals == 0]))


def _affine_zeros_kernel(ctx, lp, a):
    basis = subfield_basis(ctx)
    images = [_A_hom(ctx, lp, a, b) for b in basis]
    kern = [
        _combine(basis, c) for c in gf2.nullspace(images)
    ]
    v0 = R_eval(ctx, lp, ctx.inv(a))
    if A_eval(ctx, lp, a, v0) != 0:
        raise AssertionError(f"R(1/a) is not a zero of A_a for a={elem_hex(a)}")
    return tuple(sorted(v0 ^ w for w in gf2.span(kern)))


def _combine(basis, c):
    out = 0
    for j, b in enumerate(basis):
        if c >> j & 1:
            out ^= b
    return out


def affine_zeros_A(ctx: FieldCtx, lp: LParams, a: int, method: str = "kernel") -> ZeroReport:
    """Zeros of A_a in GF(2^k).

    ``method="kernel"`` shifts the kernel of the homogeneous part by the
    particular zero R(1/a); ``"brute"`` evaluates at every point; ``"both"``
    runs the two and insists they agree.
    """
    _check_ctx(ctx, lp)
    _require_subfield(ctx, a)
    if method == "brute":
        zs = _affine_zeros_brute(ctx, lp, a)
    elif method == "kernel":
        zs = _affine_zeros_kernel(ctx, lp, a)
    elif method == "both":
        zs = _affine_zeros_kernel(ctx, lp, a)
        if zs != _affine_zeros_brute(ctx, lp, a):
            raise AssertionError(f"brute and kernel zero sets of A_a differ at a={elem_hex(a)}")
        method = "kernel"
    else:
        raise ValueError(f"unknown method {method!r}")
    return ZeroReport(len(zs), zs, method)


def p_zeros(ctx: FieldCtx, lp: LParams, a: int) -> ZeroReport:
    """Zeros of x^(2^l+1) + x + a in GF(2^k) by enumeration (a = 0 allowed)."""
    _check_ctx(ctx, lp)
    _require_subfield(ctx, a, nonzero=False)
    x = ctx.subfield
    vals = ctx.vpow(x, (1 << lp.l) + 1) ^ x ^ a
    zs = tuple(sorted(int(z) for z in x[vals == 0]))
    return ZeroReport(len(zs), zs, "brute")


# -- M_i classes ------------------------------------------------------------------

M_CLASSES = {1: "M1", 2: "M2", 4: "M4"}


def classify_M(ctx: FieldCtx, lp: LParams, a: int, method: str = "kernel") -> str:
    count = affine_zeros_A(ctx, lp, a, method).count
    try:
        return M_CLASSES[count]
    except KeyError:
        raise AssertionError(f"A_a has {count} zeros at a={elem_hex(a)}") from None


def M_distribution(ctx: FieldCtx, lp: LParams, method: str = "kernel") -> tuple[int, int, int]:
    tally = {"M1": 0, "M2": 0, "M4": 0}
    for a in ctx.subfield[1:]:
        tally[classify_M(ctx, lp, int(a), method)] += 1
    return tally["M1"], tally["M2"], tally["M4"]


def theorem1_expected(k: int) -> tuple[int, int, int]:
    if k % 2:
        return (2**k + 1) // 3, 2 ** (k - 1) - 1, (2 ** (k - 1) - 1) // 3
    return (2**k - 1) // 3, 2 ** (k - 1), (2 ** (k - 1) - 2) // 3


def M2_trace_criterion(ctx: FieldCtx, lp: LParams, a: int) -> int:
    """Tr_k(R(1/a) + 1); equals 1 exactly when a is in M2."""
    _require_subfield(ctx, a)
    return ctx.trace_k(R_eval(ctx, lp, ctx.inv(a)) ^ 1)


def lemma3_check(ctx: FieldCtx, lp: LParams, a: int) -> bool:
    _require_subfield(ctx, a)
    v0 = R_eval(ctx, lp, ctx.inv(a))
    t0 = ctx.trace_k(v0)
    tr1 = ctx.k & 1
    lpr = lp.l_prime
    for z in affine_zeros_A(ctx, lp, a).zeros:
        if ctx.trace_k(z) != t0:
            return False
        c = lpr + 1 if z == v0 else lpr
        expected = ((lpr * t0) + (c & 1) * tr1) & 1
        if ctx.trace_k(ctx.mul(a, ctx.pow(z, (1 << lp.l) + 1))) != expected:
            return False
    return True


# -- L_a(z) = z^(2^(k+l)) + r^(2^l) a^(2^l) z^(2^2l) + r a z -----------------------


def _L_preconditions(ctx: FieldCtx, lp: LParams, a: int):
    _check_ctx(ctx, lp)
    if ctx.k % 2 == 0 or lp.l % 2 == 0:
        raise PreconditionViolated("L_a needs k and l odd")
    _require_subfield(ctx, a, nonzero=False)


def _L_coeffs(ctx, lp, a):
    ra = ctx.mul(ctx.r, a)
    return ctx.frob(ra, lp.l), ra


def L_eval(ctx: FieldCtx, lp: LParams, a: int, z: int) -> int:
    c1, c0 = _L_coeffs(ctx, lp, a)
    return ctx.frob(z, ctx.k + lp.l) ^ ctx.mul(c1, ctx.frob(z, 2 * lp.l)) ^ ctx.mul(c0, z)


@lru_cache(maxsize=8)
def _frobenius_columns(ctx: FieldCtx, l: int):
    z = ctx.elements()
    return z, ctx.vfrob(z, ctx.k + l), ctx.vfrob(z, 2 * l)


def _L_zeros_brute(ctx, lp, a):
    z, zk, z2 = _frobenius_columns(ctx, lp.l)
    c1, c0 = _L_coeffs(ctx, lp, a)
    vals = zk ^ ctx.vmul(c1, z2) ^ ctx.vmul(c0, z)
    return tuple(int(x) for x in z[vals == 0])


def _L_kernel(ctx, lp, a):
    cols = [L_eval(ctx, lp, a, 1 << j) for j in range(ctx.m)]
    return gf2.nullspace(cols)


def linearized_kernel_L(
    ctx: FieldCtx, lp: LParams, a: int, method: str = "auto", enumerate_zeros: bool = True
) -> ZeroReport:
    """Zeros of L_a in GF(2^m); count is T_a = 2^(nullity).

    ``auto`` uses the kernel and cross-checks by brute force when m <= 20.
    """
    _L_preconditions(ctx, lp, a)
    kern = _L_kernel(ctx, lp, a)
    zs = tuple(sorted(gf2.span(kern))) if enumerate_zeros or method != "kernel" else None
    if method == "brute":
        bz = _L_zeros_brute(ctx, lp, a)
        return ZeroReport(len(bz), bz, "brute")
    if method == "both" or (method == "auto" and ctx.m <= BRUTE_MAX_M):
        if tuple(sorted(_L_zeros_brute(ctx, lp, a))) != zs:
            raise AssertionError(f"brute and kernel zero sets of L_a differ at a={elem_hex(a)}")
    elif method not in ("auto", "kernel"):
        raise ValueError(f"unknown method {method!r}")
    return ZeroReport(1 << len(kern), zs, "kernel")


def lemma6_value(ctx: FieldCtx, lp: LParams, a: int, z: int) -> int:
    """a * Tr_k^m(r z^(2^l+1))."""
    return ctx.mul(a, ctx.trace_k_m(ctx.mul(ctx.r, ctx.pow(z, (1 << lp.l) + 1))))


def lemma6_check(ctx: FieldCtx, lp: LParams, a: int) -> bool:
    _L_preconditions(ctx, lp, a)
    zeros = linearized_kernel_L(ctx, lp, a, method="kernel").zeros
    return all(lemma6_value(ctx, lp, a, z) in (0, 1) for z in zeros)


def cube_root_of_unity(ctx: FieldCtx) -> int:
    return ctx.pow(ctx.alpha, ctx.n // 3)


def closed_over_gf4(ctx: FieldCtx, zeros) -> bool:
    zs = set(zeros)
    w = cube_root_of_unity(ctx)
    return all((x ^ y) in zs for x in zs for y in zs) and all(ctx.mul(w, x) in zs for x in zs)
