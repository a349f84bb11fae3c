"""The long and short m-sequences and their crosscorrelation."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import BadDecimation
from .field import FieldCtx


@dataclass(frozen=True)
class CorrDistribution:
    """Value -> count multiset of a correlation or exponential-sum spectrum."""

    entries: dict = field(default_factory=dict)

    @classmethod
    def from_values(cls, values) -> "CorrDistribution":
        c = Counter(int(v) for v in np.asarray(values).ravel())
        return cls(dict(sorted(c.items())))

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    @property
    def values(self) -> list[int]:
        return list(self.entries)

    def __len__(self):
        return len(self.entries)

    def shifted(self, delta: int) -> "CorrDistribution":
        return CorrDistribution({v + delta: c for v, c in self.entries.items()})

    def to_csv(self, header: bool = False) -> str:
        rows = ["value,count"] if header else []
        rows += [f"{v},{c}" for v, c in self.entries.items()]
        return "\n".join(rows) + "\n"

    def to_dict(self) -> dict:
        return {"entries": [[v, c] for v, c in self.entries.items()], "total": self.total}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_decimation(ctx: FieldCtx, d: int) -> None:
    if math.gcd(d, ctx.sub_order) != 1:
        raise BadDecimation(f"gcd({d}, {ctx.sub_order}) != 1")


def long_seq(ctx: FieldCtx) -> np.ndarray:
    """s_t = Tr_m(alpha^t), t in [0, 2^m - 1)."""
    return ctx.vtrace_m(ctx.all_powers()).astype(np.uint8)


def short_seq(ctx: FieldCtx, d: int = 1) -> np.ndarray:
    """v_t = Tr_k(beta^(d t)), t in [0, 2^k - 1)."""
    check_decimation(ctx, d)
    t = np.arange(ctx.sub_order, dtype=np.int64)
    return ctx.trace_k_beta[(d * t) % ctx.sub_order].astype(np.uint8)


def _signs(bits: np.ndarray) -> np.ndarray:
    return 1 - 2 * bits.astype(np.int64)


def crosscorr(ctx: FieldCtx, d: int, tau: int) -> int:
    """C_d(tau) summed over one full long period, short index taken mod 2^k - 1."""
    if not 0 <= tau < ctx.sub_order:
        raise ValueError(f"tau={tau} outside [0, {ctx.sub_order})")
    s = long_seq(ctx)
    v = short_seq(ctx, d)
    t = np.arange(ctx.n, dtype=np.int64)
    return int(np.sum(_signs(s ^ v[(t + tau) % ctx.sub_order])))


def crosscorr_all(ctx: FieldCtx, d: int) -> np.ndarray:
    """C_d(tau) for every tau.

    The long sequence is folded mod 2^k - 1 first (the short sequence has
    that period), turning the sum into a length 2^k - 1 cyclic correlation.
    """
    K = ctx.sub_order
    folded = _signs(long_seq(ctx)).reshape(-1, K).sum(axis=0)
    v = _signs(short_seq(ctx, d))
    return np.array([np.dot(folded, np.roll(v, -tau)) for tau in range(K)], dtype=np.int64)


def crosscorr_distribution(ctx: FieldCtx, d: int, method: str = "auto") -> CorrDistribution:
    """Multiset of C_d(tau) over all shifts.

    ``method`` is "direct", "wht" (S(a) - 1 via the Walsh transform) or
    "auto": both routes for k <= 7, which must agree, else the Walsh route.
    """
    check_decimation(ctx, d)
    if method == "direct":
        return CorrDistribution.from_values(crosscorr_all(ctx, d))
    from .expsums import S_all_wht

    if method == "wht":
        return CorrDistribution.from_values(list(S_all_wht(ctx, d).values())).shifted(-1)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    wht = crosscorr_distribution(ctx, d, "wht")
    if ctx.k <= 7:
        direct = crosscorr_distribution(ctx, d, "direct")
        if direct != wht:
            raise AssertionError(f"direct and Walsh distributions differ for d={d}: {direct} vs {wht}")
    return wht


@dataclass(frozen=True)
class Moments:
    sum: int
    sum_sq: int
    passed: bool


def moment_check(ctx: FieldCtx, d: int) -> Moments:
    check_decimation(ctx, d)
    c = crosscorr_all(ctx, d)
    s, s2 = int(c.sum()), int((c * c).sum())
    return Moments(s, s2, s == 1 and s2 == ctx.n * ctx.sub_order - 2)


def periodic_autocorr(bits: np.ndarray, shift: int) -> int:
    x = _signs(bits)
    return int(np.sum(x * np.roll(x, -shift)))
