"""Decimation classes, the three-valued search, and the theorem-level checks."""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import dobbertin as dob
from . import zerocount as zc
from .errors import EvenK, NoSolution, UnknownTheorem
from .expsums import (
    S_component_all,
    S_values_wht,
    corollary2_expected,
    lemma8_rhs,
    pair_exponent,
    theorem2_expected,
)
from .field import FieldCtx, elem_hex
from .sequences import CorrDistribution, crosscorr_distribution, moment_check

SUITE_NAMES = (
    "lemma1", "lemma2", "lemma3", "lemma4", "lemma5", "lemma6", "lemma7", "lemma8",
    "lemma9", "theorem1", "theorem2", "corollary1", "corollary2", "conjecture1",
)


# -- decimation classes -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class DecimationClass:
    rep: int
    coset: tuple
    coprime: bool


def cyclotomic_coset(d: int, k: int) -> DecimationClass:
    K = (1 << k) - 1
    d %= K
    orbit = {d * pow(2, i, K) % K for i in range(k)}
    coset = tuple(sorted(orbit))
    return DecimationClass(coset[0], coset, math.gcd(d, K) == 1)


def coprime_classes(k: int) -> list[DecimationClass]:
    K = (1 << k) - 1
    seen, out = set(), []
    for d in range(1, K):
        if d in seen or math.gcd(d, K) != 1:
            continue
        c = cyclotomic_coset(d, k)
        seen.update(c.coset)
        out.append(c)
    return out


def _require_odd(k: int):
    if k % 2 == 0 or k < 3:
        raise EvenK(f"needs odd k >= 3, got k={k}")


def valid_decimations(k: int) -> list[DecimationClass]:
    """Classes of d with d(2^l+1) = 2^i mod 2^k - 1 for some l coprime to k."""
    _require_odd(k)
    K = (1 << k) - 1
    reps = {}
    for l in dob.valid_ls(k):
        c = cyclotomic_coset(pow((1 << l) + 1, -1, K), k)
        reps[c.rep] = c
    return sorted(reps.values())


def l_for_decimation(k: int, d: int) -> list[int]:
    return [l for l in dob.valid_ls(k) if pair_exponent(k, d, l) is not None]


# -- three-valued search -----------------------------------------------------------


@dataclass
class SearchResult:
    k: int
    found: list
    predicted: list
    distributions: dict
    n_classes: int

    @property
    def found_reps(self) -> list[int]:
        return [c.rep for c in self.found]

    @property
    def predicted_reps(self) -> list[int]:
        return [c.rep for c in self.predicted]

    @property
    def conjecture_holds(self) -> bool:
        return self.found_reps == self.predicted_reps

    @property
    def distributions_match(self) -> bool:
        want = theorem2_expected(self.k)
        return all(self.distributions[c.rep].entries == want for c in self.found)


def search_three_valued(ctx: FieldCtx, threads: int = 1) -> SearchResult:
    """Scan one d per coprime cyclotomic coset for three-valued S(a) spectra."""
    _require_odd(ctx.k)
    classes = coprime_classes(ctx.k)

    def job(c):
        return CorrDistribution.from_values(S_values_wht(ctx, c.rep))

    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            dists = list(pool.map(job, classes))
    else:
        dists = [job(c) for c in classes]
    found = [c for c, dist in zip(classes, dists) if len(dist) == 3]
    return SearchResult(
        k=ctx.k,
        found=found,
        predicted=valid_decimations(ctx.k),
        distributions={c.rep: dist for c, dist in zip(classes, dists) if len(dist) == 3},
        n_classes=len(classes),
    )


def table1_row(result: SearchResult) -> dict:
    """Found classes split into (2^k+1)/3, 2^((k+1)/2)-1 and the rest."""
    k = result.k
    kasami = cyclotomic_coset((2**k + 1) // 3, k).rep
    niho = cyclotomic_coset(2 ** ((k + 1) // 2) - 1, k).rep
    reps = result.found_reps
    return {
        "m": 2 * k,
        "first": kasami if kasami in reps else None,
        "second": niho if niho in reps else None,
        "others": [d for d in reps if d not in (kasami, niho)],
        "found": reps,
        "conjecture_holds": result.conjecture_holds,
    }


def solve_distribution(k: int, s_plus_t: int) -> tuple[int, int, int, int]:
    """Counts (r, s, t, v) of the values 0, 2^k, -2^k, -2^(k+1).

    Solves r+s+t+v = 2^k-1, s-t-2v = 1, s+t+4v = 2^k-1 with s+t given.
    """
    _require_odd(k)
    K = 2**k - 1
    four_v = K - s_plus_t
    if four_v < 0 or four_v % 4:
        raise NoSolution(f"s+t={s_plus_t} incompatible with k={k}")
    v = four_v // 4
    if (s_plus_t + 1 + 2 * v) % 2:
        raise NoSolution(f"s+t={s_plus_t} gives a non-integral s")
    s = (s_plus_t + 1 + 2 * v) // 2
    t = s_plus_t - s
    r = K - s - t - v
    if min(r, s, t, v) < 0:
        raise NoSolution(f"negative count for s+t={s_plus_t}")
    return r, s, t, v


# -- suites -------------------------------------------------------------------------


@dataclass
class VerifyReport:
    theorem: str
    k: int
    l: int | None = None
    d: int | None = None
    checked: int = 0
    details: list = field(default_factory=list)
    info: dict = field(default_factory=dict)
    wall_time_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.details

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "theorem": self.theorem, "k": self.k, "l": self.l, "d": self.d,
            "pass": self.passed, "checked": self.checked,
            "counterexamples": self.details, "info": self.info,
        }
        if timing:
            out["wall_time_ms"] = round(self.wall_time_ms, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing))

    def fail(self, **kw):
        self.details.append({key: _jsonable(v) for key, v in kw.items()})


def _jsonable(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def _subfield(ctx):
    return [int(x) for x in ctx.subfield]


def _ls(ctx, l, odd=False):
    ls = dob.valid_ls(ctx.k) if l is None else [l]
    return [x for x in ls if x % 2] if odd else ls


def _lemma1(ctx, rep, l, opts):
    for d in range(1, ctx.sub_order):
        if math.gcd(d, ctx.sub_order) != 1:
            continue
        mc = moment_check(ctx, d)
        rep.checked += 1
        if not mc.passed:
            rep.fail(d=d, sum=mc.sum, sum_sq=mc.sum_sq, expected_sum_sq=ctx.n * ctx.sub_order - 2)


def _lemma2(ctx, rep, l, opts):
    sub = _subfield(ctx)
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(ctx.k, ll)
        r_table = dob.R_vec(ctx, lp, ctx.subfield)
        image = set()
        for a in sub[1:]:
            rep.checked += 1
            ainv = ctx.inv(a)
            v0 = int(r_table[sub.index(ainv)]) if ctx.k <= 7 else dob.R_eval(ctx, lp, ainv)
            if v0 == 0 or zc.A_eval(ctx, lp, a, v0) != 0:
                rep.fail(l=ll, a=elem_hex(a), v0=elem_hex(v0), check="R(1/a) zero of A_a")
            y = ctx.inv(dob.D_eval(ctx, lp, a))
            image.add(y)
            if dob.R_eval(ctx, lp, y) != a:
                rep.fail(l=ll, x=elem_hex(a), check="R(1/D(x)) == x")
        if len(image) != ctx.sub_order:
            rep.fail(l=ll, check="D permutes GF(2^k)*", image_size=len(image))


def _lemma3(ctx, rep, l, opts):
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(ctx.k, ll)
        for a in _subfield(ctx)[1:]:
            rep.checked += 1
            if not zc.lemma3_check(ctx, lp, a):
                rep.fail(l=ll, a=elem_hex(a))


def _lemma4(ctx, rep, l, opts):
    sub = _subfield(ctx)
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(ctx.k, ll)
        for i in range(1, lp.l_prime + 1):
            expset = dob.H_expset(lp, i) if ctx.k <= dob.SYMBOLIC_MAX_K else None
            if expset is not None and i > 1:
                prev = len(dob.H_expset(lp, i - 1))
                if len(expset) != 2 ** (i - 1) - prev:
                    rep.fail(l=ll, i=i, check="#H_i recurrence", size=len(expset))
            for v in sub:
                rep.checked += 1
                if not dob.lemma4_trace_identity(ctx, lp, i, v):
                    rep.fail(l=ll, i=i, v=elem_hex(v), check="trace identity")
                if expset is not None and expset.evaluate(ctx, v) != dob.H_eval(ctx, lp, i, v):
                    rep.fail(l=ll, i=i, v=elem_hex(v), check="reduced set vs closed form")
        for x0 in sub[1:]:
            rep.checked += 1
            if not dob.lemma4_Q_identity(ctx, lp, x0):
                rep.fail(l=ll, x0=elem_hex(x0), check="Q identity")


def _lemma5(ctx, rep, l, opts):
    equal = total = 0
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(ctx.k, ll)
        for x0 in _subfield(ctx)[2:]:
            if ctx.pow(x0, (1 << ll) + 1) ^ x0 == 0:
                continue
            rep.checked += 1
            if not dob.lemma5_check(ctx, lp, x0):
                rep.fail(l=ll, x0=elem_hex(x0))
            total += 1
            equal += dob.R_equals_H(ctx, lp, x0)
    rep.info["R_equals_H"] = equal
    rep.info["admissible_x0"] = total


def _lemma6(ctx, rep, l, opts):
    _require_odd(ctx.k)
    for ll in _ls(ctx, l, odd=True):
        lp = dob.make_lparams(ctx.k, ll)
        for a in _subfield(ctx):
            zeros = zc.linearized_kernel_L(ctx, lp, a, method="kernel").zeros
            for z in zeros:
                rep.checked += 1
                val = zc.lemma6_value(ctx, lp, a, z)
                if val not in (0, 1):
                    rep.fail(l=ll, a=elem_hex(a), z=elem_hex(z), value=elem_hex(val))


def _lemma7(ctx, rep, l, opts):
    _require_odd(ctx.k)
    for ll in _ls(ctx, l, odd=True):
        lp = dob.make_lparams(ctx.k, ll)
        for a in _subfield(ctx):
            rep.checked += 1
            zr = zc.linearized_kernel_L(ctx, lp, a, method="auto")
            if zr.count not in (1, 4):
                rep.fail(l=ll, a=elem_hex(a), Ta=zr.count, check="Ta in {1,4}")
            if a == 0:
                if zr.count != 1:
                    rep.fail(l=ll, a="0", Ta=zr.count, check="a=0 gives Ta=1")
                continue
            v0 = dob.R_eval(ctx, lp, ctx.inv(a))
            if ctx.trace_k(v0) == 0 and zr.count != 1:
                rep.fail(l=ll, a=elem_hex(a), Ta=zr.count, check="Tr(v0)=0 => Ta=1")
            if not zc.closed_over_gf4(ctx, zr.zeros):
                rep.fail(l=ll, a=elem_hex(a), check="zeros form a GF(4)-space")


def _lemma8(ctx, rep, l, opts):
    _require_odd(ctx.k)
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(ctx.k, ll)
        s0 = S_component_all(ctx, ll, 0)
        for a, s in zip(_subfield(ctx)[1:], s0[1:]):
            rep.checked += 1
            rhs = lemma8_rhs(ctx, lp, a, zc.affine_zeros_A(ctx, lp, a).zeros)
            if int(s) != rhs:
                rep.fail(l=ll, a=elem_hex(a), S0=int(s), rhs=rhs)


def _lemma9(ctx, rep, l, opts):
    _require_odd(ctx.k)
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(ctx.k, ll)
        s1 = S_component_all(ctx, ll, 1)
        s2 = S_component_all(ctx, ll, 2)
        for a, x1, x2 in zip(_subfield(ctx), s1, s2):
            rep.checked += 1
            if x1 != x2:
                rep.fail(l=ll, a=elem_hex(a), S1=int(x1), S2=int(x2), check="S1 == S2")
            if ll % 2:
                ta = zc.linearized_kernel_L(ctx, lp, a, method="kernel", enumerate_zeros=False).count
                if int(x1) ** 2 != (1 << ctx.m) * ta:
                    rep.fail(l=ll, a=elem_hex(a), S1=int(x1), Ta=ta, check="S1^2 == 2^m Ta")


def _theorem1(ctx, rep, l, opts):
    k = ctx.k
    method = "both" if k <= zc.BRUTE_MAX_K else "kernel"
    want = zc.theorem1_expected(k)
    tallies = {}
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(k, ll)
        tally = {"M1": 0, "M2": 0, "M4": 0}
        for a in _subfield(ctx)[1:]:
            rep.checked += 1
            zr = zc.affine_zeros_A(ctx, lp, a, method)
            cls = zc.M_CLASSES.get(zr.count)
            if cls is None:
                rep.fail(l=ll, a=elem_hex(a), count=zr.count, check="N_a in {1,2,4}")
                continue
            tally[cls] += 1
            if k <= zc.BRUTE_MAX_K and zc.p_zeros(ctx, lp, a).count != zr.count - 1:
                rep.fail(l=ll, a=elem_hex(a), check="p_a has N_a - 1 zeros")
            if (zc.M2_trace_criterion(ctx, lp, a) == 1) != (cls == "M2"):
                rep.fail(l=ll, a=elem_hex(a), cls=cls, check="M2 trace criterion")
        got = (tally["M1"], tally["M2"], tally["M4"])
        tallies[ll] = list(got)
        if got != want:
            rep.fail(l=ll, got=list(got), expected=list(want), check="distribution")
        if got[1] + 3 * got[2] != 2**k - 2:
            rep.fail(l=ll, check="|M2| + 3|M4| = 2^k - 2")
        if zc.p_zeros(ctx, lp, 0).zeros != (0, 1):
            rep.fail(l=ll, check="p_0 zeros are {0, 1}")
    rep.info["tallies"] = tallies
    rep.info["expected"] = list(want)


def _theorem2(ctx, rep, l, opts):
    k = ctx.k
    _require_odd(k)
    want = theorem2_expected(k)
    r_, s_, t_, v_ = solve_distribution(k, (2**k + 1) // 3)
    solved = {0: r_, 2**k: s_, -(2**k): t_, -(2 ** (k + 1)): v_}
    solved = {val: c for val, c in sorted(solved.items()) if c}
    if solved != want:
        rep.fail(check="linear system", solved=solved)
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(k, ll)
        d = pow((1 << ll) + 1, -1, ctx.sub_order)
        svals = S_values_wht(ctx, d)
        dist = CorrDistribution.from_values(svals)
        if dist.entries != want:
            rep.fail(l=ll, d=d, got=dist.entries, check="S distribution")
        s1 = S_component_all(ctx, ll, 1)[1:] if ll % 2 else None
        for t, a in enumerate(_subfield(ctx)[1:]):
            rep.checked += 1
            cls = zc.classify_M(ctx, lp, a)
            S = int(svals[t])
            ok = {"M2": S == 0, "M4": S in (0, -(2 ** (k + 1))), "M1": S in (2**k, -(2**k))}[cls]
            if S == -(2**k):
                ok = False
            if ll % 2 and cls == "M2" and int(s1[t]) != -(2**k):
                ok = False
            if not ok:
                rep.fail(l=ll, d=d, a=elem_hex(a), cls=cls, S=S)


def _corollary1(ctx, rep, l, opts):
    k = ctx.k
    _require_odd(k)
    want = {v - 1: c for v, c in theorem2_expected(k).items()}
    classes = valid_decimations(k) if l is None else [
        cyclotomic_coset(pow((1 << l) + 1, -1, ctx.sub_order), k)
    ]
    for c in classes:
        rep.checked += 1
        dist = crosscorr_distribution(ctx, c.rep)
        if dist.entries != want:
            rep.fail(d=c.rep, got=dist.entries, expected=want)
    rep.info["decimations"] = [c.rep for c in classes]


def _corollary2(ctx, rep, l, opts):
    k = ctx.k
    _require_odd(k)
    for ll in _ls(ctx, l):
        lp = dob.make_lparams(k, ll)
        s0 = S_component_all(ctx, ll, 0)[1:]
        for a, s in zip(_subfield(ctx)[1:], s0):
            rep.checked += 1
            cls = zc.classify_M(ctx, lp, a)
            if int(s) != corollary2_expected(k, ll, cls):
                rep.fail(l=ll, a=elem_hex(a), cls=cls, S0=int(s), expected=corollary2_expected(k, ll, cls))


def _conjecture1(ctx, rep, l, opts):
    res = search_three_valued(ctx, threads=opts.get("threads", 1))
    rep.checked = res.n_classes
    rep.info["found"] = res.found_reps
    rep.info["predicted"] = res.predicted_reps
    if not res.conjecture_holds:
        rep.fail(found=res.found_reps, predicted=res.predicted_reps)
    if not res.distributions_match:
        rep.fail(check="found distributions equal the three-valued one")


_SUITES = {
    "lemma1": _lemma1, "lemma2": _lemma2, "lemma3": _lemma3, "lemma4": _lemma4,
    "lemma5": _lemma5, "lemma6": _lemma6, "lemma7": _lemma7, "lemma8": _lemma8,
    "lemma9": _lemma9, "theorem1": _theorem1, "theorem2": _theorem2,
    "corollary1": _corollary1, "corollary2": _corollary2, "conjecture1": _conjecture1,
}


def run_suite(ctx: FieldCtx, which, l: int | None = None, threads: int = 1) -> list[VerifyReport]:
    """Run the named checks in canonical order; one report per name."""
    which = [which] if isinstance(which, str) else list(which)
    if not which:
        raise ValueError("no suites requested")
    unknown = [w for w in which if w not in _SUITES]
    if unknown:
        raise UnknownTheorem(f"unknown suite(s): {', '.join(unknown)}")
    if l is not None:
        dob.make_lparams(ctx.k, l)
    reports = []
    for name in SUITE_NAMES:
        if name not in which:
            continue
        rep = VerifyReport(theorem=name, k=ctx.k, l=l)
        t0 = time.perf_counter()
        _SUITES[name](ctx, rep, l, {"threads": threads})
        rep.wall_time_ms = (time.perf_counter() - t0) * 1000
        reports.append(rep)
    return reports
