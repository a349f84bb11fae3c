import json
import math
import random

import numpy as np
import pytest

from mseqcorr.dobbertin import make_lparams, valid_ls
from mseqcorr.errors import BadDecimation, InvalidPair, NotInSubfield, PreconditionViolated
from mseqcorr.expsums import (
    S_all_wht,
    S_component,
    S_component_all,
    S_naive,
    corollary2_expected,
    decomposition_check,
    fwht,
    pair_exponent,
    theorem2_expected,
)
from mseqcorr.field import build_field
from mseqcorr.sequences import CorrDistribution
from mseqcorr.zerocount import classify_M


def coprime(k):
    return [d for d in range(1, 2**k - 1) if math.gcd(d, 2**k - 1) == 1]


def test_fwht_against_matrix():
    rng = np.random.default_rng(0)
    a = rng.integers(-5, 5, size=16).astype(np.int64)
    H = np.array([[(-1) ** bin(u & x).count("1") for x in range(16)] for u in range(16)])
    assert np.array_equal(fwht(a.copy()), H @ a)


def test_S_naive_k3(get_field):
    ctx = get_field(3)
    vals = [S_naive(ctx, 3, int(a)) for a in ctx.subfield[1:]]
    assert CorrDistribution.from_values(vals).entries == {-16: 1, 0: 3, 8: 3}
    assert all(v % 4 == 0 for v in vals)
    with pytest.raises(NotInSubfield):
        S_naive(ctx, 3, ctx.alpha)
    with pytest.raises(BadDecimation):
        S_naive(get_field(4), 5, 1)


@pytest.mark.parametrize("k", [3, 5])
def test_wht_equals_naive_exhaustive(get_field, k):
    ctx = get_field(k)
    for d in coprime(k):
        fast = S_all_wht(ctx, d)
        assert fast == {int(a): S_naive(ctx, d, int(a)) for a in ctx.subfield[1:]}
        assert sum(fast.values()) == 2**k


def test_wht_equals_naive_without_tables():
    ctx = build_field(3, table_threshold=0)
    for d in coprime(3):
        assert S_all_wht(ctx, d) == {int(a): S_naive(ctx, d, int(a)) for a in ctx.subfield[1:]}


def test_wht_equals_naive_random_k7(get_field):
    ctx = get_field(7)
    rng = random.Random(7)
    cache = {}
    for _ in range(100):
        d = rng.choice(coprime(7))
        a = int(rng.choice(ctx.subfield[1:]))
        if d not in cache:
            cache[d] = S_all_wht(ctx, d)
        assert cache[d][a] == S_naive(ctx, d, a)


def test_theorem2_example_k5(get_field):
    vals = S_all_wht(get_field(5), 7).values()
    assert CorrDistribution.from_values(list(vals)).entries == {-64: 5, 0: 15, 32: 11}
    assert theorem2_expected(5) == {-64: 5, 0: 15, 32: 11}


def test_component_fast_equals_naive(get_field):
    for k in (3, 5):
        ctx = get_field(k)
        for l in valid_ls(k):
            for which in (0, 1, 2):
                fast = S_component_all(ctx, l, which)
                slow = [S_component(ctx, l, int(a), which) for a in ctx.subfield]
                assert list(fast) == slow


def test_component_examples_k3(get_field):
    ctx = get_field(3)
    lp = make_lparams(3, 1)
    seen = set()
    for a in map(int, ctx.subfield[1:]):
        cls = classify_M(ctx, lp, a)
        s0 = S_component(ctx, 1, a, 0)
        seen.add(cls)
        if cls == "M2":
            assert s0 == 16
            assert S_component(ctx, 1, a, 1) == -8
        if cls == "M1":
            assert s0 == -8
    assert seen == {"M1", "M2", "M4"}


def test_component_even_l(get_field):
    ctx = get_field(5)
    lp = make_lparams(5, 2)
    for a in map(int, ctx.subfield[1:]):
        if classify_M(ctx, lp, a) == "M2":
            assert S_component(ctx, 2, a, 0) == 0


def test_component_preconditions(get_field):
    with pytest.raises(PreconditionViolated):
        S_component(get_field(4), 1, 1, 1)
    with pytest.raises(PreconditionViolated):
        S_component(get_field(3), 3, 1, 0)
    with pytest.raises(NotInSubfield):
        S_component(get_field(3), 1, get_field(3).alpha, 0)
    with pytest.raises(ValueError):
        S_component(get_field(3), 1, 1, 3)


def test_pair_exponent():
    assert pair_exponent(3, 3, 1) == 1
    assert pair_exponent(5, 11, 1) is not None
    assert pair_exponent(5, 3, 1) is None


def test_decomposition_examples(get_field):
    rep = decomposition_check(get_field(3), 3, 1)
    assert rep.passed and len(rep.rows) == 7
    rep = decomposition_check(get_field(5), 11, 1)
    assert rep.passed and len(rep.rows) == 31
    assert {r.S1 for r in rep.rows} <= {32, -32, 64, -64}
    row = json.loads(rep.to_json())["rows"][0]
    assert set(row) == {"a_hex", "S", "S0", "S1", "S2", "Ta", "class"}
    with pytest.raises(InvalidPair):
        decomposition_check(get_field(5), 3, 1)


@pytest.mark.parametrize("k", [5, 7])
def test_decomposition_all_pairs(get_field, k):
    ctx = get_field(k)
    for l in valid_ls(k):
        d = pow(2**l + 1, -1, 2**k - 1)
        rep = decomposition_check(ctx, d, l, naive=False)
        assert rep.passed, rep.failures[:3]
        if l % 2:
            assert {r.S1 ** 2 for r in rep.rows} <= {2**ctx.m, 2 ** (ctx.m + 2)}
        assert {r.S for r in rep.rows} <= {0, 2**k, -(2 ** (k + 1))}


def test_decomposition_naive_and_fast_agree(get_field):
    ctx = get_field(5)
    a = decomposition_check(ctx, 11, 1, naive=True)
    b = decomposition_check(ctx, 11, 1, naive=False)
    assert [r.row() for r in a.rows] == [r.row() for r in b.rows]


def test_corollary2_table():
    assert corollary2_expected(3, 1, "M2") == 16
    assert corollary2_expected(3, 1, "M1") == -8
    assert corollary2_expected(3, 1, "M4") == -32
    assert corollary2_expected(5, 2, "M2") == 0
    assert corollary2_expected(5, 2, "M1") == 32
    assert corollary2_expected(5, 2, "M4") == -64
