import random

from hypothesis import given, strategies as st

from mseqcorr import gf2


def dense_rank(vectors, width):
    # textbook row reduction on bit lists
    rows = [[(v >> i) & 1 for i in range(width)] for v in vectors]
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def test_parity():
    assert gf2.parity(0) == 0
    assert gf2.parity(0b1011) == 1
    assert gf2.parity(0b1111) == 0


@given(st.lists(st.integers(0, 255), max_size=10))
def test_rank_matches_dense_elimination(vectors):
    assert gf2.rank(vectors) == dense_rank(vectors, 8)


@given(st.lists(st.integers(0, 63), min_size=1, max_size=8))
def test_nullspace_vectors_are_relations(cols):
    basis = gf2.nullspace(cols)
    assert len(basis) == len(cols) - gf2.rank(cols)
    for c in basis:
        acc = 0
        for j, col in enumerate(cols):
            if c >> j & 1:
                acc ^= col
        assert acc == 0
    assert gf2.rank(basis) == len(basis)


def test_nullspace_brute_count():
    rng = random.Random(3)
    for _ in range(50):
        cols = [rng.randrange(16) for _ in range(6)]
        brute = sum(
            1 for c in range(64)
            if not _combine(cols, c)
        )
        assert brute == 2 ** len(gf2.nullspace(cols))


def _combine(cols, c):
    acc = 0
    for j, col in enumerate(cols):
        if c >> j & 1:
            acc ^= col
    return acc


@given(st.lists(st.integers(0, 63), min_size=1, max_size=8), st.integers(0, 63))
def test_solve(cols, target):
    sol = gf2.solve(cols, target)
    reachable = any(_combine(cols, c) == target for c in range(1 << len(cols)))
    assert (sol is not None) == reachable
    if sol is not None:
        assert _combine(cols, sol) == target


def test_span_size():
    assert sorted(gf2.span([1, 2])) == [0, 1, 2, 3]
    assert list(gf2.span([])) == [0]
