import json
import math

import pytest

from mseqcorr.errors import EvenK, NoSolution, UnknownTheorem
from mseqcorr.expsums import S_values_wht
from mseqcorr.sequences import CorrDistribution
from mseqcorr.verify import (
    SUITE_NAMES,
    coprime_classes,
    cyclotomic_coset,
    run_suite,
    search_three_valued,
    solve_distribution,
    table1_row,
    valid_decimations,
)


def euler_phi(n):
    return sum(1 for j in range(1, n + 1) if math.gcd(j, n) == 1)


def test_cyclotomic_coset():
    c = cyclotomic_coset(11, 5)
    assert c.coset == (11, 13, 21, 22, 26) and c.rep == 11 and c.coprime
    assert all(2 * x % 31 in c.coset for x in c.coset)
    assert not cyclotomic_coset(9, 6).coprime


def test_coprime_classes_partition():
    for k in (3, 5, 7):
        classes = coprime_classes(k)
        members = sorted(x for c in classes for x in c.coset)
        assert members == [d for d in range(1, 2**k - 1) if math.gcd(d, 2**k - 1) == 1]


def test_valid_decimations():
    assert [c.rep for c in valid_decimations(3)] == [3]
    assert [c.rep for c in valid_decimations(5)] == [7, 11]
    assert [c.rep for c in valid_decimations(7)] == [15, 27, 43]
    assert [c.rep for c in valid_decimations(9)] == [31, 103, 171]
    for k in (5, 7, 9, 11, 13):
        classes = valid_decimations(k)
        assert len(classes) == euler_phi(k) // 2
        assert all(c.coprime for c in classes)
    with pytest.raises(EvenK):
        valid_decimations(4)


def test_search_small(get_field):
    res = search_three_valued(get_field(5))
    assert res.found_reps == [7, 11] and res.conjecture_holds and res.distributions_match
    res = search_three_valued(get_field(7), threads=3)
    assert res.found_reps == [15, 27, 43]
    row = table1_row(res)
    assert (row["first"], row["second"], row["others"]) == (43, 15, [27])
    with pytest.raises(EvenK):
        search_three_valued(get_field(4))


def test_search_k9(get_field):
    res = search_three_valued(get_field(9))
    assert res.found_reps == [31, 103, 171] and res.conjecture_holds and res.distributions_match


def test_distribution_is_coset_invariant(get_field):
    ctx = get_field(5)
    for c in coprime_classes(5):
        dists = {tuple(CorrDistribution.from_values(S_values_wht(ctx, d)).entries.items()) for d in c.coset}
        assert len(dists) == 1


def test_solve_distribution():
    assert solve_distribution(3, 3) == (3, 3, 0, 1)
    assert solve_distribution(5, 11) == (15, 11, 0, 5)
    assert solve_distribution(7, 43) == (63, 43, 0, 21)
    for k in (3, 5, 7, 9):
        r, s, t, v = solve_distribution(k, (2**k + 1) // 3)
        assert r + s + t + v == 2**k - 1
        assert s - t - 2 * v == 1
        assert s + t + 4 * v == 2**k - 1
    with pytest.raises(NoSolution):
        solve_distribution(5, 12)
    with pytest.raises(EvenK):
        solve_distribution(4, 5)


def test_run_suite_examples(get_field):
    (rep,) = run_suite(get_field(7), {"lemma2"})
    assert rep.passed and rep.checked == 127 * 6
    (rep,) = run_suite(get_field(5), ["corollary2"])
    assert rep.passed
    for l in (1, 3):
        (rep,) = run_suite(get_field(5), ["lemma9"], l=l)
        assert rep.passed and rep.checked == 32


@pytest.mark.parametrize("k", [3, 5, 7])
def test_all_suites_pass_odd_k(get_field, k):
    reports = run_suite(get_field(k), SUITE_NAMES)
    assert [r.theorem for r in reports] == list(SUITE_NAMES)
    for r in reports:
        assert r.passed, (r.theorem, r.details[:3])
        assert r.checked > 0


def test_even_k_suites(get_field):
    ctx = get_field(4)
    reports = run_suite(ctx, ["theorem1", "lemma1", "lemma2", "lemma3", "lemma4", "lemma5"])
    assert all(r.passed for r in reports)
    with pytest.raises(EvenK):
        run_suite(ctx, ["theorem2"])


def test_report_shape(get_field):
    (rep,) = run_suite(get_field(3), "lemma5")
    d = json.loads(rep.to_json())
    assert set(d) == {"theorem", "k", "l", "d", "pass", "checked", "counterexamples", "info", "wall_time_ms"}
    assert "wall_time_ms" not in rep.to_dict(timing=False)
    assert d["info"]["R_equals_H"] <= d["info"]["admissible_x0"]
    rep.fail(a="1")
    assert not rep.passed


def test_run_suite_errors(get_field):
    with pytest.raises(UnknownTheorem):
        run_suite(get_field(3), ["lemma10"])
    with pytest.raises(ValueError):
        run_suite(get_field(3), [])


def test_order_is_canonical(get_field):
    names = [r.theorem for r in run_suite(get_field(3), ["theorem1", "lemma1"])]
    assert names == ["lemma1", "theorem1"]
