import json

import pytest

from addext.additive_code import code_from_generators
from addext.constructions import rs_code
from addext.errors import BudgetExceeded, HypothesisViolated
from addext.field_tower import default_tower
from addext.harness import Campaign, IsometrySearch, all_codes, all_maps, threshold_n_scan, verify_theorem
from addext.isometry import is_isometry_direct
from addext.k_linalg import gaussian_binomial


def test_all_codes_counts():
    t = default_tower(2, 1, 2)
    # K-subspaces of K^(n m) with 1 <= k <= 2
    assert sum(1 for _ in all_codes(t, 2, 2)) == gaussian_binomial(4, 1, 2) + gaussian_binomial(4, 2, 2)


@pytest.mark.parametrize("rows", [[(1, 1, 0), (2, 0, 1)], [(0, 1, 1), (1, 0, 1)], [(1, 1, 1)], [(1, 2, 3)]])
def test_isometry_search_matches_unpruned_enumeration(f4, rows):
    C = code_from_generators(f4, 3, rows)
    expected = [f.images for f in all_maps(C) if is_isometry_direct(f)]
    s = IsometrySearch(C, budget=10**7)
    got = list(s.run())
    assert got == expected
    assert s.complete and s.covered == s.total == 64 ** C.k


def test_isometry_search_odd_characteristic():
    t = default_tower(3, 1, 2)
    C = code_from_generators(t, 2, [(1, 4)])
    expected = [f.images for f in all_maps(C) if is_isometry_direct(f)]
    assert list(IsometrySearch(C, 10**6).run()) == expected


def test_budget_modes(f4):
    C = rs_code(f4, 3, 1)
    with pytest.raises(BudgetExceeded):
        list(IsometrySearch(C, budget=10).run())
    s = IsometrySearch(C, budget=10, mode="pruned")
    list(s.run())
    assert not s.complete and 0 < s.covered < s.total


def test_sampled_mode_is_seed_deterministic(f4):
    C = rs_code(f4, 3, 1)
    runs = []
    for seed in (1, 1, 2):
        s = IsometrySearch(C, budget=40, mode="sampled", seed=seed)
        runs.append(list(s.run()))
    assert runs[0] == runs[1]
    assert runs[0] != runs[2]


def test_prop1_small():
    r = verify_theorem(Campaign("prop1", n=2, k_max=2))
    assert r.verdict == "pass" and r.cases_checked > 0


def test_prop1_hypothesis_guard():
    with pytest.raises(HypothesisViolated):
        verify_theorem(Campaign("prop1", n=3))


def test_prop2_small():
    r = verify_theorem(Campaign("prop2", p=2, s=1, m=1, n_max=3, k_max=2))
    assert r.verdict == "pass"
    assert r.details["isometries"] > 0


def test_prop3_repetition_full_coverage():
    r = verify_theorem(Campaign("prop3", n=3, k_L=1))
    assert r.verdict == "pass" and r.cases_checked == 216
    entry = r.details["search"][0]
    assert entry["candidates_total"] == entry["candidates_covered"] == 4096
    with pytest.raises(HypothesisViolated):
        verify_theorem(Campaign("prop3", n=3, k_L=2))


def test_prop3_partial_coverage_is_reported():
    r = verify_theorem(Campaign("prop3", n=3, k_L=1, budget=50, mode="pruned"))
    assert r.mode == "partial"
    assert r.details["search"][0]["coverage"] < 1


def test_prop4_and_prop5():
    r = verify_theorem(Campaign("prop4"))
    assert r.verdict == "pass"
    assert r.details["partition_certificate"] == {"max_parts": 2, "exists": False}
    with pytest.raises(HypothesisViolated):
        verify_theorem(Campaign("prop4", n=3))
    r5 = verify_theorem(Campaign("prop5", n=2))
    assert r5.verdict == "pass"
    assert r5.details["search"][0]["candidates_total"] == 256


def test_lemmas():
    assert verify_theorem(Campaign("lemma_mds", n=3, k_L=2)).verdict == "pass"
    r = verify_theorem(Campaign("lemma_linear", n_max=3, k_L=2))
    assert r.verdict == "pass" and r.details["codes"] == r.cases_checked > 0


def test_reports_are_deterministic():
    a = verify_theorem(Campaign("prop3", n=3, k_L=1)).to_json()
    b = verify_theorem(Campaign("prop3", n=3, k_L=1)).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert "elapsed" not in a


@pytest.mark.parametrize("q, k, n_max, first", [(2, 2, 4, 3), (3, 2, 4, 4), (2, 1, 4, None), (2, 3, 3, 3)])
def test_threshold_scan(q, k, n_max, first):
    r = threshold_n_scan(q, k, n_max)
    assert r.verdict == "pass"
    nonempty = [row["n"] for row in r.details["scan"] if row["nontrivial"]]
    assert (nonempty[0] if nonempty else None) == first


def test_threshold_scan_with_lines_only():
    # with spaces of dimension <= 1 only, no nontrivial solution exists at any length
    r = threshold_n_scan(2, 2, 4, dim_bound=1)
    assert r.verdict == "pass"
    assert all(row["nontrivial"] == 0 for row in r.details["scan"])


def test_campaign_validation():
    with pytest.raises(ValueError):
        Campaign("nope")
    with pytest.raises(ValueError):
        Campaign("prop1", mode="fast")
