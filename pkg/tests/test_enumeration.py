import math

import pytest

from meshperm import (
    Permutation,
    ad3_members_formula,
    avoiders_132,
    avoids,
    catalan,
    catalog,
    check_132_321_auxiliary,
    check_ad3_structure,
    check_corner_proposition,
    count_132_with,
    enumerate_class,
    formula_132_family,
    parse_pattern,
)
from meshperm.perms import iterate_sn


class TestAvoiders132:
    @pytest.mark.parametrize("n", range(0, 8))
    def test_catalan_many(self, n):
        got = list(avoiders_132(n))
        assert len(got) == catalan(n)
        assert len(set(got)) == len(got)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_filter(self, n):
        pat = parse_pattern("132")
        want = {p for p in iterate_sn(n) if avoids(p, [pat])}
        assert set(avoiders_132(n)) == want


class TestEnumerateClass:
    def test_full_route_counts(self):
        res = enumerate_class([catalog("A", 3), catalog("D", 3)], 6, want_list=False)
        assert res.count == 32
        assert res.members is None

    def test_members_default_small_n(self):
        res = enumerate_class([catalog("A"), catalog("D", 3)], 4)
        assert res.members is not None
        assert res.count == len(res.members) == 3
        assert set(res.members) == {
            Permutation((2, 3, 4, 1)),
            Permutation((3, 4, 1, 2)),
            Permutation((4, 1, 2, 3)),
        }

    def test_members_match_filter(self):
        pats = [catalog("P13"), catalog("A")]
        res = enumerate_class(pats, 5, want_list=True)
        want = sorted(p for p in iterate_sn(5) if avoids(p, pats))
        assert sorted(res.members) == want
        assert res.count == len(want)

    def test_132_route_equals_full_route(self):
        pats = [parse_pattern("132"), catalog("D", 3)]
        fast = enumerate_class(pats, 7, want_list=False)
        brute = sum(1 for p in iterate_sn(7) if avoids(p, pats))
        assert fast.count == brute

    def test_jobs_agree(self):
        pats = [catalog("A")]
        a = enumerate_class(pats, 6, want_list=False, jobs=1)
        b = enumerate_class(pats, 6, want_list=False, jobs=3)
        assert a.count == b.count

    def test_empty_pattern_list_rejected(self):
        with pytest.raises(ValueError):
            enumerate_class([], 3)

    def test_n_zero(self):
        res = enumerate_class([catalog("A")], 0)
        assert res.count == 1
        assert tuple(res.members) == (Permutation(()),)

    def test_scan_limit(self):
        with pytest.raises(ValueError):
            enumerate_class([catalog("A")], 14, want_list=False)


class TestRotationClass:
    def test_formula_members(self):
        assert ad3_members_formula(4) == {
            Permutation((2, 3, 4, 1)),
            Permutation((3, 4, 1, 2)),
            Permutation((4, 1, 2, 3)),
        }
        assert ad3_members_formula(2) == {Permutation((2, 1))}

    @pytest.mark.parametrize("n", range(2, 9))
    def test_structure(self, n):
        assert check_ad3_structure(n)

    def test_rotations_avoid(self):
        pats = [catalog("A"), catalog("D", 3)]
        for p in ad3_members_formula(6):
            assert avoids(p, pats)


class TestCornerProposition:
    @pytest.mark.parametrize("k", (2, 3, 4))
    def test_holds(self, k):
        for n in range(k, 8):
            assert check_corner_proposition(k, n)

    def test_smallest_case(self):
        # S_2 under the k=2 descending patterns: both classes are {12}
        two = [p for p in iterate_sn(2) if avoids(p, [catalog("D")])]
        four = [p for p in iterate_sn(2) if avoids(p, [catalog("Dt")])]
        assert two == four == [Permutation((1, 2))]

    def test_k_validation(self):
        with pytest.raises(ValueError):
            check_corner_proposition(1, 3)


class Test132Formulas:
    def test_golden_values(self):
        assert formula_132_family("A", 1) == 1
        assert formula_132_family("A", 5) == catalan(5) - catalan(4)  # 28
        assert formula_132_family("D", 5) == catalan(4)  # 14
        assert formula_132_family("D3", 5) == catalan(4) + 4  # 18
        assert formula_132_family("D4", 5) == 32
        assert formula_132_family("D4", 2) == catalan(1) + 1 * (8 - 14 + 12) // 6

    def test_d4_cubic_term(self):
        # (n-1)(2n^2-7n+12)/6 must divide exactly
        for n in range(1, 13):
            num = (n - 1) * (2 * n * n - 7 * n + 12)
            assert num % 6 == 0
            assert formula_132_family("D4", n) == catalan(n - 1) + num // 6

    def test_ak_needs_k(self):
        with pytest.raises(ValueError):
            formula_132_family("Ak", 5)
        with pytest.raises(ValueError):
            formula_132_family("Ak", 5, 2)

    @pytest.mark.parametrize("which", ("A", "D", "D3", "D4"))
    @pytest.mark.parametrize("n", range(1, 9))
    def test_formula_matches_count(self, which, n):
        name, k = {"A": ("A", None), "D": ("D", None), "D3": ("D", 3), "D4": ("D", 4)}[which]
        extra = catalog(name, k)
        assert formula_132_family(which, n) == count_132_with(extra, n)

    @pytest.mark.parametrize("k", (3, 4, 5))
    @pytest.mark.parametrize("n", range(1, 9))
    def test_ak_formula_matches_count(self, k, n):
        assert formula_132_family("Ak", n, k) == count_132_with(catalog("A", k), n)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_auxiliary_identity(self, n):
        assert check_132_321_auxiliary(n)

    def test_count_132_with_via_filter(self):
        extra = catalog("D", 3)
        for n in range(0, 7):
            brute = sum(
                1
                for p in iterate_sn(n)
                if avoids(p, [parse_pattern("132"), extra])
            )
            assert count_132_with(extra, n) == brute
