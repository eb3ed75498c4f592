import pytest
from hypothesis import given

from _golden import PHI_EXAMPLE, PSI_EXAMPLE, THETA_EXAMPLE, perms
from meshperm import (
    Permutation,
    active_pair_positions,
    active_pairs,
    catalog,
    fast_count,
    lrmin,
    occurrences,
    p13_p14_fast,
    refined_vector,
    stat_tuple,
    zone_middles,
)
from meshperm.perms import iterate_sn
from meshperm.stats import STAT_NAMES


def slow_count(p, i):
    return len(occurrences(p, catalog(f"P{i}")))


class TestActivePairs:
    def test_phi_example_pairs(self):
        p = Permutation.parse(PHI_EXAMPLE["sigma"])
        # final two letters of each golden occurrence form the active pair
        for i in range(1, 9):
            want = sorted(t[1:] for t in PHI_EXAMPLE["sets"][f"P{i}"])
            assert sorted(active_pairs(p, i)) == want, i

    def test_positions_vs_values(self):
        p = Permutation.parse(PHI_EXAMPLE["sigma"])
        for i in range(1, 9):
            pairs = active_pairs(p, i)
            poss = active_pair_positions(p, i)
            assert {(p[a - 1], p[b - 1]) for a, b in poss} == pairs
            assert len(poss) == len(pairs)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            active_pairs(Permutation((1,)), 9)
        with pytest.raises(ValueError):
            active_pair_positions(Permutation((1,)), 0)


class TestZoneMiddles:
    def test_psi_example(self):
        p = Permutation.parse(PSI_EXAMPLE["sigma"])
        rising, falling = zone_middles(p)
        assert rising == {t[1] for t in PSI_EXAMPLE["sets"]["P9"]}
        assert falling == {t[1] for t in PSI_EXAMPLE["sets"]["P10"]}

    def test_empty_zone(self):
        assert zone_middles(Permutation((2, 1))) == (set(), set())


class TestCodesStatistic:
    def test_theta_example(self):
        p = Permutation.parse(THETA_EXAMPLE["sigma"])
        q = Permutation.parse(THETA_EXAMPLE["image"])
        assert p13_p14_fast(p) == (2, 4)
        assert p13_p14_fast(q) == (4, 2)

    def test_zero_when_one_is_late(self):
        assert p13_p14_fast(Permutation((2, 3, 1))) == (0, 0)
        assert p13_p14_fast(Permutation((2, 1, 3))) == (0, 0)


class TestFastCounts:
    @pytest.mark.parametrize("i", range(1, 15))
    def test_matches_slow_engine_exhaustive(self, i):
        for n in range(0, 6):
            for p in iterate_sn(n):
                assert fast_count(p, i) == slow_count(p, i), (i, p)

    def test_golden_counts(self):
        p = Permutation.parse(PHI_EXAMPLE["sigma"])
        for i in range(1, 9):
            assert fast_count(p, i) == len(PHI_EXAMPLE["sets"][f"P{i}"])
        q = Permutation.parse(PSI_EXAMPLE["sigma"])
        for i in range(9, 13):
            assert fast_count(q, i) == len(PSI_EXAMPLE["sets"][f"P{i}"])


class TestLrmin:
    def test_values(self):
        assert lrmin(Permutation.parse(PHI_EXAMPLE["sigma"])) == 2
        assert lrmin(Permutation((1, 2, 3))) == 1
        assert lrmin(Permutation((3, 2, 1))) == 3
        assert lrmin(Permutation(())) == 0

    @given(perms())
    def test_symmetry_identities(self, p):
        n_lrmin = len(p.left_to_right_minima())
        assert lrmin(p) == n_lrmin
        assert n_lrmin == len(p.reverse().right_to_left_minima())
        assert n_lrmin == len(p.reverse().complement().right_to_left_maxima())


class TestRefinedVectors:
    def test_phi_example_vectors(self):
        p = Permutation.parse(PHI_EXAMPLE["sigma"])
        q = Permutation.parse(PHI_EXAMPLE["image"])
        assert refined_vector(p, 3) == PHI_EXAMPLE["vec3"]
        assert refined_vector(p, 4) == PHI_EXAMPLE["vec4"]
        # the suffix-complement involution swaps the refined families
        assert refined_vector(q, 4) == PHI_EXAMPLE["vec3"]
        assert refined_vector(q, 3) == PHI_EXAMPLE["vec4"]

    def test_sum_is_count(self):
        p = Permutation.parse(PHI_EXAMPLE["sigma"])
        for i in (3, 4, 7, 8):
            assert sum(refined_vector(p, i)) == fast_count(p, i)

    def test_methods_agree_exhaustive(self):
        for n in range(0, 6):
            for p in iterate_sn(n):
                for i in (3, 4, 7, 8):
                    assert refined_vector(p, i, method="fast") == refined_vector(
                        p, i, method="mesh"
                    )

    def test_length(self):
        assert refined_vector(Permutation((1, 2)), 3) == ()
        assert len(refined_vector(Permutation((1, 2, 3, 4, 5)), 3)) == 3

    def test_bad_index(self):
        with pytest.raises(ValueError):
            refined_vector(Permutation((1, 2, 3)), 5)


class TestStatTuple:
    def test_names(self):
        assert STAT_NAMES == (
            "lrmin",
            "P1", "P2", "P3", "P4", "P5", "P6", "P7",
            "P8", "P9", "P10", "P11", "P12", "P13", "P14",
            "vecP3", "vecP4", "vecP7", "vecP8",
        )

    def test_selection_and_order(self):
        p = Permutation.parse(PHI_EXAMPLE["sigma"])
        t = stat_tuple(p, ("lrmin", "P1", "vecP3"))
        assert list(t) == ["lrmin", "P1", "vecP3"]
        assert t["lrmin"] == 2
        assert t["P1"] == 1
        assert t["vecP3"] == PHI_EXAMPLE["vec3"]

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            stat_tuple(Permutation((1,)), ("nope",))
