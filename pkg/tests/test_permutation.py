import itertools
import random

import pytest
from hypothesis import given, settings

from duploss import (
    DuplicateValueError,
    Occurrence,
    OutOfRangeError,
    Permutation,
    PositionOutOfRangeError,
    ascending_run_partition,
    contains_pattern,
    delete,
    descent_count,
    descents,
    from_one_line,
    identity,
    inversions,
    occurrences,
    parse_one_line,
    reversed_identity,
    standardize,
)
from helpers import brute_occurrence_indices, permutations_st


class TestConstruction:
    def test_identity(self):
        assert from_one_line([1, 2, 3]) == identity(3)
        assert from_one_line([1, 2, 3]).is_identity()

    def test_valid_size_six(self):
        p = from_one_line([5, 2, 4, 3, 1, 6])
        assert len(p) == 6
        assert p.values == (5, 2, 4, 3, 1, 6)

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateValueError):
            from_one_line([1, 1, 2])

    @pytest.mark.parametrize("vals", [[0, 1, 2], [1, 2, 4], [2], [-1]])
    def test_out_of_range_rejected(self, vals):
        with pytest.raises(OutOfRangeError):
            from_one_line(vals)

    def test_empty_is_valid(self):
        assert len(from_one_line([])) == 0

    def test_text_round_trip(self):
        p = Permutation([5, 2, 4, 3, 1, 6])
        assert parse_one_line(str(p)) == p
        assert str(p) == "5,2,4,3,1,6"
        assert parse_one_line("") == Permutation(())

    def test_parse_rejects_junk(self):
        with pytest.raises(OutOfRangeError):
            parse_one_line("1,two,3")
        with pytest.raises(DuplicateValueError):
            parse_one_line("1,1,2")

    def test_positions_and_values(self):
        p = Permutation([5, 2, 4, 3, 1, 6])
        assert p.value_at(1) == 5
        assert p.position_of(5) == 1
        with pytest.raises(PositionOutOfRangeError):
            p.value_at(7)


class TestStatistics:
    def test_descents_golden(self):
        assert descents(Permutation([5, 2, 4, 3, 1, 6])) == {1, 3, 4}

    @pytest.mark.parametrize("n", range(7))
    def test_identity_has_no_descents(self, n):
        assert descents(identity(n)) == set()

    def test_reversed_identity_descents(self):
        assert descents(Permutation([4, 3, 2, 1])) == {1, 2, 3}

    def test_inversions_goldens(self):
        assert inversions(identity(5)) == 0
        assert inversions(Permutation([2, 1])) == 1
        assert inversions(Permutation([4, 3, 2, 1])) == 6

    @given(permutations_st(max_n=8))
    @settings(deadline=None)
    def test_inversion_bounds(self, p):
        n = len(p)
        assert 0 <= inversions(p) <= n * (n - 1) // 2

    def test_inversion_extremes(self):
        for n in range(7):
            assert inversions(identity(n)) == 0
            assert inversions(reversed_identity(n)) == n * (n - 1) // 2


class TestRuns:
    def test_identity_single_run(self):
        assert ascending_run_partition(identity(5)) == [(1, 5)]

    def test_3142(self):
        assert ascending_run_partition(Permutation([3, 1, 4, 2])) == [(1, 1), (2, 3), (4, 4)]

    def test_524316(self):
        runs = ascending_run_partition(Permutation([5, 2, 4, 3, 1, 6]))
        assert runs == [(1, 1), (2, 3), (4, 4), (5, 6)]
        values = [tuple(range(a, b + 1)) for a, b in runs]
        assert values  # ranges are positional; check the contents directly
        p = Permutation([5, 2, 4, 3, 1, 6])
        assert [tuple(p.values[a - 1 : b]) for a, b in runs] == [(5,), (2, 4), (3,), (1, 6)]

    def test_run_count_equals_descents_plus_one_exhaustive(self):
        # exhaustive through size 8
        for n in range(1, 9):
            for vals in itertools.permutations(range(1, n + 1)):
                p = Permutation(vals)
                assert len(ascending_run_partition(p)) == descent_count(p) + 1

    def test_runs_cover_and_increase(self):
        for n in range(7):
            for vals in itertools.permutations(range(1, n + 1)):
                runs = ascending_run_partition(Permutation(vals))
                flat = [i for a, b in runs for i in range(a, b + 1)]
                assert flat == list(range(1, n + 1))
                for a, b in runs:
                    assert all(vals[i] < vals[i + 1] for i in range(a - 1, b - 1))


class TestPatterns:
    def test_golden_containment(self):
        sigma = Permutation([1, 4, 2, 5, 6, 3])
        assert contains_pattern(sigma, Permutation([1, 3, 4, 2]))
        assert not contains_pattern(sigma, Permutation([3, 2, 1]))

    def test_empty_pattern_always_contained(self):
        for p in (identity(0), identity(4), Permutation([3, 1, 2])):
            assert contains_pattern(p, Permutation(()))
            assert occurrences(p, Permutation(())) == [Occurrence(())]

    def test_golden_occurrences(self):
        sigma = Permutation([1, 4, 2, 5, 6, 3])
        occs = occurrences(sigma, Permutation([1, 3, 4, 2]))
        assert [o.values_in(sigma) for o in occs] == [
            (1, 4, 5, 3),
            (1, 4, 6, 3),
            (1, 5, 6, 3),
            (2, 5, 6, 3),
        ]
        assert [o.indices for o in occs] == sorted(o.indices for o in occs)

    def test_21_occurrences(self):
        assert occurrences(identity(4), Permutation([2, 1])) == []
        occs = occurrences(Permutation([3, 2, 1]), Permutation([2, 1]))
        assert [o.indices for o in occs] == [(1, 2), (1, 3), (2, 3)]

    def test_against_brute_force_exhaustive(self):
        for n in range(6):
            for host in itertools.permutations(range(1, n + 1)):
                for k in range(4):
                    for patt in itertools.permutations(range(1, k + 1)):
                        got = [o.indices for o in occurrences(Permutation(host), Permutation(patt))]
                        assert got == brute_occurrence_indices(host, patt)

    @given(permutations_st(min_n=4, max_n=8), permutations_st(min_n=1, max_n=4))
    @settings(deadline=None, max_examples=80)
    def test_against_brute_force_random(self, host, patt):
        got = [o.indices for o in occurrences(host, patt)]
        assert got == brute_occurrence_indices(host.values, patt.values)
        assert contains_pattern(host, patt) == bool(got)

    def test_transitivity_spot_check(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randrange(4, 9)
            sigma = Permutation(rng.sample(range(1, n + 1), n))
            # a random deletion chain gives nested patterns by construction
            tau = delete(sigma, rng.randrange(1, n + 1))
            pi = delete(tau, rng.randrange(1, n))
            assert contains_pattern(sigma, tau)
            assert contains_pattern(tau, pi)
            assert contains_pattern(sigma, pi)


class TestDelete:
    def test_golden(self):
        p = Permutation([4, 1, 2, 3, 5, 7, 6])
        assert delete(p, p.position_of(5)) == Permutation([4, 1, 2, 3, 6, 5])

    def test_small(self):
        assert delete(Permutation([2, 1]), 1) == Permutation([1])
        for n in range(1, 6):
            for pos in range(1, n + 1):
                assert delete(identity(n), pos) == identity(n - 1)

    def test_out_of_range(self):
        with pytest.raises(PositionOutOfRangeError):
            delete(identity(3), 4)
        with pytest.raises(PositionOutOfRangeError):
            delete(identity(3), 0)

    @given(permutations_st(min_n=1, max_n=8))
    @settings(deadline=None)
    def test_deletion_is_a_pattern(self, p):
        for pos in range(1, len(p) + 1):
            assert contains_pattern(p, delete(p, pos))

    def test_standardize(self):
        assert standardize((4, 1, 2, 3, 7, 6)) == Permutation([4, 1, 2, 3, 6, 5])
        assert standardize((10, 20)) == Permutation([1, 2])
