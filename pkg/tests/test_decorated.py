import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from positroids import (
    DecoratedPermutation,
    GrassmannNecklace,
    NonAdjacentSet,
    all_necklaces,
    apply_adjacent_swaps,
    cyclic_interval,
    decperm_to_necklace,
    necklace_from_nonadjacent,
    necklace_to_decperm,
    perm_sparse_paving_witness,
    sparse_paving_witness,
    top_permutation,
)

from oracles import brute_nonadjacent


def necklace(n, sets):
    return GrassmannNecklace.of(n, sets)


def interval_necklace(k, n):
    return necklace(n, [cyclic_interval(k, n, i) for i in range(1, n + 1)])


LOOP_NECKLACE = necklace(4, [{1, 2}, {2, 3}, {1, 3}, {1, 2}])
# The positroid with bases {12, 13, 23} on [4]: reading the insertion rule
# around the necklace gives 1 -> 3 -> 2 -> 1 with 4 a loop marked +1.
LOOP_PERM = DecoratedPermutation.make((3, 1, 2, 4), {4: 1})


class TestType:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            DecoratedPermutation.make((1, 1, 3))

    def test_rejects_missing_or_extra_marks(self):
        with pytest.raises(ValueError):
            DecoratedPermutation.make((1, 2), {1: 1})
        with pytest.raises(ValueError):
            DecoratedPermutation.make((2, 1), {1: 1})
        with pytest.raises(ValueError):
            DecoratedPermutation.make((1, 2), {1: 1, 2: 2})

    def test_json_round_trip(self):
        dp = DecoratedPermutation.make((3, 2, 1), {2: -1})
        assert DecoratedPermutation.from_dict(dp.to_dict()) == dp
        assert dp.to_dict() == {"n": 3, "perm": [3, 2, 1], "colors": {"2": -1}}


class TestNecklaceToDecperm:
    def test_uniform_is_the_shift(self):
        dp = necklace_to_decperm(interval_necklace(3, 6))
        assert dp.perm == (4, 5, 6, 1, 2, 3)
        assert dp.colors == ()

    def test_single_bump_swaps_two_entries(self):
        neck = necklace_from_nonadjacent({3}, 3, 6)
        assert necklace_to_decperm(neck).perm == (4, 6, 5, 1, 2, 3)

    def test_loop_gets_plus_mark(self):
        assert necklace_to_decperm(LOOP_NECKLACE) == LOOP_PERM

    def test_coloop_gets_minus_mark(self):
        # bases {{1,2}} on [2]: both elements sit in every entry
        neck = necklace(2, [{1, 2}, {1, 2}])
        dp = necklace_to_decperm(neck)
        assert dp.perm == (1, 2)
        assert dp.colors_dict == {1: -1, 2: -1}


class TestDecpermToNecklace:
    def test_shift_recovers_intervals(self):
        dp = DecoratedPermutation.make((4, 5, 6, 1, 2, 3))
        assert decperm_to_necklace(dp, 3) == interval_necklace(3, 6)

    def test_bumped_example(self):
        dp = DecoratedPermutation.make((4, 6, 5, 1, 2, 3))
        assert decperm_to_necklace(dp, 3) == necklace_from_nonadjacent({3}, 3, 6)

    def test_loop_example(self):
        assert decperm_to_necklace(LOOP_PERM, 2) == LOOP_NECKLACE

    def test_rejects_wrong_rank(self):
        dp = DecoratedPermutation.make((4, 5, 6, 1, 2, 3))
        with pytest.raises(ValueError):
            decperm_to_necklace(dp, 2)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_round_trip_over_all_necklaces(self, n):
        for k in range(0, n + 1):
            for neck in all_necklaces(k, n):
                dp = necklace_to_decperm(neck)
                assert decperm_to_necklace(dp, k) == neck


class TestTopPermutation:
    def test_examples(self):
        assert top_permutation(3, 6).perm == (4, 5, 6, 1, 2, 3)
        assert top_permutation(2, 4).perm == (3, 4, 1, 2)

    def test_identity_needs_mark(self):
        with pytest.raises(ValueError):
            top_permutation(0, 4)
        dp = top_permutation(0, 4, fixed_color=1)
        assert dp.perm == (1, 2, 3, 4)
        assert set(dp.colors_dict.values()) == {1}
        assert top_permutation(4, 4, fixed_color=-1).colors_dict == {
            i: -1 for i in range(1, 5)}

    def test_no_fixed_points_in_between(self):
        for n in range(2, 9):
            for k in range(1, n):
                assert top_permutation(k, n).fixed_points() == ()


class TestAdjacentSwaps:
    def test_single_swap(self):
        got = apply_adjacent_swaps({3}, top_permutation(3, 6))
        assert got.perm == (4, 6, 5, 1, 2, 3)

    def test_empty_is_identity(self):
        p = top_permutation(2, 5)
        assert apply_adjacent_swaps((), p) == p

    def test_position_one_trades_with_last(self):
        got = apply_adjacent_swaps({1}, top_permutation(2, 4))
        assert got.perm == (2, 4, 1, 3)

    def test_rejects_adjacent_positions(self):
        with pytest.raises(ValueError):
            apply_adjacent_swaps({2, 3}, top_permutation(2, 5))

    def test_rejects_unmarked_new_fixed_point(self):
        # swapping the two positions of 21 fixes both, with no mark to carry
        dp = DecoratedPermutation.make((2, 1))
        with pytest.raises(ValueError):
            apply_adjacent_swaps({1}, dp)

    def test_involution(self):
        for n in range(4, 9):
            for k in range(2, n - 1):
                top = top_permutation(k, n)
                for members in brute_nonadjacent(n):
                    once = apply_adjacent_swaps(members, top)
                    assert apply_adjacent_swaps(members, once) == top

    def test_no_fixed_points_after_swaps(self):
        for n in range(4, 9):
            for k in range(2, n - 1):
                top = top_permutation(k, n)
                for members in brute_nonadjacent(n):
                    got = apply_adjacent_swaps(members, top)
                    assert got.fixed_points() == ()


class TestPermWitness:
    def test_top_itself(self):
        dp = DecoratedPermutation.make((4, 5, 6, 1, 2, 3))
        assert perm_sparse_paving_witness(dp, 3) == NonAdjacentSet.of(6, ())

    def test_single_swap(self):
        dp = DecoratedPermutation.make((4, 6, 5, 1, 2, 3))
        assert perm_sparse_paving_witness(dp, 3) == NonAdjacentSet.of(6, {3})

    def test_fixed_point_blocks_witness(self):
        assert perm_sparse_paving_witness(LOOP_PERM, 2) is None

    def test_rejects_extreme_rank(self):
        with pytest.raises(ValueError):
            perm_sparse_paving_witness(LOOP_PERM, 1)

    @pytest.mark.parametrize("n", range(4, 7))
    def test_agrees_with_necklace_witness(self, n):
        for k in range(2, n - 1):
            for neck in all_necklaces(k, n):
                dp = necklace_to_decperm(neck)
                assert perm_sparse_paving_witness(dp, k) == \
                    sparse_paving_witness(neck)


class TestCommutingSquare:
    def test_construction_matches_swaps(self):
        for n in range(4, 9):
            for k in range(2, n - 1):
                top = top_permutation(k, n)
                for members in brute_nonadjacent(n):
                    neck = necklace_from_nonadjacent(members, k, n)
                    assert necklace_to_decperm(neck) == \
                        apply_adjacent_swaps(members, top)

    @given(st.integers(4, 10), st.data())
    @settings(max_examples=100, deadline=None)
    def test_witness_inverts_swaps(self, n, data):
        k = data.draw(st.integers(2, n - 2))
        members = data.draw(st.sampled_from(brute_nonadjacent(n)))
        dp = apply_adjacent_swaps(members, top_permutation(k, n))
        assert perm_sparse_paving_witness(dp, k) == NonAdjacentSet.of(
            n, members)
