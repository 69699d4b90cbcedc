import pytest
from hypothesis import given, settings

from kzigzag import (
    ASCENDING,
    DESCENDING,
    InvalidPermutationError,
    Permutation,
    complement,
    decompose,
    decompose_reference,
    find_peaks_valleys,
    is_k_down,
    is_k_peak_at,
    is_k_up,
    make_permutation,
    values_at,
)
from kzigzag.perm import _interval_is_section

from conftest import all_perms, perm_and_k

EXAMPLE = make_permutation([2, 1, 4, 3, 8, 6, 7, 5, 9])


class TestMakePermutation:
    def test_example_word(self):
        assert EXAMPLE.n == 9
        assert EXAMPLE.values == (2, 1, 4, 3, 8, 6, 7, 5, 9)

    def test_singleton(self):
        assert make_permutation([1]).n == 1

    def test_rejects_duplicate(self):
        with pytest.raises(InvalidPermutationError) as exc:
            make_permutation([1, 1, 2])
        assert exc.value.reason == "duplicate"

    def test_rejects_empty(self):
        with pytest.raises(InvalidPermutationError) as exc:
            make_permutation([])
        assert exc.value.reason == "empty"

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidPermutationError) as exc:
            make_permutation([1, 5, 2])
        assert exc.value.reason == "out-of-range"

    def test_rejects_non_integer(self):
        with pytest.raises(InvalidPermutationError) as exc:
            make_permutation([1, 2.5, 2])
        assert exc.value.reason == "non-integer"

    def test_reasons_are_distinct(self):
        reasons = set()
        for bad in ([], [1, 1], [7, 1], [None]):
            try:
                make_permutation(bad)
            except InvalidPermutationError as exc:
                reasons.add(exc.reason)
        assert len(reasons) == 4


class TestComplement:
    def test_small(self):
        assert complement(make_permutation([1, 2, 3])).values == (3, 2, 1)

    def test_example_word(self):
        assert complement(EXAMPLE).values == (8, 9, 6, 7, 2, 4, 3, 5, 1)

    @given(perm_and_k())
    def test_involution(self, wk):
        w, _ = wk
        assert complement(complement(w)) == w


class TestKUpKDown:
    def test_up(self):
        assert is_k_up(EXAMPLE, 2, 5, 3)  # 8 - 1 = 7 >= 3

    def test_down(self):
        assert is_k_down(EXAMPLE, 5, 8, 3)  # 8 - 5 = 3 >= 3

    def test_equal_positions(self):
        assert not is_k_up(EXAMPLE, 4, 4, 1)
        assert not is_k_down(EXAMPLE, 4, 4, 1)

    def test_wrong_order_is_false(self):
        assert not is_k_up(EXAMPLE, 5, 2, 3)

    def test_position_out_of_range(self):
        with pytest.raises(ValueError):
            is_k_up(EXAMPLE, 0, 3, 1)
        with pytest.raises(ValueError):
            is_k_down(EXAMPLE, 1, 10, 1)

    def test_bad_gap(self):
        with pytest.raises(ValueError):
            is_k_up(EXAMPLE, 1, 2, 0)


class TestDecompose:
    def test_example_word(self):
        chain = decompose(EXAMPLE, 3)
        assert [(s.start, s.end, s.direction) for s in chain.sections] == [
            (2, 5, ASCENDING),
            (5, 8, DESCENDING),
            (8, 9, ASCENDING),
        ]
        assert chain.uncovered_prefix == (1, 1)
        assert chain.uncovered_suffix is None

    def test_two_element_descent(self):
        chain = decompose(make_permutation([2, 1]), 1)
        assert [(s.start, s.end, s.direction) for s in chain.sections] == [(1, 2, DESCENDING)]
        assert chain.uncovered_prefix is None
        assert chain.uncovered_suffix is None

    def test_gap_two_with_prefix(self):
        # independently derived below by the exhaustive interval scan
        w = make_permutation([2, 1, 3])
        chain = decompose(w, 2)
        assert [(s.start, s.end, s.direction) for s in chain.sections] == [(2, 3, ASCENDING)]
        assert chain.uncovered_prefix == (1, 1)
        assert decompose_reference(w, 2) == chain

    def test_no_sections_when_k_too_large(self):
        chain = decompose(make_permutation([2, 1]), 5)
        assert chain.sections == ()
        assert chain.uncovered_prefix == (1, 2)
        assert chain.uncovered_suffix is None

    def test_singleton(self):
        chain = decompose(make_permutation([1]), 1)
        assert chain.sections == ()
        assert chain.uncovered_prefix == (1, 1)

    def test_uncovered_suffix(self):
        # 3 1 4 2: with k=3 only (1, 4) spans enough; 2 trails uncovered
        chain = decompose(make_permutation([3, 1, 4, 2]), 3)
        assert [(s.start, s.end, s.direction) for s in chain.sections] == [(2, 3, ASCENDING)]
        assert chain.uncovered_prefix == (1, 1)
        assert chain.uncovered_suffix == (4, 4)

    def test_matches_reference_exhaustively(self):
        for n in range(1, 7):
            for w in all_perms(n):
                for k in range(1, n + 2):
                    assert decompose(w, k) == decompose_reference(w, k), (w, k)

    @settings(max_examples=200)
    @given(perm_and_k(max_n=12, k_past_n=2))
    def test_matches_reference_random(self, wk):
        w, k = wk
        assert decompose(w, k) == decompose_reference(w, k)


class TestChainInvariants:
    @settings(max_examples=200)
    @given(perm_and_k(max_n=12))
    def test_alternation_and_links(self, wk):
        w, k = wk
        chain = decompose(w, k)
        for a, b in zip(chain.sections, chain.sections[1:]):
            assert a.direction != b.direction
            assert b.start == a.end  # consecutive sections share exactly one position

    @settings(max_examples=200)
    @given(perm_and_k(max_n=12))
    def test_full_coverage(self, wk):
        w, k = wk
        chain = decompose(w, k)
        covered = set()
        if chain.uncovered_prefix:
            covered.update(range(chain.uncovered_prefix[0], chain.uncovered_prefix[1] + 1))
        if chain.uncovered_suffix:
            covered.update(range(chain.uncovered_suffix[0], chain.uncovered_suffix[1] + 1))
        for s in chain.sections:
            covered.update(range(s.start, s.end + 1))
        assert covered == set(range(1, w.n + 1))

    @settings(max_examples=200)
    @given(perm_and_k(max_n=12))
    def test_sections_satisfy_definition(self, wk):
        w, k = wk
        for s in decompose(w, k).sections:
            assert _interval_is_section(w.values, s.start - 1, s.end - 1, k, s.direction)

    @settings(max_examples=200)
    @given(perm_and_k(max_n=12))
    def test_sections_are_maximal(self, wk):
        w, k = wk
        for s in decompose(w, k).sections:
            if s.start > 1:
                assert not _interval_is_section(w.values, s.start - 2, s.end - 1, k, s.direction)
            if s.end < w.n:
                assert not _interval_is_section(w.values, s.start - 1, s.end, k, s.direction)

    @settings(max_examples=150)
    @given(perm_and_k(max_n=10))
    def test_every_k_up_contains_an_ascending_section(self, wk):
        # every shortest k-up inside any k-up spans a k-ascending section
        w, k = wk
        vals = w.values
        for s in range(w.n):
            for t in range(s + 1, w.n):
                if vals[t] - vals[s] < k:
                    continue
                ups = [
                    (j - i, i, j)
                    for i in range(s, t + 1)
                    for j in range(i + 1, t + 1)
                    if vals[j] - vals[i] >= k
                ]
                span = min(length for length, _, _ in ups)
                for length, i, j in ups:
                    if length == span:
                        assert _interval_is_section(vals, i, j, k, ASCENDING)


class TestPeaksValleys:
    def test_example_word(self):
        pv = find_peaks_valleys(EXAMPLE, 3)
        assert values_at(EXAMPLE, pv.peak_positions) == (8, 9)
        assert values_at(EXAMPLE, pv.valley_positions) == (1, 5)

    def test_small_values_never_peak(self):
        # an entry of value <= k tops no k-rise and starts no k-fall
        for w in all_perms(4):
            pv = find_peaks_valleys(w, 2)
            assert all(w.values[p - 1] > 2 for p in pv.peak_positions)

    @given(perm_and_k())
    def test_top_value_always_a_peak(self, wk):
        w, k = wk
        pv = find_peaks_valleys(w, k)
        top = w.values.index(w.n) + 1
        assert top in pv.peak_positions

    @given(perm_and_k())
    def test_strict_alternation(self, wk):
        w, k = wk
        pv = find_peaks_valleys(w, k)
        merged = sorted(
            [(p, "peak") for p in pv.peak_positions] + [(p, "valley") for p in pv.valley_positions]
        )
        for (_, a), (_, b) in zip(merged, merged[1:]):
            assert a != b

    @given(perm_and_k())
    def test_extrema_value_bounds(self, wk):
        # entries of value <= k top no k-rise; entries >= n+1-k bottom no k-fall
        w, k = wk
        pv = find_peaks_valleys(w, k)
        assert all(w.values[p - 1] > k for p in pv.peak_positions)
        assert all(w.values[p - 1] < w.n + 1 - k for p in pv.valley_positions)

    @given(perm_and_k(k_past_n=2))
    def test_duality_with_complement(self, wk):
        w, k = wk
        pv = find_peaks_valleys(w, k)
        pv_c = find_peaks_valleys(complement(w), k)
        assert pv.peak_positions == pv_c.valley_positions
        assert pv.valley_positions == pv_c.peak_positions

    @given(perm_and_k())
    def test_peak_monotonicity_in_k(self, wk):
        w, k = wk
        peaks = set(find_peaks_valleys(w, k).peak_positions)
        for smaller in range(1, k):
            assert peaks <= set(find_peaks_valleys(w, smaller).peak_positions)

    def test_degenerate_gap_has_no_extrema(self):
        w = make_permutation([3, 1, 2])
        pv = find_peaks_valleys(w, 3)
        assert pv == find_peaks_valleys(w, 99)
        assert pv.peak_positions == () and pv.valley_positions == ()


class TestPeakCharacterization:
    def test_example_word(self):
        assert is_k_peak_at(EXAMPLE, 5, 3)  # the 8
        assert not is_k_peak_at(EXAMPLE, 7, 3)  # the 7: 9 follows with no 3-fall between

    def test_top_value(self):
        for w in all_perms(4):
            for k in range(1, 4):
                assert is_k_peak_at(w, w.values.index(4) + 1, k)

    def test_position_out_of_range(self):
        with pytest.raises(ValueError):
            is_k_peak_at(EXAMPLE, 0, 1)

    def test_agrees_with_decomposition_exhaustively(self):
        for n in range(1, 7):
            for w in all_perms(n):
                for k in range(1, n + 2):
                    chain_peaks = set(find_peaks_valleys(w, k).peak_positions)
                    direct = {i for i in range(1, n + 1) if is_k_peak_at(w, i, k)}
                    assert chain_peaks == direct, (w, k)

    @settings(max_examples=200)
    @given(perm_and_k(max_n=12, k_past_n=2))
    def test_agrees_with_decomposition_random(self, wk):
        w, k = wk
        chain_peaks = set(find_peaks_valleys(w, k).peak_positions)
        assert chain_peaks == {i for i in range(1, w.n + 1) if is_k_peak_at(w, i, k)}


def test_values_at_checks_positions():
    with pytest.raises(ValueError):
        values_at(EXAMPLE, [10])
