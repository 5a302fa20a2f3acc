import pytest
from hypothesis import given, strategies as st

from xoverlab.words import (
    AlphabetSpec,
    BudgetExceededError,
    IncompatibleWordsError,
    Word,
    WordSet,
    hamming_distance,
    interval,
    phi,
)


def spec_of(*sizes):
    return AlphabetSpec(tuple(sizes))


class TestAlphabetSpec:
    def test_parse_forms(self):
        assert AlphabetSpec.parse("2^4") == spec_of(2, 2, 2, 2)
        assert AlphabetSpec.parse("3,3") == spec_of(3, 3)
        assert AlphabetSpec.parse("2^3,3") == spec_of(2, 2, 2, 3)
        assert AlphabetSpec.parse("4") == spec_of(4)

    def test_parse_rejects_garbage(self):
        for bad in ("", "2^0", "1,2", "2^-1", "a", "2^^3"):
            with pytest.raises(ValueError):
                AlphabetSpec.parse(bad)

    def test_size_and_str(self):
        s = spec_of(2, 3, 4)
        assert s.n == 3
        assert s.size == 24
        assert str(s) == "2,3,4"

    def test_sizes_below_two_rejected(self):
        with pytest.raises(ValueError):
            spec_of(2, 1, 2)

    def test_budget(self):
        s = spec_of(2, 2, 2)
        s.check_budget(8)
        with pytest.raises(BudgetExceededError):
            s.check_budget(7)

    def test_iter_words_is_lex_and_matches_index(self):
        s = spec_of(2, 3)
        words = list(s.iter_words())
        assert [w.letters for w in words] == [
            (0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
        assert [w.index for w in words] == list(range(6))


class TestWord:
    def test_index_roundtrip(self):
        s = spec_of(3, 2, 4)
        for i in range(s.size):
            assert Word.from_index(i, s).index == i

    def test_binary_index_is_bit_packing(self):
        s = spec_of(2, 2, 2, 2)
        assert Word.parse("1011", s).index == 0b1011

    def test_parse_compact_and_comma(self):
        s = spec_of(2, 2, 2)
        assert Word.parse("011", s) == Word((0, 1, 1), s)
        assert Word.parse("0,1,1", s) == Word((0, 1, 1), s)

    def test_invalid_letter_message_is_positional(self):
        s = spec_of(2, 2)
        with pytest.raises(ValueError, match="position 2"):
            Word((0, 5), s)

    def test_cross_spec_comparison_rejected(self):
        a = Word((0,), spec_of(2))
        b = Word((0,), spec_of(3))
        with pytest.raises(IncompatibleWordsError):
            _ = a < b

    @given(st.integers(0, 7), st.integers(0, 7))
    def test_order_matches_index_order(self, i, j):
        s = spec_of(2, 2, 2)
        a, b = Word.from_index(i, s), Word.from_index(j, s)
        assert (a < b) == (i < j)
        assert (a == b) == (i == j)


class TestWordSet:
    def test_canonical_order_and_dedup(self):
        s = spec_of(2, 2)
        ws = WordSet([Word.parse("10", s), Word.parse("01", s), Word.parse("10", s)])
        assert ws.to_text() == ["01", "10"]
        assert len(ws) == 2

    def test_empty_needs_explicit_spec(self):
        with pytest.raises(ValueError):
            WordSet([])
        ws = WordSet([], spec=spec_of(2, 2))
        assert len(ws) == 0

    def test_equality_and_hash(self):
        s = spec_of(2, 2)
        a = WordSet([Word.parse("00", s), Word.parse("11", s)])
        b = WordSet([Word.parse("11", s), Word.parse("00", s)])
        assert a == b and hash(a) == hash(b)

    def test_indices_frozenset(self):
        s = spec_of(2, 2)
        ws = WordSet([Word.parse("01", s), Word.parse("11", s)])
        assert ws.indices == frozenset({1, 3})


def test_hamming_distance_basic():
    s = spec_of(3, 3)
    assert hamming_distance(Word.parse("0,0", s), Word.parse("2,0", s)) == 1
    assert hamming_distance(Word.parse("0,1", s), Word.parse("1,2", s)) == 2


@given(st.integers(0, 15), st.integers(0, 15))
def test_hamming_distance_is_popcount_of_xor(i, j):
    s = spec_of(2, 2, 2, 2)
    a, b = Word.from_index(i, s), Word.from_index(j, s)
    assert hamming_distance(a, b) == bin(i ^ j).count("1")


def test_interval_is_product_of_pairs():
    s = spec_of(3, 3)
    iv = interval(Word.parse("0,0", s), Word.parse("1,2", s))
    # digits stay compact while every alphabet size is at most ten
    assert iv.to_text() == ["00", "02", "10", "12"]


def test_large_alphabet_words_render_comma_separated():
    s = spec_of(12, 2)
    assert str(Word((11, 1), s)) == "11,1"


@given(st.integers(0, 31), st.integers(0, 31))
def test_interval_size_is_two_power_distance(i, j):
    s = spec_of(2, 2, 2, 2, 2)
    a, b = Word.from_index(i, s), Word.from_index(j, s)
    assert len(interval(a, b)) == 2 ** hamming_distance(a, b)


def test_phi_values():
    # partial binomial sums
    assert phi(0, 5) == 1
    assert phi(1, 4) == 5
    assert phi(2, 4) == 11
    assert phi(7, 5) == 32
    with pytest.raises(ValueError):
        phi(-1, 3)
